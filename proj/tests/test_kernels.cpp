// Copyright 2026 The shufflecount Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdint>
#include <vector>

#include "doctest.h"
#include "shufflecount/kernels.hpp"
#include "shufflecount/rng.hpp"

using shufflecount::active_kernel_impl;
using shufflecount::bernoulli_threshold;
using shufflecount::count_below;
using shufflecount::cpu_has_avx2;
using shufflecount::force_kernel_impl;
using shufflecount::KernelImpl;
using shufflecount::kGolden;
using shufflecount::mix64;
using shufflecount::Rng;
using shufflecount::rr_apply;
using shufflecount::sum_u8;

namespace {

// Restores auto dispatch when a test scope exits.
struct DispatchGuard {
  ~DispatchGuard() { force_kernel_impl(KernelImpl::kAuto); }
};

// Odd, even, tiny, and vector-boundary-straddling lengths.
const uint64_t kLengths[] = {0, 1, 2, 3, 4, 5, 7, 8, 15, 16, 17, 31, 32, 33, 63, 64, 100, 1001};

std::vector<uint8_t> random_bits(uint64_t count, uint64_t seed) {
  Rng rng(seed);
  std::vector<uint8_t> bits(count);
  for (auto& b : bits) b = static_cast<uint8_t>(rng.next() & 1);
  return bits;
}

}  // namespace

TEST_CASE("count_below matches a direct scalar loop over the stream") {
  const uint64_t state = 0x1234567890ABCDEFULL;
  const uint64_t thr = bernoulli_threshold(0.37);
  for (uint64_t count : kLengths) {
    uint64_t want = 0;
    for (uint64_t k = 0; k < count; ++k) {
      want += mix64(state + (k + 1) * kGolden) < thr ? 1 : 0;
    }
    CHECK_EQ(count_below(state, count, thr), want);
  }
}

TEST_CASE("count_below equals the draws an Rng would make") {
  // The kernel consumes exactly the same draws as rng.next() would.
  Rng rng(404);
  const uint64_t state = rng.state();
  const uint64_t thr = bernoulli_threshold(0.5);
  uint64_t want = 0;
  for (int k = 0; k < 97; ++k) want += rng.next() < thr ? 1 : 0;
  CHECK_EQ(count_below(state, 97, thr), want);
}

TEST_CASE("scalar and avx2 variants are bit-identical") {
  if (!cpu_has_avx2()) {
    MESSAGE("AVX2 not available on this CPU; equivalence exercised via scalar only");
    return;
  }
  DispatchGuard guard;
  const uint64_t state = 0xA5A5A5A5A5A5A5A5ULL;
  for (uint64_t count : kLengths) {
    for (double p : {0.0, 0.1, 0.5, 0.9, 1.0}) {
      const uint64_t thr = bernoulli_threshold(p);

      force_kernel_impl(KernelImpl::kScalar);
      const uint64_t scalar_count = count_below(state, count, thr);
      force_kernel_impl(KernelImpl::kAvx2);
      const uint64_t avx2_count = count_below(state, count, thr);
      CHECK_EQ(scalar_count, avx2_count);

      const std::vector<uint8_t> bits = random_bits(count, count * 31 + 7);
      std::vector<uint8_t> out_scalar(count), out_avx2(count);
      force_kernel_impl(KernelImpl::kScalar);
      rr_apply(bits.data(), out_scalar.data(), count, state, thr);
      force_kernel_impl(KernelImpl::kAvx2);
      rr_apply(bits.data(), out_avx2.data(), count, state, thr);
      CHECK_EQ(out_scalar, out_avx2);

      force_kernel_impl(KernelImpl::kScalar);
      const uint64_t sum_scalar = sum_u8(bits.data(), count);
      force_kernel_impl(KernelImpl::kAvx2);
      const uint64_t sum_avx2 = sum_u8(bits.data(), count);
      CHECK_EQ(sum_scalar, sum_avx2);
    }
  }
}

TEST_CASE("rr_apply XORs flips into the bit vector") {
  const uint64_t state = 42;
  const uint64_t thr = bernoulli_threshold(0.25);
  const uint64_t count = 257;
  const std::vector<uint8_t> bits = random_bits(count, 9);
  std::vector<uint8_t> out(count);
  rr_apply(bits.data(), out.data(), count, state, thr);
  uint64_t flips = 0;
  for (uint64_t k = 0; k < count; ++k) {
    const uint8_t flip = mix64(state + (k + 1) * kGolden) < thr ? 1 : 0;
    CHECK_EQ(out[k], bits[k] ^ flip);
    flips += flip;
  }
  CHECK_EQ(flips, count_below(state, count, thr));
}

TEST_CASE("rr_apply supports exact aliasing of input and output") {
  const uint64_t state = 314159;
  const uint64_t thr = bernoulli_threshold(0.5);
  const uint64_t count = 100;
  std::vector<uint8_t> bits = random_bits(count, 3);
  std::vector<uint8_t> copy = bits;
  std::vector<uint8_t> separate(count);
  rr_apply(copy.data(), separate.data(), count, state, thr);
  rr_apply(bits.data(), bits.data(), count, state, thr);  // in place
  CHECK_EQ(bits, separate);
}

TEST_CASE("rr_apply with threshold 0 is the identity, with max threshold flips almost everything") {
  const uint64_t count = 64;
  std::vector<uint8_t> bits = random_bits(count, 11);
  std::vector<uint8_t> out(count);
  rr_apply(bits.data(), out.data(), count, 123, 0);
  CHECK_EQ(out, bits);
  // threshold ~0ULL: flips unless the draw is exactly 2^64-1.
  rr_apply(bits.data(), out.data(), count, 123, ~0ULL);
  uint64_t flipped = 0;
  for (uint64_t k = 0; k < count; ++k) flipped += out[k] != bits[k] ? 1 : 0;
  CHECK_GE(flipped, count - 1);
}

TEST_CASE("sum_u8 handles general byte values and long buffers") {
  std::vector<uint8_t> data;
  uint64_t want = 0;
  Rng rng(8);
  for (int i = 0; i < 10000; ++i) {
    const uint8_t v = static_cast<uint8_t>(rng.next() & 0xFF);
    data.push_back(v);
    want += v;
  }
  CHECK_EQ(sum_u8(data.data(), data.size()), want);
  CHECK_EQ(sum_u8(data.data(), 0), 0);
}

TEST_CASE("forcing AVX2 on an unsupported CPU throws, auto never does") {
  DispatchGuard guard;
  if (cpu_has_avx2()) {
    force_kernel_impl(KernelImpl::kAvx2);
    CHECK_EQ(active_kernel_impl(), KernelImpl::kAvx2);
    CHECK_NOTHROW(count_below(1, 10, 5));
  } else {
    force_kernel_impl(KernelImpl::kAvx2);
    CHECK_THROWS_AS(count_below(1, 10, 5), std::runtime_error);
  }
  force_kernel_impl(KernelImpl::kAuto);
  CHECK_NOTHROW(count_below(1, 10, 5));
}

TEST_CASE("dispatch state reporting") {
  DispatchGuard guard;
  force_kernel_impl(KernelImpl::kScalar);
  CHECK_EQ(active_kernel_impl(), KernelImpl::kScalar);
  force_kernel_impl(KernelImpl::kAuto);
  CHECK_EQ(active_kernel_impl(), cpu_has_avx2() ? KernelImpl::kAvx2 : KernelImpl::kScalar);
}
