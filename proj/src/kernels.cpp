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

#include "shufflecount/kernels.hpp"

#include <atomic>
#include <stdexcept>

#include "shufflecount/rng.hpp"

namespace shufflecount {

namespace {

std::atomic<KernelImpl> g_forced{KernelImpl::kAuto};

KernelImpl resolve() {
  const KernelImpl forced = g_forced.load(std::memory_order_relaxed);
  if (forced == KernelImpl::kScalar) return KernelImpl::kScalar;
  if (forced == KernelImpl::kAvx2) {
    if (!cpu_has_avx2()) throw std::runtime_error("kernels: AVX2 forced but not supported by this CPU");
    return KernelImpl::kAvx2;
  }
  return cpu_has_avx2() ? KernelImpl::kAvx2 : KernelImpl::kScalar;
}

}  // namespace

void force_kernel_impl(KernelImpl impl) { g_forced.store(impl, std::memory_order_relaxed); }

KernelImpl active_kernel_impl() { return resolve(); }

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

namespace detail {

uint64_t count_below_scalar(uint64_t state, uint64_t count, uint64_t threshold) {
  uint64_t hits = 0;
  for (uint64_t k = 0; k < count; ++k) {
    state += kGolden;
    hits += mix64(state) < threshold ? 1 : 0;
  }
  return hits;
}

void rr_apply_scalar(const uint8_t* bits, uint8_t* out, uint64_t count,
                     uint64_t state, uint64_t threshold) {
  for (uint64_t k = 0; k < count; ++k) {
    state += kGolden;
    out[k] = bits[k] ^ (mix64(state) < threshold ? 1 : 0);
  }
}

uint64_t sum_u8_scalar(const uint8_t* data, uint64_t count) {
  uint64_t total = 0;
  for (uint64_t k = 0; k < count; ++k) total += data[k];
  return total;
}

}  // namespace detail

uint64_t count_below(uint64_t state, uint64_t count, uint64_t threshold) {
  return resolve() == KernelImpl::kAvx2
             ? detail::count_below_avx2(state, count, threshold)
             : detail::count_below_scalar(state, count, threshold);
}

void rr_apply(const uint8_t* bits, uint8_t* out, uint64_t count, uint64_t state,
              uint64_t threshold) {
  if (resolve() == KernelImpl::kAvx2) {
    detail::rr_apply_avx2(bits, out, count, state, threshold);
  } else {
    detail::rr_apply_scalar(bits, out, count, state, threshold);
  }
}

uint64_t sum_u8(const uint8_t* data, uint64_t count) {
  return resolve() == KernelImpl::kAvx2 ? detail::sum_u8_avx2(data, count)
                                        : detail::sum_u8_scalar(data, count);
}

}  // namespace shufflecount
