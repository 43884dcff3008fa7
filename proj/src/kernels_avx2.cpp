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

// AVX2 kernel variants. This translation unit is the only one compiled with
// -mavx2; callers reach it through the dispatch layer in kernels.cpp, which
// checks CPU support first.

#include "shufflecount/kernels.hpp"

#include <stdexcept>

#include "shufflecount/rng.hpp"

#if defined(__AVX2__)

#include <immintrin.h>

namespace shufflecount {
namespace detail {

namespace {

// 64-bit low-half product per lane, built from 32x32->64 multiplies:
// lo64(a*b) = lo(a)*lo(b) + ((lo(a)*hi(b) + hi(a)*lo(b)) << 32).
inline __m256i mul64_lo(__m256i a, __m256i b) {
  const __m256i a_hi = _mm256_srli_epi64(a, 32);
  const __m256i b_hi = _mm256_srli_epi64(b, 32);
  const __m256i lo_lo = _mm256_mul_epu32(a, b);
  const __m256i cross =
      _mm256_add_epi64(_mm256_mul_epu32(a, b_hi), _mm256_mul_epu32(a_hi, b));
  return _mm256_add_epi64(lo_lo, _mm256_slli_epi64(cross, 32));
}

// Four SplitMix64 finalizers in parallel; bit-identical to mix64().
inline __m256i mix64x4(__m256i x) {
  const __m256i c1 = _mm256_set1_epi64x(static_cast<long long>(0xBF58476D1CE4E5B9ULL));
  const __m256i c2 = _mm256_set1_epi64x(static_cast<long long>(0x94D049BB133111EBULL));
  x = _mm256_xor_si256(x, _mm256_srli_epi64(x, 30));
  x = mul64_lo(x, c1);
  x = _mm256_xor_si256(x, _mm256_srli_epi64(x, 27));
  x = mul64_lo(x, c2);
  x = _mm256_xor_si256(x, _mm256_srli_epi64(x, 31));
  return x;
}

// Unsigned a < b per 64-bit lane (all-ones when true). AVX2 only has a
// signed compare, so both sides are biased by the sign bit first.
inline __m256i cmplt_epu64(__m256i a, __m256i b) {
  const __m256i sign = _mm256_set1_epi64x(static_cast<long long>(0x8000000000000000ULL));
  return _mm256_cmpgt_epi64(_mm256_xor_si256(b, sign), _mm256_xor_si256(a, sign));
}

inline void require_avx2() {
  if (!cpu_has_avx2()) throw std::runtime_error("kernels: AVX2 variant called on a CPU without AVX2");
}

}  // namespace

uint64_t count_below_avx2(uint64_t state, uint64_t count, uint64_t threshold) {
  require_avx2();
  const __m256i thr = _mm256_set1_epi64x(static_cast<long long>(threshold));
  const __m256i step = _mm256_set1_epi64x(static_cast<long long>(4 * kGolden));
  // Lanes hold the pre-mix counters for draws k, k+1, k+2, k+3.
  __m256i ctr = _mm256_setr_epi64x(
      static_cast<long long>(state + 1 * kGolden), static_cast<long long>(state + 2 * kGolden),
      static_cast<long long>(state + 3 * kGolden), static_cast<long long>(state + 4 * kGolden));
  __m256i acc = _mm256_setzero_si256();
  uint64_t k = 0;
  for (; k + 4 <= count; k += 4) {
    const __m256i mask = cmplt_epu64(mix64x4(ctr), thr);
    acc = _mm256_sub_epi64(acc, mask);  // each true lane is -1
    ctr = _mm256_add_epi64(ctr, step);
  }
  alignas(32) uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  uint64_t hits = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; k < count; ++k) {
    hits += mix64(state + (k + 1) * kGolden) < threshold ? 1 : 0;
  }
  return hits;
}

void rr_apply_avx2(const uint8_t* bits, uint8_t* out, uint64_t count,
                   uint64_t state, uint64_t threshold) {
  require_avx2();
  const __m256i thr = _mm256_set1_epi64x(static_cast<long long>(threshold));
  const __m256i step = _mm256_set1_epi64x(static_cast<long long>(4 * kGolden));
  __m256i ctr = _mm256_setr_epi64x(
      static_cast<long long>(state + 1 * kGolden), static_cast<long long>(state + 2 * kGolden),
      static_cast<long long>(state + 3 * kGolden), static_cast<long long>(state + 4 * kGolden));
  uint64_t k = 0;
  for (; k + 4 <= count; k += 4) {
    const __m256i mask = cmplt_epu64(mix64x4(ctr), thr);
    const int flips = _mm256_movemask_pd(_mm256_castsi256_pd(mask));
    out[k + 0] = bits[k + 0] ^ static_cast<uint8_t>(flips & 1);
    out[k + 1] = bits[k + 1] ^ static_cast<uint8_t>((flips >> 1) & 1);
    out[k + 2] = bits[k + 2] ^ static_cast<uint8_t>((flips >> 2) & 1);
    out[k + 3] = bits[k + 3] ^ static_cast<uint8_t>((flips >> 3) & 1);
    ctr = _mm256_add_epi64(ctr, step);
  }
  for (; k < count; ++k) {
    out[k] = bits[k] ^ (mix64(state + (k + 1) * kGolden) < threshold ? 1 : 0);
  }
}

uint64_t sum_u8_avx2(const uint8_t* data, uint64_t count) {
  require_avx2();
  __m256i acc = _mm256_setzero_si256();
  const __m256i zero = _mm256_setzero_si256();
  uint64_t k = 0;
  for (; k + 32 <= count; k += 32) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(data + k));
    // Sum of absolute differences against zero: four 64-bit partial byte sums.
    acc = _mm256_add_epi64(acc, _mm256_sad_epu8(v, zero));
  }
  alignas(32) uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  uint64_t total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; k < count; ++k) total += data[k];
  return total;
}

}  // namespace detail
}  // namespace shufflecount

#else  // !defined(__AVX2__)

namespace shufflecount {
namespace detail {

// This build did not enable AVX2 for this translation unit (non-x86 target);
// the dispatch layer never routes here when cpu_has_avx2() is false.
uint64_t count_below_avx2(uint64_t, uint64_t, uint64_t) {
  throw std::runtime_error("kernels: AVX2 support not compiled in");
}
void rr_apply_avx2(const uint8_t*, uint8_t*, uint64_t, uint64_t, uint64_t) {
  throw std::runtime_error("kernels: AVX2 support not compiled in");
}
uint64_t sum_u8_avx2(const uint8_t*, uint64_t) {
  throw std::runtime_error("kernels: AVX2 support not compiled in");
}

}  // namespace detail
}  // namespace shufflecount

#endif  // defined(__AVX2__)
