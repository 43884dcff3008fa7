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

#ifndef SHUFFLECOUNT_KERNELS_HPP_
#define SHUFFLECOUNT_KERNELS_HPP_

#include <cstdint>

namespace shufflecount {

// Bulk kernels over counter-based RNG streams (see rng.hpp). Each kernel has
// a scalar reference implementation and an AVX2 variant; both produce
// bit-identical results, and the active variant is selected at runtime from
// CPU capabilities. All draw indexing matches Rng exactly: draw k from stream
// state s is mix64(s + (k + 1) * kGolden).

enum class KernelImpl {
  kAuto,    // pick the best supported variant (default)
  kScalar,  // force the reference implementation
  kAvx2,    // force AVX2 (throws at call time if unsupported)
};

// Overrides kernel dispatch process-wide. Intended for equivalence tests.
void force_kernel_impl(KernelImpl impl);

// The variant calls will actually run under the current setting.
KernelImpl active_kernel_impl();

// True if this CPU can run the AVX2 variants.
bool cpu_has_avx2();

// Number of draws k in [0, count) with draw(state, k) < threshold.
uint64_t count_below(uint64_t state, uint64_t count, uint64_t threshold);

// Randomized-response application: out[k] = bits[k] ^ (draw(state, k) < threshold).
// bits and out hold one 0/1 value per byte and may alias each other exactly.
void rr_apply(const uint8_t* bits, uint8_t* out, uint64_t count, uint64_t state,
              uint64_t threshold);

// Sum of count bytes.
uint64_t sum_u8(const uint8_t* data, uint64_t count);

namespace detail {

// Reference implementations (always available).
uint64_t count_below_scalar(uint64_t state, uint64_t count, uint64_t threshold);
void rr_apply_scalar(const uint8_t* bits, uint8_t* out, uint64_t count,
                     uint64_t state, uint64_t threshold);
uint64_t sum_u8_scalar(const uint8_t* data, uint64_t count);

// AVX2 implementations (compiled separately; throw if the CPU lacks AVX2).
uint64_t count_below_avx2(uint64_t state, uint64_t count, uint64_t threshold);
void rr_apply_avx2(const uint8_t* bits, uint8_t* out, uint64_t count,
                   uint64_t state, uint64_t threshold);
uint64_t sum_u8_avx2(const uint8_t* data, uint64_t count);

}  // namespace detail

}  // namespace shufflecount

#endif  // SHUFFLECOUNT_KERNELS_HPP_
