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

#ifndef SHUFFLECOUNT_RNG_HPP_
#define SHUFFLECOUNT_RNG_HPP_

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace shufflecount {

// Weyl increment used by the SplitMix64 generator.
inline constexpr uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

// SplitMix64 finalizer: a bijective avalanche mix on 64-bit words.
inline constexpr uint64_t mix64(uint64_t x) {
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ULL;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBULL;
  x ^= x >> 31;
  return x;
}

// Derives an independent stream seed from a base seed and a stream id.
// Mixing the id through the finalizer first keeps nearby ids (0, 1, 2, ...)
// far apart in seed space.
inline constexpr uint64_t fold_in(uint64_t seed, uint64_t id) {
  return mix64(seed ^ (mix64(id) + kGolden));
}

// Counter-based SplitMix64 stream.
//
// Draw k (0-indexed) from initial state s is mix64(s + (k + 1) * kGolden),
// a pure function of (s, k). Vectorized code can therefore reproduce any
// contiguous block of draws from (state, index) alone, bit-identically to
// the scalar loop below, and tests can re-derive individual draws without
// replaying the stream.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  // State from which the next call to next() will draw. Exposed so bulk
  // kernels can consume a block of draws and then advance the stream.
  uint64_t state() const { return state_; }

  // Skips the next n draws, as if next() had been called n times.
  void advance(uint64_t n) { state_ += n * kGolden; }

  uint64_t next() { return mix64(state_ += kGolden); }

  // Uniform draw in [0, bound) via Lemire's multiply-and-reject method.
  // Unbiased for every bound; rejection is vanishingly rare for small bounds.
  uint64_t next_below(uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("next_below: bound must be positive");
    uint64_t x = next();
    __uint128_t m = static_cast<__uint128_t>(x) * bound;
    auto lo = static_cast<uint64_t>(m);
    if (lo < bound) {
      const uint64_t threshold = -bound % bound;
      while (lo < threshold) {
        x = next();
        m = static_cast<__uint128_t>(x) * bound;
        lo = static_cast<uint64_t>(m);
      }
    }
    return static_cast<uint64_t>(m >> 64);
  }

  // Uniform double in the open interval (0, 1): (k + 0.5) * 2^-53 for
  // k in [0, 2^53). Never returns 0 or 1, so log() of it is always finite.
  double next_unit_open() {
    return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
  }

 private:
  uint64_t state_;
};

// Converts a Bernoulli probability to a 64-bit draw threshold such that
// (draw < threshold) fires with probability round(p * 2^64) / 2^64.
// Computed in extended precision; p = 0.5 maps to exactly 2^63 and p = 0
// to 0 (a draw is never below 0, so threshold 0 means "never fire").
inline uint64_t bernoulli_threshold(double p) {
  if (p <= 0.0) return 0;
  long double scaled = static_cast<long double>(p) * 0x1.0p64L;
  if (scaled >= 0x1.0p64L) return ~0ULL;  // p == 1 saturates (fires unless draw is 2^64-1).
  return static_cast<uint64_t>(scaled + 0.5L);
}

// In-place Fisher-Yates shuffle of elements [first, first + count).
template <typename T>
void shuffle_span(T* first, uint64_t count, Rng& rng) {
  for (uint64_t i = count; i > 1; --i) {
    const uint64_t j = rng.next_below(i);
    T tmp = first[i - 1];
    first[i - 1] = first[j];
    first[j] = tmp;
  }
}

}  // namespace shufflecount

#endif  // SHUFFLECOUNT_RNG_HPP_
