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

#ifndef SHUFFLECOUNT_PRIVACY_HPP_
#define SHUFFLECOUNT_PRIVACY_HPP_

#include <cstdint>

#include "shufflecount/rng.hpp"

namespace shufflecount {

// Randomization primitives and the privacy-amplification accounting that
// links a central budget eps to the per-report local budget eps_local.
// All logarithms are natural.

// Bit-flip probability of randomized response at budget eps: 1/(e^eps + 1).
// eps = +infinity yields 0 (the noiseless sentinel); eps = 0 yields 1/2.
double flip_probability(double eps);

// Warner randomized response: returns bit unchanged with probability
// e^eps/(e^eps+1), flipped otherwise. Requires eps >= 0 (+infinity allowed).
// Consumes exactly one draw from rng regardless of eps.
uint8_t warner_rr(uint8_t bit, double eps, Rng& rng);

// Sample from Laplace(0, scale) by inverse CDF. Requires scale > 0. Consumes
// exactly one draw; under identical draws, samples scale linearly in `scale`.
double laplace_noise(double scale, Rng& rng);

// Largest local budget for which the amplification bound below is valid:
// ln(n / (16 ln(2/delta))). May be <= 0, which signals that n is too small
// for any amplification claim at this delta. Requires n >= 1, delta in (0,1).
double el_cap(double n, double delta);

// Central epsilon guaranteed after uniformly shuffling n reports that were
// each randomized at eps_local:
//   ln(1 + ((e^el - 1)/(e^el + 1)) * (8 sqrt(e^el ln(4/delta))/sqrt(n) + 8 e^el / n)).
// Valid only for 0 <= eps_local <= el_cap(n, delta); above the cap raises
// std::domain_error. Exactly 0 at eps_local = 0.
double amplification_epsilon_closed(double n, double eps_local, double delta);

// Result of inverting the amplification bound.
struct LocalBudget {
  double eps_local = 0.0;
  // True when even eps_local = el_cap amplifies to less than the requested
  // central epsilon; the cap is returned, which gives strictly stronger
  // privacy than asked for.
  bool clamped = false;
};

// The unique eps_local in (0, cap] whose amplified epsilon equals
// eps_central, found by bisection to absolute tolerance 1e-9; clamps to the
// cap when the request exceeds what n reports can amplify. Requires
// eps_central > 0; raises std::domain_error when el_cap(n, delta) <= 0
// ("n too small for shuffle amplification at this delta").
LocalBudget local_privacy_budget(double n, double eps_central, double delta);

}  // namespace shufflecount

#endif  // SHUFFLECOUNT_PRIVACY_HPP_
