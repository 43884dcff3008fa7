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

#include "shufflecount/privacy.hpp"

#include <cmath>
#include <stdexcept>

namespace shufflecount {

double flip_probability(double eps) {
  if (!(eps >= 0.0)) throw std::invalid_argument("flip_probability: eps must be >= 0");
  // 1/(e^eps + 1); evaluates to 0 at eps = +infinity and 1/2 at eps = 0.
  return 1.0 / (std::exp(eps) + 1.0);
}

uint8_t warner_rr(uint8_t bit, double eps, Rng& rng) {
  const uint64_t threshold = bernoulli_threshold(flip_probability(eps));
  const uint8_t flip = rng.next() < threshold ? 1 : 0;
  return bit ^ flip;
}

double laplace_noise(double scale, Rng& rng) {
  if (!(scale > 0.0)) throw std::invalid_argument("laplace_noise: scale must be > 0");
  const double u = rng.next_unit_open();
  // Inverse CDF, folded at the median; u is never exactly 0, 1/2, or 1.
  return scale * (u < 0.5 ? std::log(2.0 * u) : -std::log(2.0 * (1.0 - u)));
}

double el_cap(double n, double delta) {
  if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("el_cap: delta must be in (0,1)");
  if (!(n >= 1.0)) throw std::invalid_argument("el_cap: n must be >= 1");
  return std::log(n / (16.0 * std::log(2.0 / delta)));
}

double amplification_epsilon_closed(double n, double eps_local, double delta) {
  const double cap = el_cap(n, delta);
  if (!(eps_local >= 0.0)) throw std::invalid_argument("amplification_epsilon_closed: eps_local must be >= 0");
  if (eps_local > cap) {
    throw std::domain_error("amplification_epsilon_closed: eps_local exceeds the validity cap for this (n, delta)");
  }
  // (e^el - 1)/(e^el + 1) == tanh(el/2), exactly 0 at el = 0.
  const double ratio = std::tanh(0.5 * eps_local);
  const double a = std::exp(eps_local);
  const double spread = 8.0 * std::sqrt(a * std::log(4.0 / delta) / n) + 8.0 * a / n;
  return std::log1p(ratio * spread);
}

LocalBudget local_privacy_budget(double n, double eps_central, double delta) {
  if (!(eps_central > 0.0)) throw std::invalid_argument("local_privacy_budget: eps_central must be > 0");
  const double cap = el_cap(n, delta);
  if (!(cap > 0.0)) throw std::domain_error("local_privacy_budget: n too small for shuffle amplification at this delta");
  if (amplification_epsilon_closed(n, cap, delta) <= eps_central) {
    return {cap, true};
  }
  // The amplified epsilon is strictly increasing in eps_local, 0 at 0 and
  // above the target at the cap, so bisection converges to the unique root.
  double lo = 0.0;
  double hi = cap;
  while (hi - lo > 1e-9) {
    const double mid = 0.5 * (lo + hi);
    if (amplification_epsilon_closed(n, mid, delta) < eps_central) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return {0.5 * (lo + hi), false};
}

}  // namespace shufflecount
