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

#include "shufflecount/wedge.hpp"

#include <numeric>
#include <stdexcept>

#include "shufflecount/kernels.hpp"
#include "shufflecount/privacy.hpp"

namespace shufflecount {

namespace {

void check_pair(const Graph& g, uint32_t i, uint32_t j) {
  const uint32_t n = g.node_count();
  if (n < 3) throw std::domain_error("wedge protocol: no shufflers available (n < 3)");
  if (i == j) throw std::invalid_argument("wedge protocol: endpoints must differ");
  if (i >= n || j >= n) throw std::invalid_argument("wedge protocol: endpoint id out of range");
}

// Position of shuffler k in the n-2 slot layout that skips i and j.
inline uint64_t slot_of(uint32_t k, uint32_t i, uint32_t j) {
  return k - (k > i ? 1 : 0) - (k > j ? 1 : 0);
}

}  // namespace

WedgeBudgets WedgeBudgets::direct(double eps_edge, double eps_wedge) {
  if (!(eps_edge >= 0.0) || !(eps_wedge >= 0.0)) {
    throw std::invalid_argument("WedgeBudgets: budgets must be >= 0");
  }
  WedgeBudgets b;
  b.eps_edge = eps_edge;
  b.eps_wedge = eps_wedge;
  return b;
}

WedgeBudgets WedgeBudgets::local_model(double eps) { return direct(eps, eps); }

WedgeBudgets WedgeBudgets::shuffle_model(uint64_t n_shufflers, double eps, double delta) {
  WedgeBudgets b;
  b.eps_edge = eps;
  b.eps_wedge = local_privacy_budget(static_cast<double>(n_shufflers), eps, delta).eps_local;
  b.amplified = true;
  b.eps_central = eps;
  b.delta = delta;
  return b;
}

WedgeReport wedge_shuffle(const Graph& g, double eps_wedge, uint32_t i, uint32_t j, Rng& rng) {
  check_pair(g, i, j);
  const uint64_t m = g.node_count() - 2;
  WedgeReport report;
  report.endpoint_i = i;
  report.endpoint_j = j;
  report.bits.assign(m, 0);
  // Mark the common neighbors of i and j (neither i nor j can be one).
  const auto& ni = g.neighbors(i);
  const auto& nj = g.neighbors(j);
  auto ia = ni.begin();
  auto ib = nj.begin();
  while (ia != ni.end() && ib != nj.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      report.bits[slot_of(*ia, i, j)] = 1;
      ++ia;
      ++ib;
    }
  }
  const uint64_t threshold = bernoulli_threshold(flip_probability(eps_wedge));
  rr_apply(report.bits.data(), report.bits.data(), m, rng.state(), threshold);
  rng.advance(m);
  shuffle_span(report.bits.data(), m, rng);
  return report;
}

uint64_t randomized_wedge_sum(const Graph& g, double eps_wedge, uint32_t i, uint32_t j, Rng& rng) {
  check_pair(g, i, j);
  const uint64_t m = g.node_count() - 2;
  const uint64_t threshold = bernoulli_threshold(flip_probability(eps_wedge));
  const uint64_t state = rng.state();
  rng.advance(m);
  const auto& ni = g.neighbors(i);
  const auto& nj = g.neighbors(j);
  if (threshold == 0) {
    // Noiseless: the sum is simply the number of common neighbors.
    uint64_t wedges = 0;
    auto ia = ni.begin();
    auto ib = nj.begin();
    while (ia != ni.end() && ib != nj.end()) {
      if (*ia < *ib) {
        ++ia;
      } else if (*ib < *ia) {
        ++ib;
      } else {
        ++wedges;
        ++ia;
        ++ib;
      }
    }
    return wedges;
  }
  // sum over k of (w_k XOR flip_k) = (total flips) + sum over wedge slots of
  // (1 - 2 flip_k): count all flips in bulk, then correct the wedge slots by
  // re-deriving their individual draws from the counter-based stream.
  uint64_t sum = count_below(state, m, threshold);
  auto ia = ni.begin();
  auto ib = nj.begin();
  while (ia != ni.end() && ib != nj.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      const uint64_t slot = slot_of(*ia, i, j);
      const bool flipped = mix64(state + (slot + 1) * kGolden) < threshold;
      sum += flipped ? static_cast<uint64_t>(-1) : 1;  // 1 - 2*flip
      ++ia;
      ++ib;
    }
  }
  return sum;
}

double pair_triangle_estimate_from_reports(const LocalEdgeReports& z, uint64_t wedge_bit_sum,
                                           uint64_t n_shufflers, const WedgeBudgets& budgets) {
  if (!(budgets.eps_edge > 0.0) || !(budgets.eps_wedge > 0.0)) {
    throw std::domain_error("pair_triangle_estimate: denominator vanishes at eps = 0");
  }
  const double q = flip_probability(budgets.eps_edge);
  const double q_w = flip_probability(budgets.eps_wedge);
  const double centered_sum = static_cast<double>(wedge_bit_sum) - static_cast<double>(n_shufflers) * q_w;
  return (z.z_i + z.z_j - 2.0 * q) * centered_sum / (2.0 * (1.0 - 2.0 * q) * (1.0 - 2.0 * q_w));
}

double pair_triangle_estimate_with_budgets(const Graph& g, const WedgeBudgets& budgets,
                                           uint32_t i, uint32_t j, Rng& rng) {
  check_pair(g, i, j);
  if (!(budgets.eps_edge > 0.0) || !(budgets.eps_wedge > 0.0)) {
    throw std::domain_error("pair_triangle_estimate: denominator vanishes at eps = 0");
  }
  const uint8_t edge_bit = g.has_edge(i, j) ? 1 : 0;
  LocalEdgeReports z;
  z.z_i = warner_rr(edge_bit, budgets.eps_edge, rng);
  z.z_j = warner_rr(edge_bit, budgets.eps_edge, rng);
  const uint64_t sum = randomized_wedge_sum(g, budgets.eps_wedge, i, j, rng);
  return pair_triangle_estimate_from_reports(z, sum, g.node_count() - 2, budgets);
}

double pair_triangle_estimate(const Graph& g, double eps, double delta,
                              uint32_t i, uint32_t j, Rng& rng) {
  check_pair(g, i, j);
  const WedgeBudgets budgets = WedgeBudgets::shuffle_model(g.node_count() - 2, eps, delta);
  return pair_triangle_estimate_with_budgets(g, budgets, i, j, rng);
}

double pair_wedge_estimate_from_sum(uint64_t wedge_bit_sum, uint64_t n_shufflers, double eps_wedge) {
  if (!(eps_wedge > 0.0)) {
    throw std::domain_error("pair_wedge_estimate: denominator vanishes at eps = 0");
  }
  const double q_w = flip_probability(eps_wedge);
  return (static_cast<double>(wedge_bit_sum) - static_cast<double>(n_shufflers) * q_w) / (1.0 - 2.0 * q_w);
}

PairPlan sample_disjoint_pairs(uint32_t n, uint64_t t, Rng& rng) {
  if (t < 1 || 2 * t > n) throw std::invalid_argument("sample_disjoint_pairs: requires 1 <= t <= n/2");
  std::vector<uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  shuffle_span(order.data(), n, rng);
  PairPlan plan;
  plan.pairs.reserve(t);
  for (uint64_t p = 0; p < t; ++p) {
    plan.pairs.emplace_back(order[2 * p], order[2 * p + 1]);
  }
  return plan;
}

}  // namespace shufflecount
