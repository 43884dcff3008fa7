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

#include "shufflecount/estimators.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "shufflecount/exact.hpp"
#include "shufflecount/privacy.hpp"
#include "shufflecount/rng.hpp"

namespace shufflecount {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Stream-lane ids within one estimator run.
constexpr uint64_t kLanePlan = 0;   // pair-plan permutation
constexpr uint64_t kLaneNoise = 1;  // degree noise / edge-bit stream
constexpr uint64_t kLanePair = 16;  // lane kLanePair + p drives pair p

// Lane ids for composed pipelines (separate protocol executions).
constexpr uint64_t kLaneTriangleRun = 101;
constexpr uint64_t kLaneTwoStarRun = 102;

Rng lane(uint64_t seed, uint64_t id) { return Rng(fold_in(seed, id)); }

void check_plan_inputs(const Graph& g, uint64_t t) {
  if (g.node_count() < 3) throw std::domain_error("estimator: no shufflers available (n < 3)");
  if (t < 1 || 2 * t > g.node_count()) throw std::invalid_argument("estimator: requires 1 <= t <= n/2");
}

// Laplace draw that treats scale 0 as "no noise, no draw" so +infinity
// budgets (scale 1/eps = 0) flow through the noiseless hook naturally.
double laplace_or_zero(double scale, Rng& rng) {
  return scale > 0.0 ? laplace_noise(scale, rng) : 0.0;
}

// Central-model budgets for the wedge protocol. An infinite central budget
// is the noiseless sentinel: flip probabilities are zero, so shuffle
// amplification is unnecessary (and undefined for small n) and is bypassed.
WedgeBudgets central_budgets(uint64_t n_shufflers, double eps, double delta) {
  if (std::isinf(eps) && eps > 0.0) return WedgeBudgets::direct(eps, eps);
  return WedgeBudgets::shuffle_model(n_shufflers, eps, delta);
}

// Released noisy degrees for all users, ascending user order, one lane-1
// draw each (none when eps1 is infinite).
std::vector<double> noisy_degrees(const Graph& g, double eps1, Rng& rng) {
  if (!(eps1 > 0.0)) throw std::invalid_argument("noisy degree release: eps1 must be > 0");
  const double scale = 1.0 / eps1;
  std::vector<double> noisy(g.node_count());
  for (uint32_t v = 0; v < g.node_count(); ++v) {
    noisy[v] = static_cast<double>(g.degree(v)) + laplace_or_zero(scale, rng);
  }
  return noisy;
}

EstimateRecord blank_record(const std::string& algo, uint64_t seed) {
  EstimateRecord rec;
  rec.algo = algo;
  rec.eps = kNaN;
  rec.eps1 = kNaN;
  rec.eps2 = kNaN;
  rec.delta = kNaN;
  rec.c = kNaN;
  rec.p0 = kNaN;
  rec.seed = seed;
  rec.ledger = {kNaN, kNaN, kNaN, kNaN};
  rec.runtime_ms = kNaN;
  return rec;
}

}  // namespace

double shuffle_triangle_from_plan(const Graph& g, const WedgeBudgets& budgets,
                                  const PairPlan& plan, uint64_t seed) {
  check_plan_inputs(g, plan.t());
  const double n = static_cast<double>(g.node_count());
  double sum = 0.0;
  for (uint64_t p = 0; p < plan.t(); ++p) {
    Rng pair_rng = lane(seed, kLanePair + p);
    sum += pair_triangle_estimate_with_budgets(g, budgets, plan.pairs[p].first,
                                               plan.pairs[p].second, pair_rng);
  }
  // Multiply before dividing: keeps the noiseless complete-graph value exact.
  return n * (n - 1.0) * sum / (6.0 * static_cast<double>(plan.t()));
}

double shuffle_triangle_vr_from_plan(const Graph& g, double eps1, const WedgeBudgets& budgets,
                                     double c, const PairPlan& plan, uint64_t seed) {
  check_plan_inputs(g, plan.t());
  if (!(c >= 0.0)) throw std::invalid_argument("variance reduction: c must be >= 0");
  const double n = static_cast<double>(g.node_count());
  Rng noise_rng = lane(seed, kLaneNoise);
  const std::vector<double> noisy = noisy_degrees(g, eps1, noise_rng);
  double degree_sum = 0.0;
  for (double d : noisy) degree_sum += d;
  const double threshold = c * (degree_sum / n);
  // Every pair's protocol runs; the threshold only gates the sum, comparing
  // the raw noisy values (negative ones included) strictly against c * mean.
  double sum = 0.0;
  for (uint64_t p = 0; p < plan.t(); ++p) {
    const auto [i, j] = plan.pairs[p];
    Rng pair_rng = lane(seed, kLanePair + p);
    const double estimate = pair_triangle_estimate_with_budgets(g, budgets, i, j, pair_rng);
    if (std::min(noisy[i], noisy[j]) > threshold) sum += estimate;
  }
  return n * (n - 1.0) * sum / (6.0 * static_cast<double>(plan.t()));
}

double shuffle_fourcycle_from_plan(const Graph& g, const WedgeBudgets& budgets,
                                   const PairPlan& plan, uint64_t seed) {
  check_plan_inputs(g, plan.t());
  if (!(budgets.eps_wedge > 0.0)) {
    throw std::domain_error("fourcycle estimate: denominator vanishes at eps = 0");
  }
  const double n = static_cast<double>(g.node_count());
  const uint64_t m = g.node_count() - 2;
  const double q_w = flip_probability(budgets.eps_wedge);
  const double one_minus = 1.0 - 2.0 * q_w;
  // Quadratic bias of w(w-1)/2 under bit flips, subtracted per pair.
  const double correction = 0.5 * static_cast<double>(m) * q_w * (1.0 - q_w) / (one_minus * one_minus);
  double sum = 0.0;
  for (uint64_t p = 0; p < plan.t(); ++p) {
    const auto [i, j] = plan.pairs[p];
    Rng pair_rng = lane(seed, kLanePair + p);
    const uint64_t bit_sum = randomized_wedge_sum(g, budgets.eps_wedge, i, j, pair_rng);
    const double w = pair_wedge_estimate_from_sum(bit_sum, m, budgets.eps_wedge);
    sum += 0.5 * w * (w - 1.0) - correction;
  }
  return n * (n - 1.0) * sum / (4.0 * static_cast<double>(plan.t()));
}

double shuffle_triangle_with_budgets(const Graph& g, const WedgeBudgets& budgets,
                                     uint64_t t, uint64_t seed) {
  check_plan_inputs(g, t);
  Rng plan_rng = lane(seed, kLanePlan);
  const PairPlan plan = sample_disjoint_pairs(g.node_count(), t, plan_rng);
  return shuffle_triangle_from_plan(g, budgets, plan, seed);
}

double shuffle_triangle_vr_with_budgets(const Graph& g, double eps1, const WedgeBudgets& budgets,
                                        double c, uint64_t t, uint64_t seed) {
  check_plan_inputs(g, t);
  Rng plan_rng = lane(seed, kLanePlan);
  const PairPlan plan = sample_disjoint_pairs(g.node_count(), t, plan_rng);
  return shuffle_triangle_vr_from_plan(g, eps1, budgets, c, plan, seed);
}

double shuffle_fourcycle_with_budgets(const Graph& g, const WedgeBudgets& budgets,
                                      uint64_t t, uint64_t seed) {
  check_plan_inputs(g, t);
  Rng plan_rng = lane(seed, kLanePlan);
  const PairPlan plan = sample_disjoint_pairs(g.node_count(), t, plan_rng);
  return shuffle_fourcycle_from_plan(g, budgets, plan, seed);
}

EstimateRecord shuffle_triangle_count(const Graph& g, double eps, double delta,
                                      uint64_t t, uint64_t seed) {
  check_plan_inputs(g, t);
  const WedgeBudgets budgets = central_budgets(g.node_count() - 2, eps, delta);
  EstimateRecord rec = blank_record("wshuffle-tri", seed);
  rec.estimate = shuffle_triangle_with_budgets(g, budgets, t, seed);
  rec.eps = eps;
  rec.delta = delta;
  rec.t = t;
  rec.ledger = {eps, delta, 2.0 * eps, 2.0 * delta};
  return rec;
}

EstimateRecord shuffle_triangle_count_vr(const Graph& g, const VrParams& vr, double delta,
                                         uint64_t seed) {
  check_plan_inputs(g, vr.t);
  if (!(vr.eps1 > 0.0) || !(vr.eps2 > 0.0)) {
    throw std::invalid_argument("shuffle_triangle_count_vr: eps1 and eps2 must be > 0");
  }
  const WedgeBudgets budgets = central_budgets(g.node_count() - 2, vr.eps2, delta);
  EstimateRecord rec = blank_record("wshuffle-tri-vr", seed);
  rec.estimate = shuffle_triangle_vr_with_budgets(g, vr.eps1, budgets, vr.c, vr.t, seed);
  rec.eps = vr.eps1 + vr.eps2;
  rec.eps1 = vr.eps1;
  rec.eps2 = vr.eps2;
  rec.delta = delta;
  rec.t = vr.t;
  rec.c = vr.c;
  rec.ledger = {vr.eps1 + vr.eps2, delta, 2.0 * (vr.eps1 + vr.eps2), 2.0 * delta};
  return rec;
}

EstimateRecord local_triangle_count(const Graph& g, double eps, uint64_t t, uint64_t seed) {
  check_plan_inputs(g, t);
  EstimateRecord rec = blank_record("wlocal-tri", seed);
  rec.estimate = shuffle_triangle_with_budgets(g, WedgeBudgets::local_model(eps), t, seed);
  rec.eps = eps;
  rec.t = t;
  rec.ledger = {eps, 0.0, 2.0 * eps, 0.0};
  return rec;
}

EstimateRecord shuffle_fourcycle_count(const Graph& g, double eps, double delta,
                                       uint64_t t, uint64_t seed) {
  check_plan_inputs(g, t);
  const WedgeBudgets budgets = central_budgets(g.node_count() - 2, eps, delta);
  EstimateRecord rec = blank_record("wshuffle-c4", seed);
  rec.estimate = shuffle_fourcycle_with_budgets(g, budgets, t, seed);
  rec.eps = eps;
  rec.delta = delta;
  rec.t = t;
  rec.ledger = {eps, delta, 2.0 * eps, 2.0 * delta};
  return rec;
}

EstimateRecord local_fourcycle_count(const Graph& g, double eps, uint64_t t, uint64_t seed) {
  check_plan_inputs(g, t);
  EstimateRecord rec = blank_record("wlocal-c4", seed);
  rec.estimate = shuffle_fourcycle_with_budgets(g, WedgeBudgets::local_model(eps), t, seed);
  rec.eps = eps;
  rec.t = t;
  rec.ledger = {eps, 0.0, 2.0 * eps, 0.0};
  return rec;
}

EstimateRecord arr_triangle_count(const Graph& g, double eps, double p0, uint64_t seed) {
  const uint32_t n = g.node_count();
  if (n < 3) throw std::invalid_argument("arr_triangle_count: requires n >= 3");
  if (!(p0 > 0.0 && p0 <= 1.0)) throw std::invalid_argument("arr_triangle_count: p0 must be in (0, 1]");
  if (!(eps >= 0.0) || std::isinf(eps)) throw std::invalid_argument("arr_triangle_count: eps must be finite and >= 0");
  if (eps == 0.0) throw std::domain_error("arr_triangle_count: debiasing divides by zero at eps = 0");
  const double e_eps = std::exp(eps);
  // One draw per lower-triangle bit: report 1 with probability
  // p0 e^eps/(e^eps+1) for an edge, p0/(e^eps+1) for a non-edge (randomized
  // response followed by keeping 1s with probability p0, collapsed into a
  // single draw).
  const uint64_t thr_edge = bernoulli_threshold(p0 * e_eps / (e_eps + 1.0));
  const uint64_t thr_gap = bernoulli_threshold(p0 / (e_eps + 1.0));
  Rng bit_rng = lane(seed, kLaneNoise);
  std::vector<std::pair<uint32_t, uint32_t>> noisy_edges;
  for (uint32_t i = 1; i < n; ++i) {
    const auto& ni = g.neighbors(i);
    auto next_neighbor = ni.begin();
    for (uint32_t j = 0; j < i; ++j) {
      const bool is_edge = next_neighbor != ni.end() && *next_neighbor == j;
      if (is_edge) ++next_neighbor;
      if (bit_rng.next() < (is_edge ? thr_edge : thr_gap)) noisy_edges.emplace_back(i, j);
    }
  }
  const Graph noisy = Graph::from_edges(n, noisy_edges);
  const TripleCensus census = triple_census(noisy);
  // Stage 1: undo the p0 thinning of the census classes.
  const double m3 = static_cast<double>(census.m3) / (p0 * p0 * p0);
  const double m2 = static_cast<double>(census.m2) / (p0 * p0) - 3.0 * (1.0 - p0) * m3;
  const double m1 = static_cast<double>(census.m1) / p0 - 3.0 * (1.0 - p0) * (1.0 - p0) * m3 -
                    2.0 * (1.0 - p0) * m2;
  const double m0 = static_cast<double>(choose3(n)) - m3 - m2 - m1;
  // Stage 2: undo randomized response across the four classes.
  const double denom = (e_eps - 1.0) * (e_eps - 1.0) * (e_eps - 1.0);
  const double estimate = (e_eps * e_eps * e_eps * m3 - e_eps * e_eps * m2 + e_eps * m1 - m0) / denom;
  EstimateRecord rec = blank_record("arr-tri", seed);
  rec.estimate = estimate;
  rec.eps = eps;
  rec.p0 = p0;
  // Each adjacency bit is reported by exactly one endpoint (the larger id),
  // so the edge claim does not double.
  rec.ledger = {kNaN, kNaN, eps, 0.0};
  return rec;
}

EstimateRecord two_star_count_estimate(const Graph& g, double eps1, double eps2,
                                       double eta_clip, uint64_t seed) {
  if (!(eps1 > 0.0) || !(eps2 > 0.0)) {
    throw std::invalid_argument("two_star_count_estimate: budgets must be > 0");
  }
  if (!(eta_clip >= 0.0)) throw std::invalid_argument("two_star_count_estimate: eta_clip must be >= 0");
  const uint32_t n = g.node_count();
  if (n == 0) throw std::invalid_argument("two_star_count_estimate: requires n >= 1");
  Rng noise_rng = lane(seed, kLaneNoise);
  const double degree_scale = 1.0 / eps1;
  double total = 0.0;
  for (uint32_t v = 0; v < n; ++v) {
    const double degree = static_cast<double>(g.degree(v));
    const double noisy_degree = degree + laplace_or_zero(degree_scale, noise_rng) + eta_clip;
    // Degree clipping: only the clipped COUNT feeds C(d', 2), so removing
    // specific neighbors is immaterial here and no draws are spent on it.
    const double clipped = std::max(0.0, std::min(std::floor(noisy_degree), degree));
    const double stars = 0.5 * clipped * (clipped - 1.0);
    // Sensitivity scales with the released noisy degree; a nonpositive d~
    // means an empty clipped list, whose count needs no noise.
    const double star_scale = std::max(noisy_degree, 0.0) / eps2;
    total += stars + laplace_or_zero(star_scale, noise_rng);
  }
  EstimateRecord rec = blank_record("two-star", seed);
  rec.estimate = total;
  rec.eps = eps1 + eps2;
  rec.eps1 = eps1;
  rec.eps2 = eps2;
  rec.ledger = {kNaN, kNaN, eps1 + eps2, 0.0};
  return rec;
}

double clustering_coefficient_estimate(const Graph& g, const EstimateRecord& triangles,
                                       const EstimateRecord& two_stars) {
  (void)g;
  if (two_stars.estimate == 0.0) {
    throw std::domain_error("clustering_coefficient_estimate: undefined, 2-star estimate is zero");
  }
  return 3.0 * triangles.estimate / two_stars.estimate;
}

EstimateRecord clustering_pipeline_estimate(const Graph& g, double eps, double delta,
                                            uint64_t t, double eta_clip, uint64_t seed) {
  VrParams vr;
  vr.eps1 = eps / 10.0;
  vr.eps2 = eps - eps / 10.0;
  vr.c = 1.0;
  vr.t = t;
  const EstimateRecord triangles =
      shuffle_triangle_count_vr(g, vr, delta, fold_in(seed, kLaneTriangleRun));
  const EstimateRecord two_stars = two_star_count_estimate(
      g, eps / 10.0, eps - eps / 10.0, eta_clip, fold_in(seed, kLaneTwoStarRun));
  EstimateRecord rec = blank_record("clustering", seed);
  rec.estimate = clustering_coefficient_estimate(g, triangles, two_stars);
  rec.eps = eps;
  rec.eps1 = eps / 10.0;
  rec.eps2 = eps - eps / 10.0;
  rec.delta = delta;
  rec.t = t;
  rec.c = 1.0;
  // Sequential composition of the two components' edge claims.
  rec.ledger = {kNaN, kNaN, triangles.ledger.eps_edge + two_stars.ledger.eps_edge,
                triangles.ledger.delta_edge + two_stars.ledger.delta_edge};
  return rec;
}

}  // namespace shufflecount
