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

#ifndef SHUFFLECOUNT_ESTIMATORS_HPP_
#define SHUFFLECOUNT_ESTIMATORS_HPP_

#include <cstdint>
#include <string>

#include "shufflecount/graph.hpp"
#include "shufflecount/wedge.hpp"

namespace shufflecount {

// Whole-graph private estimators. Each run is a pure function of
// (graph, parameters, seed): internally, independent stream lanes are derived
// from the seed (lane 0 = pair plan, lane 1 = degree noise or edge-bit
// stream, lane 16+p = the work of pair p), so results never depend on
// execution order and reps parallelize safely.

// Privacy claims attached to one run. Central claims cover the whole output;
// a NaN epsilon means no claim of that kind is made.
struct PrivacyLedger {
  double eps_element;
  double delta_element;
  double eps_edge;
  double delta_edge;
};

// One estimator run: the estimate plus everything needed to reproduce and
// account for it. Fields that do not apply to an algorithm are NaN (reals)
// or 0 (t).
struct EstimateRecord {
  std::string algo;
  double estimate = 0.0;
  double eps;   // total budget as requested on the command line
  double eps1;  // split budgets, when the algorithm divides eps
  double eps2;
  double delta;
  uint64_t t = 0;  // pair count; 0 when the algorithm has no pair plan
  double c;        // degree-threshold multiplier (variance reduction only)
  double p0;       // asymmetric sampling probability (arr-tri only)
  uint64_t seed = 0;
  PrivacyLedger ledger;
  double runtime_ms;  // filled by the harness; NaN until measured
};

// Degree-threshold parameters for the variance-reduced triangle estimator.
struct VrParams {
  double eps1 = 0.0;  // degree-release budget
  double eps2 = 0.0;  // per-pair estimate budget (central, to be amplified)
  double c = 1.0;     // threshold multiplier (>= 0)
  uint64_t t = 0;     // pair count
};

// --- Plan-level kernels -----------------------------------------------------
// Deterministic cores taking an explicit pair plan; the lane layout above
// applies with `seed` as the lane base. Exposed so callers can study fixed
// plans (e.g. every partition of a 4-node graph).

// n(n-1)/(6t) * sum over pairs of the per-pair triangle estimate.
double shuffle_triangle_from_plan(const Graph& g, const WedgeBudgets& budgets,
                                  const PairPlan& plan, uint64_t seed);

// Variance-reduced variant: every user's noisy degree d_i + Lap(1/eps1) is
// released (lane 1, ascending user order); pairs whose minimum noisy degree
// is not strictly above c * (mean noisy degree) are excluded from the sum.
// Noisy degrees are used verbatim — negative values are neither clamped nor
// rounded. The per-pair protocol still runs for every pair; only the sum is
// filtered. eps1 = +infinity releases exact degrees (testing hook).
double shuffle_triangle_vr_from_plan(const Graph& g, double eps1, const WedgeBudgets& budgets,
                                     double c, const PairPlan& plan, uint64_t seed);

// n(n-1)/(4t) * sum over pairs of (w(w-1)/2 - (n-2)/2 * q(1-q)/(1-2q)^2)
// where w is the per-pair unbiased wedge estimate and q the wedge flip
// probability. Only wedge reports are used (no edge reports).
double shuffle_fourcycle_from_plan(const Graph& g, const WedgeBudgets& budgets,
                                   const PairPlan& plan, uint64_t seed);

// --- Budget-hook estimators -------------------------------------------------
// Sample the pair plan from lane 0 and run the plan kernel; budgets supplied
// directly (testing hook and local baselines).

double shuffle_triangle_with_budgets(const Graph& g, const WedgeBudgets& budgets,
                                     uint64_t t, uint64_t seed);
double shuffle_triangle_vr_with_budgets(const Graph& g, double eps1, const WedgeBudgets& budgets,
                                        double c, uint64_t t, uint64_t seed);
double shuffle_fourcycle_with_budgets(const Graph& g, const WedgeBudgets& budgets,
                                      uint64_t t, uint64_t seed);

// --- Full estimators --------------------------------------------------------

// Shuffle-model triangle count at central (eps, delta): t disjoint pairs,
// per-pair estimates at the amplified wedge budget, scaled by n(n-1)/(6t).
// Ledger: (eps, delta) element, (2 eps, 2 delta) edge.
EstimateRecord shuffle_triangle_count(const Graph& g, double eps, double delta,
                                      uint64_t t, uint64_t seed);

// Variance-reduced shuffle-model triangle count; total budget eps1 + eps2.
// Ledger: (eps1+eps2, delta) element, (2(eps1+eps2), 2 delta) edge.
EstimateRecord shuffle_triangle_count_vr(const Graph& g, const VrParams& vr, double delta,
                                         uint64_t seed);

// Local-model baseline: identical pipeline with the wedge budget set to eps
// directly (no shuffling claim). Ledger: (eps, 0) element, (2 eps, 0) edge.
EstimateRecord local_triangle_count(const Graph& g, double eps, uint64_t t, uint64_t seed);

// Shuffle-model 4-cycle count. Ledger: (eps, delta) element, (2 eps, 2 delta) edge.
EstimateRecord shuffle_fourcycle_count(const Graph& g, double eps, double delta,
                                       uint64_t t, uint64_t seed);

// Local-model 4-cycle baseline. Ledger: (eps, 0) element, (2 eps, 0) edge.
EstimateRecord local_fourcycle_count(const Graph& g, double eps, uint64_t t, uint64_t seed);

// Asymmetric randomized response triangle baseline: each lower-triangle
// adjacency bit is reported as 1 with probability p0 e^eps/(e^eps+1) for an
// edge and p0/(e^eps+1) for a non-edge (one draw per bit, lane 1, row-major
// (i, j) with i > j); the noisy graph's triple census is then debiased in two
// stages (p0 sampling, then randomized response). p0 = 1 reproduces plain
// randomized response bit-for-bit. Requires n >= 3, p0 in (0, 1], finite
// eps > 0. Ledger: (eps, 0) edge; no element claim.
EstimateRecord arr_triangle_count(const Graph& g, double eps, double p0, uint64_t seed);

// 2-star count with degree clipping: every user releases a noisy clipped
// degree and a noisy 2-star count (lane 1, two draws per user in ascending
// order). d~ = d + Lap(1/eps1) + eta_clip; the clipped degree is
// clamp(floor(d~), 0, d); the 2-star term C(clipped, 2) gets Lap(d~/eps2)
// noise (d~ taken at 0 when negative, skipping the draw). Budgets may be
// +infinity (noiseless hook). Ledger: (eps1+eps2, 0) edge; no element claim.
EstimateRecord two_star_count_estimate(const Graph& g, double eps1, double eps2,
                                       double eta_clip, uint64_t seed);

// 3 * triangle estimate / 2-star estimate. Raises std::domain_error when the
// 2-star estimate is exactly 0. The ratio is reported as-is (it may fall
// outside [0, 1] under noise).
double clustering_coefficient_estimate(const Graph& g, const EstimateRecord& triangles,
                                       const EstimateRecord& two_stars);

// Full clustering pipeline: variance-reduced triangle count (c = 1) at
// (eps, delta) and the 2-star estimate at eps, each splitting its budget
// 1:9, run on independent lanes. The ledger composes both components' edge
// claims. eps is the per-component budget (2 eps total spend).
EstimateRecord clustering_pipeline_estimate(const Graph& g, double eps, double delta,
                                            uint64_t t, double eta_clip, uint64_t seed);

}  // namespace shufflecount

#endif  // SHUFFLECOUNT_ESTIMATORS_HPP_
