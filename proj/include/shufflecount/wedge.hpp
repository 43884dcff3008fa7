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

#ifndef SHUFFLECOUNT_WEDGE_HPP_
#define SHUFFLECOUNT_WEDGE_HPP_

#include <cstdint>
#include <utility>
#include <vector>

#include "shufflecount/graph.hpp"
#include "shufflecount/rng.hpp"

namespace shufflecount {

// One-round protocol primitives, simulating the user / shuffler / collector
// roles in-process. For an endpoint pair (i, j), every other user k holds the
// wedge indicator w_k = a(k,i) * a(k,j) (is k a common neighbor of i and j);
// the users randomize these bits locally and a shuffler permutes the batch
// before the collector sees it, so only the bit multiset is learnable.

// The shuffled batch of n-2 randomized wedge bits for one endpoint pair.
// Consumers may depend only on the multiset of bits (their sum), never on
// positions — the collector-side estimators below honor that.
struct WedgeReport {
  std::vector<uint8_t> bits;
  uint32_t endpoint_i = 0;
  uint32_t endpoint_j = 0;
};

// The endpoints' own randomized reports of the edge between them: z_i is
// user i's randomized a(i,j) and z_j is user j's randomized a(j,i).
struct LocalEdgeReports {
  uint8_t z_i = 0;
  uint8_t z_j = 0;
};

// t disjoint ordered user pairs; no user appears in two pairs (2t <= n).
struct PairPlan {
  std::vector<std::pair<uint32_t, uint32_t>> pairs;
  uint64_t t() const { return pairs.size(); }
};

// Budgets for one pair estimate. eps_edge randomizes the endpoints' edge
// reports; eps_wedge randomizes each wedge bit before shuffling. Either may
// be +infinity (the noiseless testing sentinel: flip probability 0).
// When the wedge budget was derived from a central target via amplification
// accounting, the claimed central budget is carried along for the ledger;
// budgets set directly carry only local-model claims.
struct WedgeBudgets {
  double eps_edge = 0.0;
  double eps_wedge = 0.0;
  bool amplified = false;
  double eps_central = 0.0;  // meaningful only when amplified
  double delta = 0.0;        // meaningful only when amplified

  // Both budgets supplied directly; no amplification claim attached.
  static WedgeBudgets direct(double eps_edge, double eps_wedge);
  // Local-model baseline: wedge bits randomized at the same eps as edges.
  static WedgeBudgets local_model(double eps);
  // Shuffle model: eps_wedge = local_privacy_budget(n_shufflers, eps, delta),
  // eps_edge = eps. Throws std::domain_error when n_shufflers is too small.
  static WedgeBudgets shuffle_model(uint64_t n_shufflers, double eps, double delta);
};

// Draw-order contract (what each operation consumes from its stream):
//   wedge_shuffle:    n-2 flip draws in ascending-k order, then the
//                     Fisher-Yates shuffle draws.
//   pair estimators:  one draw for z_i, one for z_j (triangle only), then
//                     exactly n-2 flip draws; the shuffle is not replayed
//                     because the estimate depends only on the bit sum.
// The flip draws are a counter-based block, so the sum path below is
// bit-identical to summing an actual wedge_shuffle report started from the
// same stream state.

// Randomizes and shuffles the wedge bits of pair (i, j) at eps_wedge.
// Requires n >= 3 ("no shufflers available" otherwise) and i != j.
WedgeReport wedge_shuffle(const Graph& g, double eps_wedge, uint32_t i, uint32_t j, Rng& rng);

// Sum of the n-2 randomized wedge bits of pair (i, j), consuming exactly n-2
// draws; equals the bit sum of the wedge_shuffle report for the same stream
// state. Vectorized via the count_below kernel.
uint64_t randomized_wedge_sum(const Graph& g, double eps_wedge, uint32_t i, uint32_t j, Rng& rng);

// Collector-side estimate of the triangles involving pair (i, j) from one
// report batch: (z_i + z_j - 2q) * (sum_bits - (n-2) q_w) / (2 (1-2q)(1-2q_w))
// with q = flip_probability(eps_edge), q_w = flip_probability(eps_wedge).
// Requires both budgets > 0 (the denominator vanishes at eps = 0).
double pair_triangle_estimate_from_reports(const LocalEdgeReports& z, uint64_t wedge_bit_sum,
                                           uint64_t n_shufflers, const WedgeBudgets& budgets);

// Runs the full per-pair triangle protocol (edge reports, wedge randomizing,
// estimate) with budgets supplied directly. Requires n >= 3, i != j, and both
// budgets > 0.
double pair_triangle_estimate_with_budgets(const Graph& g, const WedgeBudgets& budgets,
                                           uint32_t i, uint32_t j, Rng& rng);

// As above with the wedge budget derived from the central (eps, delta) via
// amplification over the n-2 shufflers. Propagates the domain error when n-2
// reports cannot amplify at this delta.
double pair_triangle_estimate(const Graph& g, double eps, double delta,
                              uint32_t i, uint32_t j, Rng& rng);

// Unbiased wedge-count estimate from one report batch:
// (sum_bits - (n-2) q_w) / (1 - 2 q_w). Requires eps_wedge > 0.
double pair_wedge_estimate_from_sum(uint64_t wedge_bit_sum, uint64_t n_shufflers, double eps_wedge);

// Uniform random partial matching: draws a uniform permutation sigma of
// 0..n-1 and pairs consecutive entries (sigma[0], sigma[1]), ...,
// (sigma[2t-2], sigma[2t-1]). Requires 1 <= t <= floor(n/2).
PairPlan sample_disjoint_pairs(uint32_t n, uint64_t t, Rng& rng);

}  // namespace shufflecount

#endif  // SHUFFLECOUNT_WEDGE_HPP_
