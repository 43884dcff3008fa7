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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "shufflecount/exact.hpp"
#include "shufflecount/privacy.hpp"
#include "shufflecount/rng.hpp"
#include "shufflecount/wedge.hpp"
#include "test_util.hpp"

using shufflecount::Graph;
using shufflecount::LocalEdgeReports;
using shufflecount::pair_triangle_estimate_from_reports;
using shufflecount::pair_triangle_estimate_with_budgets;
using shufflecount::pair_wedge_estimate_from_sum;
using shufflecount::PairPlan;
using shufflecount::randomized_wedge_sum;
using shufflecount::Rng;
using shufflecount::sample_disjoint_pairs;
using shufflecount::wedge_count_pair;
using shufflecount::wedge_shuffle;
using shufflecount::WedgeBudgets;
using shufflecount::WedgeReport;
using shufflecount_tests::complete_graph;
using shufflecount_tests::edgeless_graph;
using shufflecount_tests::er_graph;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

uint64_t bit_sum(const WedgeReport& r) {
  uint64_t s = 0;
  for (uint8_t b : r.bits) s += b;
  return s;
}

}  // namespace

TEST_CASE("wedge shuffle on K3 reports the single wedge") {
  const Graph k3 = complete_graph(3);
  Rng rng(5);
  for (int i = 0; i < 50; ++i) {
    const WedgeReport r = wedge_shuffle(k3, 50.0, 0, 1, rng);
    REQUIRE_EQ(r.bits.size(), 1);
    CHECK_EQ(r.bits[0], 1);  // flip probability ~2e-22
    CHECK_EQ(r.endpoint_i, 0);
    CHECK_EQ(r.endpoint_j, 1);
  }
}

TEST_CASE("wedge shuffle on an edgeless graph reports all zeros") {
  const Graph g = edgeless_graph(10);
  Rng rng(6);
  for (int i = 0; i < 50; ++i) {
    const WedgeReport r = wedge_shuffle(g, 50.0, 2, 7, rng);
    REQUIRE_EQ(r.bits.size(), 8);
    CHECK_EQ(bit_sum(r), 0);
  }
}

TEST_CASE("wedge shuffle errors") {
  Rng rng(1);
  CHECK_THROWS_WITH_AS(wedge_shuffle(complete_graph(2), 1.0, 0, 1, rng),
                       doctest::Contains("no shufflers available"), std::domain_error);
  CHECK_THROWS_AS(wedge_shuffle(complete_graph(4), 1.0, 2, 2, rng), std::invalid_argument);
  CHECK_THROWS_AS(wedge_shuffle(complete_graph(4), 1.0, 0, 9, rng), std::invalid_argument);
}

TEST_CASE("noiseless wedge shuffle is a permutation of the true wedge bits") {
  const Graph g = er_graph(30, 0.4, 8);
  Rng rng(9);
  for (uint32_t i = 0; i < 5; ++i) {
    for (uint32_t j = i + 1; j < 6; ++j) {
      const WedgeReport r = wedge_shuffle(g, kInf, i, j, rng);
      CHECK_EQ(bit_sum(r), wedge_count_pair(g, i, j));
    }
  }
}

TEST_CASE("wedge bits flip at rate 1/(e+1) against the exact wedge count") {
  // n=100, eps 1: each of the 98 bits independently differs from its true
  // value with probability q = 1/(e+1).
  const Graph g = er_graph(100, 0.3, 44);
  const uint32_t i = 0, j = 1;
  const double runs = 100000;
  const uint64_t truth = wedge_count_pair(g, i, j);
  const double q = shufflecount::flip_probability(1.0);
  Rng rng(77);
   uint64_t total = 0;
  for (int r = 0; r < runs; ++r) {
    total += randomized_wedge_sum(g, 1.0, i, j, rng);
  }
  // E[sum] = truth*(1-q) + (98-truth)*q; per-bit flip rate recovered from it.
  const double mean_sum = static_cast<double>(total) / runs;
  const double flip_rate = (mean_sum - static_cast<double>(truth)) /
                           (98.0 - 2.0 * static_cast<double>(truth));
  CHECK_LT(std::fabs(flip_rate - q), 0.01);
}

TEST_CASE("sum path is bit-identical to summing a materialized report") {
  const Graph g = er_graph(64, 0.35, 3);
  for (uint64_t seed = 0; seed < 40; ++seed) {
    Rng a(seed), b(seed);
    const WedgeReport r = wedge_shuffle(g, 1.3, 4, 9, a);
    const uint64_t s = randomized_wedge_sum(g, 1.3, 4, 9, b);
    CHECK_EQ(bit_sum(r), s);
  }
}

TEST_CASE("estimators depend only on the bit multiset, not on positions") {
  // Same report contents in shuffled vs sorted order give identical
  // estimates: the estimate is a function of the sum alone.
  const uint64_t n_shufflers = 59;
  const WedgeBudgets budgets = WedgeBudgets::direct(1.0, 2.0);
  const LocalEdgeReports z{1, 0};
  for (uint64_t sum = 0; sum <= n_shufflers; sum += 7) {
    const double est = pair_triangle_estimate_from_reports(z, sum, n_shufflers, budgets);
    // Recomputing from any permutation is trivially the same because only the
    // sum enters; check the wedge estimate agrees through the same interface.
    const double wedge_est = pair_wedge_estimate_from_sum(sum, n_shufflers, 2.0);
    CHECK_EQ(est, pair_triangle_estimate_from_reports(z, sum, n_shufflers, budgets));
    CHECK(std::isfinite(wedge_est));
  }
}

TEST_CASE("noiseless per-pair estimates reproduce exact triangle counts") {
  const WedgeBudgets noiseless = WedgeBudgets::direct(kInf, kInf);
  Rng rng(11);
  // K3 pair (0,1): exactly 1 triangle, every run.
  const Graph k3 = complete_graph(3);
  for (int r = 0; r < 20; ++r) {
    CHECK_EQ(pair_triangle_estimate_with_budgets(k3, noiseless, 0, 1, rng), 1.0);
  }
  // Edgeless: exactly 0.
  const Graph e10 = edgeless_graph(10);
  for (int r = 0; r < 20; ++r) {
    CHECK_EQ(pair_triangle_estimate_with_budgets(e10, noiseless, 3, 8, rng), 0.0);
  }
  // K5: every pair is in exactly 3 triangles.
  const Graph k5 = complete_graph(5);
  for (uint32_t i = 0; i < 5; ++i)
    for (uint32_t j = 0; j < 5; ++j)
      if (i != j) CHECK_EQ(pair_triangle_estimate_with_budgets(k5, noiseless, i, j, rng), 3.0);
  // Random graph: noiseless estimate equals the exact per-pair count.
  const Graph g = er_graph(40, 0.3, 19);
  for (uint32_t j = 1; j < 20; ++j) {
    CHECK_EQ(pair_triangle_estimate_with_budgets(g, noiseless, 0, j, rng),
             static_cast<double>(shufflecount::triangles_involving_pair(g, 0, j)));
  }
}

TEST_CASE("zero budgets make the estimator denominator vanish") {
  const Graph k3 = complete_graph(3);
  Rng rng(2);
  CHECK_THROWS_AS(
      pair_triangle_estimate_with_budgets(k3, WedgeBudgets::direct(0.0, 1.0), 0, 1, rng),
      std::domain_error);
  CHECK_THROWS_AS(
      pair_triangle_estimate_with_budgets(k3, WedgeBudgets::direct(1.0, 0.0), 0, 1, rng),
      std::domain_error);
  CHECK_THROWS_AS(pair_wedge_estimate_from_sum(1, 10, 0.0), std::domain_error);
  CHECK_THROWS_AS(WedgeBudgets::direct(-1.0, 1.0), std::invalid_argument);
}

TEST_CASE("budget constructors carry the right accounting claims") {
  const WedgeBudgets local = WedgeBudgets::local_model(1.5);
  CHECK_EQ(local.eps_edge, 1.5);
  CHECK_EQ(local.eps_wedge, 1.5);
  CHECK_FALSE(local.amplified);

  const WedgeBudgets shuffled = WedgeBudgets::shuffle_model(100000, 1.0, 1e-8);
  CHECK_EQ(shuffled.eps_edge, 1.0);
  CHECK(shuffled.amplified);
  CHECK_EQ(shuffled.eps_central, 1.0);
  CHECK_EQ(shuffled.delta, 1e-8);
  CHECK_LT(std::fabs(shuffled.eps_wedge - 5.4463803300779635168), 2e-9);
  // The local model would need eps 5.45 to match the shuffle model's wedge
  // accuracy here; the shuffle model gets it while claiming central eps 1.
  CHECK_GT(shuffled.eps_wedge, 5.0);
  CHECK_THROWS_AS(WedgeBudgets::shuffle_model(100, 1.0, 1e-8), std::domain_error);
}

TEST_CASE("per-pair estimate round trip through explicit reports") {
  // Collector algebra: with known reports the estimate is the closed form.
  const WedgeBudgets b = WedgeBudgets::direct(1.0, 2.0);
  const double q = shufflecount::flip_probability(1.0);
  const double qw = shufflecount::flip_probability(2.0);
  const uint64_t n_shufflers = 38;
  const uint64_t sum = 11;
  const LocalEdgeReports z{1, 1};
  const double want = (1.0 + 1.0 - 2 * q) * (sum - n_shufflers * qw) /
                      (2 * (1 - 2 * q) * (1 - 2 * qw));
  CHECK_EQ(pair_triangle_estimate_from_reports(z, sum, n_shufflers, b),
           doctest::Approx(want).epsilon(1e-15));
  // Wedge estimate closed form.
  CHECK_EQ(pair_wedge_estimate_from_sum(sum, n_shufflers, 2.0),
           doctest::Approx((sum - n_shufflers * qw) / (1 - 2 * qw)).epsilon(1e-15));
}

TEST_CASE("amplified per-pair estimate matches direct budgets at the inverted eps") {
  // pair_triangle_estimate(eps, delta) must behave exactly like the direct
  // variant run at the amplification-inverted wedge budget.
  const Graph g = er_graph(400, 0.2, 23);
  const double eps = 1.0, delta = 1e-8;
  const WedgeBudgets b = WedgeBudgets::shuffle_model(398, eps, delta);
  Rng a(31), c(31);
  const double direct = pair_triangle_estimate_with_budgets(g, b, 10, 20, a);
  const double amplified = shufflecount::pair_triangle_estimate(g, eps, delta, 10, 20, c);
  CHECK_EQ(direct, amplified);
}

TEST_CASE("disjoint pair sampling is a partial matching") {
  Rng rng(41);
  for (uint32_t n : {6u, 7u, 100u}) {
    for (uint64_t t = 1; 2 * t <= n; t += 2) {
      const PairPlan plan = sample_disjoint_pairs(n, t, rng);
      CHECK_EQ(plan.t(), t);
      std::set<uint32_t> seen;
      for (const auto& [i, j] : plan.pairs) {
        CHECK_NE(i, j);
        CHECK_LT(i, n);
        CHECK_LT(j, n);
        seen.insert(i);
        seen.insert(j);
      }
      CHECK_EQ(seen.size(), 2 * t);  // no user in two pairs
    }
  }
  CHECK_THROWS_AS(sample_disjoint_pairs(10, 0, rng), std::invalid_argument);
  CHECK_THROWS_AS(sample_disjoint_pairs(10, 6, rng), std::invalid_argument);
}

TEST_CASE("each unordered pair appears in the matching with the uniform marginal") {
  // n=6, t=3 (perfect matching): P[{0,1} matched] = 1/5.
  const int reps = 100000;
  Rng rng(55);
  int hits = 0;
  for (int r = 0; r < reps; ++r) {
    const PairPlan plan = sample_disjoint_pairs(6, 3, rng);
    for (const auto& [i, j] : plan.pairs) {
      if ((i == 0 && j == 1) || (i == 1 && j == 0)) ++hits;
    }
  }
  CHECK_LT(std::fabs(static_cast<double>(hits) / reps - 0.2), 0.01);
}

TEST_CASE("each adjacency element is consumed at most once per plan") {
  // Element-access discipline behind the composition claim: across one plan,
  // the protocol touches each user's adjacency bits for exactly one pair.
  const uint32_t n = 30;
  Rng rng(67);
  const PairPlan plan = sample_disjoint_pairs(n, 15, rng);
  std::set<uint32_t> endpoint_users;
  for (const auto& [i, j] : plan.pairs) {
    CHECK(endpoint_users.insert(i).second);
    CHECK(endpoint_users.insert(j).second);
  }
  CHECK_EQ(endpoint_users.size(), n);
}
