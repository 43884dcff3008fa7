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

#ifndef SHUFFLECOUNT_EXACT_HPP_
#define SHUFFLECOUNT_EXACT_HPP_

#include <cstdint>

#include "shufflecount/graph.hpp"

namespace shufflecount {

// Exact (non-private) subgraph counters used as ground truth for relative
// error and as verification oracles. All results are 64-bit counts; exceeding
// that range raises std::overflow_error.

// Node-triple census: triples spanning exactly 3, 2, 1, or 0 edges.
// m3 + m2 + m1 + m0 = C(n, 3) always.
struct TripleCensus {
  uint64_t m3 = 0;
  uint64_t m2 = 0;
  uint64_t m1 = 0;
  uint64_t m0 = 0;
};

// Binomial coefficients with overflow checking.
uint64_t choose2(uint64_t n);
uint64_t choose3(uint64_t n);

// Number of unordered node triples forming a triangle, via per-edge sorted
// neighbor-list intersection (each triangle counted once).
uint64_t count_triangles(const Graph& g);

// Number of 4-cycles, each counted once, via co-degree accumulation over
// 2-paths: f = (1/2) * sum over unordered pairs of C(codegree, 2).
uint64_t count_four_cycles(const Graph& g);

// |N(i) ∩ N(j)|: the number of length-2 paths between i and j. i and j
// themselves can never appear in the intersection (no self-loops).
// Requires i != j.
uint64_t wedge_count_pair(const Graph& g, uint32_t i, uint32_t j);

// Triangles containing both i and j: adjacency(i,j) * wedge_count_pair.
// Requires i != j.
uint64_t triangles_involving_pair(const Graph& g, uint32_t i, uint32_t j);

// Number of 2-stars: sum over nodes of C(degree, 2).
uint64_t count_two_stars(const Graph& g);

// 3 * triangles / 2-stars. Raises std::domain_error when the graph has no
// 2-stars (the ratio is undefined).
double clustering_coefficient_exact(const Graph& g);

// Census from closed-form identities on the degree sequence, edge count, and
// triangle count. Requires n >= 3.
TripleCensus triple_census(const Graph& g);

}  // namespace shufflecount

#endif  // SHUFFLECOUNT_EXACT_HPP_
