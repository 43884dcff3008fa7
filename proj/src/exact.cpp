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

#include "shufflecount/exact.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <unordered_map>

namespace shufflecount {

namespace {

using u128 = unsigned __int128;

uint64_t checked_u64(u128 value, const char* what) {
  if (value > std::numeric_limits<uint64_t>::max()) {
    throw std::overflow_error(std::string(what) + ": count exceeds 64-bit range");
  }
  return static_cast<uint64_t>(value);
}

u128 choose2_wide(u128 n) { return n < 2 ? 0 : n * (n - 1) / 2; }

u128 choose3_wide(u128 n) { return n < 3 ? 0 : n * (n - 1) / 2 * (n - 2) / 3; }

// Count of common elements of two ascending sequences.
uint64_t intersection_size(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  uint64_t count = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      ++count;
      ++ia;
      ++ib;
    }
  }
  return count;
}

}  // namespace

uint64_t choose2(uint64_t n) { return checked_u64(choose2_wide(n), "choose2"); }

uint64_t choose3(uint64_t n) { return checked_u64(choose3_wide(n), "choose3"); }

uint64_t count_triangles(const Graph& g) {
  const uint32_t n = g.node_count();
  u128 total = 0;
  for (uint32_t u = 0; u < n; ++u) {
    const auto& nu = g.neighbors(u);
    for (uint32_t v : nu) {
      if (v <= u) continue;
      const auto& nv = g.neighbors(v);
      // Common neighbors w > v close a triangle u < v < w exactly once.
      auto iu = std::lower_bound(nu.begin(), nu.end(), v + 1);
      auto iv = std::lower_bound(nv.begin(), nv.end(), v + 1);
      while (iu != nu.end() && iv != nv.end()) {
        if (*iu < *iv) {
          ++iu;
        } else if (*iv < *iu) {
          ++iv;
        } else {
          ++total;
          ++iu;
          ++iv;
        }
      }
    }
  }
  return checked_u64(total, "count_triangles");
}

uint64_t count_four_cycles(const Graph& g) {
  const uint32_t n = g.node_count();
  // Co-degree over 2-paths: for each middle node k, every unordered pair of
  // its neighbors gains one common neighbor.
  std::unordered_map<uint64_t, uint64_t> codegree;
  for (uint32_t k = 0; k < n; ++k) {
    const auto& nk = g.neighbors(k);
    for (size_t a = 0; a < nk.size(); ++a) {
      for (size_t b = a + 1; b < nk.size(); ++b) {
        ++codegree[(static_cast<uint64_t>(nk[a]) << 32) | nk[b]];
      }
    }
  }
  // Each 4-cycle has two opposite pairs, so it contributes C(2,2)=1 twice.
  u128 doubled = 0;
  for (const auto& [key, c] : codegree) doubled += choose2_wide(c);
  return checked_u64(doubled / 2, "count_four_cycles");
}

uint64_t wedge_count_pair(const Graph& g, uint32_t i, uint32_t j) {
  if (i == j) throw std::invalid_argument("wedge_count_pair: endpoints must differ");
  return intersection_size(g.neighbors(i), g.neighbors(j));
}

uint64_t triangles_involving_pair(const Graph& g, uint32_t i, uint32_t j) {
  if (i == j) throw std::invalid_argument("triangles_involving_pair: endpoints must differ");
  return g.has_edge(i, j) ? wedge_count_pair(g, i, j) : 0;
}

uint64_t count_two_stars(const Graph& g) {
  const uint32_t n = g.node_count();
  u128 total = 0;
  for (uint32_t v = 0; v < n; ++v) total += choose2_wide(g.degree(v));
  return checked_u64(total, "count_two_stars");
}

double clustering_coefficient_exact(const Graph& g) {
  const uint64_t stars = count_two_stars(g);
  if (stars == 0) throw std::domain_error("clustering_coefficient_exact: undefined, graph has no 2-stars");
  return 3.0 * static_cast<double>(count_triangles(g)) / static_cast<double>(stars);
}

TripleCensus triple_census(const Graph& g) {
  const uint32_t n = g.node_count();
  if (n < 3) throw std::invalid_argument("triple_census: requires n >= 3");
  const u128 triples = choose3_wide(n);
  const u128 m3 = count_triangles(g);
  // A triple with exactly two edges is a 2-star that is not part of a
  // triangle; each triangle contains three 2-stars.
  const u128 stars = count_two_stars(g);
  if (stars < 3 * m3) throw std::overflow_error("triple_census: inconsistent counts");
  const u128 m2 = stars - 3 * m3;
  // Each edge lies in n-2 triples; subtract the triples where a second or
  // third edge is present.
  const u128 edge_triples = static_cast<u128>(g.edge_count()) * (n - 2);
  if (edge_triples < 2 * m2 + 3 * m3) throw std::overflow_error("triple_census: inconsistent counts");
  const u128 m1 = edge_triples - 2 * m2 - 3 * m3;
  if (triples < m3 + m2 + m1) throw std::overflow_error("triple_census: inconsistent counts");
  const u128 m0 = triples - m3 - m2 - m1;
  TripleCensus census;
  census.m3 = checked_u64(m3, "triple_census.m3");
  census.m2 = checked_u64(m2, "triple_census.m2");
  census.m1 = checked_u64(m1, "triple_census.m1");
  census.m0 = checked_u64(m0, "triple_census.m0");
  return census;
}

}  // namespace shufflecount
