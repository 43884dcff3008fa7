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

#ifndef SHUFFLECOUNT_GRAPH_HPP_
#define SHUFFLECOUNT_GRAPH_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace shufflecount {

// Simple undirected graph: node ids 0..n-1, per-node ascending neighbor
// lists, symmetric, no self-loops, no duplicate entries. Immutable after
// construction; safe to read concurrently.
class Graph {
 public:
  Graph() = default;

  // Builds a graph on n nodes from an edge list. Self-loops and duplicate
  // edges are dropped; endpoints must be < n.
  static Graph from_edges(uint32_t n, const std::vector<std::pair<uint32_t, uint32_t>>& edges);

  uint32_t node_count() const { return static_cast<uint32_t>(adjacency_.size()); }
  uint64_t edge_count() const { return edge_count_; }

  const std::vector<uint32_t>& neighbors(uint32_t v) const { return adjacency_[v]; }
  uint64_t degree(uint32_t v) const { return adjacency_[v].size(); }

  // Adjacency test by binary search over the shorter neighbor list.
  bool has_edge(uint32_t i, uint32_t j) const;

 private:
  std::vector<std::vector<uint32_t>> adjacency_;
  uint64_t edge_count_ = 0;
};

struct DegreeStats {
  std::vector<uint64_t> degrees;
  double d_avg = 0.0;
  uint64_t d_max = 0;
};

// Parses an edge list: '#' starts a comment, blank lines are skipped, and
// every data line holds exactly two nonnegative integer tokens. Node ids are
// arbitrary and remapped to 0..n-1 in order of first appearance; duplicate
// edges collapse and self-loops drop (the id still registers).
// Malformed lines raise std::runtime_error naming the 1-based line number.
Graph load_edge_list(std::istream& in);
Graph load_edge_list_file(const std::string& path);

// Writes a graph in the format load_edge_list reads. Every node id is first
// registered with a "v v" line (a dropped self-loop) so ids and node count
// survive a round trip even for isolated nodes; edges follow in ascending
// (u, v) order with u < v.
void save_edge_list(const Graph& g, std::ostream& out);
void save_edge_list_file(const Graph& g, const std::string& path);

// Preferential-attachment generator: starts from m isolated nodes; each of
// the n-m subsequent nodes attaches to m distinct existing nodes chosen with
// probability proportional to current degree (uniformly while total degree
// is zero, i.e. for the first arrival). Exactly m*(n-m) edges. Requires
// 1 <= m < n. Deterministic given seed.
Graph generate_ba(uint32_t n, uint32_t m, uint64_t seed);

// Randomly splits nodes into two groups of sizes ceil(n/2) and floor(n/2)
// and removes every intra-group edge. Node ids are preserved. Requires n >= 2.
Graph bipartite_split(const Graph& g, uint64_t seed);

// Induced subgraph on a uniformly random n_sub-subset of nodes, ids remapped
// to 0..n_sub-1 in ascending original-id order. Requires n_sub <= n.
Graph subsample(const Graph& g, uint32_t n_sub, uint64_t seed);

// Degree sequence with mean and max. Requires n >= 1.
DegreeStats degree_stats(const Graph& g);

}  // namespace shufflecount

#endif  // SHUFFLECOUNT_GRAPH_HPP_
