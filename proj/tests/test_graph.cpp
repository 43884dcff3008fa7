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
#include <algorithm>
#include <cstdint>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "shufflecount/exact.hpp"
#include "shufflecount/graph.hpp"
#include "test_util.hpp"

using shufflecount::bipartite_split;
using shufflecount::degree_stats;
using shufflecount::DegreeStats;
using shufflecount::generate_ba;
using shufflecount::Graph;
using shufflecount::load_edge_list;
using shufflecount::save_edge_list;
using shufflecount::subsample;
using shufflecount_tests::complete_graph;
using shufflecount_tests::edgeless_graph;
using shufflecount_tests::er_graph;

namespace {

Graph parse(const std::string& text) {
  std::istringstream in(text);
  return load_edge_list(in);
}

std::vector<std::pair<uint32_t, uint32_t>> edge_set(const Graph& g) {
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  for (uint32_t v = 0; v < g.node_count(); ++v)
    for (uint32_t w : g.neighbors(v))
      if (v < w) edges.emplace_back(v, w);
  return edges;
}

}  // namespace

TEST_CASE("from_edges drops self-loops and duplicates, symmetrizes, sorts") {
  const Graph g = Graph::from_edges(4, {{1, 0}, {0, 1}, {2, 2}, {1, 2}, {2, 1}, {3, 0}});
  CHECK_EQ(g.node_count(), 4);
  CHECK_EQ(g.edge_count(), 3);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 0));
  CHECK(g.has_edge(1, 2));
  CHECK(g.has_edge(0, 3));
  CHECK_FALSE(g.has_edge(2, 2));
  CHECK_FALSE(g.has_edge(0, 2));
  for (uint32_t v = 0; v < 4; ++v) {
    CHECK(std::is_sorted(g.neighbors(v).begin(), g.neighbors(v).end()));
  }
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), std::invalid_argument);
}

TEST_CASE("edge list parser handles comments, blanks, and id remapping") {
  const Graph g = parse("# a comment line\n10 20\n\n20 30  # trailing comment\n   10   30\n");
  CHECK_EQ(g.node_count(), 3);  // 10 -> 0, 20 -> 1, 30 -> 2 by first appearance
  CHECK_EQ(g.edge_count(), 3);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 2));
  CHECK(g.has_edge(0, 2));
}

TEST_CASE("self-loop line registers the id but adds no edge") {
  const Graph g = parse("5 5\n5 7\n");
  CHECK_EQ(g.node_count(), 2);
  CHECK_EQ(g.edge_count(), 1);
  CHECK(g.has_edge(0, 1));
}

TEST_CASE("duplicate edge lines collapse") {
  const Graph g = parse("1 2\n2 1\n1 2\n");
  CHECK_EQ(g.node_count(), 2);
  CHECK_EQ(g.edge_count(), 1);
}

TEST_CASE("parser errors carry the 1-based line number") {
  CHECK_THROWS_WITH_AS(parse("0 1\nbogus\n"), doctest::Contains("line 2"), std::runtime_error);
  CHECK_THROWS_WITH_AS(parse("0 1\n\n3\n"), doctest::Contains("line 3"), std::runtime_error);
  CHECK_THROWS_WITH_AS(parse("1 2 3\n"), doctest::Contains("line 1"), std::runtime_error);
  CHECK_THROWS_WITH_AS(parse("a b\n"), doctest::Contains("'a'"), std::runtime_error);
  CHECK_THROWS_WITH_AS(parse("0 -1\n"), doctest::Contains("'-1'"), std::runtime_error);
}

TEST_CASE("save/load round trip preserves node count, ids, and edges") {
  // Includes an isolated node (id 4 in a 5-node graph).
  const Graph g = Graph::from_edges(5, {{0, 1}, {1, 2}, {0, 3}});
  std::ostringstream out;
  save_edge_list(g, out);
  const Graph h = parse(out.str());
  CHECK_EQ(h.node_count(), g.node_count());
  CHECK_EQ(h.edge_count(), g.edge_count());
  CHECK_EQ(edge_set(h), edge_set(g));
}

TEST_CASE("round trip of an edgeless graph keeps all nodes") {
  const Graph g = edgeless_graph(7);
  std::ostringstream out;
  save_edge_list(g, out);
  const Graph h = parse(out.str());
  CHECK_EQ(h.node_count(), 7);
  CHECK_EQ(h.edge_count(), 0);
}

TEST_CASE("preferential attachment: size, determinism, degree concentration") {
  const Graph g = generate_ba(1000, 5, 42);
  CHECK_EQ(g.node_count(), 1000);
  CHECK_EQ(g.edge_count(), 5u * (1000 - 5));
  const Graph g2 = generate_ba(1000, 5, 42);
  CHECK_EQ(edge_set(g), edge_set(g2));
  const Graph g3 = generate_ba(1000, 5, 43);
  CHECK_NE(edge_set(g), edge_set(g3));

  // Mean degree 2*m*(n-m)/n; the hub dominates, so d_max far exceeds it.
  const Graph big = generate_ba(10000, 100, 7);
  const DegreeStats s = degree_stats(big);
  CHECK_EQ(big.edge_count(), 100u * (10000 - 100));
  CHECK_EQ(s.d_avg, doctest::Approx(198.0).epsilon(1e-9));
  CHECK_GT(s.d_max, 198);
}

TEST_CASE("preferential attachment nodes attach to m distinct existing nodes") {
  const Graph g = generate_ba(50, 3, 11);
  // Every node beyond the seed block has degree >= m (its own attachments).
  for (uint32_t v = 3; v < 50; ++v) CHECK_GE(g.degree(v), 3);
  CHECK_THROWS_AS(generate_ba(5, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(generate_ba(5, 5, 1), std::invalid_argument);
  CHECK_THROWS_AS(generate_ba(5, 6, 1), std::invalid_argument);
  // m = n-1 is the largest legal value.
  const Graph tight = generate_ba(4, 3, 2);
  CHECK_EQ(tight.edge_count(), 3);
}

TEST_CASE("bipartite split keeps only cross edges") {
  const Graph k4 = complete_graph(4);
  const Graph b = bipartite_split(k4, 9);
  CHECK_EQ(b.node_count(), 4);
  // Groups of size 2 and 2: exactly the 4 cross edges of K4 survive.
  CHECK_EQ(b.edge_count(), 4);
  CHECK_EQ(shufflecount::count_triangles(b), 0);

  const Graph er = er_graph(60, 0.3, 5);
  const Graph be = bipartite_split(er, 17);
  CHECK_EQ(be.node_count(), er.node_count());
  CHECK_LE(be.edge_count(), er.edge_count());
  // Triangle-free: any triangle needs an intra-group edge.
  CHECK_EQ(shufflecount::count_triangles(be), 0);
  // Surviving edges are a subset of the original edges.
  for (const auto& [u, v] : edge_set(be)) CHECK(er.has_edge(u, v));
  CHECK_THROWS_AS(bipartite_split(edgeless_graph(1), 1), std::invalid_argument);
}

TEST_CASE("bipartite split of an edgeless graph is edgeless") {
  const Graph b = bipartite_split(edgeless_graph(9), 4);
  CHECK_EQ(b.node_count(), 9);
  CHECK_EQ(b.edge_count(), 0);
}

TEST_CASE("bipartite split is seed-deterministic") {
  const Graph er = er_graph(40, 0.4, 2);
  CHECK_EQ(edge_set(bipartite_split(er, 3)), edge_set(bipartite_split(er, 3)));
}

TEST_CASE("subsample induces the subgraph on a random subset") {
  const Graph er = er_graph(50, 0.5, 21);
  const Graph s = subsample(er, 20, 6);
  CHECK_EQ(s.node_count(), 20);
  // Determinism.
  CHECK_EQ(edge_set(s), edge_set(subsample(er, 20, 6)));
  // Full-size subsample is the whole graph up to id remapping; with ascending
  // remap order it is identical.
  const Graph full = subsample(er, 50, 8);
  CHECK_EQ(full.edge_count(), er.edge_count());
  CHECK_EQ(edge_set(full), edge_set(er));
  const Graph none = subsample(er, 0, 8);
  CHECK_EQ(none.node_count(), 0);
  CHECK_THROWS_AS(subsample(er, 51, 1), std::invalid_argument);
}

TEST_CASE("subsample of a complete graph is complete") {
  const Graph s = subsample(complete_graph(12), 5, 3);
  CHECK_EQ(s.node_count(), 5);
  CHECK_EQ(s.edge_count(), 10);
}

TEST_CASE("degree_stats on hand-checked graphs") {
  const Graph star = shufflecount_tests::star_graph(5);
  const DegreeStats s = degree_stats(star);
  CHECK_EQ(s.degrees.size(), 5);
  CHECK_EQ(s.degrees[0], 4);
  CHECK_EQ(s.degrees[1], 1);
  CHECK_EQ(s.d_max, 4);
  CHECK_EQ(s.d_avg, doctest::Approx(8.0 / 5).epsilon(1e-12));

  const DegreeStats e = degree_stats(edgeless_graph(3));
  CHECK_EQ(e.d_max, 0);
  CHECK_EQ(e.d_avg, 0.0);
  CHECK_THROWS_AS(degree_stats(Graph()), std::invalid_argument);
}
