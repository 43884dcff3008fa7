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

#include "shufflecount/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "shufflecount/rng.hpp"

namespace shufflecount {

Graph Graph::from_edges(uint32_t n, const std::vector<std::pair<uint32_t, uint32_t>>& edges) {
  Graph g;
  g.adjacency_.assign(n, {});
  std::vector<std::pair<uint32_t, uint32_t>> normalized;
  normalized.reserve(edges.size());
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) throw std::invalid_argument("from_edges: endpoint id out of range");
    if (u == v) continue;  // self-loops dropped
    normalized.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(normalized.begin(), normalized.end());
  normalized.erase(std::unique(normalized.begin(), normalized.end()), normalized.end());
  for (const auto& [u, v] : normalized) {
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  for (auto& list : g.adjacency_) std::sort(list.begin(), list.end());
  g.edge_count_ = normalized.size();
  return g;
}

bool Graph::has_edge(uint32_t i, uint32_t j) const {
  const auto& a = adjacency_[i].size() <= adjacency_[j].size() ? adjacency_[i] : adjacency_[j];
  const uint32_t needle = adjacency_[i].size() <= adjacency_[j].size() ? j : i;
  return std::binary_search(a.begin(), a.end(), needle);
}

Graph load_edge_list(std::istream& in) {
  std::unordered_map<uint64_t, uint32_t> id_map;
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  auto intern = [&id_map](uint64_t raw) {
    auto [it, inserted] = id_map.emplace(raw, static_cast<uint32_t>(id_map.size()));
    return it->second;
  };
  std::string line;
  for (uint64_t line_no = 1; std::getline(in, line); ++line_no) {
    const size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    uint64_t ids[2];
    int tokens = 0;
    const char* p = line.data();
    const char* end = p + line.size();
    while (p != end) {
      if (*p == ' ' || *p == '\t' || *p == '\r' || *p == '\v' || *p == '\f') {
        ++p;
        continue;
      }
      const char* tok_start = p;
      while (p != end && *p != ' ' && *p != '\t' && *p != '\r' && *p != '\v' && *p != '\f') ++p;
      if (tokens == 2) {
        throw std::runtime_error("edge list line " + std::to_string(line_no) + ": expected two tokens");
      }
      uint64_t value = 0;
      auto [next, ec] = std::from_chars(tok_start, p, value);
      if (ec != std::errc() || next != p) {
        throw std::runtime_error("edge list line " + std::to_string(line_no) + ": malformed integer token '" +
                                 std::string(tok_start, p) + "'");
      }
      ids[tokens++] = value;
    }
    if (tokens == 0) continue;  // blank or comment-only line
    if (tokens != 2) {
      throw std::runtime_error("edge list line " + std::to_string(line_no) + ": expected two tokens");
    }
    edges.emplace_back(intern(ids[0]), intern(ids[1]));
  }
  return Graph::from_edges(static_cast<uint32_t>(id_map.size()), edges);
}

Graph load_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  return load_edge_list(in);
}

void save_edge_list(const Graph& g, std::ostream& out) {
  const uint32_t n = g.node_count();
  out << "# nodes " << n << " edges " << g.edge_count() << "\n";
  out << "# a 'v v' line registers node v without adding an edge\n";
  for (uint32_t v = 0; v < n; ++v) out << v << ' ' << v << '\n';
  for (uint32_t u = 0; u < n; ++u) {
    for (uint32_t v : g.neighbors(u)) {
      if (u < v) out << u << ' ' << v << '\n';
    }
  }
}

void save_edge_list_file(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  save_edge_list(g, out);
  out.flush();
  if (!out) throw std::runtime_error("failed writing graph file: " + path);
}

Graph generate_ba(uint32_t n, uint32_t m, uint64_t seed) {
  if (m < 1 || m >= n) throw std::invalid_argument("generate_ba: requires 1 <= m < n");
  Rng rng(seed);
  // One entry per edge endpoint; sampling a uniform element realizes
  // degree-proportional selection.
  std::vector<uint32_t> endpoint_pool;
  endpoint_pool.reserve(2ull * m * (n - m));
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  edges.reserve(static_cast<size_t>(m) * (n - m));
  std::vector<uint32_t> targets;
  targets.reserve(m);
  for (uint32_t t = m; t < n; ++t) {
    targets.clear();
    while (targets.size() < m) {
      uint32_t candidate;
      if (endpoint_pool.empty()) {
        // Total degree is zero (first arrival): uniform over existing nodes.
        candidate = static_cast<uint32_t>(rng.next_below(t));
      } else {
        candidate = endpoint_pool[rng.next_below(endpoint_pool.size())];
      }
      if (std::find(targets.begin(), targets.end(), candidate) != targets.end()) continue;
      targets.push_back(candidate);
    }
    for (uint32_t target : targets) {
      edges.emplace_back(t, target);
      endpoint_pool.push_back(t);
      endpoint_pool.push_back(target);
    }
  }
  return Graph::from_edges(n, edges);
}

Graph bipartite_split(const Graph& g, uint64_t seed) {
  const uint32_t n = g.node_count();
  if (n < 2) throw std::invalid_argument("bipartite_split: requires n >= 2");
  Rng rng(seed);
  std::vector<uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  shuffle_span(order.data(), n, rng);
  // First ceil(n/2) shuffled ids form group 0, the rest group 1.
  std::vector<uint8_t> group(n, 1);
  const uint32_t first_size = (n + 1) / 2;
  for (uint32_t k = 0; k < first_size; ++k) group[order[k]] = 0;
  std::vector<std::pair<uint32_t, uint32_t>> cross;
  for (uint32_t u = 0; u < n; ++u) {
    for (uint32_t v : g.neighbors(u)) {
      if (u < v && group[u] != group[v]) cross.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, cross);
}

Graph subsample(const Graph& g, uint32_t n_sub, uint64_t seed) {
  const uint32_t n = g.node_count();
  if (n_sub > n) throw std::invalid_argument("subsample: n_sub exceeds node count");
  Rng rng(seed);
  std::vector<uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  shuffle_span(order.data(), n, rng);
  std::vector<uint32_t> chosen(order.begin(), order.begin() + n_sub);
  std::sort(chosen.begin(), chosen.end());
  // Ascending original ids map to 0..n_sub-1.
  std::unordered_map<uint32_t, uint32_t> remap;
  remap.reserve(n_sub);
  for (uint32_t k = 0; k < n_sub; ++k) remap.emplace(chosen[k], k);
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  for (uint32_t u : chosen) {
    for (uint32_t v : g.neighbors(u)) {
      if (u < v) {
        auto it = remap.find(v);
        if (it != remap.end()) edges.emplace_back(remap[u], it->second);
      }
    }
  }
  return Graph::from_edges(n_sub, edges);
}

DegreeStats degree_stats(const Graph& g) {
  const uint32_t n = g.node_count();
  if (n == 0) throw std::invalid_argument("degree_stats: requires n >= 1");
  DegreeStats stats;
  stats.degrees.resize(n);
  uint64_t total = 0;
  for (uint32_t v = 0; v < n; ++v) {
    stats.degrees[v] = g.degree(v);
    total += stats.degrees[v];
    stats.d_max = std::max(stats.d_max, stats.degrees[v]);
  }
  stats.d_avg = static_cast<double>(total) / n;
  return stats;
}

}  // namespace shufflecount
