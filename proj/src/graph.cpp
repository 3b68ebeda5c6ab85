// Copyright 2026 The PrivPPR Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "privppr/graph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "privppr/rng.hpp"

namespace privppr {

namespace {

std::pair<NodeId, NodeId> ordered(NodeId u, NodeId v) {
  return u < v ? std::pair{u, v} : std::pair{v, u};
}

}  // namespace

Graph Graph::from_edges(NodeId node_count,
                        std::span<const std::pair<NodeId, NodeId>> edges) {
  std::vector<std::pair<NodeId, NodeId>> unique;
  unique.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u >= node_count || v >= node_count)
      throw std::invalid_argument("edge endpoint out of range");
    if (u == v) continue;
    unique.push_back(ordered(u, v));
  }
  std::sort(unique.begin(), unique.end());
  unique.erase(std::unique(unique.begin(), unique.end()), unique.end());

  Graph g;
  g.node_count_ = node_count;
  std::vector<NodeId> deg(node_count, 0);
  for (auto [u, v] : unique) {
    ++deg[u];
    ++deg[v];
  }
  g.offsets_.assign(node_count + 1, 0);
  for (NodeId v = 0; v < node_count; ++v)
    g.offsets_[v + 1] = g.offsets_[v] + deg[v];
  g.adjacency_.resize(g.offsets_[node_count]);
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (auto [u, v] : unique) {
    g.adjacency_[cursor[u]++] = v;
    g.adjacency_[cursor[v]++] = u;
  }
  // Scanning globally sorted pairs fills every row in ascending order: row w
  // first receives all u < w (pairs (u,w)), then all v > w (pairs (w,v)).
  return g;
}

NodeId Graph::min_degree() const {
  if (node_count_ == 0) return 0;
  NodeId best = degree(0);
  for (NodeId v = 1; v < node_count_; ++v) best = std::min(best, degree(v));
  return best;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

Graph Graph::with_edge_toggled(NodeId u, NodeId v) const {
  if (u == v) throw std::invalid_argument("cannot toggle a self-loop");
  if (u >= node_count_ || v >= node_count_)
    throw std::invalid_argument("toggle endpoint out of range");
  const bool present = has_edge(u, v);
  std::vector<std::pair<NodeId, NodeId>> edges;
  edges.reserve(edge_count() + 1);
  for (NodeId a = 0; a < node_count_; ++a) {
    for (NodeId b : neighbors(a)) {
      if (a < b && !(present && ordered(a, b) == ordered(u, v)))
        edges.emplace_back(a, b);
    }
  }
  if (!present) edges.push_back(ordered(u, v));
  return from_edges(node_count_, edges);
}

LoadedGraph load_edge_list(std::istream& in, const EdgeListFormat& format) {
  LoadedGraph out;
  std::unordered_map<std::string, NodeId> ids;
  std::vector<std::pair<NodeId, NodeId>> edges;
  std::vector<std::pair<NodeId, NodeId>> seen;  // for duplicate counting

  auto intern = [&](const std::string& label) {
    auto [it, inserted] = ids.try_emplace(label, static_cast<NodeId>(ids.size()));
    if (inserted) out.labels.push_back(label);
    return it->second;
  };

  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    std::istringstream tokens(line);
    std::string a, b, extra;
    if (!(tokens >> a)) continue;  // blank line
    if (a[0] == format.comment_char) continue;
    if (!(tokens >> b)) {
      throw std::runtime_error("edge list parse error at line " +
                               std::to_string(line_number) +
                               ": expected two tokens");
    }
    if (tokens >> extra) {
      throw std::runtime_error("edge list parse error at line " +
                               std::to_string(line_number) +
                               ": trailing token '" + extra + "'");
    }
    const NodeId u = intern(a);
    const NodeId v = intern(b);
    if (u == v) {
      ++out.stats.self_loops_dropped;
      continue;
    }
    edges.push_back(u < v ? std::pair{u, v} : std::pair{v, u});
  }
  if (out.labels.empty()) throw std::runtime_error("edge list is empty");

  seen = edges;
  std::sort(seen.begin(), seen.end());
  out.stats.duplicate_edges_dropped =
      seen.size() -
      static_cast<std::size_t>(std::distance(
          seen.begin(), std::unique(seen.begin(), seen.end())));

  out.graph =
      Graph::from_edges(static_cast<NodeId>(out.labels.size()), edges);
  return out;
}

Graph make_clique(NodeId node_count) {
  if (node_count < 2)
    throw std::invalid_argument("clique needs at least 2 nodes");
  std::vector<std::pair<NodeId, NodeId>> edges;
  edges.reserve(static_cast<std::size_t>(node_count) * (node_count - 1) / 2);
  for (NodeId u = 0; u < node_count; ++u)
    for (NodeId v = u + 1; v < node_count; ++v) edges.emplace_back(u, v);
  return Graph::from_edges(node_count, edges);
}

Graph make_random_regular(NodeId node_count, NodeId degree,
                          std::uint64_t seed) {
  if (degree >= node_count)
    throw std::invalid_argument("regular graph needs degree < node_count");
  if ((static_cast<std::uint64_t>(node_count) * degree) % 2 != 0)
    throw std::invalid_argument(
        "regular graph needs node_count * degree even");
  if (degree == 0) {
    return Graph::from_edges(node_count, {});
  }

  RngStream rng = RngStream::derive(seed, "make_random_regular", node_count,
                                    degree);
  constexpr int kMaxRestarts = 200;
  for (int attempt = 0; attempt < kMaxRestarts; ++attempt) {
    // Pairing model with greedy repair passes: shuffle the remaining stubs,
    // pair them up, keep only legal pairs, and re-queue the rest. Restart
    // from scratch when a pass makes no progress.
    std::vector<NodeId> stubs;
    stubs.reserve(static_cast<std::size_t>(node_count) * degree);
    for (NodeId v = 0; v < node_count; ++v)
      for (NodeId i = 0; i < degree; ++i) stubs.push_back(v);

    std::vector<std::pair<NodeId, NodeId>> edges;
    std::vector<std::vector<NodeId>> adj(node_count);
    auto adjacent = [&](NodeId u, NodeId v) {
      const auto& row = adj[u];
      return std::find(row.begin(), row.end(), v) != row.end();
    };

    bool dead_end = false;
    while (!stubs.empty() && !dead_end) {
      for (std::size_t i = stubs.size(); i > 1; --i) {
        std::swap(stubs[i - 1], stubs[rng.next_below(i)]);
      }
      std::vector<NodeId> leftover;
      for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
        const NodeId u = stubs[i];
        const NodeId v = stubs[i + 1];
        if (u == v || adjacent(u, v)) {
          leftover.push_back(u);
          leftover.push_back(v);
          continue;
        }
        edges.push_back(u < v ? std::pair{u, v} : std::pair{v, u});
        adj[u].push_back(v);
        adj[v].push_back(u);
      }
      if (leftover.size() == stubs.size()) dead_end = true;
      stubs = std::move(leftover);
    }
    if (!dead_end) return Graph::from_edges(node_count, edges);
  }
  throw std::runtime_error(
      "random regular graph generation exhausted its retry budget; "
      "try a different seed");
}

Graph make_two_block(NodeId node_count, double p_in, double p_out,
                     std::uint64_t seed) {
  if (p_in < 0 || p_in > 1 || p_out < 0 || p_out > 1)
    throw std::invalid_argument("block edge probabilities must be in [0,1]");
  RngStream rng = RngStream::derive(seed, "make_two_block", node_count, 0);
  const NodeId half = node_count / 2;
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId u = 0; u < node_count; ++u) {
    for (NodeId v = u + 1; v < node_count; ++v) {
      const bool same = (u < half) == (v < half);
      if (rng.next_bernoulli(same ? p_in : p_out)) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(node_count, edges);
}

}  // namespace privppr
