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

#ifndef PRIVPPR_GRAPH_HPP_
#define PRIVPPR_GRAPH_HPP_

#include <cstdint>
#include <istream>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace privppr {

/// Dense node index in [0, n). External labels are remapped on ingestion.
using NodeId = std::uint32_t;

/// Immutable undirected simple graph in CSR form with ascending-sorted
/// adjacency lists. No self-loops, no duplicate neighbors; u in adj(v) iff
/// v in adj(u). Mutating operations return a new Graph.
///
/// Construction is single-threaded; afterwards the graph is safe to read from
/// any number of concurrent workers.
class Graph {
 public:
  Graph() = default;

  /// Builds from an edge list. Self-loops and duplicate edges are dropped
  /// silently here; ingestion paths that need to report them count first.
  static Graph from_edges(NodeId node_count,
                          std::span<const std::pair<NodeId, NodeId>> edges);

  NodeId node_count() const { return node_count_; }
  std::size_t edge_count() const { return adjacency_.size() / 2; }

  std::span<const NodeId> neighbors(NodeId v) const {
    return {adjacency_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }
  NodeId degree(NodeId v) const {
    return static_cast<NodeId>(offsets_[v + 1] - offsets_[v]);
  }
  NodeId min_degree() const;
  bool has_edge(NodeId u, NodeId v) const;

  /// New graph with edge (u, v) added if absent, removed if present.
  /// An involution; requires u != v.
  Graph with_edge_toggled(NodeId u, NodeId v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  NodeId node_count_ = 0;
  std::vector<std::size_t> offsets_;  // size node_count_ + 1
  std::vector<NodeId> adjacency_;     // sorted per node
};

/// Counters for dropped input while parsing an edge list.
struct ParseStats {
  std::size_t self_loops_dropped = 0;
  std::size_t duplicate_edges_dropped = 0;
};

/// Result of ingesting a text edge list: the graph, the original label of
/// each dense id (first-appearance order), and drop counters.
struct LoadedGraph {
  Graph graph;
  std::vector<std::string> labels;
  ParseStats stats;
};

/// Edge-list dialect. The default matches the documented interchange format:
/// UTF-8 text, one edge per line, two whitespace-separated tokens,
/// '#'-prefixed comment lines ignored.
struct EdgeListFormat {
  char comment_char = '#';
};

/// Parses an edge list. Duplicate edges and self-loops are dropped and
/// counted; edge direction is ignored. Throws std::runtime_error with the
/// line number on malformed lines and on an empty graph.
LoadedGraph load_edge_list(std::istream& in, const EdgeListFormat& format = {});

/// Complete graph on node_count >= 2 nodes.
Graph make_clique(NodeId node_count);

/// Simple d-regular graph via stub pairing with rejection of self-loops and
/// multi-edges; deterministic for a fixed seed. Requires node_count * degree
/// even and degree < node_count. Throws if the retry budget is exhausted.
Graph make_random_regular(NodeId node_count, NodeId degree,
                          std::uint64_t seed);

/// Two-community stochastic block model: nodes [0, n/2) form block 0 and the
/// rest block 1; independent edges with probability p_in within a block and
/// p_out across. Fixture generator for classification harnesses.
Graph make_two_block(NodeId node_count, double p_in, double p_out,
                     std::uint64_t seed);

}  // namespace privppr

#endif  // PRIVPPR_GRAPH_HPP_
