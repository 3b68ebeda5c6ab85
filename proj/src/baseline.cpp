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

#include "privppr/baseline.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "privppr/dp.hpp"

namespace privppr {

double FlipParams::flip_probability() const {
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be > 0");
  return 2.0 / (1.0 + std::exp(epsilon / 2.0));
}

Graph randomized_response_graph(const Graph& g, NodeId source, double epsilon,
                                RngStream& rng, NodeId node_limit) {
  const NodeId n = g.node_count();
  if (source >= n) throw std::invalid_argument("source out of range");
  if (n > node_limit)
    throw std::invalid_argument(
        "randomized response enumerates all node pairs (quadratic time, "
        "potentially dense output); raise node_limit explicitly to force it");
  const double p = FlipParams{epsilon, source}.flip_probability();

  std::vector<std::pair<NodeId, NodeId>> edges;
  edges.reserve(g.edge_count());
  // Pairs incident to the source are never touched.
  for (NodeId v : g.neighbors(source))
    edges.emplace_back(std::min(source, v), std::max(source, v));
  for (NodeId u = 0; u < n; ++u) {
    if (u == source) continue;
    for (NodeId v = u + 1; v < n; ++v) {
      if (v == source) continue;
      bool bit = g.has_edge(u, v);
      if (rng.next_bernoulli(p)) bit = rng.next_below(2) == 1;
      if (bit) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

PPRVector baseline_dp_ppr(const Graph& g, NodeId source, double epsilon,
                          const PPRConfig& cfg, RngStream& rng) {
  const Graph flipped = randomized_response_graph(g, source, epsilon, rng);
  return push_flow(flipped, source, cfg);
}

NoisyPPRVector naive_laplace_ppr(const Graph& g, NodeId source, double epsilon,
                                 const PPRConfig& cfg, RngStream& rng) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be > 0");
  NoisyPPRVector out = push_flow(g, source, cfg);
  const double scale = 1.0 / epsilon;
  for (double& x : out) x += sample_laplace(scale, rng);
  return out;
}

}  // namespace privppr
