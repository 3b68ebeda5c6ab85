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

#ifndef PRIVPPR_BASELINE_HPP_
#define PRIVPPR_BASELINE_HPP_

#include "privppr/graph.hpp"
#include "privppr/pushflow.hpp"
#include "privppr/rng.hpp"

namespace privppr {

/// Randomized-response (edge flipping) parameters. Each adjacency bit not
/// involving the protected source is resampled with probability
/// p = 2 / (1 + exp(epsilon / 2)), which decreases monotonically in epsilon.
struct FlipParams {
  double epsilon = 1.0;
  NodeId source = 0;

  double flip_probability() const;
};

/// Default ceiling for the Theta(n^2) pair enumeration.
inline constexpr NodeId kRandomizedResponseNodeLimit = 20000;

/// Edge-flipping mechanism: every unordered pair {u, v} with u, v != s keeps
/// its adjacency bit with probability 1 - p and is replaced by a fair coin
/// with probability p (a resample may re-draw the same value). Pairs
/// involving s are untouched. Throws above node_limit, since the pair
/// enumeration takes quadratic time and the output can be dense.
Graph randomized_response_graph(const Graph& g, NodeId source, double epsilon,
                                RngStream& rng,
                                NodeId node_limit = kRandomizedResponseNodeLimit);

/// The edge-flipping baseline end to end: flip, then run the non-private
/// push on the flipped graph.
PPRVector baseline_dp_ppr(const Graph& g, NodeId source, double epsilon,
                          const PPRConfig& cfg, RngStream& rng);

/// The all-but-random baseline: push_flow output plus i.i.d. Laplace(1/eps).
NoisyPPRVector naive_laplace_ppr(const Graph& g, NodeId source, double epsilon,
                                 const PPRConfig& cfg, RngStream& rng);

}  // namespace privppr

#endif  // PRIVPPR_BASELINE_HPP_
