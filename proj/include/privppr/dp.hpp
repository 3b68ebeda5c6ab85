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

#ifndef PRIVPPR_DP_HPP_
#define PRIVPPR_DP_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "privppr/graph.hpp"
#include "privppr/pushflow.hpp"
#include "privppr/rng.hpp"

namespace privppr {

/// Privacy budget. delta is a tail-probability parameter used only in
/// accuracy statements and tests; the mechanisms are pure epsilon-DP and
/// never consume it.
struct DPParams {
  double epsilon = 1.0;
  PrivacyMode mode = PrivacyMode::kJoint;
  double delta = 0.01;
};

/// One draw from Laplace(scale) by inverse CDF: u uniform in (-1/2, 1/2),
/// result -scale * sgn(u) * ln(1 - 2|u|). A single uniform per draw keeps
/// replay exact. scale must be > 0.
double sample_laplace(double scale, RngStream& rng);

/// Laplace scale that calibrates noise for the uncapped push on graphs whose
/// minimum degree is promised to be at least min_degree:
/// 2(1-alpha) / (epsilon * alpha * D^2) in joint mode, and
/// 2(1-alpha) / (epsilon * alpha * D) otherwise.
double degree_promise_scale(double alpha, double epsilon, NodeId min_degree,
                            PrivacyMode mode);

/// push_flow plus i.i.d. Laplace noise on all n entries, calibrated by the
/// caller-asserted minimum-degree promise. Refuses (throws) if the graph
/// violates the promise: proceeding silently would void the guarantee.
NoisyPPRVector dp_push_flow(const Graph& g, NodeId source,
                            const PPRConfig& cfg, const DPParams& dp,
                            NodeId min_degree_promise, RngStream& rng);

/// push_flow_cap plus i.i.d. Laplace(sigma/epsilon) on all n entries.
/// Works for any graph; no degree promise needed.
NoisyPPRVector dp_push_flow_cap(const Graph& g, NodeId source,
                                const PPRConfig& cfg, double sigma,
                                const DPParams& dp, RngStream& rng);

/// Probability that index i with value p_i survives sparsification:
///   p_i <= gamma:  exp(-(epsilon/sigma) * (gamma - p_i)) / 2
///   p_i >  gamma:  1 - exp((epsilon/sigma) * (gamma - p_i)) / 2
double sparsify_inclusion_probability(double value, double sigma,
                                      double epsilon, double gamma);

/// Private index selection: keeps index i independently with the probability
/// above. Expects nonnegative entries; with ||p||_1 <= 1 and
/// gamma >= (3 sigma / epsilon) ln n, w.h.p. at most 3/gamma indices survive,
/// all survivors have p_i >= gamma/3, and every p_i >= 2 gamma survives.
/// Returns ascending indices.
std::vector<NodeId> dp_sparsify(const PPRVector& p, double sigma,
                                double epsilon, double gamma, RngStream& rng);

/// One retained (node, score) pair of a sparse noisy PPR vector.
struct SparseEntry {
  NodeId node;
  double value;
};

/// Sparse private PPR: splits the budget as epsilon/2 for index selection and
/// epsilon/2 for Laplace(sigma/(epsilon/2)) noise on the retained entries of
/// the capped push output. Dropped entries are true zeros (not stored).
/// Entries are sorted by node id.
std::vector<SparseEntry> dp_sparse_ppr(const Graph& g, NodeId source,
                                       const PPRConfig& cfg, double sigma,
                                       const DPParams& dp, RngStream& rng);

/// Expands a sparse vector to a dense one of the given length.
NoisyPPRVector sparse_to_dense(std::span<const SparseEntry> entries,
                               NodeId node_count);

}  // namespace privppr

#endif  // PRIVPPR_DP_HPP_
