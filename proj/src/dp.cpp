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

#include "privppr/dp.hpp"

#include <cmath>
#include <stdexcept>

namespace privppr {

double sample_laplace(double scale, RngStream& rng) {
  if (!(scale > 0.0)) throw std::invalid_argument("laplace scale must be > 0");
  const double u = rng.next_unit_open() - 0.5;  // uniform in (-1/2, 1/2)
  if (u == 0.0) return 0.0;
  const double sign = u > 0.0 ? 1.0 : -1.0;
  return -scale * sign * std::log(1.0 - 2.0 * std::abs(u));
}

double degree_promise_scale(double alpha, double epsilon, NodeId min_degree,
                            PrivacyMode mode) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be > 0");
  if (min_degree < 1) throw std::invalid_argument("degree promise must be >= 1");
  const double d = static_cast<double>(min_degree);
  const double denom =
      mode == PrivacyMode::kJoint ? epsilon * alpha * d * d : epsilon * alpha * d;
  return 2.0 * (1.0 - alpha) / denom;
}

NoisyPPRVector dp_push_flow(const Graph& g, NodeId source,
                            const PPRConfig& cfg, const DPParams& dp,
                            NodeId min_degree_promise, RngStream& rng) {
  if (g.min_degree() < min_degree_promise)
    throw std::invalid_argument(
        "graph violates the minimum-degree promise; refusing to add "
        "under-calibrated noise");
  const double scale =
      degree_promise_scale(cfg.alpha, dp.epsilon, min_degree_promise, dp.mode);
  NoisyPPRVector out = push_flow(g, source, cfg);
  for (double& x : out) x += sample_laplace(scale, rng);
  return out;
}

NoisyPPRVector dp_push_flow_cap(const Graph& g, NodeId source,
                                const PPRConfig& cfg, double sigma,
                                const DPParams& dp, RngStream& rng) {
  if (!(dp.epsilon > 0.0)) throw std::invalid_argument("epsilon must be > 0");
  if (!(sigma > 0.0)) throw std::invalid_argument("sigma must be > 0");
  CapConfig cap{sigma, dp.mode};
  NoisyPPRVector out = push_flow_cap(g, source, cfg, cap);
  const double scale = sigma / dp.epsilon;
  // Noise goes on every entry, touched or not; releasing only the support
  // would leak it.
  for (double& x : out) x += sample_laplace(scale, rng);
  return out;
}

double sparsify_inclusion_probability(double value, double sigma,
                                      double epsilon, double gamma) {
  if (!(sigma > 0.0) || !(epsilon > 0.0) || !(gamma > 0.0))
    throw std::invalid_argument("sparsification parameters must be > 0");
  const double t = (epsilon / sigma) * (gamma - value);
  if (value <= gamma) return 0.5 * std::exp(-t);
  return 1.0 - 0.5 * std::exp(t);
}

std::vector<NodeId> dp_sparsify(const PPRVector& p, double sigma,
                                double epsilon, double gamma, RngStream& rng) {
  if (!(sigma > 0.0) || !(epsilon > 0.0) || !(gamma > 0.0))
    throw std::invalid_argument("sparsification parameters must be > 0");
  for (double x : p)
    if (x < 0.0)
      throw std::invalid_argument("dp_sparsify expects nonnegative entries");
  std::vector<NodeId> kept;
  for (NodeId i = 0; i < p.size(); ++i) {
    const double prob = sparsify_inclusion_probability(p[i], sigma, epsilon, gamma);
    if (rng.next_bernoulli(prob)) kept.push_back(i);
  }
  return kept;
}

std::vector<SparseEntry> dp_sparse_ppr(const Graph& g, NodeId source,
                                       const PPRConfig& cfg, double sigma,
                                       const DPParams& dp, RngStream& rng) {
  if (!(dp.epsilon > 0.0)) throw std::invalid_argument("epsilon must be > 0");
  if (!(sigma > 0.0)) throw std::invalid_argument("sigma must be > 0");
  const double epsilon0 = dp.epsilon / 2.0;  // selection + noise, composed
  CapConfig cap{sigma, dp.mode};
  const PPRVector capped = push_flow_cap(g, source, cfg, cap);
  const double gamma =
      3.0 * sigma / epsilon0 * std::log(static_cast<double>(g.node_count()));
  const std::vector<NodeId> kept =
      dp_sparsify(capped, sigma, epsilon0, gamma, rng);
  std::vector<SparseEntry> out;
  out.reserve(kept.size());
  const double scale = sigma / epsilon0;
  for (NodeId i : kept)
    out.push_back({i, capped[i] + sample_laplace(scale, rng)});
  return out;
}

NoisyPPRVector sparse_to_dense(std::span<const SparseEntry> entries,
                               NodeId node_count) {
  NoisyPPRVector out(node_count, 0.0);
  for (const auto& e : entries) out[e.node] = e.value;
  return out;
}

}  // namespace privppr
