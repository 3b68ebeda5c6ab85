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

#include "privppr/embedding.hpp"

#include <cmath>
#include <stdexcept>

namespace privppr {

Embedding instant_embedding(std::span<const double> p, const HashConfig& hc) {
  if (hc.dimension < 1)
    throw std::invalid_argument("embedding dimension must be >= 1");
  const double n = static_cast<double>(p.size());
  Embedding w(static_cast<std::size_t>(hc.dimension), 0.0);
  for (NodeId v = 0; v < p.size(); ++v) {
    const double value = p[v] > 0.0 ? p[v] : 0.0;
    if (value * n <= 1.0) continue;  // max(ln(p_v * n), 0) == 0
    w[static_cast<std::size_t>(hc.bucket_of(v))] +=
        hc.sign_of(v) * std::log(value * n);
  }
  return w;
}

double embedding_sensitivity_bound(std::span<const double> p,
                                   std::span<const double> p_prime) {
  if (p.size() != p_prime.size())
    throw std::invalid_argument("vector length mismatch");
  std::size_t differing = 0;
  double l1 = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] != p_prime[i]) {
      ++differing;
      l1 += std::abs(p[i] - p_prime[i]);
    }
  }
  if (differing == 0) return 0.0;
  const double m = static_cast<double>(differing);
  return m * std::log(1.0 + l1 * static_cast<double>(p.size()) / m);
}

Embedding dp_embedding(const Graph& g, NodeId source, const PPRConfig& cfg,
                       double sigma, const HashConfig& hc, const DPParams& dp,
                       RngStream& rng) {
  if (!(dp.epsilon > 0.0)) throw std::invalid_argument("epsilon must be > 0");
  if (!(sigma > 0.0)) throw std::invalid_argument("sigma must be > 0");
  CapConfig cap{sigma, dp.mode};
  const PPRVector p = push_flow_cap(g, source, cfg, cap);
  Embedding w = instant_embedding(p, hc);
  const double scale =
      sigma * static_cast<double>(g.node_count()) / dp.epsilon;
  for (double& x : w) x += sample_laplace(scale, rng);
  return w;
}

Embedding dp_embedding_sparse(const Graph& g, NodeId source,
                              const PPRConfig& cfg, double sigma,
                              const HashConfig& hc, const DPParams& dp,
                              RngStream& rng) {
  if (!(dp.epsilon > 0.0)) throw std::invalid_argument("epsilon must be > 0");
  if (!(sigma > 0.0)) throw std::invalid_argument("sigma must be > 0");
  const double epsilon0 = dp.epsilon / 2.0;
  CapConfig cap{sigma, dp.mode};
  const PPRVector capped = push_flow_cap(g, source, cfg, cap);
  const double n = static_cast<double>(g.node_count());
  const double gamma = 3.0 * sigma / epsilon0 * std::log(n);
  const std::vector<NodeId> kept =
      dp_sparsify(capped, sigma, epsilon0, gamma, rng);

  PPRVector restricted(capped.size(), 0.0);
  for (NodeId i : kept) restricted[i] = capped[i];
  Embedding w = instant_embedding(restricted, hc);

  if (kept.empty()) return w;  // zero support, zero noise
  const double support = static_cast<double>(kept.size());
  const double scale = support * std::log(1.0 + sigma * n / support) / epsilon0;
  for (double& x : w) x += sample_laplace(scale, rng);
  return w;
}

}  // namespace privppr
