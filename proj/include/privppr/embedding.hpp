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

#ifndef PRIVPPR_EMBEDDING_HPP_
#define PRIVPPR_EMBEDDING_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "privppr/dp.hpp"
#include "privppr/graph.hpp"
#include "privppr/pushflow.hpp"
#include "privppr/rng.hpp"

namespace privppr {

/// Dense real vector of dimension k.
using Embedding = std::vector<double>;

/// Hashed-projection setup: a bucket hash NodeId -> [0, k) and a sign hash
/// NodeId -> {-1, +1}, both derived from the shared 64-bit mixer (mix64) so
/// any implementation can reproduce them from the seeds alone.
struct HashConfig {
  int dimension = 256;  // k
  std::uint64_t bucket_seed = 0;
  std::uint64_t sign_seed = 1;

  int bucket_of(NodeId v) const {
    return static_cast<int>(mix64(bucket_seed ^ static_cast<std::uint64_t>(v)) %
                            static_cast<std::uint64_t>(dimension));
  }
  double sign_of(NodeId v) const {
    return (mix64(sign_seed ^ static_cast<std::uint64_t>(v)) & 1ULL) ? 1.0
                                                                     : -1.0;
  }
};

/// Signed-hash sketch of a score vector: for every node v,
/// w[bucket(v)] += sign(v) * max(ln(p_v * n), 0), with n = p.size().
/// Negative entries (possible in noisy inputs) are clipped to 0 before the
/// log. Throws if hc.dimension < 1.
Embedding instant_embedding(std::span<const double> p, const HashConfig& hc);

/// Upper bound on the L1 distance of two sketches built from p and p_prime:
/// m * ln(1 + ||p - p_prime||_1 * n / m) with m the number of differing
/// entries; 0 when the vectors are equal.
double embedding_sensitivity_bound(std::span<const double> p,
                                   std::span<const double> p_prime);

/// Private embedding: sketch of the capped push output plus i.i.d.
/// Laplace(sigma * n / epsilon) per coordinate.
Embedding dp_embedding(const Graph& g, NodeId source, const PPRConfig& cfg,
                       double sigma, const HashConfig& hc, const DPParams& dp,
                       RngStream& rng);

/// Private embedding via sparsified PPR: epsilon/2 selects indices, the
/// sketch of the restricted vector gets Laplace noise at scale
/// |S| * ln(1 + sigma * n / |S|) / (epsilon/2) per coordinate. An empty
/// selection yields the zero vector with zero noise.
Embedding dp_embedding_sparse(const Graph& g, NodeId source,
                              const PPRConfig& cfg, double sigma,
                              const HashConfig& hc, const DPParams& dp,
                              RngStream& rng);

}  // namespace privppr

#endif  // PRIVPPR_EMBEDDING_HPP_
