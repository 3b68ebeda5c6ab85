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

#ifndef PRIVPPR_PUSHFLOW_HPP_
#define PRIVPPR_PUSHFLOW_HPP_

#include <vector>

#include "privppr/graph.hpp"

namespace privppr {

/// Dense nonnegative score vector over nodes, L1 norm <= 1.
using PPRVector = std::vector<double>;

/// Differentially private outputs carry additive noise and may go negative;
/// same layout, no sign invariant.
using NoisyPPRVector = std::vector<double>;

enum class PrivacyMode { kJoint, kNonJoint };

/// Number of synchronous push rounds for precision xi: ceil(ln(1/xi)/alpha).
/// Requires 0 < alpha < 1 and 0 < xi <= 1.
int rounds_from_precision(double alpha, double xi);

/// Teleport probability (lazy-walk convention) plus precision. The round
/// count is always derived from (alpha, xi), never set independently.
struct PPRConfig {
  double alpha = 0.08;
  double xi = 1.0;
  int rounds = 0;

  static PPRConfig from_precision(double alpha, double xi);
  /// Convenience for callers that think in rounds: xi = exp(-alpha * rounds).
  static PPRConfig from_rounds(double alpha, int rounds);
};

/// Sensitivity budget for the capped push. In joint mode the source is
/// uncapped (the cap is skipped in the min, no infinity enters arithmetic)
/// and every other node gets threshold sigma / (2 * (2 - alpha)); non-joint
/// mode caps every node, the source included.
struct CapConfig {
  double sigma = 0.0;
  PrivacyMode mode = PrivacyMode::kJoint;

  double uniform_threshold(double alpha) const {
    return sigma / (2.0 * (2.0 - alpha));
  }
  bool source_uncapped() const { return mode == PrivacyMode::kJoint; }
};

/// Per-round working-state snapshots for invariant audits. residual[i],
/// pushed_total[i], flow[i], ppr[i] hold r/h/f/p after round i; index 0 is
/// the initial state (r = e_s, everything else zero).
struct PushTrace {
  std::vector<std::vector<double>> residual;
  std::vector<std::vector<double>> pushed_total;
  std::vector<std::vector<double>> flow;
  std::vector<std::vector<double>> ppr;
};

/// Ground-truth oracle: iterates p <- alpha * e_s + (1 - alpha) * p * W with
/// W = (I + Lambda^{-1} A) / 2 until the successive-iterate L1 change is at
/// most tol. Throws on non-convergence, reporting the final change.
PPRVector power_iteration_ppr(const Graph& g, NodeId source, double alpha,
                              double tol, int max_iters = 1000000);

/// Approximate PPR by synchronous push rounds. Each round every node seen so
/// far pushes its full residual: alpha of it into the score, (1-alpha)/2
/// retained, (1-alpha)/2 split equally over its neighbors. After R rounds the
/// output is within xi of the exact PPR in L-infinity.
PPRVector push_flow(const Graph& g, NodeId source, const PPRConfig& cfg,
                    PushTrace* trace = nullptr);

/// Sensitivity-capped variant: node v's cumulative pushed flow h_v never
/// exceeds degree(v) * T_v, so the per-round flow is
/// f_v = min(r_v, d(v) * T_v - h_v). The output's L1 distance across any
/// single-edge change is at most cap.sigma (edges not incident to the source
/// in joint mode; any edge in non-joint mode). When
/// min_degree >= max(1/(alpha*T_s), sqrt(1/(alpha*T_u))) the caps never bind
/// and the output is bit-identical to push_flow.
PPRVector push_flow_cap(const Graph& g, NodeId source, const PPRConfig& cfg,
                        const CapConfig& cap, PushTrace* trace = nullptr);

}  // namespace privppr

#endif  // PRIVPPR_PUSHFLOW_HPP_
