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

#include "privppr/pushflow.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace privppr {

int rounds_from_precision(double alpha, double xi) {
  if (!(alpha > 0.0) || !(alpha < 1.0))
    throw std::invalid_argument("alpha must be in (0, 1)");
  if (!(xi > 0.0) || !(xi <= 1.0))
    throw std::invalid_argument("xi must be in (0, 1]");
  return static_cast<int>(std::ceil(std::log(1.0 / xi) / alpha));
}

PPRConfig PPRConfig::from_precision(double alpha, double xi) {
  PPRConfig cfg;
  cfg.alpha = alpha;
  cfg.xi = xi;
  cfg.rounds = rounds_from_precision(alpha, xi);
  return cfg;
}

PPRConfig PPRConfig::from_rounds(double alpha, int rounds) {
  if (!(alpha > 0.0) || !(alpha < 1.0))
    throw std::invalid_argument("alpha must be in (0, 1)");
  if (rounds < 0) throw std::invalid_argument("rounds must be >= 0");
  PPRConfig cfg;
  cfg.alpha = alpha;
  cfg.xi = std::exp(-alpha * rounds);
  cfg.rounds = rounds;
  return cfg;
}

PPRVector power_iteration_ppr(const Graph& g, NodeId source, double alpha,
                              double tol, int max_iters) {
  const NodeId n = g.node_count();
  if (source >= n) throw std::invalid_argument("source out of range");
  if (g.degree(source) == 0)
    throw std::invalid_argument("source must have degree >= 1");
  if (!(tol > 0.0)) throw std::invalid_argument("tol must be > 0");
  if (!(alpha > 0.0) || !(alpha < 1.0))
    throw std::invalid_argument("alpha must be in (0, 1)");

  std::vector<double> inv_degree(n, 0.0);
  for (NodeId v = 0; v < n; ++v)
    if (g.degree(v) > 0) inv_degree[v] = 1.0 / g.degree(v);

  std::vector<double> p(n, 0.0), next(n, 0.0);
  p[source] = 1.0;
  double change = 0.0;
  for (int iter = 0; iter < max_iters; ++iter) {
    const double damp = (1.0 - alpha) * 0.5;
    for (NodeId v = 0; v < n; ++v) {
      double incoming = p[v];
      for (NodeId u : g.neighbors(v)) incoming += p[u] * inv_degree[u];
      next[v] = damp * incoming;
    }
    next[source] += alpha;
    change = 0.0;
    for (NodeId v = 0; v < n; ++v) change += std::abs(next[v] - p[v]);
    p.swap(next);
    if (change <= tol) return p;
  }
  throw std::runtime_error(
      "power iteration did not converge within " + std::to_string(max_iters) +
      " iterations; final L1 change " + std::to_string(change));
}

namespace {

// Shared synchronous push loop. push_flow runs it with cap == nullptr;
// push_flow_cap supplies the thresholds. When caps never bind, both variants
// execute the identical operation sequence in the identical (ascending
// NodeId) order, which is what makes their outputs bit-identical.
PPRVector push_core(const Graph& g, NodeId source, const PPRConfig& cfg,
                    const CapConfig* cap, PushTrace* trace) {
  const NodeId n = g.node_count();
  if (source >= n) throw std::invalid_argument("source out of range");
  if (g.degree(source) == 0)
    throw std::invalid_argument("source must have degree >= 1");
  if (cap && !(cap->sigma > 0.0))
    throw std::invalid_argument("sigma must be > 0");

  const double alpha = cfg.alpha;
  const double retain = (1.0 - alpha) * 0.5;

  // cap_limit[v] = d(v) * T_v, computed once. The joint-mode source keeps the
  // "uncapped" sentinel: its min is skipped entirely, no infinity enters
  // arithmetic.
  std::vector<double> cap_limit;
  std::vector<char> is_capped;
  if (cap) {
    const double threshold = cap->uniform_threshold(alpha);
    cap_limit.resize(n);
    is_capped.assign(n, 1);
    for (NodeId v = 0; v < n; ++v) cap_limit[v] = g.degree(v) * threshold;
    if (cap->source_uncapped()) is_capped[source] = 0;
  }

  std::vector<double> r_cur(n, 0.0), r_next(n, 0.0);
  std::vector<double> received(n, 0.0);  // cumulative residual seen per node
  std::vector<double> h(n, 0.0);         // cumulative pushed flow per node
  std::vector<double> f(n, 0.0);         // this round's flow per node
  r_cur[source] = 1.0;

  std::vector<NodeId> frontier{source};  // kept sorted ascending
  std::vector<char> in_frontier(n, 0);
  in_frontier[source] = 1;
  std::vector<NodeId> added;

  auto record = [&](PushTrace* t) {
    if (!t) return;
    t->residual.push_back(r_cur);
    t->pushed_total.push_back(h);
    t->flow.push_back(f);
    std::vector<double> p(n, 0.0);
    for (NodeId v = 0; v < n; ++v) p[v] = alpha * h[v];
    t->ppr.push_back(std::move(p));
  };
  record(trace);  // round 0

  for (int round = 1; round <= cfg.rounds; ++round) {
    // Flow computation for every node seen so far, from the pre-round
    // residual. h_v stays equal to min(received_v, d(v)*T_v) exactly: the
    // uncapped branch tracks the running sum, the capped branch pins h to
    // the limit so later rounds yield zero flow.
    for (NodeId v : frontier) {
      const double rv = r_cur[v];
      received[v] += rv;
      double fv;
      if (cap && is_capped[v] && received[v] > cap_limit[v]) {
        fv = cap_limit[v] - h[v];
        h[v] = cap_limit[v];
      } else {
        fv = rv;
        h[v] = received[v];
      }
      f[v] = fv;
      r_next[v] = rv - fv;  // unpushed leftover stays at v
    }
    // Push phase, ascending NodeId.
    added.clear();
    for (NodeId v : frontier) {
      const double fv = f[v];
      if (!(fv > 0.0)) continue;
      r_next[v] += retain * fv;
      const double share = retain * fv / g.degree(v);
      for (NodeId u : g.neighbors(v)) {
        r_next[u] += share;
        if (!in_frontier[u]) {
          in_frontier[u] = 1;
          added.push_back(u);
        }
      }
    }
    if (!added.empty()) {
      std::sort(added.begin(), added.end());
      const std::size_t middle = frontier.size();
      frontier.insert(frontier.end(), added.begin(), added.end());
      std::inplace_merge(frontier.begin(),
                         frontier.begin() + static_cast<std::ptrdiff_t>(middle),
                         frontier.end());
    }
    r_cur.swap(r_next);
    for (NodeId v : frontier) r_next[v] = 0.0;
    record(trace);
  }

  PPRVector p(n, 0.0);
  for (NodeId v : frontier) p[v] = alpha * h[v];
  return p;
}

}  // namespace

PPRVector push_flow(const Graph& g, NodeId source, const PPRConfig& cfg,
                    PushTrace* trace) {
  return push_core(g, source, cfg, nullptr, trace);
}

PPRVector push_flow_cap(const Graph& g, NodeId source, const PPRConfig& cfg,
                        const CapConfig& cap, PushTrace* trace) {
  return push_core(g, source, cfg, &cap, trace);
}

}  // namespace privppr
