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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "privppr/graph.hpp"
#include "privppr/pushflow.hpp"

namespace privppr {
namespace {

double linf(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

double laplace_cdf(double x, double b) {
  if (x < 0.0) return 0.5 * std::exp(x / b);
  return 1.0 - 0.5 * std::exp(-x / b);
}

TEST(SampleLaplace, TailProbabilityMatchesFactOne) {
  // Pr[|Y| > b ln(1/delta)] = delta, checked at delta = 0.1 over 1e6 draws.
  RngStream rng = RngStream::derive(11, "laplace_tail");
  const double b = 2.5;
  const int n = 1000000;
  int exceed = 0;
  for (int i = 0; i < n; ++i)
    if (std::abs(sample_laplace(b, rng)) > b * std::log(10.0)) ++exceed;
  EXPECT_NEAR(exceed / static_cast<double>(n), 0.1, 0.003);
}

TEST(SampleLaplace, MomentsAtUnitScale) {
  RngStream rng = RngStream::derive(12, "laplace_moments");
  const int n = 1000000;
  double sum = 0.0, sum_sq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double y = sample_laplace(1.0, rng);
    sum += y;
    sum_sq += y * y;
  }
  const double mean = sum / n;
  EXPECT_NEAR(mean, 0.0, 0.01);
  EXPECT_NEAR(sum_sq / n - mean * mean, 2.0, 0.05);
}

TEST(SampleLaplace, CdfQuantiles) {
  RngStream rng = RngStream::derive(13, "laplace_quantiles");
  const double b = 0.7;
  const int n = 1000000;
  const std::vector<double> qs{0.1, 0.25, 0.5, 0.75, 0.9};
  std::vector<double> cuts;
  for (double q : qs)
    cuts.push_back(q < 0.5 ? b * std::log(2.0 * q)
                           : -b * std::log(2.0 * (1.0 - q)));
  std::vector<int> below(qs.size(), 0);
  for (int i = 0; i < n; ++i) {
    const double y = sample_laplace(b, rng);
    for (std::size_t j = 0; j < qs.size(); ++j)
      if (y <= cuts[j]) ++below[j];
  }
  for (std::size_t j = 0; j < qs.size(); ++j) {
    const double sd = std::sqrt(n * qs[j] * (1.0 - qs[j]));
    EXPECT_NEAR(below[j], n * qs[j], 3.0 * sd) << "quantile " << qs[j];
  }
}

TEST(SampleLaplace, ReplayIsExact) {
  RngStream a = RngStream::derive(5, "replay", 2, 3);
  RngStream b = RngStream::derive(5, "replay", 2, 3);
  for (int i = 0; i < 1000; ++i)
    EXPECT_EQ(sample_laplace(1.25, a), sample_laplace(1.25, b));
}

TEST(SampleLaplace, RejectsBadScale) {
  RngStream rng(1, 1);
  EXPECT_THROW(sample_laplace(0.0, rng), std::invalid_argument);
  EXPECT_THROW(sample_laplace(-1.0, rng), std::invalid_argument);
}

TEST(DegreePromiseScale, JointArithmetic) {
  // 2(1-alpha)/(eps alpha D^2) at alpha=1/2, D=10, eps=1.
  EXPECT_DOUBLE_EQ(degree_promise_scale(0.5, 1.0, 10, PrivacyMode::kJoint),
                   0.02);
  EXPECT_DOUBLE_EQ(degree_promise_scale(0.5, 1.0, 10, PrivacyMode::kNonJoint),
                   0.2);
}

TEST(DpPushFlow, HugeEpsilonMatchesCore) {
  Graph g = make_clique(101);
  PPRConfig cfg = PPRConfig::from_precision(0.5, 1e-6);
  RngStream rng = RngStream::derive(1, "dp_push_flow", 0, 0);
  DPParams dp{1e9, PrivacyMode::kJoint, 0.01};
  NoisyPPRVector noisy = dp_push_flow(g, 0, cfg, dp, 100, rng);
  EXPECT_LE(linf(noisy, push_flow(g, 0, cfg)), 1e-6);
}

TEST(DpPushFlow, RefusesViolatedDegreePromise) {
  Graph g = make_clique(101);  // min degree 100
  PPRConfig cfg = PPRConfig::from_precision(0.5, 1e-6);
  RngStream rng(1, 1);
  DPParams dp{1.0, PrivacyMode::kJoint, 0.01};
  EXPECT_THROW(dp_push_flow(g, 0, cfg, dp, 101, rng), std::invalid_argument);
}

TEST(DpPushFlow, NoiseWithinFactOneEnvelopeAcrossTrials) {
  // With scale * ln(n/delta) as the cutoff, each trial clears it with
  // probability ~ 1 - delta (union bound); at delta = 0.01 a run of 100
  // seeded trials is expected to see about one exceedance.
  Graph g = make_clique(101);
  PPRConfig cfg = PPRConfig::from_precision(0.5, 1e-6);
  PPRVector exact = power_iteration_ppr(g, 0, 0.5, 1e-12);
  const double delta = 0.01;
  const double scale = degree_promise_scale(0.5, 1.0, 100, PrivacyMode::kJoint);
  const double bound = scale * std::log(101.0 / delta);
  DPParams dp{1.0, PrivacyMode::kJoint, delta};
  int ok = 0;
  for (int trial = 0; trial < 100; ++trial) {
    RngStream rng = RngStream::derive(1, "dp_push_flow_accuracy", 0, trial);
    NoisyPPRVector noisy = dp_push_flow(g, 0, cfg, dp, 100, rng);
    if (linf(noisy, exact) <= bound) ++ok;
  }
  EXPECT_GE(ok, 99);
}

TEST(DpPushFlowCap, HugeEpsilonMatchesCore) {
  Graph g = make_clique(101);
  PPRConfig cfg = PPRConfig::from_precision(0.5, 1e-6);
  RngStream rng = RngStream::derive(3, "dp_cap", 0, 0);
  DPParams dp{1e9, PrivacyMode::kJoint, 0.01};
  NoisyPPRVector noisy = dp_push_flow_cap(g, 0, cfg, 1e-2, dp, rng);
  CapConfig cap{1e-2, PrivacyMode::kJoint};
  EXPECT_LE(linf(noisy, push_flow_cap(g, 0, cfg, cap)), 1e-6);
}

TEST(DpPushFlowCap, NoiseScaleIsExactlySigmaOverEpsilon) {
  // The additive layer is Laplace(sigma/eps); replaying the stream must
  // reproduce the injected noise bit for bit.
  Graph g = make_random_regular(50, 4, 21);
  PPRConfig cfg = PPRConfig::from_precision(0.5, 1e-4);
  const double sigma = 1e-6, epsilon = 1.0;
  DPParams dp{epsilon, PrivacyMode::kJoint, 0.01};
  RngStream rng = RngStream::derive(4, "dp_cap_scale", 7, 0);
  NoisyPPRVector noisy = dp_push_flow_cap(g, 7, cfg, sigma, dp, rng);
  CapConfig cap{sigma, PrivacyMode::kJoint};
  PPRVector core = push_flow_cap(g, 7, cfg, cap);
  RngStream replay = RngStream::derive(4, "dp_cap_scale", 7, 0);
  for (std::size_t i = 0; i < noisy.size(); ++i)
    EXPECT_EQ(noisy[i], core[i] + sample_laplace(sigma / epsilon, replay));
}

TEST(DpPushFlowCap, MechanismDensityRatioBoundedByExpEpsilon) {
  // Fixed neighboring pair: star hub source, far-edge toggle. Once
  // ||p - p'||_1 <= sigma, the released entries' interval probabilities
  // (Laplace CDF differences) may differ by at most e^eps across the pair.
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId leaf = 1; leaf <= 10; ++leaf) edges.emplace_back(0, leaf);
  Graph g = Graph::from_edges(11, edges);
  Graph g_prime = g.with_edge_toggled(4, 9);

  PPRConfig cfg = PPRConfig::from_precision(0.5, 1e-6);
  const double sigma = 1e-3, epsilon = 0.8;
  CapConfig cap{sigma, PrivacyMode::kJoint};
  PPRVector p = push_flow_cap(g, 0, cfg, cap);
  PPRVector p_prime = push_flow_cap(g_prime, 0, cfg, cap);

  double total_shift = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i)
    total_shift += std::abs(p[i] - p_prime[i]);
  ASSERT_LE(total_shift, sigma);

  const double b = sigma / epsilon;
  double log_ratio_sum = 0.0;
  for (std::size_t i = 0; i < std::min<std::size_t>(10, p.size()); ++i) {
    double worst = 0.0;
    const double lo = std::min(p[i], p_prime[i]) - 8.0 * b;
    const double width = (std::max(p[i], p_prime[i]) + 8.0 * b - lo) / 400.0;
    for (int cell = 0; cell < 400; ++cell) {
      const double a0 = lo + cell * width;
      const double a1 = a0 + width;
      const double mass = laplace_cdf(a1 - p[i], b) - laplace_cdf(a0 - p[i], b);
      const double mass_prime =
          laplace_cdf(a1 - p_prime[i], b) - laplace_cdf(a0 - p_prime[i], b);
      if (mass_prime > 0.0 && mass > 0.0)
        worst = std::max(worst, std::abs(std::log(mass / mass_prime)));
    }
    log_ratio_sum += worst;
  }
  EXPECT_LE(std::exp(log_ratio_sum), std::exp(epsilon) + 1e-6);
}

TEST(DpSparsify, BoundaryInclusionProbabilities) {
  const double sigma = 1e-3, epsilon = 1.0, gamma = 0.02;
  EXPECT_EQ(sparsify_inclusion_probability(gamma, sigma, epsilon, gamma), 0.5);
  const double quarter_point = gamma - sigma / epsilon * std::log(2.0);
  EXPECT_NEAR(
      sparsify_inclusion_probability(quarter_point, sigma, epsilon, gamma),
      0.25, 1e-12);
  EXPECT_GT(sparsify_inclusion_probability(10 * gamma, sigma, epsilon, gamma),
            0.999);
  EXPECT_LT(sparsify_inclusion_probability(0.0, sigma, epsilon, gamma), 1e-8);
}

TEST(DpSparsify, RejectsNegativeEntriesAndBadParams) {
  RngStream rng(1, 1);
  PPRVector p{0.1, -0.1};
  EXPECT_THROW(dp_sparsify(p, 1e-3, 1.0, 0.01, rng), std::invalid_argument);
  PPRVector q{0.1};
  EXPECT_THROW(dp_sparsify(q, 0.0, 1.0, 0.01, rng), std::invalid_argument);
  EXPECT_THROW(dp_sparsify(q, 1e-3, 0.0, 0.01, rng), std::invalid_argument);
  EXPECT_THROW(dp_sparsify(q, 1e-3, 1.0, 0.0, rng), std::invalid_argument);
}

// Fixture for the sparsity lemma: L1 mass 0.5475, a few entries >= 2 gamma,
// a band inside (gamma/3, gamma), the bulk far below gamma/3.
PPRVector sparsity_fixture(double gamma) {
  PPRVector p(1000, 1e-4);
  for (int i = 0; i < 5; ++i) p[i] = 3.0 * gamma;
  for (int i = 5; i < 15; ++i) p[i] = 0.5 * gamma;
  for (int i = 15; i < 25; ++i) p[i] = 0.2 * gamma;
  return p;
}

TEST(DpSparsify, SparsityLemmaHoldsAcrossSeededRuns) {
  const double sigma = 1e-3, epsilon = 1.0;
  const double gamma = 3.0 * sigma / epsilon * std::log(1000.0);
  const PPRVector p = sparsity_fixture(gamma);
  double mass = 0.0;
  for (double x : p) mass += x;
  ASSERT_LE(mass, 1.0);

  int all_hold = 0;
  for (int run = 0; run < 200; ++run) {
    RngStream rng = RngStream::derive(6, "sparsity_lemma", 0, run);
    const std::vector<NodeId> kept = dp_sparsify(p, sigma, epsilon, gamma, rng);
    bool ok = kept.size() <= static_cast<std::size_t>(3.0 / gamma);
    for (NodeId i : kept) ok &= p[i] >= gamma / 3.0;
    for (NodeId i = 0; i < p.size(); ++i)
      if (p[i] >= 2.0 * gamma)
        ok &= std::binary_search(kept.begin(), kept.end(), i);
    all_hold += ok;
  }
  EXPECT_GE(all_hold, 199);
}

TEST(DpSparsify, InclusionsAreIndependentAcrossIndices) {
  // All entries sit exactly at gamma, so every index is a fair coin; the
  // empirical pairwise covariance must vanish.
  const double sigma = 1e-3, epsilon = 1.0, gamma = 0.02;
  const int n = 100, runs = 100000;
  const PPRVector p(n, gamma);
  std::vector<int> singles(n, 0);
  std::vector<std::vector<int>> pairs(n, std::vector<int>(n, 0));
  for (int run = 0; run < runs; ++run) {
    RngStream rng = RngStream::derive(7, "independence", 0, run);
    const std::vector<NodeId> kept = dp_sparsify(p, sigma, epsilon, gamma, rng);
    for (NodeId i : kept) ++singles[i];
    for (std::size_t a = 0; a < kept.size(); ++a)
      for (std::size_t b = a + 1; b < kept.size(); ++b)
        ++pairs[kept[a]][kept[b]];
  }
  const double sd = std::sqrt(1.0 / 16.0 / runs);
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    const double pi = singles[i] / static_cast<double>(runs);
    for (int j = i + 1; j < n; ++j) {
      const double pj = singles[j] / static_cast<double>(runs);
      const double pij = pairs[i][j] / static_cast<double>(runs);
      worst = std::max(worst, std::abs(pij - pi * pj));
    }
  }
  EXPECT_LE(worst, 5.0 * sd);
}

TEST(DpSparsePpr, HugeEpsilonKeepsLargeEntriesExactly) {
  Graph g = make_clique(101);
  PPRConfig cfg = PPRConfig::from_precision(0.5, 1e-6);
  const double sigma = 1e-2;
  DPParams dp{1e9, PrivacyMode::kJoint, 0.01};
  RngStream rng = RngStream::derive(8, "sparse_ppr", 0, 0);
  const auto entries = dp_sparse_ppr(g, 0, cfg, sigma, dp, rng);

  const double epsilon0 = dp.epsilon / 2.0;
  const double gamma = 3.0 * sigma / epsilon0 * std::log(101.0);
  PPRVector core = push_flow(g, 0, cfg);  // caps non-binding on K101
  NoisyPPRVector dense = sparse_to_dense(entries, g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (core[v] >= 2.0 * gamma) {
      EXPECT_NEAR(dense[v], core[v], 1e-6);
    }
  }
}

TEST(DpSparsePpr, SupportBoundAndErrorEnvelope) {
  Graph g = make_random_regular(1000, 10, 31);
  PPRConfig cfg = PPRConfig::from_precision(0.5, 1e-4);
  const double sigma = 1e-3;
  DPParams dp{2.0, PrivacyMode::kJoint, 0.01};
  const double epsilon0 = dp.epsilon / 2.0;
  const double gamma = 3.0 * sigma / epsilon0 * std::log(1000.0);
  CapConfig cap{sigma, PrivacyMode::kJoint};
  PPRVector core = push_flow_cap(g, 0, cfg, cap);

  int support_ok = 0, error_ok = 0;
  for (int run = 0; run < 100; ++run) {
    RngStream rng = RngStream::derive(9, "sparse_ppr_bounds", 0, run);
    const auto entries = dp_sparse_ppr(g, 0, cfg, sigma, dp, rng);
    support_ok += entries.size() <= static_cast<std::size_t>(3.0 / gamma);
    NoisyPPRVector dense = sparse_to_dense(entries, g.node_count());
    double err = 0.0;
    for (NodeId v = 0; v < g.node_count(); ++v)
      err = std::max(err, std::abs(dense[v] - core[v]));
    error_ok += err <= 3.0 * gamma;
  }
  EXPECT_GE(support_ok, 99);
  EXPECT_GE(error_ok, 99);
}

TEST(DpSparsePpr, BudgetSplitsEvenlyBetweenSelectionAndNoise) {
  // Replaying the stream reproduces the run exactly when and only when the
  // selection uses eps/2 and the retained-entry noise is
  // Laplace(sigma/(eps/2)).
  Graph g = make_random_regular(60, 6, 13);
  PPRConfig cfg = PPRConfig::from_precision(0.5, 1e-4);
  const double sigma = 5e-3, epsilon = 1.6;
  DPParams dp{epsilon, PrivacyMode::kNonJoint, 0.01};
  RngStream rng = RngStream::derive(10, "budget_split", 3, 0);
  const auto entries = dp_sparse_ppr(g, 3, cfg, sigma, dp, rng);

  const double epsilon0 = epsilon / 2.0;
  CapConfig cap{sigma, PrivacyMode::kNonJoint};
  PPRVector core = push_flow_cap(g, 3, cfg, cap);
  const double gamma = 3.0 * sigma / epsilon0 * std::log(60.0);
  RngStream replay = RngStream::derive(10, "budget_split", 3, 0);
  const std::vector<NodeId> kept =
      dp_sparsify(core, sigma, epsilon0, gamma, replay);
  ASSERT_EQ(kept.size(), entries.size());
  for (std::size_t i = 0; i < kept.size(); ++i) {
    EXPECT_EQ(entries[i].node, kept[i]);
    EXPECT_EQ(entries[i].value,
              core[kept[i]] + sample_laplace(sigma / epsilon0, replay));
  }
}

TEST(SparseToDense, ZerosOutsideSupport) {
  std::vector<SparseEntry> entries{{2, 0.5}, {5, -0.25}};
  NoisyPPRVector dense = sparse_to_dense(entries, 8);
  EXPECT_EQ(dense, (NoisyPPRVector{0, 0, 0.5, 0, 0, -0.25, 0, 0}));
}

}  // namespace
}  // namespace privppr
