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

#ifndef PRIVPPR_EVAL_HPP_
#define PRIVPPR_EVAL_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "privppr/graph.hpp"
#include "privppr/pushflow.hpp"
#include "privppr/rng.hpp"

namespace privppr {

/// Node ordering by (score descending, NodeId ascending). Deterministic for
/// fixed scores.
using RankedList = std::vector<NodeId>;

/// Top k nodes of a score vector; the excluded node (typically the ranking's
/// own source) is removed before ranking. k beyond the available nodes
/// returns all of them.
RankedList top_k(std::span<const double> scores, std::size_t k,
                 std::optional<NodeId> exclude = std::nullopt);

/// |top_k(truth) ∩ top_k(pred)| / k, both rankings excluding the source.
double recall_at_k(std::span<const double> truth, std::span<const double> pred,
                   std::size_t k, std::optional<NodeId> source);

/// Normalized discounted cumulative gain over pred's top k, with the truth
/// scores as gains and log2(rank + 1) discounts, normalized by truth's own
/// ideal ranking; the source is excluded. Zero ideal DCG returns 1.
double ndcg(std::span<const double> truth, std::span<const double> pred,
            std::size_t k, std::optional<NodeId> source);

/// Spearman rank correlation: Pearson correlation of the two rank vectors,
/// ties assigned average ranks. Throws when either side has zero rank
/// variance (undefined coefficient).
double spearman_rho(std::span<const double> truth,
                    std::span<const double> pred);

/// 1 - ||truth - pred||_1.
double l1_similarity(std::span<const double> truth,
                     std::span<const double> pred);

/// Deterministic core algorithm under audit: graph in, score vector out.
using CoreAlgorithm = std::function<std::vector<double>(const Graph&)>;

/// Empirically audits sensitivity: samples `trials` random edge toggles
/// consistent with the mode (joint toggles never touch an edge incident to
/// the source), reruns the algorithm on each neighboring graph, and returns
/// the maximum observed L1 distance to the unperturbed output. Noise layers
/// are deliberately excluded: sensitivity is a property of the pre-noise
/// function. Throws when no toggleable pair exists.
double empirical_sensitivity(const CoreAlgorithm& algorithm, const Graph& g,
                             NodeId source, int trials, PrivacyMode mode,
                             RngStream& rng);

/// Multi-label ground truth for node classification.
struct LabeledNodes {
  std::vector<std::vector<int>> labels;  // per node, sorted ascending
  int label_count = 0;
};

/// One-vs-rest linear classification protocol: logistic loss, full-batch
/// gradient descent with fixed hyperparameters (learning rate 0.1, 500
/// iterations, L2 1e-4), trained on a seeded split; each test node predicts
/// its top-l labels where l is its true label count. Returns Micro-F1.
/// Labels absent from the training split never get predicted.
double node_classification_micro_f1(
    const std::vector<std::vector<double>>& embeddings,
    const LabeledNodes& labeled, double train_fraction, std::uint64_t seed);

}  // namespace privppr

#endif  // PRIVPPR_EVAL_HPP_
