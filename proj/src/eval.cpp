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

#include "privppr/eval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace privppr {

RankedList top_k(std::span<const double> scores, std::size_t k,
                 std::optional<NodeId> exclude) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  RankedList order;
  order.reserve(scores.size());
  for (NodeId v = 0; v < scores.size(); ++v)
    if (!exclude || *exclude != v) order.push_back(v);
  std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
    if (scores[a] != scores[b]) return scores[a] > scores[b];
    return a < b;
  });
  if (order.size() > k) order.resize(k);
  return order;
}

double recall_at_k(std::span<const double> truth, std::span<const double> pred,
                   std::size_t k, std::optional<NodeId> source) {
  if (truth.size() != pred.size())
    throw std::invalid_argument("vector length mismatch");
  RankedList a = top_k(truth, k, source);
  RankedList b = top_k(pred, k, source);
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::vector<NodeId> common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(common));
  return static_cast<double>(common.size()) / static_cast<double>(k);
}

double ndcg(std::span<const double> truth, std::span<const double> pred,
            std::size_t k, std::optional<NodeId> source) {
  if (truth.size() != pred.size())
    throw std::invalid_argument("vector length mismatch");
  for (double t : truth)
    if (t < 0.0) throw std::invalid_argument("truth gains must be >= 0");
  auto dcg_of = [&](const RankedList& ranking) {
    double dcg = 0.0;
    for (std::size_t i = 0; i < ranking.size(); ++i)
      dcg += truth[ranking[i]] / std::log2(static_cast<double>(i) + 2.0);
    return dcg;
  };
  const double ideal = dcg_of(top_k(truth, k, source));
  if (ideal == 0.0) return 1.0;  // empty-relevance convention
  return dcg_of(top_k(pred, k, source)) / ideal;
}

namespace {

// Ranks 1..n with ties averaged.
std::vector<double> average_ranks(std::span<const double> values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return values[a] < values[b];
  });
  std::vector<double> ranks(n, 0.0);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
    const double shared = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (std::size_t t = i; t <= j; ++t) ranks[order[t]] = shared;
    i = j + 1;
  }
  return ranks;
}

}  // namespace

double spearman_rho(std::span<const double> truth,
                    std::span<const double> pred) {
  if (truth.size() != pred.size())
    throw std::invalid_argument("vector length mismatch");
  if (truth.size() < 2)
    throw std::invalid_argument("need at least 2 entries");
  const std::vector<double> ra = average_ranks(truth);
  const std::vector<double> rb = average_ranks(pred);
  const double n = static_cast<double>(ra.size());
  const double mean = (n + 1.0) / 2.0;
  double cov = 0.0, var_a = 0.0, var_b = 0.0;
  for (std::size_t i = 0; i < ra.size(); ++i) {
    const double da = ra[i] - mean;
    const double db = rb[i] - mean;
    cov += da * db;
    var_a += da * da;
    var_b += db * db;
  }
  if (var_a == 0.0 || var_b == 0.0)
    throw std::invalid_argument(
        "spearman rho undefined: a rank vector has zero variance");
  return cov / std::sqrt(var_a * var_b);
}

double l1_similarity(std::span<const double> truth,
                     std::span<const double> pred) {
  if (truth.size() != pred.size())
    throw std::invalid_argument("vector length mismatch");
  double l1 = 0.0;
  for (std::size_t i = 0; i < truth.size(); ++i)
    l1 += std::abs(truth[i] - pred[i]);
  return 1.0 - l1;
}

double empirical_sensitivity(const CoreAlgorithm& algorithm, const Graph& g,
                             NodeId source, int trials, PrivacyMode mode,
                             RngStream& rng) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  const NodeId n = g.node_count();
  const NodeId candidates = mode == PrivacyMode::kJoint ? n - 1 : n;
  if (candidates < 2)
    throw std::invalid_argument("no toggleable node pair exists");

  const std::vector<double> base = algorithm(g);
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    NodeId u, v;
    do {
      u = static_cast<NodeId>(rng.next_below(n));
      v = static_cast<NodeId>(rng.next_below(n));
    } while (u == v ||
             (mode == PrivacyMode::kJoint && (u == source || v == source)));
    const Graph neighbor = g.with_edge_toggled(u, v);
    const std::vector<double> other = algorithm(neighbor);
    double l1 = 0.0;
    for (std::size_t i = 0; i < base.size(); ++i)
      l1 += std::abs(base[i] - other[i]);
    worst = std::max(worst, l1);
  }
  return worst;
}

namespace {

struct LogisticModel {
  std::vector<double> weights;
  double bias = 0.0;
  bool trained = false;
};

LogisticModel train_one_vs_rest(
    const std::vector<std::vector<double>>& features,
    const std::vector<std::size_t>& train_ids,
    const std::vector<char>& positive) {
  constexpr double kLearningRate = 0.1;
  constexpr int kIterations = 500;
  constexpr double kL2 = 1e-4;

  LogisticModel model;
  bool any_positive = false;
  for (std::size_t i : train_ids) any_positive |= positive[i] != 0;
  if (!any_positive) return model;  // label unseen in training: never predict

  const std::size_t dim = features[0].size();
  model.weights.assign(dim, 0.0);
  model.trained = true;
  const double inv_n = 1.0 / static_cast<double>(train_ids.size());
  std::vector<double> grad(dim);
  for (int iter = 0; iter < kIterations; ++iter) {
    std::fill(grad.begin(), grad.end(), 0.0);
    double grad_bias = 0.0;
    for (std::size_t i : train_ids) {
      double z = model.bias;
      for (std::size_t d = 0; d < dim; ++d)
        z += model.weights[d] * features[i][d];
      const double prob = 1.0 / (1.0 + std::exp(-z));
      const double err = prob - (positive[i] ? 1.0 : 0.0);
      for (std::size_t d = 0; d < dim; ++d) grad[d] += err * features[i][d];
      grad_bias += err;
    }
    for (std::size_t d = 0; d < dim; ++d) {
      model.weights[d] -=
          kLearningRate * (grad[d] * inv_n + kL2 * model.weights[d]);
    }
    model.bias -= kLearningRate * grad_bias * inv_n;
  }
  return model;
}

}  // namespace

double node_classification_micro_f1(
    const std::vector<std::vector<double>>& embeddings,
    const LabeledNodes& labeled, double train_fraction, std::uint64_t seed) {
  const std::size_t n = embeddings.size();
  if (labeled.labels.size() != n)
    throw std::invalid_argument("labels/embeddings size mismatch");
  if (labeled.label_count < 2)
    throw std::invalid_argument("need at least 2 labels");
  if (!(train_fraction > 0.0) || !(train_fraction < 1.0))
    throw std::invalid_argument("train_fraction must be in (0, 1)");

  RngStream rng = RngStream::derive(seed, "classification_split");
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  for (std::size_t i = n; i > 1; --i)
    std::swap(order[i - 1], order[rng.next_below(i)]);
  const std::size_t train_size =
      std::max<std::size_t>(1, static_cast<std::size_t>(
                                   train_fraction * static_cast<double>(n)));
  const std::vector<std::size_t> train_ids(order.begin(),
                                           order.begin() + train_size);
  const std::vector<std::size_t> test_ids(order.begin() + train_size,
                                          order.end());
  if (test_ids.empty()) throw std::invalid_argument("empty test split");

  std::vector<LogisticModel> models(labeled.label_count);
  std::vector<char> positive(n, 0);
  for (int label = 0; label < labeled.label_count; ++label) {
    for (std::size_t i = 0; i < n; ++i) {
      positive[i] = std::binary_search(labeled.labels[i].begin(),
                                       labeled.labels[i].end(), label)
                        ? 1
                        : 0;
    }
    models[label] = train_one_vs_rest(embeddings, train_ids, positive);
  }

  std::size_t true_positive = 0, false_positive = 0, false_negative = 0;
  std::vector<std::pair<double, int>> scored;
  for (std::size_t i : test_ids) {
    const auto& truth = labeled.labels[i];
    if (truth.empty()) continue;
    scored.clear();
    for (int label = 0; label < labeled.label_count; ++label) {
      const LogisticModel& m = models[label];
      if (!m.trained) continue;  // label unseen in training: never predicted
      double z = m.bias;
      for (std::size_t d = 0; d < m.weights.size(); ++d)
        z += m.weights[d] * embeddings[i][d];
      scored.emplace_back(z, label);
    }
    // Top-l labels, l = true label count; ties broken by label id.
    std::sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) {
      if (a.first != b.first) return a.first > b.first;
      return a.second < b.second;
    });
    const std::size_t predictions = std::min(truth.size(), scored.size());
    for (std::size_t r = 0; r < predictions; ++r) {
      const int predicted = scored[r].second;
      if (std::binary_search(truth.begin(), truth.end(), predicted))
        ++true_positive;
      else
        ++false_positive;
    }
    false_negative += truth.size();
  }
  false_negative -= true_positive;
  const double denom = static_cast<double>(2 * true_positive + false_positive +
                                           false_negative);
  if (denom == 0.0) return 0.0;
  return 2.0 * static_cast<double>(true_positive) / denom;
}

}  // namespace privppr
