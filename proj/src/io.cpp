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

#include "privppr/io.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace privppr {

namespace {

using ordered_json = nlohmann::ordered_json;

std::vector<NodeId> score_order(std::span<const double> scores) {
  std::vector<NodeId> order(scores.size());
  for (NodeId v = 0; v < scores.size(); ++v) order[v] = v;
  std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
    if (scores[a] != scores[b]) return scores[a] > scores[b];
    return a < b;
  });
  return order;
}

void fill_meta(ordered_json& j, const ScoreMeta& meta) {
  j["source"] = meta.source_label;
  j["variant"] = meta.variant;
  j["alpha"] = meta.alpha;
  j["xi"] = meta.xi;
  if (meta.sigma) j["sigma"] = *meta.sigma;
  if (meta.epsilon) j["epsilon"] = *meta.epsilon;
  if (meta.mode) j["mode"] = *meta.mode;
  if (meta.seed) j["seed"] = *meta.seed;
}

}  // namespace

std::string format_double(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  if (ec != std::errc()) throw std::runtime_error("double formatting failed");
  return std::string(buf, ptr);
}

void write_scores_tsv(std::ostream& out, std::span<const std::string> labels,
                      std::span<const double> scores) {
  if (labels.size() != scores.size())
    throw std::invalid_argument("labels/scores size mismatch");
  for (NodeId v : score_order(scores))
    out << labels[v] << '\t' << format_double(scores[v]) << '\n';
}

void write_scores_json(std::ostream& out, const ScoreMeta& meta,
                       std::span<const std::string> labels,
                       std::span<const double> scores) {
  if (labels.size() != scores.size())
    throw std::invalid_argument("labels/scores size mismatch");
  ordered_json j;
  fill_meta(j, meta);
  auto& arr = j["scores"] = ordered_json::array();
  for (NodeId v : score_order(scores))
    arr.push_back(ordered_json::array({labels[v], scores[v]}));
  out << j.dump() << '\n';
}

void write_sparse_json(std::ostream& out, const ScoreMeta& meta,
                       std::span<const SparseEntry> entries) {
  ordered_json j;
  fill_meta(j, meta);
  auto& arr = j["entries"] = ordered_json::array();
  for (const auto& e : entries)
    arr.push_back(ordered_json::array({e.node, e.value}));
  out << j.dump() << '\n';
}

void write_label_map_tsv(std::ostream& out,
                         std::span<const std::string> labels) {
  for (std::size_t id = 0; id < labels.size(); ++id)
    out << labels[id] << '\t' << id << '\n';
}

void write_embeddings_tsv(std::ostream& out,
                          std::span<const std::string> row_labels,
                          std::span<const std::vector<double>> rows) {
  if (row_labels.size() != rows.size())
    throw std::invalid_argument("labels/rows size mismatch");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out << row_labels[i];
    for (double x : rows[i]) out << '\t' << format_double(x);
    out << '\n';
  }
}

void write_edge_list(std::ostream& out, const Graph& g,
                     std::span<const std::string> labels) {
  for (NodeId u = 0; u < g.node_count(); ++u)
    for (NodeId v : g.neighbors(u))
      if (u < v) out << labels[u] << ' ' << labels[v] << '\n';
}

void write_metrics_csv(std::ostream& out, std::span<const MetricRow> rows) {
  out << "variant,mode,epsilon,sigma,alpha,xi,k,metric,value,stderr,"
         "n_sources,seed\n";
  for (const auto& r : rows) {
    out << r.variant << ',' << r.mode << ',' << format_double(r.epsilon) << ','
        << format_double(r.sigma) << ',' << format_double(r.alpha) << ','
        << format_double(r.xi) << ',' << r.k << ',' << r.metric << ','
        << format_double(r.value) << ',' << format_double(r.stderr_value)
        << ',' << r.n_sources << ',' << r.seed << '\n';
  }
}

LabeledNodes load_labels_tsv(std::istream& in,
                             std::span<const std::string> node_labels) {
  std::map<std::string, NodeId> ids;
  for (std::size_t i = 0; i < node_labels.size(); ++i)
    ids[node_labels[i]] = static_cast<NodeId>(i);

  LabeledNodes out;
  out.labels.resize(node_labels.size());
  std::string line;
  std::size_t line_number = 0;
  int max_label = -1;
  while (std::getline(in, line)) {
    ++line_number;
    std::istringstream tokens(line);
    std::string node;
    int label;
    if (!(tokens >> node)) continue;
    if (node[0] == '#') continue;
    if (!(tokens >> label) || label < 0)
      throw std::runtime_error("label file parse error at line " +
                               std::to_string(line_number));
    auto it = ids.find(node);
    if (it == ids.end())
      throw std::runtime_error("label file references unknown node '" + node +
                               "' at line " + std::to_string(line_number));
    out.labels[it->second].push_back(label);
    max_label = std::max(max_label, label);
  }
  for (auto& ls : out.labels) {
    std::sort(ls.begin(), ls.end());
    ls.erase(std::unique(ls.begin(), ls.end()), ls.end());
  }
  out.label_count = max_label + 1;
  return out;
}

}  // namespace privppr
