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

#ifndef PRIVPPR_IO_HPP_
#define PRIVPPR_IO_HPP_

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "privppr/dp.hpp"
#include "privppr/eval.hpp"
#include "privppr/graph.hpp"
#include "privppr/pushflow.hpp"

namespace privppr {

// All writers are byte-deterministic: doubles are serialized with the
// shortest round-trip representation, iteration orders are sorted, and no
// clocks or locales are involved.

/// Shortest decimal string that round-trips the double.
std::string format_double(double value);

/// Metadata block attached to score outputs.
struct ScoreMeta {
  std::string source_label;
  std::string variant;
  double alpha = 0.0;
  double xi = 0.0;
  std::optional<double> sigma;
  std::optional<double> epsilon;
  std::optional<std::string> mode;
  std::optional<std::uint64_t> seed;
};

/// TSV rows `node_label<TAB>score`, sorted by score descending then node id
/// ascending.
void write_scores_tsv(std::ostream& out, std::span<const std::string> labels,
                      std::span<const double> scores);

/// JSON object {source, variant, alpha, xi, sigma?, epsilon?, mode?, seed?,
/// scores: [[label, score], ...]} with scores in the TSV order.
void write_scores_json(std::ostream& out, const ScoreMeta& meta,
                       std::span<const std::string> labels,
                       std::span<const double> scores);

/// JSON object with `entries: [[node, score], ...]` sorted by node id, for
/// sparse private vectors.
void write_sparse_json(std::ostream& out, const ScoreMeta& meta,
                       std::span<const SparseEntry> entries);

/// TSV `label<TAB>dense_id`, one row per node in dense-id order.
void write_label_map_tsv(std::ostream& out,
                         std::span<const std::string> labels);

/// TSV `node_label<TAB>v1<TAB>...<TAB>vk`, one row per source.
void write_embeddings_tsv(std::ostream& out,
                          std::span<const std::string> row_labels,
                          std::span<const std::vector<double>> rows);

/// Edge list in the interchange format (one `u v` line per edge, u < v).
void write_edge_list(std::ostream& out, const Graph& g,
                     std::span<const std::string> labels);

/// One aggregated metric observation of a sweep.
struct MetricRow {
  std::string variant;
  std::string mode;
  double epsilon = 0.0;
  double sigma = 0.0;
  double alpha = 0.0;
  double xi = 0.0;
  int k = 0;
  std::string metric;
  double value = 0.0;
  double stderr_value = 0.0;
  int n_sources = 0;
  std::uint64_t seed = 0;
};

/// CSV with the fixed header
/// variant,mode,epsilon,sigma,alpha,xi,k,metric,value,stderr,n_sources,seed.
void write_metrics_csv(std::ostream& out, std::span<const MetricRow> rows);

/// Label file: `node_label<TAB>label_id` lines, '#' comments; multi-label via
/// repeated node rows. Unknown node labels throw.
LabeledNodes load_labels_tsv(std::istream& in,
                             std::span<const std::string> node_labels);

}  // namespace privppr

#endif  // PRIVPPR_IO_HPP_
