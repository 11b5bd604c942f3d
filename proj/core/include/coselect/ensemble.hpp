// Copyright 2026 The coselect Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "coselect/graph.hpp"
#include "coselect/null_models.hpp"
#include "coselect/random.hpp"
#include "coselect/stats.hpp"

namespace coselect {

enum class NodeStatistic {
  DegreeVsBetweenness,     // COR_D_BC
  ClusteringVsBetweenness  // COR_CC_BC
};

std::string_view to_string(NodeStatistic stat);
inline constexpr NodeStatistic kNodeStatistics[] = {NodeStatistic::DegreeVsBetweenness,
                                                    NodeStatistic::ClusteringVsBetweenness};

/// Degree, clustering and betweenness over the non-isolated nodes, aligned by position.
struct NodeMetricVectors {
  std::vector<NodeId> nodes;
  std::vector<double> degree;
  std::vector<double> clustering;
  std::vector<double> betweenness;
};

NodeMetricVectors non_isolated_metrics(const Graph& graph);

/// Throws InsufficientDataError with fewer than 3 non-isolated nodes and
/// UndefinedCorrelationError when a metric vector is constant.
CorrelationResult node_metric_correlation(const Graph& graph, NodeStatistic stat,
                                          CorrelationKind kind);
CorrelationResult node_metric_correlation(const NodeMetricVectors& metrics, NodeStatistic stat,
                                          CorrelationKind kind);

/// (COR_D_BC, COR_CC_BC).
std::pair<CorrelationResult, CorrelationResult> node_metric_correlations(const Graph& graph,
                                                                         CorrelationKind kind);

enum class CellStatus {
  Ok,
  EmpiricalUndefined,  // the statistic has no value on the empirical graph
  Degenerate,          // more than half of the replicates were undefined
  ZUndefined,          // replicate spread is zero
};

std::string_view to_string(CellStatus status);

struct EnsembleSummary {
  std::string statistic;
  std::string model;
  CorrelationKind kind = CorrelationKind::Spearman;
  std::optional<double> empirical;
  std::vector<double> replicate_values;  // defined replicates, in replicate order
  std::size_t replicates = 0;
  std::size_t dropped = 0;
  double mean = 0.0;
  double stddev = 0.0;  // population
  std::optional<double> z;
  CellStatus status = CellStatus::Ok;
  std::string reason;
};

struct EnsembleOptions {
  std::size_t replicates = 1000;
  CorrelationKind kind = CorrelationKind::Spearman;
  unsigned threads = 0;  // 0 = hardware concurrency
};

/// One summary per NodeStatistic. Replicate i is drawn from rng.stream(i), and aggregation
/// runs in replicate order, so the result does not depend on the thread count. Undefined
/// cells are reported through `status`/`reason`, never thrown.
std::vector<EnsembleSummary> ensemble_summaries(const Graph& empirical, const NullModelSpec& spec,
                                                const EnsembleOptions& options,
                                                const SeededRng& rng);

/// As ensemble_summaries, but throws EnsembleDegenerateError (naming the statistic) when more
/// than half of a statistic's replicates are undefined. Requires at least 2 replicates.
std::vector<EnsembleSummary> ensemble_zscores(const Graph& empirical, const NullModelSpec& spec,
                                              const EnsembleOptions& options, const SeededRng& rng);

}  // namespace coselect
