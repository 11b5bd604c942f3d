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

#include "coselect/ensemble.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "coselect/errors.hpp"
#include "coselect/metrics.hpp"
#include "parallel.hpp"

namespace coselect {
namespace {

constexpr double kUndefined = std::numeric_limits<double>::quiet_NaN();

std::optional<double> try_correlation(const NodeMetricVectors& metrics, NodeStatistic stat,
                                      CorrelationKind kind, std::string* reason = nullptr) {
  try {
    return node_metric_correlation(metrics, stat, kind).value;
  } catch (const InsufficientDataError& e) {
    if (reason) *reason = e.what();
  } catch (const UndefinedCorrelationError& e) {
    if (reason) *reason = e.what();
  }
  return std::nullopt;
}

}  // namespace

std::string_view to_string(NodeStatistic stat) {
  switch (stat) {
    case NodeStatistic::DegreeVsBetweenness: return "COR_D_BC";
    case NodeStatistic::ClusteringVsBetweenness: return "COR_CC_BC";
  }
  return "?";
}

std::string_view to_string(CellStatus status) {
  switch (status) {
    case CellStatus::Ok: return "ok";
    case CellStatus::EmpiricalUndefined: return "empirical_undefined";
    case CellStatus::Degenerate: return "degenerate";
    case CellStatus::ZUndefined: return "z_undefined";
  }
  return "?";
}

NodeMetricVectors non_isolated_metrics(const Graph& graph) {
  const auto bc = betweenness_all(graph);
  NodeMetricVectors out;
  for (NodeId v = 0; v < graph.node_count(); ++v) {
    if (graph.degree(v) == 0) continue;
    out.nodes.push_back(v);
    out.degree.push_back(static_cast<double>(graph.degree(v)));
    out.clustering.push_back(clustering_coefficient(graph, v));
    out.betweenness.push_back(bc[v]);
  }
  return out;
}

CorrelationResult node_metric_correlation(const NodeMetricVectors& metrics, NodeStatistic stat,
                                          CorrelationKind kind) {
  if (metrics.nodes.size() < 3) {
    throw InsufficientDataError("node metric correlation needs at least 3 non-isolated nodes, got " +
                                std::to_string(metrics.nodes.size()));
  }
  const auto& x = stat == NodeStatistic::DegreeVsBetweenness ? metrics.degree : metrics.clustering;
  try {
    return correlate(kind, x, metrics.betweenness);
  } catch (const UndefinedCorrelationError&) {
    throw UndefinedCorrelationError(std::string(to_string(stat)) +
                                    " undefined: constant metric vector");
  }
}

CorrelationResult node_metric_correlation(const Graph& graph, NodeStatistic stat,
                                          CorrelationKind kind) {
  return node_metric_correlation(non_isolated_metrics(graph), stat, kind);
}

std::pair<CorrelationResult, CorrelationResult> node_metric_correlations(const Graph& graph,
                                                                         CorrelationKind kind) {
  const auto metrics = non_isolated_metrics(graph);
  return {node_metric_correlation(metrics, NodeStatistic::DegreeVsBetweenness, kind),
          node_metric_correlation(metrics, NodeStatistic::ClusteringVsBetweenness, kind)};
}

std::vector<EnsembleSummary> ensemble_summaries(const Graph& empirical, const NullModelSpec& spec,
                                                const EnsembleOptions& options,
                                                const SeededRng& rng) {
  if (options.replicates < 2) throw std::invalid_argument("an ensemble needs at least 2 replicates");
  spec.validate();

  constexpr std::size_t kStats = std::size(kNodeStatistics);
  // values[s * replicates + i]
  std::vector<double> values(kStats * options.replicates, kUndefined);
  detail::parallel_for(options.replicates, options.threads, [&](std::size_t i) {
    auto engine = rng.stream(i);
    const auto metrics = non_isolated_metrics(sample(spec, engine));
    for (std::size_t s = 0; s < kStats; ++s) {
      if (auto v = try_correlation(metrics, kNodeStatistics[s], options.kind)) {
        values[s * options.replicates + i] = *v;
      }
    }
  });

  const auto empirical_metrics = non_isolated_metrics(empirical);
  std::vector<EnsembleSummary> out;
  for (std::size_t s = 0; s < kStats; ++s) {
    EnsembleSummary summary;
    summary.statistic = std::string(to_string(kNodeStatistics[s]));
    summary.model = std::string(to_string(spec.kind()));
    summary.kind = options.kind;
    summary.replicates = options.replicates;
    for (std::size_t i = 0; i < options.replicates; ++i) {
      const double v = values[s * options.replicates + i];
      if (std::isfinite(v)) {
        summary.replicate_values.push_back(v);
      } else {
        ++summary.dropped;
      }
    }
    const auto ms = mean_and_population_std(summary.replicate_values);
    summary.mean = ms.mean;
    summary.stddev = ms.stddev;

    std::string reason;
    summary.empirical = try_correlation(empirical_metrics, kNodeStatistics[s], options.kind, &reason);
    if (2 * summary.dropped > summary.replicates) {
      summary.status = CellStatus::Degenerate;
      summary.reason = std::to_string(summary.dropped) + " of " +
                       std::to_string(summary.replicates) + " replicates undefined";
    } else if (!summary.empirical) {
      summary.status = CellStatus::EmpiricalUndefined;
      summary.reason = reason;
    } else {
      try {
        summary.z = zscore(*summary.empirical, summary.replicate_values);
      } catch (const UndefinedZScoreError& e) {
        summary.status = CellStatus::ZUndefined;
        summary.reason = e.what();
      } catch (const InsufficientDataError& e) {
        summary.status = CellStatus::Degenerate;
        summary.reason = e.what();
      }
    }
    out.push_back(std::move(summary));
  }
  return out;
}

std::vector<EnsembleSummary> ensemble_zscores(const Graph& empirical, const NullModelSpec& spec,
                                              const EnsembleOptions& options,
                                              const SeededRng& rng) {
  auto out = ensemble_summaries(empirical, spec, options, rng);
  for (const auto& s : out) {
    if (s.status == CellStatus::Degenerate) {
      throw EnsembleDegenerateError(s.statistic, s.dropped, s.replicates);
    }
  }
  return out;
}

}  // namespace coselect
