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

#include "app/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "coselect/errors.hpp"
#include "coselect/metrics.hpp"

namespace coselect::app {
namespace {

MaybeCorrelation try_correlation(const NodeMetricVectors& metrics, NodeStatistic stat,
                                 CorrelationKind kind) {
  MaybeCorrelation out;
  try {
    out.result = node_metric_correlation(metrics, stat, kind);
  } catch (const InsufficientDataError& e) {
    out.reason = e.what();
  } catch (const UndefinedCorrelationError& e) {
    out.reason = e.what();
  }
  return out;
}

std::vector<std::string> sorted_labels(const Graph& g) {
  auto labels = g.labels();
  std::sort(labels.begin(), labels.end());
  return labels;
}

// Labels of `subset` that are nodes of `g`, inducing the corresponding subgraph.
Graph restrict_to(const Graph& g, const std::vector<std::string>& subset) {
  std::vector<std::string> present;
  for (const auto& label : subset) {
    if (g.find(label)) present.push_back(label);
  }
  return g.induced_subgraph_by_label(present);
}

SubjectStage describe_subject(const Graph& g, CorrelationKind kind) {
  SubjectStage s;
  s.items = sorted_labels(g);
  s.edges = g.edge_count();
  const auto metrics = non_isolated_metrics(g);
  s.degree_vs_betweenness = try_correlation(metrics, NodeStatistic::DegreeVsBetweenness, kind);
  s.clustering_vs_betweenness = try_correlation(metrics, NodeStatistic::ClusteringVsBetweenness, kind);
  return s;
}

std::size_t select_component(const std::vector<ComponentInfo>& components,
                             const ComponentSelection& selection) {
  if (components.empty() || selection.rule == ComponentSelection::Rule::Largest) return 0;
  std::size_t best = 0;
  for (std::size_t c = 0; c < components.size(); ++c) {
    auto it = components[c].attribute_means.find(selection.attribute);
    if (it == components[c].attribute_means.end()) {
      throw std::invalid_argument("component selection attribute '" + selection.attribute +
                                  "' is not a record attribute");
    }
    const double best_value = components[best].attribute_means.at(selection.attribute);
    const bool better = selection.rule == ComponentSelection::Rule::LowestMean
                            ? it->second < best_value
                            : it->second > best_value;
    if (better) best = c;  // strict: ties keep the earlier (larger) component
  }
  return best;
}

}  // namespace

ComponentSelection ComponentSelection::parse(std::string_view text) {
  ComponentSelection s;
  if (text == "largest") return s;
  const auto colon = text.find(':');
  if (colon != std::string_view::npos && colon + 1 < text.size()) {
    const auto rule = text.substr(0, colon);
    s.attribute = std::string(text.substr(colon + 1));
    if (rule == "lowest") {
      s.rule = Rule::LowestMean;
      return s;
    }
    if (rule == "highest") {
      s.rule = Rule::HighestMean;
      return s;
    }
  }
  throw std::invalid_argument("component selection must be 'largest', 'lowest:ATTR' or "
                              "'highest:ATTR', got '" + std::string(text) + "'");
}

std::string ComponentSelection::to_string() const {
  switch (rule) {
    case Rule::Largest: return "largest";
    case Rule::LowestMean: return "lowest:" + attribute;
    case Rule::HighestMean: return "highest:" + attribute;
  }
  return "largest";
}

void AnalysisOptions::validate() const {
  if (windows < 1) throw std::invalid_argument("--windows must be at least 1");
  if (ensemble < 2) throw std::invalid_argument("--ensemble must be at least 2");
  if (models.empty()) throw std::invalid_argument("--models must name at least one null model");
  std::set<NullModelKind> unique(models.begin(), models.end());
  if (unique.size() != models.size()) throw std::invalid_argument("--models lists a model twice");
  if (!(prune_floor >= 0.0 && prune_floor <= 1.0)) {
    throw std::invalid_argument("--prune-floor must lie in [0, 1]");
  }
  if (!(thresholds.min_support >= 0.0 && thresholds.min_support <= 1.0)) {
    throw std::invalid_argument("--min-support must lie in [0, 1]");
  }
  if (!(thresholds.min_lift >= 0.0) || !std::isfinite(thresholds.min_lift)) {
    throw std::invalid_argument("--min-lift must be a finite non-negative number");
  }
  if (!(swap_multiplier > 0.0) || !std::isfinite(swap_multiplier)) {
    throw std::invalid_argument("swap multiplier must be positive");
  }
}

SeededRng cell_rng(std::uint64_t seed, std::string_view subject, std::size_t stage,
                   NullModelKind model) {
  return SeededRng(seed).derive({tag_of(std::string(subject).c_str()), stage,
                                 tag_of(std::string(to_string(model)).c_str())});
}

AnalysisResult analyze(const std::vector<ProductionRecord>& records, const AnalysisOptions& options) {
  options.validate();
  AnalysisResult out;
  out.transactions = group_campaigns(records);
  if (out.transactions.empty()) throw InsufficientDataError("input contains no campaigns");
  const auto windows = assign_windows(out.transactions, options.windows);
  out.series = stage_networks(records, out.transactions, windows, options.thresholds, options.threads);
  const std::size_t stage_count = windows.window_count;

  // Stage-local record and transaction prefixes.
  std::vector<std::vector<ProductionRecord>> stage_records(stage_count);
  std::vector<TransactionSet> stage_tx(stage_count);
  for (std::size_t s = 0; s < stage_count; ++s) {
    for (const auto& r : records) {
      if (windows.window_of.at(r.campaign_id) <= s) stage_records[s].push_back(r);
    }
    for (std::size_t t = 0; t < out.transactions.size(); ++t) {
      if (windows.transaction_window[t] <= s) {
        stage_tx[s].transactions.push_back(out.transactions.transactions[t]);
      }
    }
  }

  out.stages.resize(stage_count);
  for (std::size_t s = 0; s < stage_count; ++s) {
    const auto& g = out.series.stages[s].graph;
    auto& st = out.stages[s];
    st.campaigns = stage_tx[s].size();
    st.nodes = g.node_count();
    st.edges = g.edge_count();
    const auto comps = connected_components(g);
    const auto comp_labels = partition_labels(g, comps);
    const auto summaries = group_summary(comp_labels, stage_records[s], stage_tx[s]);
    for (std::size_t c = 0; c < comps.size(); ++c) {
      ComponentInfo info;
      info.items = summaries[c].items;
      info.edges = g.induced_subgraph(comps[c]).edge_count();
      info.attribute_means = summaries[c].attribute_means;
      st.components.push_back(std::move(info));
    }
  }

  // Subject selection, communities and pruning on the final stage.
  const auto& final_graph = out.series.stages.back().graph;
  out.selected_component = select_component(out.stages.back().components, options.selection);
  std::vector<std::string> subject_items;
  if (!out.stages.back().components.empty()) {
    subject_items = out.stages.back().components[out.selected_component].items;
  }
  const auto subject_graph = final_graph.induced_subgraph_by_label(subject_items);
  const auto gn = girvan_newman(subject_graph);
  out.communities = partition_labels(subject_graph, gn.communities);
  const auto core_graph = prune_minor_groups(subject_graph, gn.communities, records, options.prune_floor);
  out.core_items = sorted_labels(core_graph);
  for (const auto& group : out.communities) {
    out.community_kept.push_back(!group.empty() && core_graph.find(group.front()).has_value());
  }

  // Per-stage view of the two subjects.
  std::vector<Graph> component_at(stage_count), core_at(stage_count);
  for (std::size_t s = 0; s < stage_count; ++s) {
    const auto& g = out.series.stages[s].graph;
    auto& st = out.stages[s];
    component_at[s] = restrict_to(g, subject_items);
    core_at[s] = restrict_to(g, out.core_items);
    st.component = describe_subject(component_at[s], options.corr);
    st.core = describe_subject(core_at[s], options.corr);
    const auto stage_gn = s + 1 == stage_count ? gn : girvan_newman(component_at[s]);
    st.communities = partition_labels(component_at[s], stage_gn.communities);
    st.modularity = stage_gn.modularity_q;
    st.groups = group_summary(st.communities, stage_records[s], stage_tx[s]);
  }

  const EnsembleOptions ensemble{options.ensemble, options.corr, options.threads};
  for (const char* subject : {kSubjectComponent, kSubjectCore}) {
    const auto& graphs = std::string_view(subject) == kSubjectComponent ? component_at : core_at;
    for (std::size_t s = 0; s < stage_count; ++s) {
      for (const auto model : options.models) {
        const auto rng = cell_rng(options.seed, subject, s, model);
        auto model_engine = rng.derive(tag_of("model")).engine();
        const auto spec = matching_null_model(model, graphs[s], model_engine, options.swap_multiplier);
        const auto replicate_rng = rng.derive(tag_of("replicates"));
        for (auto& summary : ensemble_summaries(graphs[s], spec, ensemble, replicate_rng)) {
          out.cells.push_back({subject, s, rng.base_seed(), std::move(summary)});
        }
      }
    }
  }

  out.ages = node_age(out.series);
  return out;
}

}  // namespace coselect::app
