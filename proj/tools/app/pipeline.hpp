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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coselect/community.hpp"
#include "coselect/ensemble.hpp"
#include "coselect/evolution.hpp"
#include "coselect/mining.hpp"
#include "coselect/null_models.hpp"
#include "coselect/stats.hpp"

namespace coselect::app {

/// Which final-stage component is analysed against the null models.
struct ComponentSelection {
  enum class Rule { Largest, LowestMean, HighestMean } rule = Rule::Largest;
  std::string attribute;  // for the mean-based rules

  /// "largest", "lowest:ATTR" or "highest:ATTR". Throws std::invalid_argument.
  static ComponentSelection parse(std::string_view text);
  std::string to_string() const;
};

struct AnalysisOptions {
  MiningThresholds thresholds;
  std::size_t windows = 10;
  std::size_t ensemble = 1000;
  std::vector<NullModelKind> models = {NullModelKind::ErdosRenyi, NullModelKind::DegreeSequence,
                                       NullModelKind::Geometric};
  CorrelationKind corr = CorrelationKind::Spearman;
  std::uint64_t seed = 1;
  double prune_floor = 0.01;
  double swap_multiplier = kDefaultSwapMultiplier;
  ComponentSelection selection;
  bool p_values = true;  // report correlation p-values
  unsigned threads = 0;  // 0 = hardware concurrency; never changes results

  /// Throws std::invalid_argument naming the offending option.
  void validate() const;
};

/// Subjects of the null-model comparison.
inline constexpr const char* kSubjectComponent = "component";
inline constexpr const char* kSubjectCore = "core";

/// A correlation that may be undefined on a given graph.
struct MaybeCorrelation {
  std::optional<CorrelationResult> result;
  std::string reason;
};

struct ComponentInfo {
  std::vector<std::string> items;  // sorted
  std::size_t edges = 0;
  std::map<std::string, double> attribute_means;  // record-weighted
};

struct SubjectStage {
  std::vector<std::string> items;  // sorted
  std::size_t edges = 0;
  MaybeCorrelation degree_vs_betweenness;
  MaybeCorrelation clustering_vs_betweenness;
};

struct StageResult {
  std::size_t campaigns = 0;  // cumulative
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::vector<ComponentInfo> components;
  SubjectStage component;
  SubjectStage core;
  // Girvan-Newman on the stage's share of the selected component.
  std::vector<std::vector<std::string>> communities;
  double modularity = 0.0;
  std::vector<GroupSummary> groups;
};

struct EnsembleCell {
  std::string subject;
  std::size_t stage = 0;
  std::uint64_t seed = 0;  // base seed of the cell's derived stream
  EnsembleSummary summary;
};

struct AnalysisResult {
  TransactionSet transactions;
  StageSeries series;
  std::vector<StageResult> stages;
  std::size_t selected_component = 0;  // index into stages.back().components
  // Final-stage communities of the selected component and the groups kept by pruning.
  std::vector<std::vector<std::string>> communities;
  std::vector<bool> community_kept;
  std::vector<std::string> core_items;
  std::vector<EnsembleCell> cells;  // subject-major, then stage, model, statistic
  NodeAge ages;
};

/// Derived seed for one (subject, stage, model) ensemble cell.
SeededRng cell_rng(std::uint64_t seed, std::string_view subject, std::size_t stage,
                   NullModelKind model);

/// Full pipeline over parsed records: windows, cumulative stages, component selection,
/// communities, pruning, correlations, null-model ensembles and node ages.
AnalysisResult analyze(const std::vector<ProductionRecord>& records, const AnalysisOptions& options);

}  // namespace coselect::app
