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
#include <map>
#include <string>
#include <vector>

#include "coselect/community.hpp"
#include "coselect/ingest.hpp"
#include "coselect/mining.hpp"

namespace coselect {

/// Cumulative networks: stage s is mined from windows 0..s.
struct StageSeries {
  std::vector<CoSelectionGraph> stages;
  WindowAssignment windows;
};

/// Builds one network per window over the cumulative prefix of transactions (and the records
/// of those campaigns). Stages are independent and built concurrently.
StageSeries stage_networks(const std::vector<ProductionRecord>& records,
                           const TransactionSet& transactions, const WindowAssignment& windows,
                           const MiningThresholds& thresholds, unsigned threads = 0);

/// item -> first stage containing it, for every node of the final stage.
using NodeAge = std::map<std::string, std::size_t>;

/// Throws std::invalid_argument for an empty series.
NodeAge node_age(const StageSeries& series);

struct GroupSummary {
  std::vector<std::string> items;
  std::size_t item_count = 0;
  std::size_t slab_count = 0;
  std::size_t campaign_count = 0;
  double slab_frequency = 0.0;      // share of all records
  double campaign_frequency = 0.0;  // share of campaigns containing any group item
  std::map<std::string, double> attribute_means;  // per-record weighting
};

/// Production contribution per group. Throws std::invalid_argument when groups overlap or
/// name an item that never occurs in `records`.
std::vector<GroupSummary> group_summary(const std::vector<std::vector<std::string>>& groups,
                                        const std::vector<ProductionRecord>& records,
                                        const TransactionSet& transactions);

/// Labels of each group in `partition`.
std::vector<std::vector<std::string>> partition_labels(const Graph& graph,
                                                       const Partition& partition);

/// Subgraph induced by the groups whose slab frequency is at least `slab_frequency_floor`.
/// Throws std::invalid_argument for a floor outside [0, 1] or a partition that does not cover
/// the graph.
Graph prune_minor_groups(const Graph& graph, const Partition& partition,
                         const std::vector<ProductionRecord>& records,
                         double slab_frequency_floor);

}  // namespace coselect
