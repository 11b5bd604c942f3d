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

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "coselect/graph.hpp"
#include "coselect/ingest.hpp"

namespace coselect {

/// Pairwise association rule {a} <-> {b}; item_a < item_b.
struct RuleStats {
  std::string item_a;
  std::string item_b;
  double support_a = 0.0;
  double support_b = 0.0;
  double support_pair = 0.0;
  double lift = 0.0;
  std::size_t pair_count = 0;  // transactions containing both
};

struct MiningThresholds {
  double min_support = 0.0;
  double min_lift = 1.0;
};

/// Co-selection network. Topology lives in `graph` (nodes sorted by item label);
/// lift is kept per edge but metrics treat the graph as unweighted.
struct CoSelectionGraph {
  Graph graph;
  std::map<Edge, double> edge_lift;
  std::map<std::string, std::map<std::string, double>> node_attributes;
  MiningThresholds thresholds;
};

/// Fraction of transactions containing `item`. Throws std::invalid_argument on an empty set.
double support_single(std::string_view item, const TransactionSet& transactions);

/// Fraction of transactions containing both items. Throws std::invalid_argument when the
/// items are equal or the set is empty.
double support_pair(std::string_view item_a, std::string_view item_b,
                    const TransactionSet& transactions);

/// support_pair / (support_a * support_b). Throws UndefinedLiftError when either item never
/// occurs.
double lift(std::string_view item_a, std::string_view item_b, const TransactionSet& transactions);

/// Every pair that co-occurs at least once, ordered by (item_a, item_b). Lift is evaluated
/// from integer counts as n_ab * N / (n_a * n_b) so exact independence yields exactly 1.
std::vector<RuleStats> mine_pair_rules(const TransactionSet& transactions);

/// Builds the co-selection graph: nodes are items with support >= min_support; an edge joins
/// a co-occurring pair whose pair support >= min_support and lift >= min_lift. Node attributes
/// are per-item means over `records` (records of other items are ignored).
CoSelectionGraph build_graph(const TransactionSet& transactions,
                             const std::vector<ProductionRecord>& records,
                             const MiningThresholds& thresholds);

}  // namespace coselect
