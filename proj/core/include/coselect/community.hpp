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
#include <vector>

#include "coselect/graph.hpp"

namespace coselect {

/// Disjoint node groups. Canonical form: each group sorted by id; groups ordered by
/// descending size, then by smallest label.
using Partition = std::vector<std::vector<NodeId>>;

struct DendrogramLevel {
  std::vector<Edge> removed;  // removals since the previous level, in order
  Partition partition;
  double modularity = 0.0;
};

struct CommunityPartition {
  Partition communities;
  double modularity_q = 0.0;
  std::size_t best_level = 0;
  /// Level 0 is the component partition of the input; each later level is produced by the
  /// edge removal that split one community.
  std::vector<DendrogramLevel> dendrogram;
};

/// Q = sum_c (e_cc - a_c^2). Defined as 0 for an edgeless graph. Throws std::invalid_argument
/// unless `partition` covers every node exactly once.
double modularity(const Graph& graph, const Partition& partition);

/// Puts a partition into canonical order.
Partition canonical_partition(const Graph& graph, Partition partition);

/// Community id per node (index into `partition`).
std::vector<std::size_t> membership(const Graph& graph, const Partition& partition);

/// Girvan-Newman divisive clustering. Repeatedly removes the edge of maximal betweenness
/// (recomputed after each removal; ties within 1e-12 go to the lexicographically smallest
/// label pair) and returns the dendrogram level of maximal modularity, preferring fewer
/// communities on ties.
CommunityPartition girvan_newman(const Graph& graph);

}  // namespace coselect
