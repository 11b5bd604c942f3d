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
#include <string_view>
#include <vector>

#include "coselect/graph.hpp"

namespace coselect {

struct NodeMetrics {
  std::size_t degree = 0;
  double clustering = 0.0;
  double betweenness = 0.0;
  std::size_t neighbor_edge_count = 0;  // edges among the node's neighbours
};

/// Throws LookupError for an unknown label.
std::size_t degree(const Graph& graph, std::string_view node);

/// Number of edges whose endpoints are both neighbours of `node`.
std::size_t neighbor_edge_count(const Graph& graph, NodeId node);

/// 2 n_i / (k_i (k_i - 1)) where n_i counts edges among the neighbours; 0 when k_i < 2.
double clustering_coefficient(const Graph& graph, NodeId node);
double clustering_coefficient(const Graph& graph, std::string_view node);

/// Freeman betweenness over unordered pairs {j, l}, endpoints excluded, no normalisation.
/// Indexed by NodeId.
std::vector<double> betweenness_all(const Graph& graph);

/// Edge betweenness over unordered pairs, keyed by edge.
std::map<Edge, double> edge_betweenness(const Graph& graph);

/// Degree, clustering and betweenness for every node, indexed by NodeId.
std::vector<NodeMetrics> node_metrics(const Graph& graph);

/// Maximal connected node sets; each set sorted by id, sets ordered by descending size and
/// then by their lexicographically smallest label.
std::vector<std::vector<NodeId>> connected_components(const Graph& graph);

}  // namespace coselect
