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
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace coselect {

using NodeId = std::uint32_t;

/// Undirected edge stored with u < v.
struct Edge {
  NodeId u = 0;
  NodeId v = 0;

  Edge() = default;
  Edge(NodeId a, NodeId b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph with labelled nodes. Adjacency lists are sorted and
/// symmetric; self-loops and parallel edges are rejected at construction.
/// Immutable once built.
class Graph {
 public:
  Graph() = default;

  /// Edgeless graph over `labels`. Labels must be unique.
  explicit Graph(std::vector<std::string> labels);

  /// Graph over `labels` with the given edges. Duplicate edges are merged; self-loops throw.
  Graph(std::vector<std::string> labels, std::span<const Edge> edges);

  /// Nodes labelled "0".."n-1".
  static Graph with_numbered_nodes(std::size_t n, std::span<const Edge> edges = {});

  std::size_t node_count() const noexcept { return labels_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  std::span<const NodeId> neighbors(NodeId node) const { return adjacency_.at(node); }
  std::size_t degree(NodeId node) const { return adjacency_.at(node).size(); }
  bool has_edge(NodeId a, NodeId b) const;

  const std::string& label(NodeId node) const { return labels_.at(node); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<NodeId> find(std::string_view label) const;
  /// Throws LookupError for an unknown label.
  NodeId index_of(std::string_view label) const;

  /// All edges in (u, v) lexicographic order.
  std::vector<Edge> edges() const;

  /// Subgraph induced by `nodes` (duplicates ignored); node order follows `nodes`' sorted ids.
  Graph induced_subgraph(std::span<const NodeId> nodes) const;
  Graph induced_subgraph_by_label(std::span<const std::string> labels) const;

  std::vector<std::size_t> degree_sequence() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void index_labels();

  std::vector<std::string> labels_;
  std::vector<std::vector<NodeId>> adjacency_;
  std::vector<std::pair<std::string, NodeId>> label_index_;  // sorted by label
  std::size_t edge_count_ = 0;
};

}  // namespace coselect
