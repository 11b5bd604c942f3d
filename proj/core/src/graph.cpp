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

#include "coselect/graph.hpp"

#include <algorithm>
#include <stdexcept>

#include "coselect/errors.hpp"

namespace coselect {

Graph::Graph(std::vector<std::string> labels)
    : labels_(std::move(labels)), adjacency_(labels_.size()) {
  index_labels();
}

Graph::Graph(std::vector<std::string> labels, std::span<const Edge> edges)
    : Graph(std::move(labels)) {
  const auto n = labels_.size();
  for (const auto& e : edges) {
    if (e.u >= n || e.v >= n) throw std::invalid_argument("edge endpoint out of range");
    if (e.u == e.v) throw std::invalid_argument("self-loop on node " + labels_[e.u]);
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  std::size_t twice = 0;
  for (auto& adj : adjacency_) {
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    twice += adj.size();
  }
  edge_count_ = twice / 2;
}

Graph Graph::with_numbered_nodes(std::size_t n, std::span<const Edge> edges) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return Graph(std::move(labels), edges);
}

void Graph::index_labels() {
  label_index_.clear();
  label_index_.reserve(labels_.size());
  for (NodeId i = 0; i < labels_.size(); ++i) label_index_.emplace_back(labels_[i], i);
  std::sort(label_index_.begin(), label_index_.end());
  for (std::size_t i = 1; i < label_index_.size(); ++i) {
    if (label_index_[i].first == label_index_[i - 1].first) {
      throw std::invalid_argument("duplicate node label " + label_index_[i].first);
    }
  }
}

bool Graph::has_edge(NodeId a, NodeId b) const {
  const auto& adj = adjacency_.at(a);
  return std::binary_search(adj.begin(), adj.end(), b);
}

std::optional<NodeId> Graph::find(std::string_view label) const {
  auto it = std::lower_bound(label_index_.begin(), label_index_.end(), label,
                             [](const auto& entry, std::string_view l) { return entry.first < l; });
  if (it == label_index_.end() || it->first != label) return std::nullopt;
  return it->second;
}

NodeId Graph::index_of(std::string_view label) const {
  if (auto id = find(label)) return *id;
  throw LookupError("unknown node '" + std::string(label) + "'");
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (NodeId u = 0; u < adjacency_.size(); ++u) {
    for (NodeId v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::induced_subgraph(std::span<const NodeId> nodes) const {
  std::vector<NodeId> keep(nodes.begin(), nodes.end());
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  std::vector<std::int64_t> remap(labels_.size(), -1);
  std::vector<std::string> labels;
  labels.reserve(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] >= labels_.size()) throw LookupError("node id out of range");
    remap[keep[i]] = static_cast<std::int64_t>(i);
    labels.push_back(labels_[keep[i]]);
  }
  std::vector<Edge> sub;
  for (NodeId u : keep) {
    for (NodeId v : adjacency_[u]) {
      if (u < v && remap[v] >= 0) {
        sub.emplace_back(static_cast<NodeId>(remap[u]), static_cast<NodeId>(remap[v]));
      }
    }
  }
  return Graph(std::move(labels), sub);
}

Graph Graph::induced_subgraph_by_label(std::span<const std::string> labels) const {
  std::vector<NodeId> ids;
  ids.reserve(labels.size());
  for (const auto& l : labels) ids.push_back(index_of(l));
  return induced_subgraph(ids);
}

std::vector<std::size_t> Graph::degree_sequence() const {
  std::vector<std::size_t> seq;
  seq.reserve(adjacency_.size());
  for (const auto& adj : adjacency_) seq.push_back(adj.size());
  return seq;
}

}  // namespace coselect
