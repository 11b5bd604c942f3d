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

#include "coselect/metrics.hpp"

#include <algorithm>
#include <string>

#include "brandes.hpp"

namespace coselect {
namespace {

detail::Adjacency adjacency_of(const Graph& graph) {
  detail::Adjacency adj(graph.node_count());
  for (NodeId v = 0; v < graph.node_count(); ++v) {
    auto nb = graph.neighbors(v);
    adj[v].assign(nb.begin(), nb.end());
  }
  return adj;
}

const std::string& smallest_label(const Graph& graph, const std::vector<NodeId>& nodes) {
  const std::string* best = &graph.label(nodes.front());
  for (NodeId v : nodes) {
    if (graph.label(v) < *best) best = &graph.label(v);
  }
  return *best;
}

}  // namespace

std::size_t degree(const Graph& graph, std::string_view node) {
  return graph.degree(graph.index_of(node));
}

std::size_t neighbor_edge_count(const Graph& graph, NodeId node) {
  auto nb = graph.neighbors(node);
  std::size_t count = 0;
  for (std::size_t i = 0; i < nb.size(); ++i) {
    // Sorted-list intersection of nb[i]'s neighbours with nb[i+1..].
    auto other = graph.neighbors(nb[i]);
    auto a = nb.begin() + static_cast<std::ptrdiff_t>(i) + 1;
    auto b = std::lower_bound(other.begin(), other.end(), nb[i]);
    while (a != nb.end() && b != other.end()) {
      if (*a < *b) {
        ++a;
      } else if (*b < *a) {
        ++b;
      } else {
        ++count;
        ++a;
        ++b;
      }
    }
  }
  return count;
}

double clustering_coefficient(const Graph& graph, NodeId node) {
  const auto k = graph.degree(node);
  if (k < 2) return 0.0;
  const auto links = neighbor_edge_count(graph, node);
  return 2.0 * static_cast<double>(links) / (static_cast<double>(k) * static_cast<double>(k - 1));
}

double clustering_coefficient(const Graph& graph, std::string_view node) {
  return clustering_coefficient(graph, graph.index_of(node));
}

std::vector<double> betweenness_all(const Graph& graph) {
  const auto n = graph.node_count();
  std::vector<double> out(n, 0.0);
  if (n < 3) return out;
  const auto adj = adjacency_of(graph);
  detail::BrandesWorkspace ws(n);
  for (NodeId s = 0; s < n; ++s) ws.run(adj, s, &out, [](NodeId, NodeId, double) {});
  // Each unordered pair was visited from both ends.
  for (auto& b : out) b /= 2.0;
  return out;
}

std::map<Edge, double> edge_betweenness(const Graph& graph) {
  const auto n = graph.node_count();
  std::map<Edge, double> out;
  for (const auto& e : graph.edges()) out.emplace(e, 0.0);
  if (out.empty()) return out;
  const auto adj = adjacency_of(graph);
  detail::BrandesWorkspace ws(n);
  for (NodeId s = 0; s < n; ++s) {
    ws.run(adj, s, nullptr, [&](NodeId v, NodeId w, double c) { out[Edge(v, w)] += c; });
  }
  for (auto& [e, b] : out) b /= 2.0;
  return out;
}

std::vector<NodeMetrics> node_metrics(const Graph& graph) {
  const auto bc = betweenness_all(graph);
  std::vector<NodeMetrics> out(graph.node_count());
  for (NodeId v = 0; v < graph.node_count(); ++v) {
    out[v].degree = graph.degree(v);
    out[v].neighbor_edge_count = neighbor_edge_count(graph, v);
    out[v].clustering = clustering_coefficient(graph, v);
    out[v].betweenness = bc[v];
  }
  return out;
}

std::vector<std::vector<NodeId>> connected_components(const Graph& graph) {
  const auto n = graph.node_count();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<NodeId>> comps;
  std::vector<NodeId> stack;
  for (NodeId start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<NodeId> comp;
    stack.push_back(start);
    seen[start] = true;
    while (!stack.empty()) {
      NodeId v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (NodeId w : graph.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  std::stable_sort(comps.begin(), comps.end(), [&](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return smallest_label(graph, a) < smallest_label(graph, b);
  });
  return comps;
}

}  // namespace coselect
