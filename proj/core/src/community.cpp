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

#include "coselect/community.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "brandes.hpp"
#include "coselect/metrics.hpp"

namespace coselect {
namespace {

constexpr double kTieTolerance = 1e-12;

std::uint64_t edge_key(NodeId a, NodeId b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

// Labels of an edge's endpoints in sorted order, for deterministic tie-breaking.
std::pair<const std::string&, const std::string&> label_pair(const Graph& g, const Edge& e) {
  const auto& a = g.label(e.u);
  const auto& b = g.label(e.v);
  if (b < a) return {b, a};
  return {a, b};
}

void remove_neighbor(std::vector<NodeId>& adj, NodeId x) {
  adj.erase(std::find(adj.begin(), adj.end(), x));
}

// Nodes reachable from `start` in the working adjacency.
std::vector<NodeId> reachable(const detail::Adjacency& adj, NodeId start) {
  std::vector<bool> seen(adj.size(), false);
  std::vector<NodeId> out{start};
  seen[start] = true;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (NodeId w : adj[out[i]]) {
      if (!seen[w]) {
        seen[w] = true;
        out.push_back(w);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Partition canonical_partition(const Graph& graph, Partition partition) {
  for (auto& group : partition) std::sort(group.begin(), group.end());
  auto smallest = [&](const std::vector<NodeId>& group) -> const std::string& {
    static const std::string empty;
    if (group.empty()) return empty;
    const std::string* best = &graph.label(group.front());
    for (NodeId v : group) {
      if (graph.label(v) < *best) best = &graph.label(v);
    }
    return *best;
  };
  std::stable_sort(partition.begin(), partition.end(), [&](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return smallest(a) < smallest(b);
  });
  return partition;
}

std::vector<std::size_t> membership(const Graph& graph, const Partition& partition) {
  constexpr auto kUnassigned = static_cast<std::size_t>(-1);
  std::vector<std::size_t> of(graph.node_count(), kUnassigned);
  for (std::size_t c = 0; c < partition.size(); ++c) {
    for (NodeId v : partition[c]) {
      if (v >= graph.node_count()) throw std::invalid_argument("partition names an unknown node");
      if (of[v] != kUnassigned) {
        throw std::invalid_argument("node " + graph.label(v) + " appears in two communities");
      }
      of[v] = c;
    }
  }
  for (NodeId v = 0; v < of.size(); ++v) {
    if (of[v] == kUnassigned) {
      throw std::invalid_argument("partition does not cover node " + graph.label(v));
    }
  }
  return of;
}

double modularity(const Graph& graph, const Partition& partition) {
  const auto of = membership(graph, partition);
  const auto m = graph.edge_count();
  if (m == 0) return 0.0;
  std::vector<double> inside(partition.size(), 0.0);
  std::vector<double> ends(partition.size(), 0.0);
  for (const auto& e : graph.edges()) {
    if (of[e.u] == of[e.v]) inside[of[e.u]] += 1.0;
  }
  for (NodeId v = 0; v < graph.node_count(); ++v) {
    ends[of[v]] += static_cast<double>(graph.degree(v));
  }
  const double md = static_cast<double>(m);
  double q = 0.0;
  for (std::size_t c = 0; c < partition.size(); ++c) {
    const double a = ends[c] / (2.0 * md);
    q += inside[c] / md - a * a;
  }
  return q;
}

CommunityPartition girvan_newman(const Graph& graph) {
  const auto n = graph.node_count();
  CommunityPartition result;

  Partition current = connected_components(graph);
  result.dendrogram.push_back({{}, current, modularity(graph, current)});

  detail::Adjacency adj(n);
  for (NodeId v = 0; v < n; ++v) {
    auto nb = graph.neighbors(v);
    adj[v].assign(nb.begin(), nb.end());
  }
  std::vector<Edge> live = graph.edges();
  std::vector<Edge> pending;
  detail::BrandesWorkspace ws(n);

  while (!live.empty()) {
    std::unordered_map<std::uint64_t, std::size_t> index;
    index.reserve(live.size() * 2);
    for (std::size_t i = 0; i < live.size(); ++i) index.emplace(edge_key(live[i].u, live[i].v), i);
    std::vector<double> score(live.size(), 0.0);
    for (NodeId s = 0; s < n; ++s) {
      if (adj[s].empty()) continue;
      ws.run(adj, s, nullptr,
             [&](NodeId v, NodeId w, double c) { score[index.at(edge_key(v, w))] += c; });
    }

    // Scores count ordered pairs (twice the unordered value), hence the doubled tolerance.
    std::size_t best = 0;
    for (std::size_t i = 1; i < live.size(); ++i) {
      if (score[i] > score[best] + kTieTolerance * 2.0) {
        best = i;
      } else if (score[i] >= score[best] - kTieTolerance * 2.0 &&
                 label_pair(graph, live[i]) < label_pair(graph, live[best])) {
        best = i;
      }
    }

    const Edge removed = live[best];
    live.erase(live.begin() + static_cast<std::ptrdiff_t>(best));
    remove_neighbor(adj[removed.u], removed.v);
    remove_neighbor(adj[removed.v], removed.u);
    pending.push_back(removed);

    auto side = reachable(adj, removed.u);
    if (std::binary_search(side.begin(), side.end(), removed.v)) continue;

    Partition next;
    next.reserve(current.size() + 1);
    for (auto& group : current) {
      if (!std::binary_search(group.begin(), group.end(), removed.u)) {
        next.push_back(group);
        continue;
      }
      std::vector<NodeId> rest;
      std::set_difference(group.begin(), group.end(), side.begin(), side.end(),
                          std::back_inserter(rest));
      next.push_back(side);
      next.push_back(std::move(rest));
    }
    current = canonical_partition(graph, std::move(next));
    result.dendrogram.push_back({std::move(pending), current, modularity(graph, current)});
    pending.clear();
  }

  std::size_t best_level = 0;
  for (std::size_t l = 1; l < result.dendrogram.size(); ++l) {
    if (result.dendrogram[l].modularity > result.dendrogram[best_level].modularity + kTieTolerance) {
      best_level = l;
    }
  }
  result.best_level = best_level;
  result.communities = result.dendrogram[best_level].partition;
  result.modularity_q = result.dendrogram[best_level].modularity;
  return result;
}

}  // namespace coselect
