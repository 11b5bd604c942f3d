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

// Shortest-path accumulation shared by node and edge betweenness.

#include <cstddef>
#include <vector>

#include "coselect/graph.hpp"

namespace coselect::detail {

using Adjacency = std::vector<std::vector<NodeId>>;

/// Per-source state reused across sources to avoid reallocations.
class BrandesWorkspace {
 public:
  explicit BrandesWorkspace(std::size_t n)
      : sigma_(n), dist_(n), delta_(n), preds_(n), order_() { order_.reserve(n); queue_.reserve(n); }

  /// Single-source pass from `source`. For every node w != source reached, calls
  /// `on_dependency(v, w, c)` for each predecessor v of w with c = sigma_v/sigma_w * (1 + delta_w),
  /// and accumulates node dependencies into `node_out` (ordered-pair convention).
  template <typename EdgeSink>
  void run(const Adjacency& adj, NodeId source, std::vector<double>* node_out, EdgeSink&& on_dependency) {
    const std::size_t n = adj.size();
    for (std::size_t i = 0; i < n; ++i) {
      sigma_[i] = 0.0;
      dist_[i] = -1;
      delta_[i] = 0.0;
      preds_[i].clear();
    }
    order_.clear();
    queue_.clear();
    sigma_[source] = 1.0;
    dist_[source] = 0;
    queue_.push_back(source);
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      const NodeId v = queue_[head];
      order_.push_back(v);
      for (NodeId w : adj[v]) {
        if (dist_[w] < 0) {
          dist_[w] = dist_[v] + 1;
          queue_.push_back(w);
        }
        if (dist_[w] == dist_[v] + 1) {
          sigma_[w] += sigma_[v];
          preds_[w].push_back(v);
        }
      }
    }
    for (auto it = order_.rbegin(); it != order_.rend(); ++it) {
      const NodeId w = *it;
      for (NodeId v : preds_[w]) {
        const double c = sigma_[v] / sigma_[w] * (1.0 + delta_[w]);
        on_dependency(v, w, c);
        delta_[v] += c;
      }
      if (w != source && node_out != nullptr) (*node_out)[w] += delta_[w];
    }
  }

 private:
  std::vector<double> sigma_;
  std::vector<long> dist_;
  std::vector<double> delta_;
  std::vector<std::vector<NodeId>> preds_;
  std::vector<NodeId> order_;
  std::vector<NodeId> queue_;
};

}  // namespace coselect::detail
