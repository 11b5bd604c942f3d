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

#include "coselect/evolution.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "parallel.hpp"

namespace coselect {

StageSeries stage_networks(const std::vector<ProductionRecord>& records,
                           const TransactionSet& transactions, const WindowAssignment& windows,
                           const MiningThresholds& thresholds, unsigned threads) {
  if (windows.transaction_window.size() != transactions.size()) {
    throw std::invalid_argument("window assignment does not match the transaction set");
  }
  StageSeries series;
  series.windows = windows;
  series.stages.resize(windows.window_count);

  detail::parallel_for(windows.window_count, threads, [&](std::size_t stage) {
    TransactionSet prefix;
    std::unordered_set<std::string_view> campaigns;
    std::set<std::string> universe;
    for (std::size_t t = 0; t < transactions.size(); ++t) {
      if (windows.transaction_window[t] > stage) continue;
      const auto& tx = transactions.transactions[t];
      prefix.transactions.push_back(tx);
      campaigns.insert(tx.campaign_id);
      universe.insert(tx.items.begin(), tx.items.end());
    }
    prefix.item_universe.assign(universe.begin(), universe.end());
    std::vector<ProductionRecord> stage_records;
    for (const auto& r : records) {
      if (campaigns.count(r.campaign_id) != 0) stage_records.push_back(r);
    }
    series.stages[stage] = build_graph(prefix, stage_records, thresholds);
  });
  return series;
}

NodeAge node_age(const StageSeries& series) {
  if (series.stages.empty()) throw std::invalid_argument("node age needs at least one stage");
  NodeAge age;
  for (const auto& label : series.stages.back().graph.labels()) {
    for (std::size_t s = 0; s < series.stages.size(); ++s) {
      if (series.stages[s].graph.find(label)) {
        age.emplace(label, s);
        break;
      }
    }
  }
  return age;
}

std::vector<GroupSummary> group_summary(const std::vector<std::vector<std::string>>& groups,
                                        const std::vector<ProductionRecord>& records,
                                        const TransactionSet& transactions) {
  std::unordered_map<std::string, std::size_t> group_of;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    for (const auto& item : groups[g]) {
      if (!group_of.emplace(item, g).second) {
        throw std::invalid_argument("item '" + item + "' appears in more than one group");
      }
    }
  }
  std::vector<GroupSummary> out(groups.size());
  // Running means per attribute: exact when all values agree.
  std::vector<std::map<std::string, std::pair<double, std::size_t>>> means(groups.size());
  std::unordered_set<std::string> seen_items;
  for (const auto& r : records) {
    auto it = group_of.find(r.item);
    if (it == group_of.end()) continue;
    seen_items.insert(r.item);
    ++out[it->second].slab_count;
    for (const auto& [name, value] : r.attributes) {
      auto& [mean, n] = means[it->second][name];
      mean += (value - mean) / static_cast<double>(++n);
    }
  }
  for (const auto& [item, g] : group_of) {
    if (seen_items.count(item) == 0) {
      throw std::invalid_argument("group item '" + item + "' does not occur in the records");
    }
  }
  std::vector<char> hit(groups.size());
  for (const auto& t : transactions.transactions) {
    std::fill(hit.begin(), hit.end(), 0);
    for (const auto& item : t.items) {
      auto it = group_of.find(item);
      if (it != group_of.end()) hit[it->second] = 1;
    }
    for (std::size_t g = 0; g < groups.size(); ++g) out[g].campaign_count += hit[g];
  }
  const double n_records = static_cast<double>(records.size());
  const double n_campaigns = static_cast<double>(transactions.size());
  for (std::size_t g = 0; g < groups.size(); ++g) {
    auto& s = out[g];
    s.items = groups[g];
    std::sort(s.items.begin(), s.items.end());
    s.item_count = s.items.size();
    s.slab_frequency = n_records > 0 ? static_cast<double>(s.slab_count) / n_records : 0.0;
    s.campaign_frequency = n_campaigns > 0 ? static_cast<double>(s.campaign_count) / n_campaigns : 0.0;
    for (const auto& [name, acc] : means[g]) s.attribute_means[name] = acc.first;
  }
  return out;
}

std::vector<std::vector<std::string>> partition_labels(const Graph& graph,
                                                       const Partition& partition) {
  std::vector<std::vector<std::string>> out;
  out.reserve(partition.size());
  for (const auto& group : partition) {
    auto& labels = out.emplace_back();
    for (NodeId v : group) labels.push_back(graph.label(v));
  }
  return out;
}

Graph prune_minor_groups(const Graph& graph, const Partition& partition,
                         const std::vector<ProductionRecord>& records,
                         double slab_frequency_floor) {
  if (!(slab_frequency_floor >= 0.0 && slab_frequency_floor <= 1.0)) {
    throw std::invalid_argument("slab frequency floor must lie in [0, 1]");
  }
  const auto of = membership(graph, partition);
  std::vector<std::size_t> slabs(partition.size(), 0);
  for (const auto& r : records) {
    if (auto v = graph.find(r.item)) ++slabs[of[*v]];
  }
  const double total = static_cast<double>(records.size());
  std::vector<NodeId> keep;
  for (std::size_t g = 0; g < partition.size(); ++g) {
    const double freq = total > 0 ? static_cast<double>(slabs[g]) / total : 0.0;
    if (freq >= slab_frequency_floor) keep.insert(keep.end(), partition[g].begin(), partition[g].end());
  }
  return graph.induced_subgraph(keep);
}

}  // namespace coselect
