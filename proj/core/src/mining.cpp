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

#include "coselect/mining.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

#include "coselect/errors.hpp"

namespace coselect {
namespace {

std::size_t count_containing(std::string_view item, const TransactionSet& transactions) {
  std::size_t count = 0;
  for (const auto& t : transactions.transactions) count += t.contains(item) ? 1 : 0;
  return count;
}

void require_non_empty(const TransactionSet& transactions) {
  if (transactions.empty()) throw std::invalid_argument("support over an empty transaction set");
}

}  // namespace

double support_single(std::string_view item, const TransactionSet& transactions) {
  require_non_empty(transactions);
  return static_cast<double>(count_containing(item, transactions)) /
         static_cast<double>(transactions.size());
}

double support_pair(std::string_view item_a, std::string_view item_b,
                    const TransactionSet& transactions) {
  if (item_a == item_b) throw std::invalid_argument("pair support needs two distinct items");
  require_non_empty(transactions);
  std::size_t count = 0;
  for (const auto& t : transactions.transactions) {
    count += (t.contains(item_a) && t.contains(item_b)) ? 1 : 0;
  }
  return static_cast<double>(count) / static_cast<double>(transactions.size());
}

double lift(std::string_view item_a, std::string_view item_b, const TransactionSet& transactions) {
  if (item_a == item_b) throw std::invalid_argument("lift needs two distinct items");
  if (transactions.empty()) throw UndefinedLiftError("lift over an empty transaction set");
  const auto na = count_containing(item_a, transactions);
  const auto nb = count_containing(item_b, transactions);
  if (na == 0 || nb == 0) {
    throw UndefinedLiftError("lift undefined: item '" +
                             std::string(na == 0 ? item_a : item_b) + "' has zero support");
  }
  std::size_t nab = 0;
  for (const auto& t : transactions.transactions) {
    nab += (t.contains(item_a) && t.contains(item_b)) ? 1 : 0;
  }
  return static_cast<double>(nab) * static_cast<double>(transactions.size()) /
         (static_cast<double>(na) * static_cast<double>(nb));
}

std::vector<RuleStats> mine_pair_rules(const TransactionSet& transactions) {
  const auto& universe = transactions.item_universe;
  const std::size_t n_items = universe.size();
  const double n_tx = static_cast<double>(transactions.size());

  std::unordered_map<std::string_view, std::uint32_t> id_of;
  id_of.reserve(n_items);
  for (std::uint32_t i = 0; i < n_items; ++i) id_of.emplace(universe[i], i);

  std::vector<std::size_t> single(n_items, 0);
  std::unordered_map<std::uint64_t, std::size_t> pair_counts;
  std::vector<std::uint32_t> ids;
  for (const auto& t : transactions.transactions) {
    ids.clear();
    for (const auto& item : t.items) {
      auto it = id_of.find(item);
      if (it == id_of.end()) throw std::invalid_argument("item '" + item + "' not in universe");
      ids.push_back(it->second);
    }
    std::sort(ids.begin(), ids.end());
    for (std::size_t i = 0; i < ids.size(); ++i) {
      ++single[ids[i]];
      for (std::size_t j = i + 1; j < ids.size(); ++j) {
        ++pair_counts[(static_cast<std::uint64_t>(ids[i]) << 32) | ids[j]];
      }
    }
  }

  std::vector<std::pair<std::uint64_t, std::size_t>> sorted(pair_counts.begin(), pair_counts.end());
  std::sort(sorted.begin(), sorted.end());

  std::vector<RuleStats> rules;
  rules.reserve(sorted.size());
  for (const auto& [key, count] : sorted) {
    const auto a = static_cast<std::uint32_t>(key >> 32);
    const auto b = static_cast<std::uint32_t>(key & 0xffffffffu);
    RuleStats r;
    r.item_a = universe[a];
    r.item_b = universe[b];
    r.pair_count = count;
    r.support_a = static_cast<double>(single[a]) / n_tx;
    r.support_b = static_cast<double>(single[b]) / n_tx;
    r.support_pair = static_cast<double>(count) / n_tx;
    r.lift = static_cast<double>(count) * n_tx /
             (static_cast<double>(single[a]) * static_cast<double>(single[b]));
    rules.push_back(std::move(r));
  }
  return rules;
}

CoSelectionGraph build_graph(const TransactionSet& transactions,
                             const std::vector<ProductionRecord>& records,
                             const MiningThresholds& thresholds) {
  if (!std::isfinite(thresholds.min_support) || thresholds.min_support < 0.0 ||
      thresholds.min_support > 1.0) {
    throw std::invalid_argument("min_support must lie in [0, 1]");
  }
  if (!std::isfinite(thresholds.min_lift)) throw std::invalid_argument("min_lift must be finite");

  CoSelectionGraph out;
  out.thresholds = thresholds;
  if (transactions.empty()) return out;

  const double n_tx = static_cast<double>(transactions.size());
  std::map<std::string, std::size_t> occurrences;
  for (const auto& t : transactions.transactions) {
    for (const auto& item : t.items) ++occurrences[item];
  }
  std::vector<std::string> nodes;
  for (const auto& [item, count] : occurrences) {
    if (count > 0 && static_cast<double>(count) / n_tx >= thresholds.min_support) {
      nodes.push_back(item);
    }
  }

  Graph labelled(nodes);
  std::vector<Edge> edges;
  std::vector<double> lifts;
  for (const auto& r : mine_pair_rules(transactions)) {
    if (r.support_pair < thresholds.min_support || r.lift < thresholds.min_lift) continue;
    auto a = labelled.find(r.item_a);
    auto b = labelled.find(r.item_b);
    if (!a || !b) continue;
    edges.emplace_back(*a, *b);
    lifts.push_back(r.lift);
  }
  out.graph = Graph(std::move(nodes), edges);
  for (std::size_t i = 0; i < edges.size(); ++i) out.edge_lift.emplace(edges[i], lifts[i]);

  // Running means: exact when every record of an item carries the same value.
  std::map<std::pair<std::string, std::string>, std::size_t> seen;
  for (const auto& rec : records) {
    if (!out.graph.find(rec.item)) continue;
    auto& means = out.node_attributes[rec.item];
    for (const auto& [name, value] : rec.attributes) {
      const double n = static_cast<double>(++seen[{rec.item, name}]);
      auto& mean = means[name];
      mean += (value - mean) / n;
    }
  }
  return out;
}

}  // namespace coselect
