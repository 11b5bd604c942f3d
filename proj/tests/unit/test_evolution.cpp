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

#include <gtest/gtest.h>

#include <random>

#include "coselect/evolution.hpp"
#include "coselect/metrics.hpp"
#include "support/oracles.hpp"

using namespace coselect;
using namespace coselect::testing;

namespace {

StageSeries series_for(const std::vector<ProductionRecord>& records, std::size_t windows,
                       const MiningThresholds& thresholds = {}) {
  const auto tx = group_campaigns(records);
  return stage_networks(records, tx, assign_windows(tx, windows), thresholds);
}

std::vector<ProductionRecord> random_records(std::uint64_t seed, std::size_t n) {
  // Ten records per campaign; the item pool widens as campaigns progress.
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> item(0, 1 << 20), carbon(0, 6);
  std::vector<ProductionRecord> records;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t campaign = i / 10;
    const auto pool = static_cast<int>(5 + campaign / 2);
    records.push_back({i, "c" + std::to_string(campaign), "g" + std::to_string(item(rng) % pool),
                       {{"carbon", 0.01 * carbon(rng)}}});
  }
  return records;
}

std::vector<ProductionRecord> slabs(const std::string& campaign, const std::string& item, std::size_t count,
                                    std::size_t& seq) {
  std::vector<ProductionRecord> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back({seq++, campaign, item, {}});
  return out;
}

}  // namespace

TEST(StageNetworks, SingleWindow) {
  const auto records = two_campaign_records();
  const auto series = series_for(records, 1);
  ASSERT_EQ(series.stages.size(), 1u);
  EXPECT_EQ(series.stages[0].graph.edge_count(), 2u);
  for (const auto& [item, age] : node_age(series)) EXPECT_EQ(age, 0u);
}

TEST(StageNetworks, FixtureTwoWindows) {
  const auto series = series_for(two_campaign_records(), 2);
  ASSERT_EQ(series.stages.size(), 2u);
  const auto& g0 = series.stages[0].graph;
  EXPECT_EQ(g0.labels(), (std::vector<std::string>{"1", "2"}));
  EXPECT_EQ(g0.edge_count(), 1u);
  EXPECT_EQ(series.stages[1].graph.edge_count(), 2u);
  EXPECT_EQ(node_age(series), (NodeAge{{"1", 0}, {"2", 0}, {"3", 1}, {"4", 1}}));
}

TEST(StageNetworks, StrictThresholdsGiveEdgelessStages) {
  const auto series = series_for(two_campaign_records(), 2, {0.0, 100.0});
  for (const auto& stage : series.stages) EXPECT_EQ(stage.graph.edge_count(), 0u);
}

TEST(StageNetworks, MismatchedWindowsRejected) {
  const auto records = two_campaign_records();
  const auto tx = group_campaigns(records);
  auto wa = assign_windows(tx, 2);
  wa.transaction_window.pop_back();
  EXPECT_THROW(stage_networks(records, tx, wa, {}), std::invalid_argument);
  EXPECT_THROW(node_age(StageSeries{}), std::invalid_argument);
}

TEST(StageNetworks, NodeSetsGrowAndAgesAreConsistent) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto records = random_records(seed, 400);
    const auto series = series_for(records, 5);
    for (std::size_t s = 1; s < series.stages.size(); ++s) {
      for (const auto& label : series.stages[s - 1].graph.labels()) {
        EXPECT_TRUE(series.stages[s].graph.find(label).has_value());
      }
    }
    const auto ages = node_age(series);
    EXPECT_EQ(ages.size(), series.stages.back().graph.node_count());
    for (const auto& [item, age] : ages) {
      EXPECT_TRUE(series.stages[age].graph.find(item).has_value());
      if (age > 0) {
        EXPECT_FALSE(series.stages[age - 1].graph.find(item).has_value());
      }
    }
  }
}

TEST(StageNetworks, ThreadCountDoesNotMatter) {
  const auto records = random_records(4, 300);
  const auto tx = group_campaigns(records);
  const auto wa = assign_windows(tx, 4);
  const auto a = stage_networks(records, tx, wa, {}, 1);
  const auto b = stage_networks(records, tx, wa, {}, 3);
  for (std::size_t s = 0; s < 4; ++s) {
    EXPECT_EQ(a.stages[s].graph.labels(), b.stages[s].graph.labels());
    EXPECT_EQ(a.stages[s].graph.edges(), b.stages[s].graph.edges());
  }
}

TEST(GroupSummary, Fixture) {
  const auto records = two_campaign_records();
  const auto tx = group_campaigns(records);
  const auto out = group_summary({{"2", "1"}}, records, tx);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].items, (std::vector<std::string>{"1", "2"}));
  EXPECT_EQ(out[0].item_count, 2u);
  EXPECT_EQ(out[0].slab_count, 2u);
  EXPECT_EQ(out[0].slab_frequency, 0.5);
  EXPECT_EQ(out[0].campaign_frequency, 0.5);
  EXPECT_EQ(out[0].attribute_means.at("carbon"), 0.010);
}

TEST(GroupSummary, AllItemsCoverEverything) {
  const auto records = two_campaign_records();
  const auto out = group_summary({{"1", "2", "3", "4"}}, records, group_campaigns(records));
  EXPECT_EQ(out[0].slab_frequency, 1.0);
  EXPECT_EQ(out[0].campaign_frequency, 1.0);
  EXPECT_NEAR(out[0].attribute_means.at("carbon"), 0.015, 1e-15);
}

TEST(GroupSummary, EmptyGroupListAndErrors) {
  const auto records = two_campaign_records();
  const auto tx = group_campaigns(records);
  EXPECT_TRUE(group_summary({}, records, tx).empty());
  EXPECT_THROW(group_summary({{"1", "2"}, {"2", "3"}}, records, tx), std::invalid_argument);
  EXPECT_THROW(group_summary({{"1", "9"}}, records, tx), std::invalid_argument);
}

TEST(GroupSummary, SlabFrequenciesOfAPartitionSumToOne) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto records = random_records(seed, 300);
    const auto net = build_graph(group_campaigns(records), records, {});
    const auto cp = girvan_newman(net.graph);
    const auto out = group_summary(partition_labels(net.graph, cp.communities), records, group_campaigns(records));
    double total = 0.0;
    for (const auto& s : out) {
      total += s.slab_frequency;
      EXPECT_GE(s.campaign_frequency, 0.0);
      EXPECT_LE(s.campaign_frequency, 1.0);
    }
    EXPECT_NEAR(total, 1.0, 1e-12);
  }
}

TEST(PruneMinorGroups, FloorZeroKeepsEverything) {
  const auto records = random_records(3, 300);
  const auto g = build_graph(group_campaigns(records), records, {}).graph;
  const auto cp = girvan_newman(g);
  const auto pruned = prune_minor_groups(g, cp.communities, records, 0.0);
  EXPECT_EQ(pruned.labels(), g.labels());
  EXPECT_EQ(pruned.edges(), g.edges());
}

TEST(PruneMinorGroups, FloorOneKeepsOnlyAFullCover) {
  const auto records = two_campaign_records();
  const auto g = build_graph(group_campaigns(records), records, {}).graph;
  const Partition halves = {{0, 1}, {2, 3}};
  EXPECT_EQ(prune_minor_groups(g, halves, records, 1.0).node_count(), 0u);
  EXPECT_EQ(prune_minor_groups(g, {{0, 1, 2, 3}}, records, 1.0).node_count(), 4u);
}

TEST(PruneMinorGroups, DropsRareGroup) {
  // Slab shares 0.56, 0.4368 and 0.0032 of 10000 records.
  std::size_t seq = 0;
  std::vector<ProductionRecord> records;
  auto add = [&](const std::string& c, const std::string& item, std::size_t n) {
    auto more = slabs(c, item, n, seq);
    records.insert(records.end(), more.begin(), more.end());
  };
  add("A", "a", 2800);
  add("A", "b", 2800);
  add("B", "c", 2184);
  add("B", "d", 2184);
  add("C", "e", 16);
  add("C", "f", 16);
  const auto tx = group_campaigns(records);
  const auto g = build_graph(tx, records, {}).graph;
  const auto cp = girvan_newman(g);
  ASSERT_EQ(cp.communities.size(), 3u);
  const auto summary = group_summary(partition_labels(g, cp.communities), records, tx);
  EXPECT_DOUBLE_EQ(summary[0].slab_frequency, 0.56);
  EXPECT_DOUBLE_EQ(summary[2].slab_frequency, 0.0032);
  const auto core = prune_minor_groups(g, cp.communities, records, 0.01);
  EXPECT_EQ(core.labels(), (std::vector<std::string>{"a", "b", "c", "d"}));
  EXPECT_EQ(core.edge_count(), 2u);
}

TEST(PruneMinorGroups, RejectsBadFloor) {
  const auto records = two_campaign_records();
  const auto g = build_graph(group_campaigns(records), records, {}).graph;
  EXPECT_THROW(prune_minor_groups(g, {{0, 1, 2, 3}}, records, -0.1), std::invalid_argument);
  EXPECT_THROW(prune_minor_groups(g, {{0, 1, 2, 3}}, records, 1.5), std::invalid_argument);
  EXPECT_THROW(prune_minor_groups(g, {{0, 1}}, records, 0.1), std::invalid_argument);
}
