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

#include <set>

#include "app/pipeline.hpp"
#include "app/report.hpp"
#include "coselect/errors.hpp"
#include "coselect/synth.hpp"
#include "support/oracles.hpp"

using namespace coselect;
using namespace coselect::app;

namespace {

std::vector<ProductionRecord> synthetic(std::size_t grades = 20, std::size_t campaigns = 600) {
  Engine rng(3);
  return generate(two_band_config(grades, campaigns, 2), rng);
}

AnalysisOptions small_options() {
  AnalysisOptions o;
  o.windows = 3;
  o.ensemble = 20;
  o.seed = 5;
  return o;
}

}  // namespace

TEST(ComponentSelection, Parse) {
  EXPECT_EQ(ComponentSelection::parse("largest").rule, ComponentSelection::Rule::Largest);
  const auto low = ComponentSelection::parse("lowest:carbon");
  EXPECT_EQ(low.rule, ComponentSelection::Rule::LowestMean);
  EXPECT_EQ(low.attribute, "carbon");
  EXPECT_EQ(low.to_string(), "lowest:carbon");
  EXPECT_EQ(ComponentSelection::parse("highest:silicon").rule, ComponentSelection::Rule::HighestMean);
  EXPECT_THROW(ComponentSelection::parse("smallest"), std::invalid_argument);
  EXPECT_THROW(ComponentSelection::parse("lowest:"), std::invalid_argument);
}

TEST(AnalysisOptions, Validation) {
  auto o = small_options();
  EXPECT_NO_THROW(o.validate());
  o.windows = 0;
  EXPECT_THROW(o.validate(), std::invalid_argument);
  o = small_options();
  o.ensemble = 1;
  EXPECT_THROW(o.validate(), std::invalid_argument);
  o = small_options();
  o.models.clear();
  EXPECT_THROW(o.validate(), std::invalid_argument);
  o = small_options();
  o.models = {NullModelKind::ErdosRenyi, NullModelKind::ErdosRenyi};
  EXPECT_THROW(o.validate(), std::invalid_argument);
  o = small_options();
  o.prune_floor = 2.0;
  EXPECT_THROW(o.validate(), std::invalid_argument);
}

TEST(Analyze, SelectionRulesPickBands) {
  const auto records = synthetic();
  auto o = small_options();
  o.selection = ComponentSelection::parse("lowest:carbon");
  const auto low = analyze(records, o);
  o.selection = ComponentSelection::parse("highest:carbon");
  const auto high = analyze(records, o);
  const auto& comps = low.stages.back().components;
  ASSERT_EQ(comps.size(), 2u);
  const double low_mean = comps[low.selected_component].attribute_means.at("carbon");
  const double high_mean = comps[high.selected_component].attribute_means.at("carbon");
  EXPECT_LT(low_mean, 0.03);
  EXPECT_GT(high_mean, 0.04);
  o.selection = ComponentSelection::parse("lowest:nickel");
  EXPECT_THROW(analyze(records, o), std::invalid_argument);
}

TEST(Analyze, CellsCoverEveryCombinationAndAreExplained) {
  const auto result = analyze(synthetic(), small_options());
  EXPECT_EQ(result.cells.size(), 2u * 3u * 3u * 2u);
  std::set<std::tuple<std::string, std::size_t, std::string, std::string>> keys;
  for (const auto& c : result.cells) {
    keys.emplace(c.subject, c.stage, c.summary.model, c.summary.statistic);
    if (c.summary.z) {
      EXPECT_EQ(c.summary.status, CellStatus::Ok);
    } else {
      EXPECT_NE(c.summary.status, CellStatus::Ok);
      EXPECT_FALSE(c.summary.reason.empty());
    }
    EXPECT_EQ(c.seed, cell_rng(5, c.subject, c.stage, parse_null_model_kind(c.summary.model)).base_seed());
  }
  EXPECT_EQ(keys.size(), result.cells.size());
  // Every core item belongs to the selected component.
  const auto& subject = result.stages.back().components[result.selected_component].items;
  for (const auto& item : result.core_items) {
    EXPECT_TRUE(std::binary_search(subject.begin(), subject.end(), item));
  }
  EXPECT_EQ(result.ages.size(), result.stages.back().nodes);
}

TEST(Analyze, SingleWindowHasOneStage) {
  auto o = small_options();
  o.windows = 1;
  const auto result = analyze(synthetic(), o);
  ASSERT_EQ(result.stages.size(), 1u);
  for (const auto& [item, age] : result.ages) EXPECT_EQ(age, 0u);
  const auto digest = digest_input("", {});
  const auto report = build_report(result, o, CsvSchema{}, digest);
  EXPECT_EQ(report["correlation_table"]["component"]["first"], report["correlation_table"]["component"]["final"]);
  EXPECT_EQ(report["correlation_table"]["core"]["first"], report["correlation_table"]["core"]["final"]);
}

TEST(Analyze, Errors) {
  EXPECT_THROW(analyze({}, small_options()), InsufficientDataError);
  auto o = small_options();
  o.windows = 5;
  EXPECT_THROW(analyze(coselect::testing::two_campaign_records(), o), std::invalid_argument);
}

TEST(Analyze, FixtureComponentsAndMeans) {
  auto o = small_options();
  o.windows = 2;
  const auto result = analyze(coselect::testing::two_campaign_records(), o);
  const auto& comps = result.stages.back().components;
  ASSERT_EQ(comps.size(), 2u);
  EXPECT_EQ(comps[0].items, (std::vector<std::string>{"1", "2"}));
  EXPECT_EQ(comps[0].attribute_means.at("carbon"), 0.010);
  EXPECT_EQ(comps[1].items, (std::vector<std::string>{"3", "4"}));
  EXPECT_EQ(comps[1].attribute_means.at("carbon"), 0.020);
  // Two-node subjects have no defined correlation; every cell says why.
  for (const auto& c : result.cells) {
    EXPECT_FALSE(c.summary.z.has_value());
    EXPECT_FALSE(c.summary.reason.empty());
  }
}

TEST(Report, ZScoreTableHasOneRowPerCell) {
  const auto result = analyze(synthetic(), small_options());
  const auto csv = zscores_csv(result);
  EXPECT_EQ(static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n')), result.cells.size() + 1);
  EXPECT_EQ(csv.rfind("subject,stage,model,statistic,", 0), 0u);
}

TEST(Analyze, UniformWithinBandMixingLooksRandom) {
  // Uniform popularity, no crossing: each band subgraph should be indistinguishable from the
  // null models in at least 80% of cells. Checked here on 10-grade bands.
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    Engine rng(seed);
    const auto records = generate(two_band_config(20, 1000, 0, 0.0), rng);
    AnalysisOptions o;
    o.seed = seed;
    o.selection = ComponentSelection::parse("lowest:carbon");
    const auto result = analyze(records, o);
    ASSERT_EQ(result.stages.back().components.size(), 2u);
    std::size_t cells = 0, small = 0;
    for (const auto& c : result.cells) {
      if (c.subject != kSubjectComponent) continue;
      ++cells;
      small += c.summary.z && std::abs(*c.summary.z) < 2.0;
    }
    EXPECT_EQ(cells, 60u);
    EXPECT_GE(small * 5, cells * 4) << "seed " << seed << ": " << small << "/" << cells;
  }
}
