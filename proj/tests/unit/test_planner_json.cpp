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

#include "app/planner_json.hpp"

using namespace coselect;
using namespace coselect::app;
using nlohmann::json;

namespace {

json full_config() {
  return json::parse(R"({
    "campaign_count": 50,
    "campaign_size": [1, 2],
    "slabs_per_item": [2, 2],
    "cross_band_rate": 0.1,
    "bands": [
      {"attribute": "carbon", "interval": [0.0, 0.1],
       "items": [{"label": "a", "weight": 2.0, "attributes": {"carbon": 0.05}},
                 {"label": "b", "attributes": {"carbon": 0.07}}]},
      {"attribute": "carbon", "interval": [0.5, 1.0],
       "items": [{"label": "c", "attributes": {"carbon": 0.6}}]}
    ],
    "late_items": [{"item": "b", "first_campaign": 10}]
  })");
}

}  // namespace

TEST(PlannerJson, FullDescription) {
  const auto c = planner_config_from_json(full_config());
  EXPECT_EQ(c.campaign_count, 50u);
  EXPECT_EQ(c.min_campaign_size, 1u);
  EXPECT_EQ(c.max_campaign_size, 2u);
  EXPECT_EQ(c.min_slabs_per_item, 2u);
  EXPECT_DOUBLE_EQ(c.cross_band_rate, 0.1);
  ASSERT_EQ(c.bands.size(), 2u);
  EXPECT_EQ(c.bands[0].items[0].weight, 2.0);
  EXPECT_EQ(c.bands[0].items[1].weight, 1.0);
  EXPECT_EQ(c.bands[1].items[0].attributes.at("carbon"), 0.6);
  ASSERT_EQ(c.late_items.size(), 1u);
  EXPECT_EQ(c.late_items[0].item, "b");
  EXPECT_EQ(c.late_items[0].first_campaign, 10u);
}

TEST(PlannerJson, RoundTrip) {
  const auto c = planner_config_from_json(full_config());
  const auto again = planner_config_from_json(json::parse(planner_config_to_json(c).dump()));
  EXPECT_EQ(planner_config_to_json(again), planner_config_to_json(c));
}

TEST(PlannerJson, PresetWithOverrides) {
  const auto c = planner_config_from_json(
      json::parse(R"({"preset": "two_band", "grades": 10, "campaigns": 200, "late_items": 1,
                      "cross_band_rate": 0.05})"));
  EXPECT_EQ(c.campaign_count, 200u);
  EXPECT_EQ(c.bands.size(), 2u);
  EXPECT_EQ(c.bands[0].items.size() + c.bands[1].items.size(), 10u);
  EXPECT_EQ(c.late_items.size(), 1u);
  EXPECT_DOUBLE_EQ(c.cross_band_rate, 0.05);
  const auto d = planner_config_from_json(json::parse(R"({"preset": "two_band"})"));
  EXPECT_EQ(d.campaign_count, 5000u);
  EXPECT_EQ(d.bands[0].items.size(), 30u);
}

TEST(PlannerJson, Errors) {
  auto expect_error = [](const std::string& text) {
    EXPECT_THROW(planner_config_from_json(json::parse(text)), ConfigError) << text;
  };
  expect_error("[]");
  expect_error(R"({"preset": "three_band"})");
  expect_error(R"({"preset": "two_band", "grades": 1})");
  expect_error(R"({"preset": "two_band", "colour": 1})");
  expect_error(R"({"preset": "two_band", "campaign_count": 0})");
  expect_error(R"({"bands": []})");
  expect_error(R"({"campaign_count": 5, "bands": "x"})");
  expect_error(R"({"campaign_count": -5, "bands": []})");
  expect_error(R"({"campaign_count": 2.5, "bands": []})");

  auto c = full_config();
  c["campaign_count"] = 0;
  EXPECT_THROW(planner_config_from_json(c), ConfigError);
  c = full_config();
  c["bands"][0]["items"][0]["attributes"]["carbon"] = "high";
  EXPECT_THROW(planner_config_from_json(c), ConfigError);
  c = full_config();
  c["bands"][0]["interval"] = json::array({0.0});
  EXPECT_THROW(planner_config_from_json(c), ConfigError);
  c = full_config();
  c["late_items"][0]["item"] = "zzz";
  EXPECT_THROW(planner_config_from_json(c), ConfigError);
  c = full_config();
  c["bands"][0]["items"][0]["extra"] = 1;
  EXPECT_THROW(planner_config_from_json(c), ConfigError);
}
