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

#include <stdexcept>
#include <string>

#include "coselect/synth.hpp"
#include "json.hpp"

namespace coselect::app {

/// Structurally invalid planner configuration (wrong type, missing field, bad value).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Reads a planner config. Either a full description:
///   {"campaign_count": 100, "campaign_size": [1, 4], "slabs_per_item": [1, 3],
///    "cross_band_rate": 0.0,
///    "bands": [{"attribute": "carbon", "interval": [0.002, 0.02],
///               "items": [{"label": "1", "weight": 1.0, "attributes": {...}}]}],
///    "late_items": [{"item": "1", "first_campaign": 50}]}
/// or a preset, {"preset": "two_band", "grades": 60, "campaigns": 5000, "late_items": 3,
/// "zipf_exponent": 2.0}, whose remaining top-level fields override the generated config.
/// Throws ConfigError; the result is validated.
PlannerConfig planner_config_from_json(const nlohmann::json& j);

nlohmann::ordered_json planner_config_to_json(const PlannerConfig& config);

}  // namespace coselect::app
