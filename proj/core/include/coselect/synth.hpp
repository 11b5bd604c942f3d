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

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "coselect/ingest.hpp"
#include "coselect/random.hpp"

namespace coselect {

struct BandItem {
  std::string label;
  std::map<std::string, double> attributes;
  double weight = 1.0;  // within-band popularity
};

/// Items whose value of `attribute` lies in [lower, upper].
struct AttributeBand {
  std::string attribute;
  double lower = 0.0;
  double upper = 0.0;
  std::vector<BandItem> items;
};

/// Item that may only be selected from campaign index `first_campaign` on.
struct LateItem {
  std::string item;
  std::size_t first_campaign = 0;
};

/// Emulated expert planner: each campaign chooses a home band and mixes items from it at
/// random by popularity, occasionally adding one out-of-band item.
struct PlannerConfig {
  std::vector<AttributeBand> bands;
  std::size_t campaign_count = 0;
  std::size_t min_campaign_size = 1;  // distinct items per campaign
  std::size_t max_campaign_size = 4;
  std::size_t min_slabs_per_item = 1;
  std::size_t max_slabs_per_item = 3;
  double cross_band_rate = 0.0;
  std::vector<LateItem> late_items;

  /// Throws std::invalid_argument naming the first violated constraint.
  void validate() const;
  std::vector<std::string> attribute_names() const;
};

/// Records in campaign order; campaign ids are "C" followed by a zero-padded index.
/// Throws GenerationError when a home band has no item eligible at that campaign.
std::vector<ProductionRecord> generate(const PlannerConfig& config, Engine& rng);

/// `grades` items split evenly over two carbon bands ([0.002, 0.02] and [0.05, 0.2]) with
/// Zipf(`zipf_exponent`) popularity inside each band and 2 grades per campaign. The
/// first-band items at popularity ranks 6, 7, ... (`late_count` of them) only become
/// eligible after 60% of the campaigns.
PlannerConfig two_band_config(std::size_t grades, std::size_t campaigns, std::size_t late_count = 3,
                              double zipf_exponent = 2.0);

}  // namespace coselect
