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

#include "coselect/synth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "coselect/errors.hpp"

namespace coselect {
namespace {

constexpr std::size_t kLateItemFirstRank = 5;

struct ItemRef {
  std::size_t band = 0;
  std::size_t index = 0;
};

std::string campaign_label(std::size_t index, std::size_t total) {
  const int width = std::max(1, static_cast<int>(std::to_string(total).size()));
  char buf[32];
  std::snprintf(buf, sizeof buf, "C%0*zu", width, index);
  return buf;
}

// Weighted draw without replacement of up to `k` positions from `candidates`.
std::vector<std::size_t> weighted_sample(const std::vector<std::size_t>& candidates,
                                         const std::vector<double>& weights, std::size_t k,
                                         Engine& rng) {
  std::vector<std::size_t> pool = candidates;
  std::vector<double> w = weights;
  std::vector<std::size_t> out;
  while (out.size() < k && !pool.empty()) {
    std::discrete_distribution<std::size_t> pick(w.begin(), w.end());
    const auto j = pick(rng);
    out.push_back(pool[j]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(j));
    w.erase(w.begin() + static_cast<std::ptrdiff_t>(j));
  }
  return out;
}

}  // namespace

void PlannerConfig::validate() const {
  if (bands.empty()) throw std::invalid_argument("planner config needs at least one band");
  if (campaign_count < 1) throw std::invalid_argument("campaign_count must be at least 1");
  if (min_campaign_size < 1 || min_campaign_size > max_campaign_size) {
    throw std::invalid_argument("campaign size range must satisfy 1 <= min <= max");
  }
  if (min_slabs_per_item < 1 || min_slabs_per_item > max_slabs_per_item) {
    throw std::invalid_argument("slabs-per-item range must satisfy 1 <= min <= max");
  }
  if (!(cross_band_rate >= 0.0 && cross_band_rate <= 1.0)) {
    throw std::invalid_argument("cross_band_rate must lie in [0, 1]");
  }
  std::set<std::string> labels;
  for (std::size_t b = 0; b < bands.size(); ++b) {
    const auto& band = bands[b];
    if (band.attribute.empty()) throw std::invalid_argument("band " + std::to_string(b) + " has no attribute");
    if (!(band.lower <= band.upper)) {
      throw std::invalid_argument("band " + std::to_string(b) + " has an empty interval");
    }
    if (band.items.empty()) throw std::invalid_argument("band " + std::to_string(b) + " has no items");
    for (std::size_t o = 0; o < b; ++o) {
      const auto& other = bands[o];
      if (other.attribute == band.attribute && band.lower <= other.upper && other.lower <= band.upper) {
        throw std::invalid_argument("bands " + std::to_string(o) + " and " + std::to_string(b) +
                                    " overlap");
      }
    }
    for (const auto& item : band.items) {
      if (item.label.empty()) throw std::invalid_argument("band item with empty label");
      if (!labels.insert(item.label).second) {
        throw std::invalid_argument("item '" + item.label + "' defined twice");
      }
      if (!(item.weight > 0.0) || !std::isfinite(item.weight)) {
        throw std::invalid_argument("item '" + item.label + "' needs a positive weight");
      }
      auto it = item.attributes.find(band.attribute);
      if (it == item.attributes.end() || it->second < band.lower || it->second > band.upper) {
        throw std::invalid_argument("item '" + item.label + "' has " + band.attribute +
                                    " outside its band");
      }
    }
  }
  const auto names = attribute_names();
  for (const auto& band : bands) {
    for (const auto& item : band.items) {
      for (const auto& name : names) {
        if (item.attributes.count(name) == 0) {
          throw std::invalid_argument("item '" + item.label + "' lacks attribute " + name);
        }
      }
    }
  }
  for (const auto& late : late_items) {
    if (labels.count(late.item) == 0) {
      throw std::invalid_argument("late item '" + late.item + "' is not defined in any band");
    }
  }
}

std::vector<std::string> PlannerConfig::attribute_names() const {
  std::set<std::string> names;
  for (const auto& band : bands) {
    for (const auto& item : band.items) {
      for (const auto& [name, value] : item.attributes) names.insert(name);
    }
  }
  return {names.begin(), names.end()};
}

std::vector<ProductionRecord> generate(const PlannerConfig& config, Engine& rng) {
  config.validate();
  std::unordered_map<std::string, std::size_t> activation;
  for (const auto& late : config.late_items) {
    auto& first = activation[late.item];
    first = std::max(first, late.first_campaign);
  }
  auto eligible = [&](std::size_t band, std::size_t campaign, std::vector<std::size_t>& idx,
                      std::vector<double>& w) {
    idx.clear();
    w.clear();
    const auto& items = config.bands[band].items;
    for (std::size_t i = 0; i < items.size(); ++i) {
      auto it = activation.find(items[i].label);
      if (it != activation.end() && campaign < it->second) continue;
      idx.push_back(i);
      w.push_back(items[i].weight);
    }
  };

  std::uniform_int_distribution<std::size_t> pick_band(0, config.bands.size() - 1);
  std::uniform_int_distribution<std::size_t> pick_size(config.min_campaign_size,
                                                       config.max_campaign_size);
  std::uniform_int_distribution<std::size_t> pick_slabs(config.min_slabs_per_item,
                                                        config.max_slabs_per_item);
  std::bernoulli_distribution cross(config.cross_band_rate);

  std::vector<ProductionRecord> records;
  std::vector<std::size_t> idx;
  std::vector<double> weights;
  for (std::size_t c = 0; c < config.campaign_count; ++c) {
    const auto campaign = campaign_label(c, config.campaign_count);
    const auto home = pick_band(rng);
    eligible(home, c, idx, weights);
    if (idx.empty()) {
      throw GenerationError("band " + std::to_string(home) + " has no eligible items at campaign " +
                            std::to_string(c));
    }
    std::vector<ItemRef> chosen;
    for (auto i : weighted_sample(idx, weights, pick_size(rng), rng)) chosen.push_back({home, i});

    if (config.bands.size() > 1 && cross(rng)) {
      std::uniform_int_distribution<std::size_t> other(0, config.bands.size() - 2);
      auto band = other(rng);
      if (band >= home) ++band;
      eligible(band, c, idx, weights);
      if (idx.empty()) {
        throw GenerationError("band " + std::to_string(band) +
                              " has no eligible items at campaign " + std::to_string(c));
      }
      for (auto i : weighted_sample(idx, weights, 1, rng)) chosen.push_back({band, i});
    }

    for (const auto& ref : chosen) {
      const auto& item = config.bands[ref.band].items[ref.index];
      const auto slabs = pick_slabs(rng);
      for (std::size_t s = 0; s < slabs; ++s) {
        ProductionRecord rec;
        rec.sequence_index = records.size();
        rec.campaign_id = campaign;
        rec.item = item.label;
        rec.attributes = item.attributes;
        records.push_back(std::move(rec));
      }
    }
  }
  return records;
}

PlannerConfig two_band_config(std::size_t grades, std::size_t campaigns, std::size_t late_count,
                              double zipf_exponent) {
  if (grades < 2) throw std::invalid_argument("two_band_config needs at least 2 grades");
  PlannerConfig config;
  config.campaign_count = campaigns;
  // Pairs only: every selected grade co-occurs with at least one band partner.
  config.min_campaign_size = 2;
  config.max_campaign_size = 2;
  const std::size_t per_band[2] = {(grades + 1) / 2, grades / 2};
  const double lower[2] = {0.002, 0.05};
  const double upper[2] = {0.02, 0.2};
  std::size_t label = 1;
  for (int b = 0; b < 2; ++b) {
    AttributeBand band;
    band.attribute = "carbon";
    band.lower = lower[b];
    band.upper = upper[b];
    const auto n = per_band[b];
    for (std::size_t i = 0; i < n; ++i, ++label) {
      BandItem item;
      item.label = std::to_string(label);
      const double frac = n > 1 ? static_cast<double>(i) / static_cast<double>(n - 1) : 0.5;
      item.weight = std::pow(static_cast<double>(i + 1), -zipf_exponent);
      // Spread the attribute values deterministically across the band interval.
      const double t = std::fmod(frac * 7.0, 1.0);
      item.attributes = {
          {"carbon", lower[b] + t * (upper[b] - lower[b])},
          {"manganese", 0.1 + 0.9 * std::fmod(frac * 3.0, 1.0)},
          {"silicon", 0.005 + 0.3 * std::fmod(frac * 5.0, 1.0)},
          {"titanium", 0.001 + 0.05 * std::fmod(frac * 11.0, 1.0)},
          {"thickness_mm", 200.0 + 50.0 * std::fmod(frac * 13.0, 1.0)},
          {"width_mm", 900.0 + 1100.0 * frac},
      };
      band.items.push_back(std::move(item));
    }
    config.bands.push_back(std::move(band));
  }
  // Late items are taken from the middle of the popularity ranking so they still occur
  // often enough after activation to enter the network.
  const auto& first = config.bands.front().items;
  const std::size_t start = std::min<std::size_t>(kLateItemFirstRank, first.size() - 1);
  const auto late = std::min(late_count, first.size() - start);
  for (std::size_t i = 0; i < late; ++i) {
    config.late_items.push_back({first[start + i].label, campaigns * 6 / 10});
  }
  return config;
}

}  // namespace coselect
