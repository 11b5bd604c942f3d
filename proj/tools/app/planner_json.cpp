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

#include "app/planner_json.hpp"

#include <set>

namespace coselect::app {
namespace {

using json = nlohmann::json;

const json& field(const json& j, const char* name, const std::string& where) {
  if (!j.is_object()) throw ConfigError(where + " must be an object");
  auto it = j.find(name);
  if (it == j.end()) throw ConfigError(where + " lacks field '" + name + "'");
  return *it;
}

double as_number(const json& j, const std::string& where) {
  if (!j.is_number()) throw ConfigError(where + " must be a number");
  return j.get<double>();
}

std::size_t as_count(const json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 0) {
    throw ConfigError(where + " must be a non-negative integer");
  }
  return j.get<std::size_t>();
}

std::string as_string(const json& j, const std::string& where) {
  if (!j.is_string()) throw ConfigError(where + " must be a string");
  return j.get<std::string>();
}

std::pair<std::size_t, std::size_t> as_range(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) throw ConfigError(where + " must be a [min, max] pair");
  return {as_count(j[0], where + "[0]"), as_count(j[1], where + "[1]")};
}

void check_keys(const json& j, const std::set<std::string>& allowed, const std::string& where) {
  for (const auto& [key, value] : j.items()) {
    if (allowed.count(key) == 0) throw ConfigError(where + " has unknown field '" + key + "'");
  }
}

void apply_common(const json& j, PlannerConfig& c) {
  if (j.contains("campaign_count")) c.campaign_count = as_count(j["campaign_count"], "campaign_count");
  if (j.contains("campaign_size")) {
    std::tie(c.min_campaign_size, c.max_campaign_size) = as_range(j["campaign_size"], "campaign_size");
  }
  if (j.contains("slabs_per_item")) {
    std::tie(c.min_slabs_per_item, c.max_slabs_per_item) =
        as_range(j["slabs_per_item"], "slabs_per_item");
  }
  if (j.contains("cross_band_rate")) c.cross_band_rate = as_number(j["cross_band_rate"], "cross_band_rate");
  if (j.contains("late_items")) {
    const auto& arr = j["late_items"];
    if (!arr.is_array()) throw ConfigError("late_items must be an array");
    c.late_items.clear();
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const auto where = "late_items[" + std::to_string(i) + "]";
      check_keys(arr[i], {"item", "first_campaign"}, where);
      c.late_items.push_back({as_string(field(arr[i], "item", where), where + ".item"),
                              as_count(field(arr[i], "first_campaign", where),
                                       where + ".first_campaign")});
    }
  }
}

}  // namespace

PlannerConfig planner_config_from_json(const json& j) {
  if (!j.is_object()) throw ConfigError("planner config must be a JSON object");
  PlannerConfig config;
  if (j.contains("preset")) {
    check_keys(j, {"preset", "grades", "campaigns", "zipf_exponent", "late_items", "campaign_count",
                   "campaign_size", "slabs_per_item", "cross_band_rate"},
               "config");
    const auto preset = as_string(j["preset"], "preset");
    if (preset != "two_band") throw ConfigError("unknown preset '" + preset + "'");
    const auto grades = j.contains("grades") ? as_count(j["grades"], "grades") : 60;
    const auto campaigns = j.contains("campaigns") ? as_count(j["campaigns"], "campaigns") : 5000;
    const double zipf = j.contains("zipf_exponent") ? as_number(j["zipf_exponent"], "zipf_exponent") : 2.0;
    std::size_t late = 3;
    json rest = j;
    if (j.contains("late_items") && j["late_items"].is_number()) {
      late = as_count(j["late_items"], "late_items");
      rest.erase("late_items");
    }
    if (grades < 2) throw ConfigError("preset two_band needs at least 2 grades");
    config = two_band_config(grades, campaigns, late, zipf);
    apply_common(rest, config);
  } else {
    check_keys(j, {"campaign_count", "campaign_size", "slabs_per_item", "cross_band_rate", "bands",
                   "late_items"},
               "config");
    field(j, "campaign_count", "config");
    apply_common(j, config);
    const auto& bands = field(j, "bands", "config");
    if (!bands.is_array()) throw ConfigError("bands must be an array");
    for (std::size_t b = 0; b < bands.size(); ++b) {
      const auto where = "bands[" + std::to_string(b) + "]";
      const auto& jb = bands[b];
      check_keys(jb, {"attribute", "interval", "items"}, where);
      AttributeBand band;
      band.attribute = as_string(field(jb, "attribute", where), where + ".attribute");
      const auto& interval = field(jb, "interval", where);
      if (!interval.is_array() || interval.size() != 2) {
        throw ConfigError(where + ".interval must be a [lower, upper] pair");
      }
      band.lower = as_number(interval[0], where + ".interval[0]");
      band.upper = as_number(interval[1], where + ".interval[1]");
      const auto& items = field(jb, "items", where);
      if (!items.is_array()) throw ConfigError(where + ".items must be an array");
      for (std::size_t i = 0; i < items.size(); ++i) {
        const auto wi = where + ".items[" + std::to_string(i) + "]";
        check_keys(items[i], {"label", "weight", "attributes"}, wi);
        BandItem item;
        item.label = as_string(field(items[i], "label", wi), wi + ".label");
        if (items[i].contains("weight")) item.weight = as_number(items[i]["weight"], wi + ".weight");
        const auto& attrs = field(items[i], "attributes", wi);
        if (!attrs.is_object()) throw ConfigError(wi + ".attributes must be an object");
        for (const auto& [name, value] : attrs.items()) {
          item.attributes[name] = as_number(value, wi + ".attributes." + name);
        }
        band.items.push_back(std::move(item));
      }
      config.bands.push_back(std::move(band));
    }
  }
  try {
    config.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  return config;
}

nlohmann::ordered_json planner_config_to_json(const PlannerConfig& c) {
  nlohmann::ordered_json j;
  j["campaign_count"] = c.campaign_count;
  j["campaign_size"] = {c.min_campaign_size, c.max_campaign_size};
  j["slabs_per_item"] = {c.min_slabs_per_item, c.max_slabs_per_item};
  j["cross_band_rate"] = c.cross_band_rate;
  auto& bands = j["bands"] = nlohmann::ordered_json::array();
  for (const auto& band : c.bands) {
    nlohmann::ordered_json jb;
    jb["attribute"] = band.attribute;
    jb["interval"] = {band.lower, band.upper};
    auto& items = jb["items"] = nlohmann::ordered_json::array();
    for (const auto& item : band.items) {
      nlohmann::ordered_json ji;
      ji["label"] = item.label;
      ji["weight"] = item.weight;
      ji["attributes"] = item.attributes;
      items.push_back(std::move(ji));
    }
    bands.push_back(std::move(jb));
  }
  auto& late = j["late_items"] = nlohmann::ordered_json::array();
  for (const auto& l : c.late_items) late.push_back({{"item", l.item}, {"first_campaign", l.first_campaign}});
  return j;
}

}  // namespace coselect::app
