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

#include "app/report.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "app/digest.hpp"
#include "app/format.hpp"

namespace coselect::app {
namespace {

using ojson = nlohmann::ordered_json;

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

ojson means_json(const std::map<std::string, double>& means) {
  ojson j = ojson::object();
  for (const auto& [k, v] : means) j[k] = v;
  return j;
}

ojson correlation_json(const MaybeCorrelation& c, bool p_values) {
  ojson j;
  if (c.result) {
    j["value"] = c.result->value;
    if (p_values) j["p_value"] = c.result->p_value;
    j["n"] = c.result->sample_size;
  } else {
    j["value"] = nullptr;
    if (p_values) j["p_value"] = nullptr;
    j["undefined"] = c.reason;
  }
  return j;
}

ojson subject_json(const SubjectStage& s, bool p_values) {
  ojson j;
  j["items"] = s.items;
  j["nodes"] = s.items.size();
  j["edges"] = s.edges;
  j["correlations"] = {{"COR_D_BC", correlation_json(s.degree_vs_betweenness, p_values)},
                       {"COR_CC_BC", correlation_json(s.clustering_vs_betweenness, p_values)}};
  return j;
}

ojson group_json(const GroupSummary& g) {
  ojson j;
  j["items"] = g.items;
  j["item_count"] = g.item_count;
  j["slab_count"] = g.slab_count;
  j["campaign_count"] = g.campaign_count;
  j["slab_frequency"] = g.slab_frequency;
  j["campaign_frequency"] = g.campaign_frequency;
  j["attribute_means"] = means_json(g.attribute_means);
  return j;
}

ojson optional_number(const std::optional<double>& v) {
  return v ? ojson(*v) : ojson(nullptr);
}

}  // namespace

InputDigest digest_input(std::string_view file_bytes, const std::vector<ProductionRecord>& records) {
  InputDigest d;
  d.sha256 = sha256_hex(file_bytes);
  d.bytes = file_bytes.size();
  d.rows = records.size();
  std::set<std::string_view> campaigns, items;
  for (const auto& r : records) {
    campaigns.insert(r.campaign_id);
    items.insert(r.item);
  }
  d.campaigns = campaigns.size();
  d.items = items.size();
  return d;
}

ojson build_report(const AnalysisResult& result, const AnalysisOptions& options,
                   const CsvSchema& schema, const InputDigest& digest) {
  ojson report;
  report["format"] = "coselect-report/1";
  report["input"] = {{"sha256", digest.sha256},
                     {"bytes", digest.bytes},
                     {"rows", digest.rows},
                     {"campaigns", digest.campaigns},
                     {"items", digest.items}};

  ojson config;
  config["campaign_column"] = schema.campaign_column;
  config["item_column"] = schema.item_column;
  config["attribute_columns"] = schema.attribute_columns;
  config["min_support"] = options.thresholds.min_support;
  config["min_lift"] = options.thresholds.min_lift;
  config["windows"] = options.windows;
  config["ensemble"] = options.ensemble;
  auto& models = config["models"] = ojson::array();
  for (auto m : options.models) models.push_back(std::string(to_string(m)));
  config["correlation"] = std::string(to_string(options.corr));
  config["seed"] = options.seed;
  config["prune_floor"] = options.prune_floor;
  config["swap_multiplier"] = options.swap_multiplier;
  config["component_selection"] = options.selection.to_string();
  config["p_values"] = options.p_values;
  report["config"] = std::move(config);

  auto& stages = report["stages"] = ojson::array();
  for (std::size_t s = 0; s < result.stages.size(); ++s) {
    const auto& st = result.stages[s];
    ojson js;
    js["stage"] = s;
    js["campaigns"] = st.campaigns;
    js["nodes"] = st.nodes;
    js["edges"] = st.edges;
    auto& comps = js["components"] = ojson::array();
    for (const auto& c : st.components) {
      comps.push_back({{"items", c.items},
                       {"nodes", c.items.size()},
                       {"edges", c.edges},
                       {"attribute_means", means_json(c.attribute_means)}});
    }
    js["component"] = subject_json(st.component, options.p_values);
    js["core"] = subject_json(st.core, options.p_values);
    ojson communities;
    communities["modularity"] = st.modularity;
    auto& groups = communities["groups"] = ojson::array();
    for (const auto& g : st.groups) groups.push_back(group_json(g));
    js["communities"] = std::move(communities);
    stages.push_back(std::move(js));
  }

  ojson selection;
  selection["rule"] = options.selection.to_string();
  selection["component_index"] = result.selected_component;
  auto& comms = selection["communities"] = ojson::array();
  for (std::size_t g = 0; g < result.communities.size(); ++g) {
    comms.push_back({{"items", result.communities[g]}, {"kept", bool(result.community_kept[g])}});
  }
  selection["core_items"] = result.core_items;
  report["selection"] = std::move(selection);

  ojson table;
  if (!result.stages.empty()) {
    const auto& first = result.stages.front();
    const auto& last = result.stages.back();
    for (const char* subject : {kSubjectComponent, kSubjectCore}) {
      const bool is_core = std::string_view(subject) == kSubjectCore;
      const auto& a = is_core ? first.core : first.component;
      const auto& b = is_core ? last.core : last.component;
      table[subject] = {
          {"first", {{"COR_D_BC", correlation_json(a.degree_vs_betweenness, options.p_values)},
                     {"COR_CC_BC", correlation_json(a.clustering_vs_betweenness, options.p_values)}}},
          {"final", {{"COR_D_BC", correlation_json(b.degree_vs_betweenness, options.p_values)},
                     {"COR_CC_BC", correlation_json(b.clustering_vs_betweenness, options.p_values)}}}};
    }
  }
  report["correlation_table"] = std::move(table);

  auto& cells = report["ensembles"] = ojson::array();
  for (const auto& cell : result.cells) {
    const auto& s = cell.summary;
    ojson j;
    j["subject"] = cell.subject;
    j["stage"] = cell.stage;
    j["model"] = s.model;
    j["statistic"] = s.statistic;
    j["seed"] = cell.seed;
    j["empirical"] = optional_number(s.empirical);
    const bool have_spread = !s.replicate_values.empty();
    j["mean"] = have_spread ? ojson(s.mean) : ojson(nullptr);
    j["stddev"] = have_spread ? ojson(s.stddev) : ojson(nullptr);
    j["z"] = optional_number(s.z);
    j["replicates"] = s.replicates;
    j["dropped"] = s.dropped;
    j["status"] = std::string(to_string(s.status));
    if (!s.reason.empty()) j["reason"] = s.reason;
    cells.push_back(std::move(j));
  }

  ojson ages = ojson::object();
  for (const auto& [item, age] : result.ages) ages[item] = age;
  report["node_ages"] = std::move(ages);
  return report;
}

std::string zscores_csv(const AnalysisResult& result) {
  std::ostringstream out;
  out << "subject,stage,model,statistic,correlation,empirical,mean,stddev,z,replicates,dropped,"
         "status,reason\n";
  auto opt = [](const std::optional<double>& v) { return v ? format_double(*v) : std::string(); };
  for (const auto& cell : result.cells) {
    const auto& s = cell.summary;
    const bool have_spread = !s.replicate_values.empty();
    out << cell.subject << ',' << cell.stage << ',' << s.model << ',' << s.statistic << ','
        << to_string(s.kind) << ',' << opt(s.empirical) << ','
        << (have_spread ? format_double(s.mean) : "") << ','
        << (have_spread ? format_double(s.stddev) : "") << ',' << opt(s.z) << ',' << s.replicates
        << ',' << s.dropped << ',' << to_string(s.status) << ',' << csv_field(s.reason) << '\n';
  }
  return out.str();
}

std::string edges_csv(const CoSelectionGraph& network, const TransactionSet& transactions) {
  std::map<std::pair<std::string, std::string>, RuleStats> rules;
  if (!transactions.empty()) {
    for (auto& r : mine_pair_rules(transactions)) {
      auto key = std::make_pair(r.item_a, r.item_b);
      rules.emplace(std::move(key), std::move(r));
    }
  }
  std::ostringstream out;
  out << "source,target,pair_count,support,lift\n";
  const auto& g = network.graph;
  for (const auto& e : g.edges()) {
    auto a = g.label(e.u);
    auto b = g.label(e.v);
    if (b < a) std::swap(a, b);
    out << csv_field(a) << ',' << csv_field(b) << ',';
    if (auto it = rules.find({a, b}); it != rules.end()) {
      out << it->second.pair_count << ',' << format_double(it->second.support_pair);
    } else {
      out << ',';
    }
    out << ',' << format_double(network.edge_lift.at(e)) << '\n';
  }
  return out.str();
}

std::string nodes_csv(const GraphDocument& doc) {
  std::ostringstream out;
  out << "id";
  for (const auto& [name, type] : doc.node_keys) out << ',' << csv_field(name);
  out << '\n';
  for (const auto& node : doc.nodes) {
    out << csv_field(node.id);
    for (const auto& [name, type] : doc.node_keys) {
      out << ',';
      if (auto it = node.attributes.find(name); it != node.attributes.end()) out << it->second;
    }
    out << '\n';
  }
  return out.str();
}

std::string campaign_diversity_csv(const TransactionSet& transactions) {
  std::ostringstream out;
  out << "items_per_campaign,campaigns\n";
  for (const auto& [size, count] : campaign_diversity_histogram(transactions)) {
    out << size << ',' << count << '\n';
  }
  return out.str();
}

std::string slabs_per_item_csv(const std::vector<ProductionRecord>& records) {
  const auto hist = slabs_per_item_histogram(records);
  std::vector<std::pair<std::string, std::size_t>> rows(hist.begin(), hist.end());
  std::stable_sort(rows.begin(), rows.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  std::ostringstream out;
  out << "rank,item,slabs\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out << i + 1 << ',' << csv_field(rows[i].first) << ',' << rows[i].second << '\n';
  }
  return out.str();
}

NodeAnnotations final_annotations(const AnalysisResult& result) {
  NodeAnnotations ann;
  if (result.stages.empty()) return ann;
  const auto& comps = result.stages.back().components;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    for (const auto& item : comps[c].items) ann[item]["component"] = static_cast<long long>(c);
  }
  for (std::size_t g = 0; g < result.communities.size(); ++g) {
    for (const auto& item : result.communities[g]) ann[item]["community"] = static_cast<long long>(g);
  }
  const std::set<std::string> core(result.core_items.begin(), result.core_items.end());
  for (auto& [item, a] : ann) {
    if (auto it = result.ages.find(item); it != result.ages.end()) {
      a["age"] = static_cast<long long>(it->second);
    }
    a["core"] = core.count(item) ? 1 : 0;
  }
  return ann;
}

}  // namespace coselect::app
