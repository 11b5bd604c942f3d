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

#include "app/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "app/graph_io.hpp"
#include "app/pipeline.hpp"
#include "app/planner_json.hpp"
#include "app/report.hpp"
#include "coselect/errors.hpp"
#include "coselect/metrics.hpp"
#include "json.hpp"

namespace coselect::app {
namespace {

namespace fs = std::filesystem;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("error while reading '" + path + "'");
  return buf.str();
}

void write_file(const fs::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw IoError("error while writing '" + path.string() + "'");
}

fs::path prepare_out_dir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) throw IoError("cannot create output directory '" + dir + "'");
  return fs::path(dir);
}

struct InputOptions {
  std::string input;
  std::string out_dir;
  CsvSchema schema;
  MiningThresholds thresholds;
};

void add_input_options(CLI::App& cmd, InputOptions& o) {
  cmd.add_option("input", o.input, "Production records (CSV)")->required();
  cmd.add_option("--out", o.out_dir, "Output directory")->required();
  cmd.add_option("--item-column", o.schema.item_column, "Item column name")
      ->capture_default_str();
  cmd.add_option("--campaign-column", o.schema.campaign_column, "Campaign column name")
      ->capture_default_str();
  cmd.add_option("--attributes", o.schema.attribute_columns, "Numeric attribute columns")
      ->delimiter(',')
      ->capture_default_str();
  cmd.add_option("--min-support", o.thresholds.min_support, "Minimum item and pair support")
      ->capture_default_str();
  cmd.add_option("--min-lift", o.thresholds.min_lift, "Minimum pair lift")->capture_default_str();
}

struct LoadedInput {
  std::string bytes;
  std::vector<ProductionRecord> records;
};

LoadedInput load(const InputOptions& o) {
  LoadedInput in;
  in.bytes = read_file(o.input);
  in.records = parse_records(in.bytes, o.schema);
  return in;
}

void write_network(const fs::path& dir, const CoSelectionGraph& network,
                   const TransactionSet& transactions, const NodeAnnotations& annotations) {
  const auto doc = make_document(network, annotations);
  write_file(dir / "network.graphml", to_graphml(doc));
  write_file(dir / "network.dot", to_dot(doc));
  write_file(dir / "nodes.csv", nodes_csv(doc));
  write_file(dir / "edges.csv", edges_csv(network, transactions));
}

void write_histograms(const fs::path& dir, const TransactionSet& transactions,
                      const std::vector<ProductionRecord>& records) {
  write_file(dir / "hist_campaign_diversity.csv", campaign_diversity_csv(transactions));
  write_file(dir / "hist_slabs_per_grade.csv", slabs_per_item_csv(records));
}

// --- mine -------------------------------------------------------------------------------

struct MineOptions {
  InputOptions input;
  std::size_t windows = 0;
  bool communities = false;
};

void cmd_mine(const MineOptions& o, std::ostream& out) {
  if (!(o.input.thresholds.min_support >= 0.0 && o.input.thresholds.min_support <= 1.0)) {
    throw std::invalid_argument("--min-support must lie in [0, 1]");
  }
  const auto in = load(o.input);
  const auto dir = prepare_out_dir(o.input.out_dir);
  const auto tx = group_campaigns(in.records);
  const auto network = build_graph(tx, in.records, o.input.thresholds);
  const auto& g = network.graph;

  NodeAnnotations ann;
  const auto comps = connected_components(g);
  long long next_community = 0;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    for (NodeId v : comps[c]) ann[g.label(v)]["component"] = static_cast<long long>(c);
    if (o.communities) {
      const auto sub = g.induced_subgraph(comps[c]);
      for (const auto& group : girvan_newman(sub).communities) {
        for (NodeId v : group) ann[sub.label(v)]["community"] = next_community;
        ++next_community;
      }
    }
  }
  if (o.windows > 0) {
    const auto series = stage_networks(in.records, tx, assign_windows(tx, o.windows),
                                       o.input.thresholds);
    for (const auto& [item, age] : node_age(series)) ann[item]["age"] = static_cast<long long>(age);
  }
  write_network(dir, network, tx, ann);
  write_histograms(dir, tx, in.records);
  out << "mined " << g.node_count() << " items, " << g.edge_count() << " edges, "
      << comps.size() << " components from " << tx.size() << " campaigns into "
      << dir.string() << '\n';
}

// --- analyze ----------------------------------------------------------------------------

struct AnalyzeCli {
  InputOptions input;
  AnalysisOptions analysis;
  std::vector<std::string> models = {"er", "degseq", "grg"};
  std::string corr = "spearman";
  std::string component = "largest";
};

void cmd_analyze(AnalyzeCli& o, std::ostream& out) {
  o.analysis.thresholds = o.input.thresholds;
  o.analysis.models.clear();
  for (const auto& m : o.models) o.analysis.models.push_back(parse_null_model_kind(m));
  o.analysis.corr = parse_correlation_kind(o.corr);
  o.analysis.selection = ComponentSelection::parse(o.component);
  o.analysis.validate();

  const auto in = load(o.input);
  const auto dir = prepare_out_dir(o.input.out_dir);
  const auto result = analyze(in.records, o.analysis);
  const auto digest = digest_input(in.bytes, in.records);

  write_file(dir / "report.json",
             build_report(result, o.analysis, o.input.schema, digest).dump(2) + "\n");
  write_file(dir / "zscores.csv", zscores_csv(result));
  write_network(dir, result.series.stages.back(), result.transactions, final_annotations(result));
  write_histograms(dir, result.transactions, in.records);

  std::size_t defined = 0, small = 0;
  for (const auto& c : result.cells) {
    if (!c.summary.z) continue;
    ++defined;
    if (std::abs(*c.summary.z) < 2.0) ++small;
  }
  const auto& last = result.stages.back();
  out << "analyzed " << result.transactions.size() << " campaigns in " << result.stages.size()
      << " stages; final network " << last.nodes << " items, " << last.edges << " edges, "
      << last.components.size() << " components; " << defined << " of " << result.cells.size()
      << " ensemble cells defined, " << small << " with |z| < 2\n";
}

// --- synth ------------------------------------------------------------------------------

struct SynthCli {
  std::string config;
  std::string output;
  std::uint64_t seed = 1;
};

void cmd_synth(const SynthCli& o, std::ostream& out) {
  const auto text = read_file(o.config);
  const auto config = planner_config_from_json(nlohmann::json::parse(text));
  Engine rng = SeededRng(o.seed).engine();
  const auto records = generate(config, rng);

  // Default columns first (in their canonical order), then any extra attributes.
  std::vector<std::string> columns;
  const auto names = config.attribute_names();
  for (const auto& c : default_attribute_columns()) {
    if (std::find(names.begin(), names.end(), c) != names.end()) columns.push_back(c);
  }
  for (const auto& n : names) {
    if (std::find(columns.begin(), columns.end(), n) == columns.end()) columns.push_back(n);
  }
  const fs::path path(o.output);
  if (path.has_parent_path()) prepare_out_dir(path.parent_path().string());
  write_file(path, write_records_csv(records, columns));
  out << "generated " << records.size() << " records in " << config.campaign_count
      << " campaigns into " << o.output << '\n';
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Co-selection network analysis of production campaigns", "coselect"};
  app.set_version_flag("--version", "coselect 0.1.0");
  app.require_subcommand(1);

  MineOptions mine;
  auto* mine_cmd = app.add_subcommand("mine", "Build the co-selection network and histograms");
  add_input_options(*mine_cmd, mine.input);
  mine_cmd->add_option("--windows", mine.windows, "Stage count for node ages (0 = none)")
      ->capture_default_str();
  mine_cmd->add_flag("--communities", mine.communities, "Annotate Girvan-Newman communities");

  AnalyzeCli analyze_opts;
  auto* analyze_cmd = app.add_subcommand("analyze", "Run the full staged analysis");
  add_input_options(*analyze_cmd, analyze_opts.input);
  auto& a = analyze_opts.analysis;
  analyze_cmd->add_option("--windows", a.windows, "Number of observation windows")
      ->capture_default_str();
  analyze_cmd->add_option("--ensemble", a.ensemble, "Replicates per null-model ensemble")
      ->capture_default_str();
  analyze_cmd->add_option("--models", analyze_opts.models, "Null models: er, degseq, grg")
      ->delimiter(',')
      ->capture_default_str();
  analyze_cmd->add_option("--corr", analyze_opts.corr, "pearson | spearman | kendall")
      ->capture_default_str();
  analyze_cmd->add_option("--seed", a.seed, "Base seed")->capture_default_str();
  analyze_cmd->add_option("--prune-floor", a.prune_floor, "Minimum community slab frequency")
      ->capture_default_str();
  analyze_cmd->add_option("--component", analyze_opts.component,
                          "largest | lowest:ATTR | highest:ATTR")
      ->capture_default_str();
  analyze_cmd->add_option("--swap-multiplier", a.swap_multiplier,
                          "Successful swaps per edge for degree-preserving randomisation")
      ->capture_default_str();
  bool no_p_values = false;
  analyze_cmd->add_flag("--no-p-values", no_p_values, "Omit correlation p-values from the report");
  analyze_cmd->add_option("--threads", a.threads, "Worker threads (0 = all cores)")
      ->capture_default_str();

  SynthCli synth;
  auto* synth_cmd = app.add_subcommand("synth", "Generate synthetic production records");
  synth_cmd->add_option("config", synth.config, "Planner configuration (JSON)")->required();
  synth_cmd->add_option("output", synth.output, "Output CSV")->required();
  synth_cmd->add_option("--seed", synth.seed, "Seed")->capture_default_str();

  std::vector<const char*> argv;
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*mine_cmd) cmd_mine(mine, out);
    if (*analyze_cmd) {
      analyze_opts.analysis.p_values = !no_p_values;
      cmd_analyze(analyze_opts, out);
    }
    if (*synth_cmd) cmd_synth(synth, out);
    return kExitOk;
  } catch (const SchemaError& e) {
    err << "schema error: " << e.what() << '\n';
    return kExitData;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitData;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << '\n';
    return kExitData;
  } catch (const nlohmann::json::parse_error& e) {
    err << "malformed JSON: " << e.what() << '\n';
    return kExitData;
  } catch (const InsufficientDataError& e) {
    err << "insufficient data: " << e.what() << '\n';
    return kExitData;
  } catch (const GenerationError& e) {
    err << "generation error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "invalid argument: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (...) {
    err << "internal error\n";
    return kExitInternal;
  }
}

}  // namespace coselect::app
