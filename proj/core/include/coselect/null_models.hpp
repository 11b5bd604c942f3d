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
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "coselect/graph.hpp"
#include "coselect/random.hpp"

namespace coselect {

enum class NullModelKind { ErdosRenyi, DegreeSequence, Geometric };

/// "ER", "DEGSEQ", "GRG".
std::string_view to_string(NullModelKind kind);
/// Accepts the report names case-insensitively. Throws std::invalid_argument.
NullModelKind parse_null_model_kind(std::string_view name);

constexpr double kDefaultSwapMultiplier = 10.0;

struct ErdosRenyiParams {
  std::size_t n = 0;
  std::size_t m = 0;
};

struct SwitchParams {
  Graph source;
  double swap_multiplier = kDefaultSwapMultiplier;
};

struct GeometricParams {
  std::size_t n = 0;
  double radius = 0.0;
};

struct NullModelSpec {
  std::variant<ErdosRenyiParams, SwitchParams, GeometricParams> params;

  NullModelKind kind() const;
  /// Throws std::invalid_argument when the parameters violate their ranges.
  void validate() const;
};

inline std::size_t max_edges(std::size_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

/// G(n, m): exactly m distinct edges drawn uniformly without replacement.
Graph er_gnm(std::size_t n, std::size_t m, Engine& rng);

struct SwitchOutcome {
  Graph graph;
  std::size_t successful = 0;
  std::size_t attempts = 0;
};

/// Degree-preserving double-edge swaps until ceil(multiplier * m) succeed. Gives up after
/// 100x that many attempts (or immediately when no two edges are disjoint) and returns the
/// graph reached so far.
SwitchOutcome switch_randomize_detailed(const Graph& graph, double swap_multiplier, Engine& rng);
Graph switch_randomize(const Graph& graph, double swap_multiplier, Engine& rng);

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

struct GeometricGraph {
  Graph graph;
  std::vector<Point2> positions;
};

/// Uniform points in the unit square (non-toroidal); edge iff Euclidean distance <= radius.
GeometricGraph random_geometric(std::size_t n, double radius, Engine& rng);

struct CalibrationOptions {
  std::size_t samples_per_probe = 100;
  double relative_tolerance = 0.01;
  std::size_t max_steps = 40;
};

/// Bisection on the Monte Carlo mean edge count of random_geometric(n, r). All probes share
/// the same point sets, which makes the mean monotone in r.
double calibrate_radius(std::size_t n, std::size_t target_m, Engine& rng,
                        const CalibrationOptions& options = {});

/// Null model of `kind` matched to `empirical`: same (n, m) for ER, the graph itself for
/// switch randomisation, and a radius calibrated to m for GRG.
NullModelSpec matching_null_model(NullModelKind kind, const Graph& empirical, Engine& rng,
                                  double swap_multiplier = kDefaultSwapMultiplier);

/// One draw from the model.
Graph sample(const NullModelSpec& spec, Engine& rng);

}  // namespace coselect
