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

#include "coselect/null_models.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace coselect {
namespace {

constexpr double kUnitSquareDiameter = 1.4142135623730951;

std::uint64_t key(NodeId a, NodeId b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

// Maps a linear index in [0, n(n-1)/2) onto the pair (u, v), u < v, in row-major order.
Edge pair_from_index(std::uint64_t k, std::size_t n) {
  std::uint64_t u = 0;
  std::uint64_t row = n - 1;
  while (k >= row) {
    k -= row;
    ++u;
    --row;
  }
  return Edge(static_cast<NodeId>(u), static_cast<NodeId>(u + 1 + k));
}

bool has_disjoint_edge_pair(const std::vector<Edge>& edges) {
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const auto& a = edges[i];
      const auto& b = edges[j];
      if (a.u != b.u && a.u != b.v && a.v != b.u && a.v != b.v) return true;
    }
  }
  return false;
}

std::vector<Point2> uniform_points(std::size_t n, Engine& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Point2> pts(n);
  for (auto& p : pts) {
    p.x = unit(rng);
    p.y = unit(rng);
  }
  return pts;
}

}  // namespace

std::string_view to_string(NullModelKind kind) {
  switch (kind) {
    case NullModelKind::ErdosRenyi: return "ER";
    case NullModelKind::DegreeSequence: return "DEGSEQ";
    case NullModelKind::Geometric: return "GRG";
  }
  return "?";
}

NullModelKind parse_null_model_kind(std::string_view name) {
  std::string upper(name);
  for (auto& c : upper) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (upper == "ER") return NullModelKind::ErdosRenyi;
  if (upper == "DEGSEQ") return NullModelKind::DegreeSequence;
  if (upper == "GRG") return NullModelKind::Geometric;
  throw std::invalid_argument("unknown null model '" + std::string(name) +
                              "' (expected er, degseq or grg)");
}

NullModelKind NullModelSpec::kind() const {
  switch (params.index()) {
    case 0: return NullModelKind::ErdosRenyi;
    case 1: return NullModelKind::DegreeSequence;
    default: return NullModelKind::Geometric;
  }
}

void NullModelSpec::validate() const {
  if (const auto* er = std::get_if<ErdosRenyiParams>(&params)) {
    if (er->m > max_edges(er->n)) {
      throw std::invalid_argument("G(n,m): m = " + std::to_string(er->m) + " exceeds n(n-1)/2 = " +
                                  std::to_string(max_edges(er->n)));
    }
  } else if (const auto* sw = std::get_if<SwitchParams>(&params)) {
    if (!(sw->swap_multiplier > 0.0) || !std::isfinite(sw->swap_multiplier)) {
      throw std::invalid_argument("swap multiplier must be positive");
    }
  } else if (const auto* geo = std::get_if<GeometricParams>(&params)) {
    if (!(geo->radius >= 0.0)) throw std::invalid_argument("radius must be non-negative");
  }
}

Graph er_gnm(std::size_t n, std::size_t m, Engine& rng) {
  const std::uint64_t total = max_edges(n);
  if (m > total) {
    throw std::invalid_argument("G(n,m): m = " + std::to_string(m) + " exceeds n(n-1)/2 = " +
                                std::to_string(total));
  }
  // Floyd's algorithm: a uniform m-subset of [0, total).
  std::unordered_set<std::uint64_t> chosen;
  chosen.reserve(m * 2);
  std::vector<std::uint64_t> picks;
  picks.reserve(m);
  for (std::uint64_t j = total - m; j < total; ++j) {
    std::uniform_int_distribution<std::uint64_t> dist(0, j);
    const auto t = dist(rng);
    if (chosen.insert(t).second) {
      picks.push_back(t);
    } else {
      chosen.insert(j);
      picks.push_back(j);
    }
  }
  std::sort(picks.begin(), picks.end());
  std::vector<Edge> edges;
  edges.reserve(m);
  for (auto k : picks) edges.push_back(pair_from_index(k, n));
  return Graph::with_numbered_nodes(n, edges);
}

SwitchOutcome switch_randomize_detailed(const Graph& graph, double swap_multiplier, Engine& rng) {
  if (!(swap_multiplier > 0.0)) throw std::invalid_argument("swap multiplier must be positive");
  std::vector<Edge> edges = graph.edges();
  SwitchOutcome out;
  const auto m = edges.size();
  if (m < 2 || !has_disjoint_edge_pair(edges)) {
    out.graph = graph;
    return out;
  }
  const auto target = static_cast<std::size_t>(std::ceil(swap_multiplier * static_cast<double>(m)));
  const std::size_t max_attempts = 100 * target;

  std::unordered_set<std::uint64_t> present;
  present.reserve(m * 2);
  for (const auto& e : edges) present.insert(key(e.u, e.v));

  std::uniform_int_distribution<std::size_t> pick(0, m - 1);
  std::bernoulli_distribution coin(0.5);
  while (out.successful < target && out.attempts < max_attempts) {
    ++out.attempts;
    const auto i = pick(rng);
    const auto j = pick(rng);
    if (i == j) continue;
    NodeId a = edges[i].u, b = edges[i].v;
    NodeId c = edges[j].u, d = edges[j].v;
    if (coin(rng)) std::swap(c, d);
    if (a == c || a == d || b == c || b == d) continue;
    // (a,b),(c,d) -> (a,d),(c,b)
    if (present.count(key(a, d)) != 0 || present.count(key(c, b)) != 0) continue;
    present.erase(key(a, b));
    present.erase(key(c, d));
    present.insert(key(a, d));
    present.insert(key(c, b));
    edges[i] = Edge(a, d);
    edges[j] = Edge(c, b);
    ++out.successful;
  }
  out.graph = Graph(graph.labels(), edges);
  return out;
}

Graph switch_randomize(const Graph& graph, double swap_multiplier, Engine& rng) {
  return switch_randomize_detailed(graph, swap_multiplier, rng).graph;
}

GeometricGraph random_geometric(std::size_t n, double radius, Engine& rng) {
  if (!(radius >= 0.0)) throw std::invalid_argument("radius must be non-negative");
  GeometricGraph out;
  out.positions = uniform_points(n, rng);
  const double r2 = radius * radius;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double dx = out.positions[i].x - out.positions[j].x;
      const double dy = out.positions[i].y - out.positions[j].y;
      if (dx * dx + dy * dy <= r2) edges.emplace_back(static_cast<NodeId>(i), static_cast<NodeId>(j));
    }
  }
  out.graph = Graph::with_numbered_nodes(n, edges);
  return out;
}

double calibrate_radius(std::size_t n, std::size_t target_m, Engine& rng,
                        const CalibrationOptions& options) {
  const auto max_m = max_edges(n);
  if (target_m > max_m) {
    throw std::invalid_argument("target edge count " + std::to_string(target_m) +
                                " exceeds n(n-1)/2 = " + std::to_string(max_m));
  }
  if (target_m == 0) return 0.0;
  if (target_m == max_m) return kUnitSquareDiameter;
  const std::size_t samples = std::max<std::size_t>(options.samples_per_probe, 1);

  // Squared pairwise distances of every sample, sorted, so each probe is a binary search.
  std::vector<std::vector<double>> dist2(samples);
  for (auto& d : dist2) {
    const auto pts = uniform_points(n, rng);
    d.reserve(max_m);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const double dx = pts[i].x - pts[j].x;
        const double dy = pts[i].y - pts[j].y;
        d.push_back(dx * dx + dy * dy);
      }
    }
    std::sort(d.begin(), d.end());
  }
  auto mean_edges = [&](double r) {
    const double r2 = r * r;
    double total = 0.0;
    for (const auto& d : dist2) {
      total += static_cast<double>(std::upper_bound(d.begin(), d.end(), r2) - d.begin());
    }
    return total / static_cast<double>(samples);
  };

  const double target = static_cast<double>(target_m);
  double lo = 0.0;
  double hi = kUnitSquareDiameter;
  double r = 0.5 * (lo + hi);
  for (std::size_t step = 0; step < options.max_steps; ++step) {
    r = 0.5 * (lo + hi);
    const double mean = mean_edges(r);
    if (std::abs(mean - target) <= options.relative_tolerance * target) break;
    if (mean < target) {
      lo = r;
    } else {
      hi = r;
    }
  }
  return r;
}

NullModelSpec matching_null_model(NullModelKind kind, const Graph& empirical, Engine& rng,
                                  double swap_multiplier) {
  switch (kind) {
    case NullModelKind::ErdosRenyi:
      return {ErdosRenyiParams{empirical.node_count(), empirical.edge_count()}};
    case NullModelKind::DegreeSequence:
      return {SwitchParams{empirical, swap_multiplier}};
    case NullModelKind::Geometric:
      return {GeometricParams{empirical.node_count(),
                              calibrate_radius(empirical.node_count(), empirical.edge_count(), rng)}};
  }
  throw std::invalid_argument("unknown null model kind");
}

Graph sample(const NullModelSpec& spec, Engine& rng) {
  spec.validate();
  return std::visit(
      [&](const auto& p) -> Graph {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, ErdosRenyiParams>) {
          return er_gnm(p.n, p.m, rng);
        } else if constexpr (std::is_same_v<P, SwitchParams>) {
          return switch_randomize(p.source, p.swap_multiplier, rng);
        } else {
          return random_geometric(p.n, p.radius, rng).graph;
        }
      },
      spec.params);
}

}  // namespace coselect
