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

#include "coselect/stats.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

#include <boost/math/distributions/normal.hpp>
#include <boost/math/distributions/students_t.hpp>

#include "coselect/errors.hpp"

namespace coselect {
namespace {

void check_lengths(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw std::invalid_argument("correlation inputs differ in length (" + std::to_string(x.size()) +
                                " vs " + std::to_string(y.size()) + ")");
  }
  if (x.size() < 3) throw std::invalid_argument("correlation needs at least 3 observations");
}

bool is_constant(std::span<const double> v) {
  return std::adjacent_find(v.begin(), v.end(), std::not_equal_to<>()) == v.end();
}

double t_test_p_value(double r, std::size_t n) {
  if (std::abs(r) >= 1.0) return 0.0;
  const double df = static_cast<double>(n - 2);
  const double t = r * std::sqrt(df / ((1.0 - r) * (1.0 + r)));
  boost::math::students_t dist(df);
  return std::clamp(2.0 * boost::math::cdf(boost::math::complement(dist, std::abs(t))), 0.0, 1.0);
}

double pearson_value(std::span<const double> x, std::span<const double> y) {
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

int sign(double v) { return (v > 0.0) - (v < 0.0); }

}  // namespace

std::string_view to_string(CorrelationKind kind) {
  switch (kind) {
    case CorrelationKind::Pearson: return "pearson";
    case CorrelationKind::Spearman: return "spearman";
    case CorrelationKind::Kendall: return "kendall";
  }
  return "?";
}

CorrelationKind parse_correlation_kind(std::string_view name) {
  std::string lower(name);
  for (auto& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (lower == "pearson") return CorrelationKind::Pearson;
  if (lower == "spearman") return CorrelationKind::Spearman;
  if (lower == "kendall") return CorrelationKind::Kendall;
  throw std::invalid_argument("unknown correlation '" + std::string(name) +
                              "' (expected pearson, spearman or kendall)");
}

std::vector<double> mid_ranks(std::span<const double> values) {
  const auto n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(n);
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
    const double rank = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
    i = j + 1;
  }
  return ranks;
}

CorrelationResult pearson(std::span<const double> x, std::span<const double> y) {
  check_lengths(x, y);
  if (is_constant(x) || is_constant(y)) {
    throw UndefinedCorrelationError("pearson correlation undefined for a constant sequence");
  }
  CorrelationResult r;
  r.kind = CorrelationKind::Pearson;
  r.sample_size = x.size();
  r.value = pearson_value(x, y);
  r.p_value = t_test_p_value(r.value, x.size());
  return r;
}

CorrelationResult spearman(std::span<const double> x, std::span<const double> y) {
  check_lengths(x, y);
  if (is_constant(x) || is_constant(y)) {
    throw UndefinedCorrelationError("spearman correlation undefined for a constant sequence");
  }
  const auto rx = mid_ranks(x);
  const auto ry = mid_ranks(y);
  CorrelationResult r = pearson(rx, ry);
  r.kind = CorrelationKind::Spearman;
  return r;
}

CorrelationResult kendall(std::span<const double> x, std::span<const double> y) {
  check_lengths(x, y);
  const auto n = x.size();
  // S = concordant - discordant; untied_x / untied_y count pairs not tied in x / y.
  long long s = 0;
  long long untied_x = 0, untied_y = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const int sx = sign(x[i] - x[j]);
      const int sy = sign(y[i] - y[j]);
      s += sx * sy;
      untied_x += sx != 0;
      untied_y += sy != 0;
    }
  }
  if (untied_x == 0 || untied_y == 0) {
    throw UndefinedCorrelationError("kendall tau undefined for an all-tied sequence");
  }
  CorrelationResult r;
  r.kind = CorrelationKind::Kendall;
  r.sample_size = n;
  r.value = std::clamp(static_cast<double>(s) / std::sqrt(static_cast<double>(untied_x) *
                                                          static_cast<double>(untied_y)),
                       -1.0, 1.0);

  // Variance of S under independence with ties in both rankings.
  auto tie_terms = [](std::span<const double> v) {
    std::vector<double> sorted(v.begin(), v.end());
    std::sort(sorted.begin(), sorted.end());
    double a = 0.0, b = 0.0, c = 0.0;
    for (std::size_t i = 0; i < sorted.size();) {
      std::size_t j = i;
      while (j + 1 < sorted.size() && sorted[j + 1] == sorted[i]) ++j;
      const double t = static_cast<double>(j - i + 1);
      a += t * (t - 1.0) * (2.0 * t + 5.0);
      b += t * (t - 1.0);
      c += t * (t - 1.0) * (t - 2.0);
      i = j + 1;
    }
    return std::array<double, 3>{a, b, c};
  };
  const auto tx = tie_terms(x);
  const auto ty = tie_terms(y);
  const double nd = static_cast<double>(n);
  const double v0 = nd * (nd - 1.0) * (2.0 * nd + 5.0);
  const double var_s = (v0 - tx[0] - ty[0]) / 18.0 + tx[1] * ty[1] / (2.0 * nd * (nd - 1.0)) +
                       tx[2] * ty[2] / (9.0 * nd * (nd - 1.0) * (nd - 2.0));
  if (var_s > 0.0) {
    const double z = static_cast<double>(s) / std::sqrt(var_s);
    boost::math::normal_distribution<double> normal;
    r.p_value =
        std::clamp(2.0 * boost::math::cdf(boost::math::complement(normal, std::abs(z))), 0.0, 1.0);
  }
  return r;
}

CorrelationResult correlate(CorrelationKind kind, std::span<const double> x,
                            std::span<const double> y) {
  switch (kind) {
    case CorrelationKind::Pearson: return pearson(x, y);
    case CorrelationKind::Spearman: return spearman(x, y);
    case CorrelationKind::Kendall: return kendall(x, y);
  }
  throw std::invalid_argument("unknown correlation kind");
}

MeanStd mean_and_population_std(std::span<const double> values) {
  MeanStd out;
  if (values.empty()) return out;
  const double n = static_cast<double>(values.size());
  out.mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
  double ss = 0.0;
  for (double v : values) ss += (v - out.mean) * (v - out.mean);
  out.stddev = std::sqrt(ss / n);
  return out;
}

double zscore(double x, std::span<const double> replicates) {
  std::vector<double> finite;
  finite.reserve(replicates.size());
  for (double v : replicates) {
    if (std::isfinite(v)) finite.push_back(v);
  }
  if (finite.size() < 2) throw InsufficientDataError("z-score needs at least two finite replicates");
  if (is_constant(finite)) throw UndefinedZScoreError("z-score undefined: replicate spread is zero");
  const auto [mean, sd] = mean_and_population_std(finite);
  return (x - mean) / sd;
}

}  // namespace coselect
