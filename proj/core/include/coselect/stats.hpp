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
#include <span>
#include <string_view>
#include <vector>

namespace coselect {

enum class CorrelationKind { Pearson, Spearman, Kendall };

std::string_view to_string(CorrelationKind kind);
/// "pearson" | "spearman" | "kendall", case-insensitive. Throws std::invalid_argument.
CorrelationKind parse_correlation_kind(std::string_view name);

struct CorrelationResult {
  CorrelationKind kind = CorrelationKind::Pearson;
  double value = 0.0;
  double p_value = 1.0;  // two-sided
  std::size_t sample_size = 0;
};

/// Sample Pearson r with a two-sided p-value from Student's t on n-2 degrees of freedom.
/// Throws std::invalid_argument on length mismatch or n < 3, UndefinedCorrelationError when
/// either sequence is constant.
CorrelationResult pearson(std::span<const double> x, std::span<const double> y);

/// Pearson correlation of mid-ranks; same p-value approximation as pearson().
CorrelationResult spearman(std::span<const double> x, std::span<const double> y);

/// Kendall tau-b with a normal-approximation p-value (tie-corrected variance of S).
/// Throws UndefinedCorrelationError when either sequence is entirely tied.
CorrelationResult kendall(std::span<const double> x, std::span<const double> y);

CorrelationResult correlate(CorrelationKind kind, std::span<const double> x,
                            std::span<const double> y);

/// Average (1-based) ranks; tied values share the mean of their positions.
std::vector<double> mid_ranks(std::span<const double> values);

struct MeanStd {
  double mean = 0.0;
  double stddev = 0.0;  // population
};

MeanStd mean_and_population_std(std::span<const double> values);

/// (x - mean) / population std of the finite replicates. Throws InsufficientDataError with
/// fewer than two finite replicates and UndefinedZScoreError when their spread is zero.
double zscore(double x, std::span<const double> replicates);

}  // namespace coselect
