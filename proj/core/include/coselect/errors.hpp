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

namespace coselect {

// Required column missing from a CSV header.
class SchemaError : public std::runtime_error {
 public:
  SchemaError(const std::string& column)
      : std::runtime_error("missing required column '" + column + "'"), column_(column) {}
  const std::string& column() const noexcept { return column_; }

 private:
  std::string column_;
};

// Malformed cell in a data row. Row numbers are 1-based and count the header as row 1.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t row, const std::string& what)
      : std::runtime_error("row " + std::to_string(row) + ": " + what), row_(row) {}
  std::size_t row() const noexcept { return row_; }

 private:
  std::size_t row_;
};

class LookupError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Lift with a zero singleton support.
class UndefinedLiftError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Correlation of a constant (or all-tied) sequence.
class UndefinedCorrelationError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class InsufficientDataError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// z-score against an ensemble with zero spread.
class UndefinedZScoreError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// More than half of an ensemble's replicates produced no value.
class EnsembleDegenerateError : public std::runtime_error {
 public:
  EnsembleDegenerateError(const std::string& statistic, std::size_t dropped, std::size_t total)
      : std::runtime_error("ensemble degenerate for " + statistic + ": " + std::to_string(dropped) +
                           " of " + std::to_string(total) + " replicates undefined"),
        statistic_(statistic) {}
  const std::string& statistic() const noexcept { return statistic_; }

 private:
  std::string statistic_;
};

class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace coselect
