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
#include <string_view>
#include <vector>

namespace coselect {

/// One slab/order row of the production log.
struct ProductionRecord {
  std::size_t sequence_index = 0;
  std::string campaign_id;
  std::string item;
  std::map<std::string, double> attributes;

  friend bool operator==(const ProductionRecord&, const ProductionRecord&) = default;
};

/// A campaign viewed as a market basket: the deduplicated, sorted set of items it contains.
struct Transaction {
  std::string campaign_id;
  std::vector<std::string> items;

  bool contains(std::string_view item) const;
  friend bool operator==(const Transaction&, const Transaction&) = default;
};

struct TransactionSet {
  std::vector<Transaction> transactions;  // first-appearance order
  std::vector<std::string> item_universe; // sorted

  std::size_t size() const noexcept { return transactions.size(); }
  bool empty() const noexcept { return transactions.empty(); }
};

struct WindowAssignment {
  std::size_t window_count = 0;
  std::map<std::string, std::size_t> window_of;
  // Window index per transaction, aligned with TransactionSet::transactions.
  std::vector<std::size_t> transaction_window;

  std::vector<std::size_t> window_sizes() const;
};

inline const std::vector<std::string>& default_attribute_columns() {
  static const std::vector<std::string> columns = {"width_mm", "thickness_mm", "carbon",
                                                   "manganese", "silicon", "titanium"};
  return columns;
}

struct CsvSchema {
  std::string campaign_column = "campaign";
  std::string item_column = "grade";
  std::vector<std::string> attribute_columns = default_attribute_columns();
};

/// Column names of the header row (empty for empty input).
std::vector<std::string> csv_header(std::string_view csv_text);

/// Parses records in file order. Throws SchemaError for a missing column and
/// ParseError for empty ids or non-numeric / out-of-range attribute cells.
std::vector<ProductionRecord> parse_records(std::string_view csv_text, const CsvSchema& schema);

/// Inverse of parse_records for the given attribute columns; numbers are written with
/// round-trip precision.
std::string write_records_csv(const std::vector<ProductionRecord>& records,
                              const std::vector<std::string>& attribute_columns,
                              const std::string& campaign_column = "campaign",
                              const std::string& item_column = "grade");

TransactionSet group_campaigns(const std::vector<ProductionRecord>& records);

/// Splits campaigns in first-appearance order into `window_count` contiguous blocks;
/// the first N mod W windows receive one extra campaign.
WindowAssignment assign_windows(const TransactionSet& transactions, std::size_t window_count);

/// grades-per-campaign -> number of campaigns
std::map<std::size_t, std::size_t> campaign_diversity_histogram(const TransactionSet& transactions);

/// item -> number of records (slabs)
std::map<std::string, std::size_t> slabs_per_item_histogram(
    const std::vector<ProductionRecord>& records);

}  // namespace coselect
