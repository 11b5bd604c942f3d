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

#include "coselect/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "coselect/errors.hpp"

namespace coselect {
namespace {

// Splits one CSV line into fields. Handles double-quoted fields with "" escapes.
std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field.push_back(c);
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else {
      field.push_back(c);
    }
  }
  fields.push_back(std::move(field));
  return fields;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

// Yields non-blank lines together with their 1-based line numbers.
std::vector<std::pair<std::size_t, std::string_view>> csv_lines(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string_view>> lines;
  // Strip a UTF-8 byte order mark.
  if (text.size() >= 3 && text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    auto end = text.find('\n');
    std::string_view line = text.substr(0, end);
    if (!trim(line).empty()) lines.emplace_back(line_no, line);
    if (end == std::string_view::npos) break;
    text.remove_prefix(end + 1);
  }
  return lines;
}

bool parse_double(std::string_view text, double& out) {
  text = trim(text);
  if (text.empty()) return false;
  if (text.front() == '+') text.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc() && ptr == text.data() + text.size();
}

bool must_be_positive(const std::string& column) {
  return column == "width_mm" || column == "thickness_mm";
}

std::string quote_csv(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

bool Transaction::contains(std::string_view item) const {
  return std::binary_search(items.begin(), items.end(), item);
}

std::vector<std::size_t> WindowAssignment::window_sizes() const {
  std::vector<std::size_t> sizes(window_count, 0);
  for (auto w : transaction_window) ++sizes.at(w);
  return sizes;
}

std::vector<std::string> csv_header(std::string_view csv_text) {
  auto lines = csv_lines(csv_text);
  if (lines.empty()) return {};
  std::vector<std::string> header;
  for (auto& f : split_csv_line(lines.front().second)) header.emplace_back(trim(f));
  return header;
}

std::vector<ProductionRecord> parse_records(std::string_view csv_text, const CsvSchema& schema) {
  auto lines = csv_lines(csv_text);
  if (lines.empty()) throw SchemaError(schema.campaign_column);

  std::vector<std::string> header;
  for (auto& f : split_csv_line(lines.front().second)) header.emplace_back(trim(f));
  auto column_index = [&](const std::string& name) {
    auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) throw SchemaError(name);
    return static_cast<std::size_t>(it - header.begin());
  };
  const std::size_t campaign_col = column_index(schema.campaign_column);
  const std::size_t item_col = column_index(schema.item_column);
  std::vector<std::size_t> attribute_cols;
  for (const auto& name : schema.attribute_columns) attribute_cols.push_back(column_index(name));

  std::vector<ProductionRecord> records;
  records.reserve(lines.size() - 1);
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const auto [row, line] = lines[li];
    auto fields = split_csv_line(line);
    if (fields.size() < header.size()) {
      throw ParseError(row, "expected " + std::to_string(header.size()) + " fields, found " +
                                std::to_string(fields.size()));
    }
    ProductionRecord rec;
    rec.sequence_index = records.size();
    rec.campaign_id = std::string(trim(fields[campaign_col]));
    rec.item = std::string(trim(fields[item_col]));
    if (rec.campaign_id.empty()) throw ParseError(row, "empty " + schema.campaign_column + " cell");
    if (rec.item.empty()) throw ParseError(row, "empty " + schema.item_column + " cell");
    for (std::size_t a = 0; a < attribute_cols.size(); ++a) {
      const auto& name = schema.attribute_columns[a];
      double value = 0.0;
      if (!parse_double(fields[attribute_cols[a]], value) || !std::isfinite(value)) {
        throw ParseError(row, "non-numeric value '" + fields[attribute_cols[a]] + "' in column " +
                                  name);
      }
      if (must_be_positive(name) ? !(value > 0.0) : value < 0.0) {
        throw ParseError(row, "value " + fields[attribute_cols[a]] + " out of range for column " +
                                  name);
      }
      rec.attributes.emplace(name, value);
    }
    records.push_back(std::move(rec));
  }
  return records;
}

std::string write_records_csv(const std::vector<ProductionRecord>& records,
                              const std::vector<std::string>& attribute_columns,
                              const std::string& campaign_column, const std::string& item_column) {
  std::ostringstream out;
  out << quote_csv(campaign_column) << ',' << quote_csv(item_column);
  for (const auto& c : attribute_columns) out << ',' << quote_csv(c);
  out << '\n';
  for (const auto& r : records) {
    out << quote_csv(r.campaign_id) << ',' << quote_csv(r.item);
    for (const auto& c : attribute_columns) {
      auto it = r.attributes.find(c);
      if (it == r.attributes.end()) {
        throw std::invalid_argument("record " + std::to_string(r.sequence_index) +
                                    " has no attribute " + c);
      }
      char buf[32];
      const auto res = std::to_chars(buf, buf + sizeof buf, it->second);
      out << ',' << std::string_view(buf, static_cast<std::size_t>(res.ptr - buf));
    }
    out << '\n';
  }
  return out.str();
}

TransactionSet group_campaigns(const std::vector<ProductionRecord>& records) {
  TransactionSet set;
  std::unordered_map<std::string, std::size_t> index;
  std::vector<std::set<std::string>> items;
  std::set<std::string> universe;
  for (const auto& r : records) {
    auto [it, inserted] = index.try_emplace(r.campaign_id, set.transactions.size());
    if (inserted) {
      set.transactions.push_back(Transaction{r.campaign_id, {}});
      items.emplace_back();
    }
    items[it->second].insert(r.item);
    universe.insert(r.item);
  }
  for (std::size_t t = 0; t < items.size(); ++t) {
    set.transactions[t].items.assign(items[t].begin(), items[t].end());
  }
  set.item_universe.assign(universe.begin(), universe.end());
  return set;
}

WindowAssignment assign_windows(const TransactionSet& transactions, std::size_t window_count) {
  const std::size_t n = transactions.size();
  if (window_count == 0) throw std::invalid_argument("window count must be at least 1");
  if (window_count > n) {
    throw std::invalid_argument("window count " + std::to_string(window_count) +
                                " exceeds campaign count " + std::to_string(n));
  }
  WindowAssignment wa;
  wa.window_count = window_count;
  wa.transaction_window.reserve(n);
  const std::size_t base = n / window_count;
  const std::size_t extra = n % window_count;
  std::size_t t = 0;
  for (std::size_t w = 0; w < window_count; ++w) {
    const std::size_t size = base + (w < extra ? 1 : 0);
    for (std::size_t k = 0; k < size; ++k, ++t) {
      wa.transaction_window.push_back(w);
      wa.window_of.emplace(transactions.transactions[t].campaign_id, w);
    }
  }
  return wa;
}

std::map<std::size_t, std::size_t> campaign_diversity_histogram(const TransactionSet& transactions) {
  std::map<std::size_t, std::size_t> hist;
  for (const auto& t : transactions.transactions) ++hist[t.items.size()];
  return hist;
}

std::map<std::string, std::size_t> slabs_per_item_histogram(
    const std::vector<ProductionRecord>& records) {
  std::map<std::string, std::size_t> hist;
  for (const auto& r : records) ++hist[r.item];
  return hist;
}

}  // namespace coselect
