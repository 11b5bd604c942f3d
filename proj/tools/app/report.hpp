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

#include <string>
#include <vector>

#include "app/graph_io.hpp"
#include "app/pipeline.hpp"
#include "coselect/ingest.hpp"
#include "json.hpp"

namespace coselect::app {

struct InputDigest {
  std::string sha256;
  std::size_t bytes = 0;
  std::size_t rows = 0;
  std::size_t campaigns = 0;
  std::size_t items = 0;
};

InputDigest digest_input(std::string_view file_bytes, const std::vector<ProductionRecord>& records);

/// Deterministic run report; key order is fixed and no wall-clock data is included.
nlohmann::ordered_json build_report(const AnalysisResult& result, const AnalysisOptions& options,
                                    const CsvSchema& schema, const InputDigest& digest);

/// Tidy long table with one row per (subject, stage, model, statistic) cell.
std::string zscores_csv(const AnalysisResult& result);

std::string edges_csv(const CoSelectionGraph& network, const TransactionSet& transactions);
std::string nodes_csv(const GraphDocument& doc);
std::string campaign_diversity_csv(const TransactionSet& transactions);
std::string slabs_per_item_csv(const std::vector<ProductionRecord>& records);

/// Component/community/age/core annotations of the final network for exports.
NodeAnnotations final_annotations(const AnalysisResult& result);

}  // namespace coselect::app
