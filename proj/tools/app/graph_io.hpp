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

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "coselect/mining.hpp"

namespace coselect::app {

enum class AttrType { Int, Double, String };

/// Format-neutral view of an exported network. Attribute values are kept as text so a
/// written document and its re-read counterpart compare equal.
struct GraphDocument {
  struct Node {
    std::string id;
    std::map<std::string, std::string> attributes;
  };
  struct Link {
    std::string source;
    std::string target;
    std::map<std::string, std::string> attributes;
  };
  std::map<std::string, AttrType> node_keys;
  std::map<std::string, AttrType> edge_keys;
  std::vector<Node> nodes;
  std::vector<Link> edges;
};

/// Optional integer annotations per item label (component, community, age, ...).
using NodeAnnotations = std::map<std::string, std::map<std::string, long long>>;

/// Nodes carry their attribute means plus every annotation; edges carry lift.
GraphDocument make_document(const CoSelectionGraph& network, const NodeAnnotations& annotations);

std::string to_graphml(const GraphDocument& doc);
std::string to_dot(const GraphDocument& doc);

/// Readers for the formats written above. Throw std::runtime_error on malformed input.
/// read_dot returns nodes ordered by id and drops graph-level attributes.
GraphDocument read_graphml(std::string_view text);
GraphDocument read_dot(std::string_view text);

}  // namespace coselect::app
