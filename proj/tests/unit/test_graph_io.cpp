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

#include <gtest/gtest.h>

#include "app/graph_io.hpp"
#include "coselect/mining.hpp"
#include "support/oracles.hpp"

using namespace coselect;
using namespace coselect::app;

namespace {

GraphDocument fixture_document() {
  const auto records = coselect::testing::two_campaign_records();
  auto net = build_graph(group_campaigns(records), records, {});
  const NodeAnnotations ann = {{"1", {{"component", 0}, {"age", 0}}}, {"3", {{"component", 1}, {"age", 1}}}};
  return make_document(net, ann);
}

void expect_same_content(const GraphDocument& a, const GraphDocument& b) {
  ASSERT_EQ(a.nodes.size(), b.nodes.size());
  for (std::size_t i = 0; i < a.nodes.size(); ++i) {
    EXPECT_EQ(a.nodes[i].id, b.nodes[i].id);
    EXPECT_EQ(a.nodes[i].attributes, b.nodes[i].attributes);
  }
  ASSERT_EQ(a.edges.size(), b.edges.size());
  for (std::size_t i = 0; i < a.edges.size(); ++i) {
    EXPECT_EQ(a.edges[i].source, b.edges[i].source);
    EXPECT_EQ(a.edges[i].target, b.edges[i].target);
    EXPECT_EQ(a.edges[i].attributes, b.edges[i].attributes);
  }
}

}  // namespace

TEST(GraphDocument, CarriesMeansAnnotationsAndLift) {
  const auto doc = fixture_document();
  ASSERT_EQ(doc.nodes.size(), 4u);
  EXPECT_EQ(doc.nodes[0].attributes.at("carbon"), "0.01");
  EXPECT_EQ(doc.nodes[0].attributes.at("component"), "0");
  EXPECT_EQ(doc.nodes[2].attributes.at("age"), "1");
  EXPECT_EQ(doc.nodes[1].attributes.count("age"), 0u);
  EXPECT_EQ(doc.node_keys.at("carbon"), AttrType::Double);
  EXPECT_EQ(doc.node_keys.at("age"), AttrType::Int);
  ASSERT_EQ(doc.edges.size(), 2u);
  EXPECT_EQ(doc.edges[0].attributes.at("lift"), "2");
}

TEST(GraphML, RoundTrip) {
  const auto doc = fixture_document();
  const auto back = read_graphml(to_graphml(doc));
  expect_same_content(doc, back);
  EXPECT_EQ(back.node_keys, doc.node_keys);
  EXPECT_EQ(back.edge_keys, doc.edge_keys);
}

TEST(Dot, RoundTrip) {
  const auto doc = fixture_document();
  expect_same_content(doc, read_dot(to_dot(doc)));
}

TEST(GraphIO, EscapedLabelsSurvive) {
  GraphDocument doc;
  doc.node_keys["note"] = AttrType::String;
  doc.nodes = {{"a \"q\" <&>", {{"note", "x\\y"}}}, {"b", {}}};
  doc.edges = {{"a \"q\" <&>", "b", {}}};
  expect_same_content(doc, read_graphml(to_graphml(doc)));
  expect_same_content(doc, read_dot(to_dot(doc)));
}

TEST(GraphIO, MalformedInputThrows) {
  EXPECT_THROW(read_graphml("<graphml><graph>"), std::runtime_error);
  EXPECT_THROW(read_graphml("<other/>"), std::runtime_error);
  EXPECT_THROW(read_graphml("<graphml/>"), std::runtime_error);
  EXPECT_THROW(read_dot("digraph { a -> b }"), std::runtime_error);
  EXPECT_THROW(read_dot("graph { a -- }"), std::runtime_error);
  EXPECT_THROW(read_dot("graph { \"a"), std::runtime_error);
  EXPECT_THROW(read_dot("graph { a -- b"), std::runtime_error);
}

TEST(Dot, ReadsChainsAndDefaults) {
  const auto doc = read_dot("strict graph g { node [shape=box]; a -- b -- c [lift=2]; d; /* c */ }");
  ASSERT_EQ(doc.nodes.size(), 4u);
  ASSERT_EQ(doc.edges.size(), 2u);
  EXPECT_EQ(doc.edges[1].source, "b");
  EXPECT_EQ(doc.edges[1].attributes.at("lift"), "2");
}
