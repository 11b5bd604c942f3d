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

#include <random>

#include "coselect/errors.hpp"
#include "coselect/metrics.hpp"
#include "support/oracles.hpp"

using namespace coselect;
using namespace coselect::testing;

namespace {

Graph path3() {
  const std::vector<Edge> e = {{0, 1}, {1, 2}};
  return Graph({"a", "b", "c"}, e);
}

Graph triangle() { return Graph::with_numbered_nodes(3, complete_edges(0, 3)); }

}  // namespace

TEST(Degree, Examples) {
  const auto s = star(3);
  EXPECT_EQ(degree(s, "0"), 3u);
  EXPECT_EQ(degree(Graph({"solo"}), "solo"), 0u);
  EXPECT_EQ(degree(triangle(), "1"), 2u);
  EXPECT_THROW(degree(s, "nope"), LookupError);
}

TEST(Clustering, Examples) {
  EXPECT_EQ(clustering_coefficient(triangle(), "0"), 1.0);
  EXPECT_EQ(clustering_coefficient(star(3), "0"), 0.0);
  EXPECT_EQ(clustering_coefficient(star(3), "1"), 0.0);
  EXPECT_THROW(clustering_coefficient(star(3), "x"), LookupError);
}

TEST(Betweenness, Examples) {
  EXPECT_EQ(betweenness_all(path3()), (std::vector<double>{0, 1, 0}));
  for (double b : betweenness_all(Graph::with_numbered_nodes(4, complete_edges(0, 4)))) EXPECT_EQ(b, 0.0);
  EXPECT_EQ(betweenness_all(star(3))[0], 3.0);
}

TEST(Betweenness, MatchesGeodesicEnumeration) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> size(1, 7);
  std::uniform_real_distribution<double> density(0.1, 0.9);
  for (int trial = 0; trial < 150; ++trial) {
    const auto g = bernoulli_graph(size(rng), density(rng), rng);
    const auto fast = betweenness_all(g);
    const auto slow = brute_betweenness(g);
    for (NodeId v = 0; v < g.node_count(); ++v) EXPECT_NEAR(fast[v], slow[v], 1e-9);
    const auto efast = edge_betweenness(g);
    for (const auto& [e, b] : brute_edge_betweenness(g)) EXPECT_NEAR(efast.at(e), b, 1e-9);
  }
}

TEST(Clustering, MatchesNeighbourPairCounting) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> size(1, 7);
  for (int trial = 0; trial < 150; ++trial) {
    const auto g = bernoulli_graph(size(rng), 0.5, rng);
    const auto all = node_metrics(g);
    for (NodeId v = 0; v < g.node_count(); ++v) {
      const double c = clustering_coefficient(g, v);
      EXPECT_NEAR(c, brute_clustering(g, v), 1e-9);
      EXPECT_GE(c, 0.0);
      EXPECT_LE(c, 1.0);
      EXPECT_EQ(all[v].degree, g.degree(v));
      EXPECT_EQ(all[v].clustering, c);
      const double k = static_cast<double>(all[v].degree);
      if (k >= 2) {
        EXPECT_NEAR(c, 2.0 * all[v].neighbor_edge_count / (k * (k - 1)), 1e-12);
      }
    }
  }
}

TEST(Components, Examples) {
  const std::vector<Edge> e = {{0, 1}, {2, 3}};
  const Graph g({"1", "2", "3", "4"}, e);
  EXPECT_EQ(connected_components(g), (std::vector<std::vector<NodeId>>{{0, 1}, {2, 3}}));
  EXPECT_TRUE(connected_components(Graph{}).empty());
  EXPECT_EQ(connected_components(triangle()).size(), 1u);
}

TEST(Components, OrderedBySizeThenSmallestLabel) {
  const std::vector<Edge> e = {{0, 1}, {2, 3}, {3, 4}};
  const Graph g({"z", "y", "b", "c", "d", "a"}, e);
  const auto comps = connected_components(g);
  ASSERT_EQ(comps.size(), 3u);
  EXPECT_EQ(comps[0], (std::vector<NodeId>{2, 3, 4}));
  EXPECT_EQ(comps[1], (std::vector<NodeId>{0, 1}));  // size 2 beats the singleton "a"
  EXPECT_EQ(comps[2], (std::vector<NodeId>{5}));
}
