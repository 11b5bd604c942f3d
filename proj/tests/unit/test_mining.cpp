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
#include "coselect/mining.hpp"
#include "support/oracles.hpp"

using namespace coselect;
using coselect::testing::four_basket_transactions;
using coselect::testing::make_transactions;
using coselect::testing::two_campaign_records;

TEST(Support, Single) {
  const auto tx = four_basket_transactions();
  EXPECT_DOUBLE_EQ(support_single("C", tx), 0.75);
  EXPECT_DOUBLE_EQ(support_single("Z", tx), 0.0);
  EXPECT_DOUBLE_EQ(support_single("x", make_transactions({{"x"}, {"x", "y"}})), 1.0);
  EXPECT_THROW(support_single("A", TransactionSet{}), std::invalid_argument);
}

TEST(Support, Pair) {
  const auto tx = four_basket_transactions();
  EXPECT_DOUBLE_EQ(support_pair("C", "D", tx), 0.75);
  EXPECT_DOUBLE_EQ(support_pair("E", "F", tx), 0.0);
  EXPECT_DOUBLE_EQ(support_pair("x", "y", make_transactions({{"x", "y"}, {"x", "y", "z"}})), 1.0);
  EXPECT_THROW(support_pair("C", "C", tx), std::invalid_argument);
  EXPECT_THROW(support_pair("C", "D", TransactionSet{}), std::invalid_argument);
}

TEST(Lift, Examples) {
  const auto tx = four_basket_transactions();
  EXPECT_DOUBLE_EQ(lift("C", "D", tx), 4.0 / 3.0);
  // p(a) = p(b) = 1/2 and p(ab) = 1/4.
  const auto indep = make_transactions({{"a", "b"}, {"a"}, {"b"}, {"z"}});
  EXPECT_EQ(lift("a", "b", indep), 1.0);
  EXPECT_EQ(lift("E", "F", tx), 0.0);
  EXPECT_THROW(lift("C", "Z", tx), UndefinedLiftError);
}

TEST(Lift, SymmetryAndBound) {
  std::mt19937_64 rng(3);
  std::bernoulli_distribution coin(0.4);
  std::vector<std::vector<std::string>> baskets;
  for (int t = 0; t < 60; ++t) {
    std::vector<std::string> b;
    for (char c = 'a'; c <= 'h'; ++c) {
      if (coin(rng)) b.emplace_back(1, c);
    }
    if (b.empty()) b.emplace_back("a");
    baskets.push_back(b);
  }
  const auto tx = make_transactions(baskets);
  for (const auto& a : tx.item_universe) {
    for (const auto& b : tx.item_universe) {
      if (a == b) continue;
      EXPECT_EQ(lift(a, b, tx), lift(b, a, tx));
      EXPECT_EQ(support_pair(a, b, tx), support_pair(b, a, tx));
      const double sa = support_single(a, tx), sb = support_single(b, tx);
      EXPECT_LE(support_pair(a, b, tx), std::min(sa, sb));
      EXPECT_LE(lift(a, b, tx), 1.0 / std::max(sa, sb) + 1e-12);
    }
  }
}

TEST(MinePairRules, AgreesWithDirectFormulas) {
  const auto tx = four_basket_transactions();
  const auto rules = mine_pair_rules(tx);
  ASSERT_FALSE(rules.empty());
  for (const auto& r : rules) {
    EXPECT_LT(r.item_a, r.item_b);
    EXPECT_GT(r.pair_count, 0u);
    EXPECT_DOUBLE_EQ(r.support_pair, support_pair(r.item_a, r.item_b, tx));
    EXPECT_DOUBLE_EQ(r.lift, lift(r.item_a, r.item_b, tx));
  }
  EXPECT_TRUE(std::is_sorted(rules.begin(), rules.end(), [](const auto& x, const auto& y) {
    return std::tie(x.item_a, x.item_b) < std::tie(y.item_a, y.item_b);
  }));
}

TEST(BuildGraph, FixtureTwoComponents) {
  const auto records = two_campaign_records();
  const auto net = build_graph(group_campaigns(records), records, {0.0, 1.0});
  const auto& g = net.graph;
  EXPECT_EQ(g.labels(), (std::vector<std::string>{"1", "2", "3", "4"}));
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_TRUE(g.has_edge(g.index_of("1"), g.index_of("2")));
  EXPECT_TRUE(g.has_edge(g.index_of("3"), g.index_of("4")));
  for (const auto& [e, l] : net.edge_lift) EXPECT_DOUBLE_EQ(l, 2.0);
  EXPECT_EQ(connected_components(g).size(), 2u);
  EXPECT_DOUBLE_EQ(net.node_attributes.at("1").at("carbon"), 0.010);
  EXPECT_DOUBLE_EQ(net.node_attributes.at("3").at("carbon"), 0.020);
}

TEST(BuildGraph, EmptyInput) {
  const auto net = build_graph(TransactionSet{}, {}, {});
  EXPECT_EQ(net.graph.node_count(), 0u);
  EXPECT_EQ(net.graph.edge_count(), 0u);
}

TEST(BuildGraph, FourBasketEdgeCD) {
  const auto tx = four_basket_transactions();
  const auto net = build_graph(tx, {}, {0.0, 1.0});
  const auto& g = net.graph;
  const Edge cd(g.index_of("C"), g.index_of("D"));
  ASSERT_TRUE(g.has_edge(cd.u, cd.v));
  EXPECT_DOUBLE_EQ(net.edge_lift.at(cd), 4.0 / 3.0);
  for (const auto& [e, l] : net.edge_lift) EXPECT_GE(l, 1.0);
}

TEST(BuildGraph, ThresholdValidation) {
  const auto tx = four_basket_transactions();
  EXPECT_THROW(build_graph(tx, {}, {-0.1, 1.0}), std::invalid_argument);
  EXPECT_THROW(build_graph(tx, {}, {1.1, 1.0}), std::invalid_argument);
  EXPECT_THROW(build_graph(tx, {}, {0.0, std::nan("")}), std::invalid_argument);
}

TEST(BuildGraph, ThresholdMonotonicity) {
  std::mt19937_64 rng(17);
  std::bernoulli_distribution coin(0.3);
  std::vector<std::vector<std::string>> baskets;
  for (int t = 0; t < 200; ++t) {
    std::vector<std::string> b;
    for (int i = 0; i < 12; ++i) {
      if (coin(rng)) b.push_back("g" + std::to_string(i));
    }
    if (b.size() < 2) b = {"g0", "g" + std::to_string(1 + t % 11)};
    baskets.push_back(b);
  }
  const auto tx = make_transactions(baskets);
  auto edge_labels = [](const CoSelectionGraph& net) {
    std::set<std::pair<std::string, std::string>> out;
    for (const auto& e : net.graph.edges()) out.emplace(net.graph.label(e.u), net.graph.label(e.v));
    return out;
  };
  const double lifts[] = {0.0, 0.5, 0.9, 1.0, 1.1, 1.3, 2.0};
  const double supports[] = {0.0, 0.01, 0.05, 0.1, 0.2};
  for (double s : supports) {
    for (std::size_t i = 0; i + 1 < std::size(lifts); ++i) {
      const auto lo = edge_labels(build_graph(tx, {}, {s, lifts[i]}));
      const auto hi = edge_labels(build_graph(tx, {}, {s, lifts[i + 1]}));
      EXPECT_TRUE(std::includes(lo.begin(), lo.end(), hi.begin(), hi.end()));
    }
  }
  for (double l : lifts) {
    for (std::size_t i = 0; i + 1 < std::size(supports); ++i) {
      const auto lo = edge_labels(build_graph(tx, {}, {supports[i], l}));
      const auto hi = edge_labels(build_graph(tx, {}, {supports[i + 1], l}));
      EXPECT_TRUE(std::includes(lo.begin(), lo.end(), hi.begin(), hi.end()));
    }
  }
}

TEST(BuildGraph, IndependenceCalibration) {
  // Items included independently with fixed probabilities: mean lift over pairs -> 1.
  std::mt19937_64 rng(2024);
  const double p[] = {0.1, 0.2, 0.3, 0.4, 0.5, 0.25, 0.15, 0.35};
  std::vector<std::vector<std::string>> baskets;
  for (int t = 0; t < 10000; ++t) {
    std::vector<std::string> b;
    for (std::size_t i = 0; i < std::size(p); ++i) {
      if (std::bernoulli_distribution(p[i])(rng)) b.push_back("i" + std::to_string(i));
    }
    if (b.empty()) b.push_back("none");
    baskets.push_back(b);
  }
  const auto tx = make_transactions(baskets);
  double total = 0.0;
  int pairs = 0;
  for (std::size_t a = 0; a < std::size(p); ++a) {
    for (std::size_t b = a + 1; b < std::size(p); ++b) {
      total += lift("i" + std::to_string(a), "i" + std::to_string(b), tx);
      ++pairs;
    }
  }
  EXPECT_NEAR(total / pairs, 1.0, 0.05);
}

TEST(BuildGraph, NodeMeansPerItem) {
  const std::vector<ProductionRecord> records = {
      {0, "A", "x", {{"carbon", 0.1}}},
      {1, "A", "y", {{"carbon", 0.5}}},
      {2, "B", "x", {{"carbon", 0.3}}},
      {3, "B", "y", {{"carbon", 0.5}}},
  };
  const auto net = build_graph(group_campaigns(records), records, {});
  EXPECT_DOUBLE_EQ(net.node_attributes.at("x").at("carbon"), 0.2);
  EXPECT_EQ(net.node_attributes.at("y").at("carbon"), 0.5);
}
