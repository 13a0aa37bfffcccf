// Copyright 2026 The cpbc Authors
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

#include "cpbc/centrality.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "cpbc/generators.hpp"
#include "oracles.hpp"

namespace cpbc {
namespace {

std::vector<ExactRational> values(std::initializer_list<ExactRational> xs) { return xs; }

TEST(BetweennessTest, PathCenter) {
  for (Method m : {Method::kDefinitional, Method::kBrandes}) {
    EXPECT_EQ(betweenness(path_graph(3), m).values, values({0, 1, 0}));
  }
}

TEST(BetweennessTest, StarCenter) {
  for (Method m : {Method::kDefinitional, Method::kBrandes}) {
    EXPECT_EQ(betweenness(star_graph(3), m).values, values({3, 0, 0, 0}));
  }
}

TEST(BetweennessTest, FiveCycleIsOneEverywhere) {
  // Frozen from the path-enumeration oracle; W(C_5) - C(5,2) = 5 spread evenly.
  const auto brute = oracle::betweenness(cycle_graph(5));
  EXPECT_EQ(brute, std::vector<mpq_class>(5, 1));
  for (Method m : {Method::kDefinitional, Method::kBrandes}) {
    EXPECT_EQ(betweenness(cycle_graph(5), m).values, std::vector<ExactRational>(5, 1));
  }
}

TEST(BetweennessTest, GridAnchorsMatchOracle) {
  const Graph grid = grid_graph(3, 3);
  const auto brute = oracle::betweenness(grid);
  EXPECT_EQ(brute[4], make_rational(32, 3));
  EXPECT_EQ(brute[0], make_rational(4, 3));
  const auto report = betweenness(grid, Method::kBrandes, "grid 3 3");
  EXPECT_EQ(report.values, brute);
  EXPECT_EQ(report.graph, "grid 3 3");
  EXPECT_EQ(report.method, Method::kBrandes);
}

TEST(BetweennessTest, RejectsDisconnectedAndProductOnlyMethods) {
  const std::vector<Edge> edges{{0, 1}, {2, 3}};
  const Graph g = graph_from_edges(4, edges);
  EXPECT_THROW(betweenness(g, Method::kBrandes), DisconnectedGraphError);
  EXPECT_THROW(betweenness(g, Method::kDefinitional), DisconnectedGraphError);
  EXPECT_THROW(betweenness(path_graph(3), Method::kFactorized), InvalidParameterError);
}

TEST(MethodNameTest, RoundTrip) {
  for (Method m : {Method::kDefinitional, Method::kBrandes, Method::kFactorized,
                   Method::kClosedForm}) {
    EXPECT_EQ(parse_method(to_string(m)), m);
  }
  EXPECT_FALSE(parse_method("approximate").has_value());
}

TEST(WienerTest, Examples) {
  EXPECT_EQ(wiener(complete_graph(4)), 6);
  EXPECT_EQ(wiener(cycle_graph(4)), 8);
  EXPECT_EQ(wiener(path_graph(3)), 4);
  EXPECT_EQ(oracle::wiener(path_graph(3)), 4);
}

TEST(AverageDistanceTest, Examples) {
  EXPECT_EQ(average_distance(complete_graph(7)), 1);
  EXPECT_EQ(average_distance(cycle_graph(4)), make_rational(4, 3));
  EXPECT_EQ(average_distance(path_graph(3)), make_rational(4, 3));
  EXPECT_THROW(average_distance(path_graph(1)), InvalidParameterError);
}

class RandomCentrality : public ::testing::TestWithParam<unsigned> {};

TEST_P(RandomCentrality, MethodsMatchOracleAndSumIdentity) {
  std::mt19937 rng(GetParam() * 104729u);
  const std::size_t n = 2 + GetParam() % 10;
  const Graph g = oracle::random_connected(rng, n, 0.2);
  const auto brute = oracle::betweenness(g);
  const auto def = betweenness(g, Method::kDefinitional).values;
  const auto bra = betweenness(g, Method::kBrandes).values;
  EXPECT_EQ(def, brute);
  EXPECT_EQ(bra, brute);
  for (const auto& v : bra) EXPECT_GE(v, 0);
  const ExactRational sum = std::accumulate(bra.begin(), bra.end(), ExactRational(0));
  EXPECT_EQ(sum, ExactRational(wiener(g) - binomial(n, 2)));
  EXPECT_EQ(wiener(g), oracle::wiener(g));
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomCentrality, ::testing::Range(1u, 41u));

}  // namespace
}  // namespace cpbc
