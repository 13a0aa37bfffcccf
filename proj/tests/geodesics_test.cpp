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

#include "cpbc/geodesics.hpp"

#include <gtest/gtest.h>

#include <random>

#include "cpbc/generators.hpp"
#include "oracles.hpp"

namespace cpbc {
namespace {

TEST(BfsGeodesicsTest, PathFromEnd) {
  const auto t = bfs_geodesics(path_graph(3), 0);
  EXPECT_EQ(t.dist, (std::vector<Distance>{0, 1, 2}));
  EXPECT_EQ(t.sigma, (std::vector<BigInt>{1, 1, 1}));
}

TEST(BfsGeodesicsTest, CycleAntipode) {
  EXPECT_EQ(bfs_geodesics(cycle_graph(4), 0).sigma[2], 2);
}

TEST(BfsGeodesicsTest, HypercubeAntipodeIsDFactorial) {
  const auto t = bfs_geodesics(hypercube_graph(3), 0);
  EXPECT_EQ(t.dist[7], 3u);
  EXPECT_EQ(t.sigma[7], 6);
}

TEST(BfsGeodesicsTest, RejectsOutOfRangeSource) {
  EXPECT_THROW(bfs_geodesics(path_graph(3), 3), InvalidParameterError);
}

TEST(SigmaThroughTest, Examples) {
  EXPECT_EQ(sigma_through(cycle_graph(4), 0, 2, 1), 1);
  EXPECT_EQ(sigma_through(path_graph(3), 0, 2, 1), 1);
  // Q_3, 0 -> 7 via neighbour 1 (= (0,0,1)): sigma(0,1)=1, sigma(1,7)=2.
  EXPECT_EQ(sigma_through(hypercube_graph(3), 0, 7, 1), 2);
  // Endpoints pass every geodesic.
  EXPECT_EQ(sigma_through(cycle_graph(4), 0, 2, 0), 2);
  EXPECT_EQ(sigma_through(cycle_graph(4), 0, 2, 2), 2);
  // Off-interval.
  EXPECT_EQ(sigma_through(path_graph(4), 0, 1, 3), 0);
}

TEST(PairDependencyTest, Examples) {
  EXPECT_EQ(pair_dependency(cycle_graph(4), 0, 2, 1), make_rational(1, 2));
  EXPECT_EQ(pair_dependency(path_graph(3), 0, 2, 1), 1);
  EXPECT_EQ(pair_dependency(cycle_graph(4), 0, 2, 0), 0);
  EXPECT_THROW(pair_dependency(cycle_graph(4), 1, 1, 0), InvalidParameterError);
}

TEST(IntervalTest, Examples) {
  EXPECT_EQ(interval(cycle_graph(4), 0, 2), (std::vector<Vertex>{0, 1, 2, 3}));
  EXPECT_EQ(interval(complete_graph(5), 1, 3), (std::vector<Vertex>{1, 3}));
  EXPECT_EQ(interval(cycle_graph(6), 0, 1), (std::vector<Vertex>{0, 1}));
  EXPECT_EQ(interval(path_graph(3), 0, 2), (std::vector<Vertex>{0, 1, 2}));
}

TEST(GeodeticTest, Examples) {
  EXPECT_TRUE(is_geodetic(star_graph(4)));
  EXPECT_TRUE(is_geodetic(path_graph(6)));
  EXPECT_TRUE(is_geodetic(cycle_graph(5)));
  EXPECT_FALSE(is_geodetic(cycle_graph(4)));
  const std::vector<Edge> edges{{0, 1}, {2, 3}};
  EXPECT_THROW(is_geodetic(graph_from_edges(4, edges)), DisconnectedGraphError);
}

TEST(DiameterTest, Examples) {
  EXPECT_EQ(diameter(complete_graph(6)), 1u);
  EXPECT_EQ(diameter(cycle_graph(6)), 3u);
  EXPECT_EQ(diameter(path_graph(4)), 3u);
}

// Properties on random connected graphs, checked against Floyd-Warshall
// distances and explicit path enumeration.
class RandomGraphProperties : public ::testing::TestWithParam<unsigned> {};

TEST_P(RandomGraphProperties, TablesMatchEnumeration) {
  std::mt19937 rng(GetParam());
  const std::size_t n = 2 + GetParam() % 9;
  const Graph g = oracle::random_connected(rng, n, 0.25);
  const auto fw = oracle::floyd_warshall(g);
  const AllPairsGeodesics geo(g);
  for (Vertex s = 0; s < n; ++s) {
    const auto& t = geo.from(s);
    EXPECT_EQ(t.dist[s], 0u);
    EXPECT_EQ(t.sigma[s], 1);
    for (const auto& [a, b] : g.edges()) {
      EXPECT_LE(std::max(t.dist[a], t.dist[b]) - std::min(t.dist[a], t.dist[b]), 1u);
    }
    for (Vertex v = 0; v < n; ++v) {
      EXPECT_EQ(static_cast<int>(t.dist[v]), fw[s][v]);
      EXPECT_GE(t.sigma[v], 1);
      if (v != s) {
        BigInt pred_sum = 0;
        for (Vertex w : g.neighbors(v)) {
          if (t.dist[w] + 1 == t.dist[v]) pred_sum += t.sigma[w];
        }
        EXPECT_EQ(t.sigma[v], pred_sum);
      }
      const auto paths = oracle::geodesics(g, fw, s, v);
      EXPECT_EQ(t.sigma[v], static_cast<long>(paths.size()));
    }
  }
}

TEST_P(RandomGraphProperties, DependenciesBoundedAndSumToDistanceMinusOne) {
  std::mt19937 rng(GetParam() * 7919u);
  const std::size_t n = 3 + GetParam() % 8;
  const Graph g = oracle::random_connected(rng, n, 0.3);
  const AllPairsGeodesics geo(g);
  bool geodetic = true;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      ExactRational sum = 0;
      for (Vertex x = 0; x < n; ++x) {
        const auto d = geo.pair_dependency(u, v, x);
        EXPECT_GE(d, 0);
        EXPECT_LE(d, 1);
        if (x != u && x != v) sum += d;
      }
      EXPECT_EQ(sum, geo.dist(u, v) - 1);
      if (geo.sigma(u, v) != 1) geodetic = false;
    }
  }
  EXPECT_EQ(is_geodetic(g), geodetic);
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomGraphProperties, ::testing::Range(1u, 41u));

}  // namespace
}  // namespace cpbc
