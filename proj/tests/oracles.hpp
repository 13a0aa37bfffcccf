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

#ifndef CPBC_TESTS_ORACLES_HPP
#define CPBC_TESTS_ORACLES_HPP

// Brute-force references that share no code path with the library's BFS
// counting, accumulation or product formulas. Distances come from
// Floyd-Warshall over an adjacency matrix; geodesics are enumerated
// explicitly as vertex sequences.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "cpbc/graph.hpp"

namespace cpbc::oracle {

using Matrix = std::vector<std::vector<int>>;
constexpr int kInf = 1 << 28;

inline Matrix floyd_warshall(const Graph& g) {
  const auto n = g.order();
  Matrix d(n, std::vector<int>(n, kInf));
  for (std::size_t v = 0; v < n; ++v) d[v][v] = 0;
  for (const auto& [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
  return d;
}

/// Every shortest u-v path as a vertex sequence, found by depth-first walks
/// of exactly d(u, v) edges.
inline std::vector<std::vector<Vertex>> geodesics(const Graph& g, const Matrix& d, Vertex u,
                                                  Vertex v) {
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> path{u};
  const int target = d[u][v];
  std::function<void()> walk = [&] {
    const Vertex tip = path.back();
    if (static_cast<int>(path.size()) - 1 == target) {
      if (tip == v) out.push_back(path);
      return;
    }
    for (Vertex w : g.neighbors(tip)) {
      if (std::find(path.begin(), path.end(), w) != path.end()) continue;
      path.push_back(w);
      walk();
      path.pop_back();
    }
  };
  walk();
  return out;
}

/// Betweenness by definition over unordered pairs, counting explicit paths.
inline std::vector<mpq_class> betweenness(const Graph& g) {
  const auto d = floyd_warshall(g);
  const auto n = static_cast<Vertex>(g.order());
  std::vector<mpq_class> b(n, 0);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const auto paths = geodesics(g, d, u, v);
      std::vector<long> through(n, 0);
      for (const auto& p : paths)
        for (std::size_t i = 1; i + 1 < p.size(); ++i) ++through[p[i]];
      for (Vertex x = 0; x < n; ++x) {
        if (through[x] == 0) continue;
        mpq_class q(through[x], static_cast<long>(paths.size()));
        q.canonicalize();
        b[x] += q;
      }
    }
  }
  return b;
}

inline long wiener(const Graph& g) {
  const auto d = floyd_warshall(g);
  long w = 0;
  for (std::size_t u = 0; u < d.size(); ++u)
    for (std::size_t v = u + 1; v < d.size(); ++v) w += d[u][v];
  return w;
}

/// Connected graph: a random spanning tree plus extra random edges.
inline Graph random_connected(std::mt19937& rng, std::size_t n, double extra_density) {
  std::vector<Edge> edges;
  std::vector<std::vector<bool>> has(n, std::vector<bool>(n, false));
  auto add = [&](Vertex a, Vertex b) {
    if (a == b || has[a][b]) return;
    has[a][b] = has[b][a] = true;
    edges.emplace_back(a, b);
  };
  for (Vertex v = 1; v < n; ++v) {
    add(v, std::uniform_int_distribution<Vertex>(0, v - 1)(rng));
  }
  std::bernoulli_distribution coin(extra_density);
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      if (coin(rng)) add(a, b);
  return Graph::from_edges(n, edges);
}

}  // namespace cpbc::oracle

#endif  // CPBC_TESTS_ORACLES_HPP
