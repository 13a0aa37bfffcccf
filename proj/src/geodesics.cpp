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

#include <algorithm>

namespace cpbc {

GeodesicTable bfs_geodesics(const Graph& g, Vertex source) {
  require_vertex(g, source);
  const std::size_t n = g.order();
  GeodesicTable table;
  table.source = source;
  table.dist.assign(n, kUnreachable);
  table.sigma.assign(n, BigInt(0));

  std::vector<Vertex> frontier;
  frontier.reserve(n);
  frontier.push_back(source);
  table.dist[source] = 0;
  table.sigma[source] = 1;
  // frontier doubles as the BFS queue; head walks it in discovery order.
  for (std::size_t head = 0; head < frontier.size(); ++head) {
    const Vertex v = frontier[head];
    for (Vertex w : g.neighbors(v)) {
      if (table.dist[w] == kUnreachable) {
        table.dist[w] = table.dist[v] + 1;
        frontier.push_back(w);
      }
      if (table.dist[w] == table.dist[v] + 1) {
        table.sigma[w] += table.sigma[v];
      }
    }
  }
  return table;
}

AllPairsGeodesics::AllPairsGeodesics(const Graph& g) {
  require_connected(g);
  tables_.reserve(g.order());
  for (Vertex s = 0; s < g.order(); ++s) {
    tables_.push_back(bfs_geodesics(g, s));
  }
}

BigInt AllPairsGeodesics::sigma_through(Vertex u, Vertex v, Vertex x) const {
  if (x == u || x == v) return sigma(u, v);
  if (!on_geodesic(u, v, x)) return 0;
  return sigma(u, x) * sigma(x, v);
}

ExactRational AllPairsGeodesics::pair_dependency(Vertex u, Vertex v, Vertex x) const {
  if (u == v) {
    throw InvalidParameterError("pair dependency needs distinct endpoints");
  }
  if (x == u || x == v || !on_geodesic(u, v, x)) return 0;
  return make_rational(sigma(u, x) * sigma(x, v), sigma(u, v));
}

BigInt sigma_through(const Graph& g, Vertex u, Vertex v, Vertex x) {
  require_vertex(g, v);
  require_vertex(g, x);
  const auto from_u = bfs_geodesics(g, u);
  if (x == u || x == v) return from_u.sigma[v];
  const auto from_x = bfs_geodesics(g, x);
  if (from_u.dist[x] == kUnreachable || from_x.dist[v] == kUnreachable ||
      from_u.dist[x] + from_x.dist[v] != from_u.dist[v]) {
    return 0;
  }
  return from_u.sigma[x] * from_x.sigma[v];
}

ExactRational pair_dependency(const Graph& g, Vertex u, Vertex v, Vertex x) {
  require_vertex(g, u);
  require_vertex(g, v);
  if (u == v) {
    throw InvalidParameterError("pair dependency needs distinct endpoints");
  }
  if (x == u || x == v) return 0;
  const BigInt through = sigma_through(g, u, v, x);
  if (through == 0) return 0;
  return make_rational(through, bfs_geodesics(g, u).sigma[v]);
}

std::vector<Vertex> interval(const Graph& g, Vertex u, Vertex v) {
  require_vertex(g, v);
  const auto from_u = bfs_geodesics(g, u);
  const auto from_v = bfs_geodesics(g, v);
  std::vector<Vertex> out;
  if (from_u.dist[v] == kUnreachable) return out;
  for (Vertex w = 0; w < g.order(); ++w) {
    if (from_u.dist[w] != kUnreachable && from_v.dist[w] != kUnreachable &&
        from_u.dist[w] + from_v.dist[w] == from_u.dist[v]) {
      out.push_back(w);
    }
  }
  return out;
}

bool is_geodetic(const Graph& g) {
  require_connected(g);
  for (Vertex s = 0; s < g.order(); ++s) {
    const auto table = bfs_geodesics(g, s);
    if (std::any_of(table.sigma.begin(), table.sigma.end(),
                    [](const BigInt& c) { return c != 1; })) {
      return false;
    }
  }
  return true;
}

Distance diameter(const Graph& g) {
  require_connected(g);
  Distance best = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    const auto table = bfs_geodesics(g, s);
    best = std::max(best, *std::max_element(table.dist.begin(), table.dist.end()));
  }
  return best;
}

}  // namespace cpbc
