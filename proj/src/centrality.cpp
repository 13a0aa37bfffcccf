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

#include <array>
#include <utility>

#include "cpbc/geodesics.hpp"

namespace cpbc {

namespace {

constexpr std::array<std::pair<Method, std::string_view>, 4> kMethodNames{{
    {Method::kDefinitional, "definitional"},
    {Method::kBrandes, "brandes"},
    {Method::kFactorized, "factorized"},
    {Method::kClosedForm, "closed-form"},
}};

std::vector<ExactRational> definitional(const Graph& g) {
  const AllPairsGeodesics geo(g);
  const auto n = static_cast<Vertex>(g.order());
  std::vector<ExactRational> b(n, 0);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      for (Vertex x = 0; x < n; ++x) {
        if (x == u || x == v || !geo.on_geodesic(u, v, x)) continue;
        b[x] += geo.pair_dependency(u, v, x);
      }
    }
  }
  return b;
}

std::vector<ExactRational> brandes(const Graph& g) {
  require_connected(g);
  const auto n = static_cast<Vertex>(g.order());
  std::vector<ExactRational> b(n, 0);
  std::vector<ExactRational> dependency(n);
  for (Vertex s = 0; s < n; ++s) {
    const GeodesicTable table = bfs_geodesics(g, s);
    // Vertices in non-decreasing distance order; BFS visit order is one.
    std::vector<Vertex> order;
    order.reserve(n);
    std::vector<std::vector<Vertex>> layers;
    for (Vertex v = 0; v < n; ++v) {
      const Distance d = table.dist[v];
      if (layers.size() <= d) layers.resize(d + 1);
      layers[d].push_back(v);
    }
    for (const auto& layer : layers) order.insert(order.end(), layer.begin(), layer.end());

    for (auto& d : dependency) d = 0;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const Vertex w = *it;
      if (w == s) continue;
      const ExactRational carry = 1 + dependency[w];
      for (Vertex v : g.neighbors(w)) {
        if (table.dist[v] + 1 != table.dist[w]) continue;
        dependency[v] += make_rational(table.sigma[v], table.sigma[w]) * carry;
      }
      b[w] += dependency[w];
    }
  }
  // Each unordered pair was accumulated once from each endpoint.
  for (auto& value : b) value /= 2;
  return b;
}

}  // namespace

std::string_view to_string(Method m) {
  for (const auto& [method, name] : kMethodNames) {
    if (method == m) return name;
  }
  return "unknown";
}

std::optional<Method> parse_method(std::string_view name) {
  for (const auto& [method, label] : kMethodNames) {
    if (label == name) return method;
  }
  return std::nullopt;
}

CentralityReport betweenness(const Graph& g, Method method, std::string descriptor) {
  require_connected(g);
  CentralityReport report;
  report.method = method;
  report.graph = std::move(descriptor);
  switch (method) {
    case Method::kDefinitional:
      report.values = definitional(g);
      break;
    case Method::kBrandes:
      report.values = brandes(g);
      break;
    default:
      throw InvalidParameterError("betweenness(Graph) supports only definitional and brandes; " +
                                  std::string(to_string(method)) + " needs a product or family");
  }
  return report;
}

BigInt wiener(const Graph& g) {
  require_connected(g);
  BigInt total = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    const auto table = bfs_geodesics(g, s);
    for (Vertex v = s + 1; v < g.order(); ++v) total += table.dist[v];
  }
  return total;
}

ExactRational average_distance(const Graph& g) {
  if (g.order() < 2) {
    throw InvalidParameterError("average distance needs at least two vertices");
  }
  return make_rational(wiener(g), binomial(g.order(), 2));
}

}  // namespace cpbc
