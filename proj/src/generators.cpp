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

#include "cpbc/generators.hpp"

#include "cpbc/product.hpp"

namespace cpbc {

namespace {

void require_at_least(std::string_view what, std::size_t value, std::size_t minimum) {
  if (value < minimum) {
    throw InvalidParameterError(std::string(what) + " needs parameter >= " +
                                std::to_string(minimum) + ", got " + std::to_string(value));
  }
}

void require_count(std::string_view family, std::span<const std::size_t> params,
                   std::size_t count) {
  if (params.size() != count) {
    throw InvalidParameterError(std::string(family) + " takes " + std::to_string(count) +
                                " parameter(s), got " + std::to_string(params.size()));
  }
}

}  // namespace

Graph path_graph(std::size_t n) {
  require_at_least("path", n, 1);
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edges(n, edges);
}

Graph cycle_graph(std::size_t n) {
  require_at_least("cycle", n, 3);
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.emplace_back(i, static_cast<Vertex>((i + 1) % n));
  return Graph::from_edges(n, edges);
}

Graph complete_graph(std::size_t n) {
  require_at_least("complete", n, 1);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph::from_edges(n, edges);
}

Graph star_graph(std::size_t leaves) {
  require_at_least("star", leaves, 1);
  std::vector<Edge> edges;
  for (Vertex leaf = 1; leaf <= leaves; ++leaf) edges.emplace_back(0, leaf);
  return Graph::from_edges(leaves + 1, edges);
}

Graph grid_graph(std::size_t m, std::size_t n) {
  return cartesian_product({path_graph(m), path_graph(n)}).graph;
}

Graph torus_graph(std::size_t m, std::size_t n) {
  return cartesian_product({cycle_graph(m), cycle_graph(n)}).graph;
}

Graph hypercube_graph(std::size_t r) {
  require_at_least("hypercube", r, 1);
  return cartesian_product(std::vector<Graph>(r, complete_graph(2))).graph;
}

Graph hamming_graph(std::span<const std::size_t> sizes) {
  if (sizes.empty()) throw InvalidParameterError("hamming needs at least one factor size");
  std::vector<Graph> factors;
  for (std::size_t s : sizes) {
    require_at_least("hamming", s, 2);
    factors.push_back(complete_graph(s));
  }
  return cartesian_product(std::move(factors)).graph;
}

Graph generate(std::string_view family, std::span<const std::size_t> params) {
  if (family == "path") return require_count(family, params, 1), path_graph(params[0]);
  if (family == "cycle") return require_count(family, params, 1), cycle_graph(params[0]);
  if (family == "complete") return require_count(family, params, 1), complete_graph(params[0]);
  if (family == "star") return require_count(family, params, 1), star_graph(params[0]);
  if (family == "hypercube") return require_count(family, params, 1), hypercube_graph(params[0]);
  if (family == "grid") return require_count(family, params, 2), grid_graph(params[0], params[1]);
  if (family == "torus") return require_count(family, params, 2), torus_graph(params[0], params[1]);
  if (family == "hamming") return hamming_graph(params);
  throw InvalidParameterError("unknown family '" + std::string(family) + "'");
}

std::vector<std::string_view> family_names() {
  return {"path", "cycle", "complete", "star", "grid", "hypercube", "hamming", "torus"};
}

std::string describe(std::string_view family, std::span<const std::size_t> params) {
  std::string out(family);
  for (std::size_t p : params) out += " " + std::to_string(p);
  return out;
}

}  // namespace cpbc
