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

#ifndef CPBC_GRAPH_HPP
#define CPBC_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cpbc {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Base for every validation failure raised by the library.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by analysis entry points that require a connected graph.
class DisconnectedGraphError : public GraphError {
 public:
  using GraphError::GraphError;
};

/// Bad family parameter, factor list or vertex argument.
class InvalidParameterError : public GraphError {
 public:
  using GraphError::GraphError;
};

/// Immutable simple undirected graph on vertices 0..order()-1.
///
/// Adjacency is stored in compressed form with each neighbor list sorted, so
/// two graphs compare equal iff they have the same labeled edge set.
class Graph {
 public:
  Graph() = default;

  /// Validates ids, rejects self-loops and duplicate edges (in either
  /// orientation). Connectivity is not checked here; see require_connected().
  static Graph from_edges(std::size_t vertex_count, std::span<const Edge> edges);

  std::size_t order() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return targets_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }
  bool adjacent(Vertex u, Vertex v) const;

  bool is_connected() const;

  /// Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> targets_;
};

inline Graph graph_from_edges(std::size_t vertex_count, std::span<const Edge> edges) {
  return Graph::from_edges(vertex_count, edges);
}

/// Throws DisconnectedGraphError unless g has at least one vertex and is connected.
void require_connected(const Graph& g);

void require_vertex(const Graph& g, Vertex v);

}  // namespace cpbc

#endif  // CPBC_GRAPH_HPP
