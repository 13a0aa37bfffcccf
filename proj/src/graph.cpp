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

#include "cpbc/graph.hpp"

#include <algorithm>
#include <queue>

namespace cpbc {

Graph Graph::from_edges(std::size_t vertex_count, std::span<const Edge> edges) {
  std::vector<std::vector<Vertex>> adjacency(vertex_count);
  for (const auto& [u, v] : edges) {
    if (u >= vertex_count || v >= vertex_count) {
      throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                       ") references a vertex outside 0.." +
                       std::to_string(vertex_count == 0 ? 0 : vertex_count - 1));
    }
    if (u == v) {
      throw GraphError("self-loop at vertex " + std::to_string(u));
    }
    adjacency[u].push_back(v);
    adjacency[v].push_back(u);
  }

  Graph g;
  g.offsets_.reserve(vertex_count + 1);
  g.offsets_.push_back(0);
  g.targets_.reserve(2 * edges.size());
  for (std::size_t v = 0; v < vertex_count; ++v) {
    auto& list = adjacency[v];
    std::sort(list.begin(), list.end());
    if (auto dup = std::adjacent_find(list.begin(), list.end()); dup != list.end()) {
      throw GraphError("duplicate edge (" + std::to_string(v) + "," + std::to_string(*dup) + ")");
    }
    g.targets_.insert(g.targets_.end(), list.begin(), list.end());
    g.offsets_.push_back(g.targets_.size());
  }
  return g;
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  if (v >= order()) {
    throw InvalidParameterError("vertex " + std::to_string(v) + " out of range");
  }
  return std::span<const Vertex>(targets_).subspan(offsets_[v], offsets_[v + 1] - offsets_[v]);
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto list = neighbors(u);
  return std::binary_search(list.begin(), list.end(), v);
}

bool Graph::is_connected() const {
  const std::size_t n = order();
  if (n == 0) return false;
  std::vector<char> seen(n, 0);
  std::queue<Vertex> queue;
  queue.push(0);
  seen[0] = 1;
  std::size_t reached = 1;
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop();
    for (Vertex w : neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        queue.push(w);
      }
    }
  }
  return reached == n;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

void require_connected(const Graph& g) {
  if (g.order() == 0) {
    throw DisconnectedGraphError("graph has no vertices");
  }
  if (!g.is_connected()) {
    throw DisconnectedGraphError("graph is not connected");
  }
}

void require_vertex(const Graph& g, Vertex v) {
  if (v >= g.order()) {
    throw InvalidParameterError("vertex " + std::to_string(v) + " out of range for graph of order " +
                                std::to_string(g.order()));
  }
}

}  // namespace cpbc
