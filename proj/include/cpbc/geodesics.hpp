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

#ifndef CPBC_GEODESICS_HPP
#define CPBC_GEODESICS_HPP

#include <cstdint>
#include <vector>

#include "cpbc/graph.hpp"
#include "cpbc/rational.hpp"

namespace cpbc {

using Distance = std::uint32_t;
inline constexpr Distance kUnreachable = static_cast<Distance>(-1);

/// Single-source hop distances and shortest-path counts.
///
/// sigma[source] is 1 (the empty path). Unreachable vertices carry
/// kUnreachable and a zero count.
struct GeodesicTable {
  Vertex source = 0;
  std::vector<Distance> dist;
  std::vector<BigInt> sigma;
};

GeodesicTable bfs_geodesics(const Graph& g, Vertex source);

/// One GeodesicTable per source, computed once and then read-only.
/// Construction rejects disconnected graphs.
class AllPairsGeodesics {
 public:
  explicit AllPairsGeodesics(const Graph& g);

  std::size_t order() const noexcept { return tables_.size(); }
  const GeodesicTable& from(Vertex s) const { return tables_.at(s); }
  Distance dist(Vertex u, Vertex v) const { return tables_[u].dist[v]; }
  const BigInt& sigma(Vertex u, Vertex v) const { return tables_[u].sigma[v]; }

  bool on_geodesic(Vertex u, Vertex v, Vertex x) const {
    return dist(u, x) + dist(x, v) == dist(u, v);
  }

  /// Geodesics from u to v through x. An endpoint x yields sigma(u, v).
  BigInt sigma_through(Vertex u, Vertex v, Vertex x) const;

  /// Fraction of u-v geodesics through x; zero when x is an endpoint.
  ExactRational pair_dependency(Vertex u, Vertex v, Vertex x) const;

 private:
  std::vector<GeodesicTable> tables_;
};

BigInt sigma_through(const Graph& g, Vertex u, Vertex v, Vertex x);

/// Throws InvalidParameterError when u == v.
ExactRational pair_dependency(const Graph& g, Vertex u, Vertex v, Vertex x);

/// Vertices on at least one u-v geodesic, ascending.
std::vector<Vertex> interval(const Graph& g, Vertex u, Vertex v);

bool is_geodetic(const Graph& g);
Distance diameter(const Graph& g);

}  // namespace cpbc

#endif  // CPBC_GEODESICS_HPP
