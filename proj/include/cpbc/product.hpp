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

#ifndef CPBC_PRODUCT_HPP
#define CPBC_PRODUCT_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "cpbc/centrality.hpp"
#include "cpbc/geodesics.hpp"
#include "cpbc/graph.hpp"
#include "cpbc/rational.hpp"

namespace cpbc {

using Coordinates = std::vector<Vertex>;

/// Ordered factor list of a Cartesian product and its vertex labeling.
///
/// Product vertices are numbered mixed-radix, row-major:
///   id = sum_i coord[i] * prod_{j > i} radix[j]
/// so the last factor varies fastest. Nesting products therefore labels
/// identically to flattening them.
class ProductSpec {
 public:
  /// Throws InvalidParameterError on an empty list and
  /// DisconnectedGraphError on a disconnected factor.
  explicit ProductSpec(std::vector<Graph> factors);

  std::size_t factor_count() const noexcept { return factors_.size(); }
  const Graph& factor(std::size_t i) const { return factors_.at(i); }
  const std::vector<Graph>& factors() const noexcept { return factors_; }
  std::span<const std::size_t> radices() const noexcept { return radices_; }
  std::size_t order() const noexcept { return order_; }

  Vertex encode(std::span<const Vertex> coords) const;
  Coordinates decode(Vertex id) const;

  /// Id distance between neighbors that differ by one step in factor i.
  std::size_t stride(std::size_t i) const { return strides_.at(i); }

 private:
  std::vector<Graph> factors_;
  std::vector<std::size_t> radices_;
  std::vector<std::size_t> strides_;
  std::size_t order_ = 1;
};

struct ProductGraph {
  ProductSpec spec;
  Graph graph;
};

ProductGraph cartesian_product(std::vector<Graph> factors);

/// Factor geodesic tables for a product, built once per factor. Everything
/// below works from these tables alone and never searches the product.
class ProductGeodesics {
 public:
  explicit ProductGeodesics(ProductSpec spec);

  const ProductSpec& spec() const noexcept { return spec_; }
  const AllPairsGeodesics& factor_tables(std::size_t i) const { return tables_.at(i); }

 private:
  ProductSpec spec_;
  std::vector<AllPairsGeodesics> tables_;
};

/// Sum of factor distances.
Distance product_distance(const ProductGeodesics& pg, std::span<const Vertex> u,
                          std::span<const Vertex> v);

/// Product of factor counts times the multinomial d! / (d_1! ... d_k!).
BigInt product_sigma(const ProductGeodesics& pg, std::span<const Vertex> u,
                     std::span<const Vertex> v);

/// True iff every coordinate of w lies in the matching factor interval.
bool interval_membership(const ProductGeodesics& pg, std::span<const Vertex> u,
                         std::span<const Vertex> v, std::span<const Vertex> w);

/// Pair dependency of {u, v} on x, folding the two-factor decomposition
/// across the factor list. Zero when x is u or v. Throws on u == v.
ExactRational product_pair_dependency(const ProductGeodesics& pg, std::span<const Vertex> u,
                                      std::span<const Vertex> v, std::span<const Vertex> x);

ExactRational factorized_betweenness(const ProductGeodesics& pg, std::span<const Vertex> x);

/// factorized_betweenness for every product vertex, indexed by product id.
CentralityReport factorized_betweenness(const ProductGeodesics& pg, std::string descriptor = {});

/// sum_i W(G_i) * prod_{j != i} |G_j|^2.
BigInt product_wiener(std::span<const Graph> factors);

}  // namespace cpbc

#endif  // CPBC_PRODUCT_HPP
