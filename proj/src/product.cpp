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

#include "cpbc/product.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace cpbc {

ProductSpec::ProductSpec(std::vector<Graph> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) {
    throw InvalidParameterError("a product needs at least one factor");
  }
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i].order() == 0 || !factors_[i].is_connected()) {
      throw DisconnectedGraphError("factor " + std::to_string(i) + " is not connected");
    }
    radices_.push_back(factors_[i].order());
  }
  strides_.assign(factors_.size(), 1);
  for (std::size_t i = factors_.size() - 1; i > 0; --i) {
    strides_[i - 1] = strides_[i] * radices_[i];
  }
  order_ = strides_[0] * radices_[0];
}

Vertex ProductSpec::encode(std::span<const Vertex> coords) const {
  if (coords.size() != factors_.size()) {
    throw InvalidParameterError("coordinate vector has " + std::to_string(coords.size()) +
                                " entries, product has " + std::to_string(factors_.size()) +
                                " factors");
  }
  std::size_t id = 0;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] >= radices_[i]) {
      throw InvalidParameterError("coordinate " + std::to_string(i) + " out of range");
    }
    id += coords[i] * strides_[i];
  }
  return static_cast<Vertex>(id);
}

Coordinates ProductSpec::decode(Vertex id) const {
  if (id >= order_) {
    throw InvalidParameterError("product vertex " + std::to_string(id) + " out of range");
  }
  Coordinates coords(factors_.size());
  std::size_t rest = id;
  for (std::size_t i = factors_.size(); i-- > 0;) {
    coords[i] = static_cast<Vertex>(rest % radices_[i]);
    rest /= radices_[i];
  }
  return coords;
}

ProductGraph cartesian_product(std::vector<Graph> factors) {
  ProductSpec spec(std::move(factors));
  std::vector<Edge> edges;
  for (Vertex id = 0; id < spec.order(); ++id) {
    const Coordinates c = spec.decode(id);
    for (std::size_t i = 0; i < spec.factor_count(); ++i) {
      for (Vertex w : spec.factor(i).neighbors(c[i])) {
        if (w > c[i]) {
          edges.emplace_back(id, static_cast<Vertex>(id + (w - c[i]) * spec.stride(i)));
        }
      }
    }
  }
  Graph graph = Graph::from_edges(spec.order(), edges);
  return ProductGraph{std::move(spec), std::move(graph)};
}

ProductGeodesics::ProductGeodesics(ProductSpec spec) : spec_(std::move(spec)) {
  tables_.reserve(spec_.factor_count());
  for (const Graph& f : spec_.factors()) tables_.emplace_back(f);
}

namespace {

void check_arity(const ProductGeodesics& pg, std::span<const Vertex> c) {
  const auto& spec = pg.spec();
  if (c.size() != spec.factor_count()) {
    throw InvalidParameterError("coordinate vector has wrong arity");
  }
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] >= spec.radices()[i]) {
      throw InvalidParameterError("coordinate " + std::to_string(i) + " out of range");
    }
  }
}

/// Pascal triangle up to the product diameter; the fold only needs
/// binomials with top row at most the total distance.
class BinomialTable {
 public:
  explicit BinomialTable(std::size_t max_n) : rows_(max_n + 1) {
    for (std::size_t n = 0; n <= max_n; ++n) {
      rows_[n].resize(n + 1);
      rows_[n][0] = rows_[n][n] = 1;
      for (std::size_t k = 1; k < n; ++k) rows_[n][k] = rows_[n - 1][k - 1] + rows_[n - 1][k];
    }
  }
  const BigInt& operator()(std::size_t n, std::size_t k) const { return rows_[n][k]; }

 private:
  std::vector<std::vector<BigInt>> rows_;
};

std::size_t diameter_bound(const ProductGeodesics& pg) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < pg.spec().factor_count(); ++i) {
    const auto& t = pg.factor_tables(i);
    Distance best = 0;
    for (Vertex s = 0; s < t.order(); ++s) {
      const auto& d = t.from(s).dist;
      best = std::max(best, *std::max_element(d.begin(), d.end()));
    }
    total += best;
  }
  return total;
}

/// Two-factor decomposition applied left to right: the accumulated product
/// of the first i factors plays G and factor i plays H.
///   delta = delta_G * delta_H * C(ux) * C(xv) / C(uv)
/// where each C is the binomial choosing the G-steps among all steps.
/// Returns false when x leaves some factor interval.
bool fold_dependency(const ProductGeodesics& pg, const BinomialTable& binom,
                     std::span<const Vertex> u, std::span<const Vertex> v,
                     std::span<const Vertex> x, BigInt& num, BigInt& den) {
  const std::size_t k = pg.spec().factor_count();
  for (std::size_t i = 0; i < k; ++i) {
    if (!pg.factor_tables(i).on_geodesic(u[i], v[i], x[i])) return false;
  }
  num = 1;
  den = 1;
  std::size_t acc_ux = 0, acc_xv = 0, acc_uv = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const auto& t = pg.factor_tables(i);
    const Distance ux = t.dist(u[i], x[i]);
    const Distance xv = t.dist(x[i], v[i]);
    const Distance uv = t.dist(u[i], v[i]);
    // sigma(a, a) = 1 makes coincident projections contribute a factor 1.
    num *= t.sigma(u[i], x[i]) * t.sigma(x[i], v[i]);
    den *= t.sigma(u[i], v[i]);
    num *= binom(acc_ux + ux, ux) * binom(acc_xv + xv, xv);
    den *= binom(acc_uv + uv, uv);
    acc_ux += ux;
    acc_xv += xv;
    acc_uv += uv;
  }
  return true;
}

}  // namespace

Distance product_distance(const ProductGeodesics& pg, std::span<const Vertex> u,
                          std::span<const Vertex> v) {
  check_arity(pg, u);
  check_arity(pg, v);
  Distance total = 0;
  for (std::size_t i = 0; i < u.size(); ++i) total += pg.factor_tables(i).dist(u[i], v[i]);
  return total;
}

BigInt product_sigma(const ProductGeodesics& pg, std::span<const Vertex> u,
                     std::span<const Vertex> v) {
  check_arity(pg, u);
  check_arity(pg, v);
  BigInt count = 1;
  std::size_t remaining = product_distance(pg, u, v);
  // d!/(d_1!...d_k!) as C(d, d_1) C(d - d_1, d_2) ...
  for (std::size_t i = 0; i < u.size(); ++i) {
    const auto& t = pg.factor_tables(i);
    const Distance di = t.dist(u[i], v[i]);
    count *= t.sigma(u[i], v[i]) * binomial(remaining, di);
    remaining -= di;
  }
  return count;
}

bool interval_membership(const ProductGeodesics& pg, std::span<const Vertex> u,
                         std::span<const Vertex> v, std::span<const Vertex> w) {
  check_arity(pg, u);
  check_arity(pg, v);
  check_arity(pg, w);
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (!pg.factor_tables(i).on_geodesic(u[i], v[i], w[i])) return false;
  }
  return true;
}

ExactRational product_pair_dependency(const ProductGeodesics& pg, std::span<const Vertex> u,
                                      std::span<const Vertex> v, std::span<const Vertex> x) {
  check_arity(pg, u);
  check_arity(pg, v);
  check_arity(pg, x);
  if (std::ranges::equal(u, v)) {
    throw InvalidParameterError("pair dependency needs distinct endpoints");
  }
  if (std::ranges::equal(x, u) || std::ranges::equal(x, v)) return 0;
  const BinomialTable binom(product_distance(pg, u, v));
  BigInt num, den;
  if (!fold_dependency(pg, binom, u, v, x, num, den)) return 0;
  return make_rational(num, den);
}

namespace {

std::vector<Coordinates> all_coordinates(const ProductSpec& spec) {
  std::vector<Coordinates> coords;
  coords.reserve(spec.order());
  for (Vertex id = 0; id < spec.order(); ++id) coords.push_back(spec.decode(id));
  return coords;
}

ExactRational betweenness_at(const ProductGeodesics& pg, const BinomialTable& binom,
                             const std::vector<Coordinates>& coords, Vertex x) {
  const auto n = static_cast<Vertex>(coords.size());
  ExactRational total = 0;
  BigInt num, den;
  for (Vertex u = 0; u < n; ++u) {
    if (u == x) continue;
    for (Vertex v = u + 1; v < n; ++v) {
      if (v == x) continue;
      if (fold_dependency(pg, binom, coords[u], coords[v], coords[x], num, den)) {
        total += make_rational(num, den);
      }
    }
  }
  return total;
}

}  // namespace

ExactRational factorized_betweenness(const ProductGeodesics& pg, std::span<const Vertex> x) {
  check_arity(pg, x);
  const BinomialTable binom(diameter_bound(pg));
  return betweenness_at(pg, binom, all_coordinates(pg.spec()), pg.spec().encode(x));
}

CentralityReport factorized_betweenness(const ProductGeodesics& pg, std::string descriptor) {
  const BinomialTable binom(diameter_bound(pg));
  const auto coords = all_coordinates(pg.spec());
  CentralityReport report;
  report.method = Method::kFactorized;
  report.graph = std::move(descriptor);
  report.values.reserve(coords.size());
  for (Vertex x = 0; x < coords.size(); ++x) {
    report.values.push_back(betweenness_at(pg, binom, coords, x));
  }
  return report;
}

BigInt product_wiener(std::span<const Graph> factors) {
  if (factors.empty()) {
    throw InvalidParameterError("a product needs at least one factor");
  }
  BigInt total = 0;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    BigInt term = wiener(factors[i]);
    for (std::size_t j = 0; j < factors.size(); ++j) {
      if (j != i) term *= BigInt(static_cast<unsigned long>(factors[j].order() * factors[j].order()));
    }
    total += term;
  }
  return total;
}

}  // namespace cpbc
