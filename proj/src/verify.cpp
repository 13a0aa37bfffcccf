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

#include "cpbc/verify.hpp"

#include <chrono>
#include <numeric>
#include <sstream>
#include <utility>

#include "cpbc/centrality.hpp"
#include "cpbc/closed_forms.hpp"
#include "cpbc/generators.hpp"
#include "cpbc/geodesics.hpp"
#include "cpbc/io.hpp"
#include "cpbc/product.hpp"

namespace cpbc {

std::vector<ProductCase> factor_pool() {
  std::vector<ProductCase> pool;
  for (std::size_t n = 2; n <= 5; ++n) pool.push_back({"P" + std::to_string(n), {path_graph(n)}});
  for (std::size_t n = 3; n <= 6; ++n) pool.push_back({"C" + std::to_string(n), {cycle_graph(n)}});
  for (std::size_t n = 2; n <= 5; ++n) pool.push_back({"K" + std::to_string(n), {complete_graph(n)}});
  pool.push_back({"S3", {star_graph(3)}});
  return pool;
}

std::vector<ProductCase> agreement_instances(std::size_t max_order) {
  const auto pool = factor_pool();
  std::vector<ProductCase> out;
  for (const auto& g : pool) {
    for (const auto& h : pool) {
      if (g.factors[0].order() * h.factors[0].order() > max_order) continue;
      out.push_back({g.name + "x" + h.name, {g.factors[0], h.factors[0]}});
    }
  }
  const Graph k2 = complete_graph(2);
  out.push_back({"Q3", {k2, k2, k2}});
  out.push_back({"Q4", {k2, k2, k2, k2}});
  out.push_back({"K2xK2xK3", {k2, k2, complete_graph(3)}});
  return out;
}

namespace {

class Suite {
 public:
  explicit Suite(std::string name) : start_(std::chrono::steady_clock::now()) {
    result_.name = std::move(name);
  }

  template <class Describe>
  void check(bool ok, Describe&& describe) {
    ++result_.checks;
    if (!ok && result_.failures++ == 0) result_.counterexample = describe();
  }

  SuiteResult finish() {
    result_.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    return std::move(result_);
  }

 private:
  SuiteResult result_;
  std::chrono::steady_clock::time_point start_;
};

std::string fr(const ExactRational& q) { return to_fraction_string(q); }

template <class T>
std::string join(const std::vector<T>& xs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
  return os.str();
}

/// Compares a closed-form value with Brandes at every vertex of g.
void check_uniform(Suite& suite, const std::string& label, const Graph& g,
                   const ExactRational& expected) {
  const auto report = betweenness(g, Method::kBrandes);
  for (std::size_t v = 0; v < report.values.size(); ++v) {
    suite.check(report.values[v] == expected, [&] {
      return label + " vertex " + std::to_string(v) + ": closed form " + fr(expected) +
             ", brandes " + fr(report.values[v]);
    });
  }
}

void nondecreasing_lists(std::int64_t min_value, std::int64_t step, std::int64_t budget,
                         std::vector<std::int64_t>& current,
                         std::vector<std::vector<std::int64_t>>& out) {
  if (!current.empty()) out.push_back(current);
  const std::int64_t start = current.empty() ? min_value : current.back();
  for (std::int64_t n = start; n <= budget; n += step) {
    current.push_back(n);
    nondecreasing_lists(min_value, step, budget / n, current, out);
    current.pop_back();
  }
}

/// Size lists with entries >= min_value stepping by step and product <= budget.
std::vector<std::vector<std::int64_t>> size_lists(std::int64_t min_value, std::int64_t step,
                                                  std::int64_t budget) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> current;
  nondecreasing_lists(min_value, step, budget, current, out);
  return out;
}

std::vector<Graph> cycles_of(const std::vector<std::int64_t>& sizes) {
  std::vector<Graph> factors;
  for (auto n : sizes) factors.push_back(cycle_graph(static_cast<std::size_t>(n)));
  return factors;
}

SuiteResult suite_hamming() {
  Suite s("closed-forms/hamming");
  for (const auto& sizes : size_lists(2, 1, 64)) {
    std::vector<std::size_t> us(sizes.begin(), sizes.end());
    check_uniform(s, "hamming " + join(sizes), hamming_graph(us), hamming_bc(sizes));
  }
  return s.finish();
}

SuiteResult suite_uniform_kn() {
  Suite s("closed-forms/uniform-kn");
  for (std::int64_t n = 2; n <= 5; ++n) {
    for (std::int64_t r = 1; r <= 4; ++r) {
      const std::vector<std::int64_t> sizes(static_cast<std::size_t>(r), n);
      const auto a = uniform_kn_bc(n, r);
      const auto b = hamming_bc(sizes);
      s.check(a == b, [&] {
        return "n=" + std::to_string(n) + " r=" + std::to_string(r) + ": uniform " + fr(a) +
               ", hamming " + fr(b);
      });
    }
  }
  return s.finish();
}

SuiteResult suite_hypercube() {
  Suite s("closed-forms/hypercube");
  for (std::int64_t r = 1; r <= 6; ++r) {
    const auto value = hypercube_bc(r);
    const auto uniform = uniform_kn_bc(2, r);
    s.check(value == uniform, [&] {
      return "r=" + std::to_string(r) + ": hypercube " + fr(value) + ", uniform " + fr(uniform);
    });
    check_uniform(s, "Q" + std::to_string(r), hypercube_graph(static_cast<std::size_t>(r)), value);
  }
  return s.finish();
}

SuiteResult suite_even_cycles() {
  Suite s("closed-forms/even-cycles");
  for (const auto& sizes : size_lists(4, 2, 64)) {
    const auto value = even_cycles_bc(sizes);
    const auto half = even_cycles_bc_half_lengths(sizes);
    s.check(value == half, [&] {
      return "cycles " + join(sizes) + ": size form " + fr(value) + ", half-length form " + fr(half);
    });
    check_uniform(s, "even cycles " + join(sizes), cartesian_product(cycles_of(sizes)).graph, value);
  }
  return s.finish();
}

SuiteResult suite_odd_cycles() {
  Suite s("closed-forms/odd-cycles");
  for (const auto& sizes : size_lists(3, 2, 64)) {
    check_uniform(s, "odd cycles " + join(sizes), cartesian_product(cycles_of(sizes)).graph,
                  odd_cycles_bc(sizes));
  }
  return s.finish();
}

SuiteResult suite_torus() {
  Suite s("closed-forms/torus");
  for (std::int64_t m = 3; m <= 8; ++m) {
    for (std::int64_t n = 3; n <= 8; ++n) {
      check_uniform(s, "torus " + std::to_string(m) + "x" + std::to_string(n),
                    torus_graph(static_cast<std::size_t>(m), static_cast<std::size_t>(n)),
                    torus_bc(m, n));
    }
  }
  // Printed forms agree and match the r-cycle propositions on shared parities.
  for (std::int64_t m = 3; m <= 12; ++m) {
    for (std::int64_t n = 3; n <= 12; ++n) {
      const auto a = torus_bc(m, n);
      const auto b = torus_bc_half_lengths(m, n);
      const auto tag = std::to_string(m) + "x" + std::to_string(n);
      s.check(a == b, [&] { return "torus " + tag + ": " + fr(a) + " vs half-length " + fr(b); });
      const std::vector<std::int64_t> sizes{m, n};
      if (m % 2 == 0 && n % 2 == 0) {
        const auto e = even_cycles_bc(sizes);
        s.check(a == e, [&] { return "torus " + tag + ": " + fr(a) + " vs even cycles " + fr(e); });
      } else if (m % 2 == 1 && n % 2 == 1) {
        const auto o = odd_cycles_bc(sizes);
        s.check(a == o, [&] { return "torus " + tag + ": " + fr(a) + " vs odd cycles " + fr(o); });
      }
    }
  }
  for (const auto& sizes : size_lists(4, 2, 12 * 12 * 12)) {
    if (sizes.back() > 12) continue;
    const auto a = even_cycles_bc(sizes);
    const auto b = even_cycles_bc_half_lengths(sizes);
    s.check(a == b, [&] { return "even cycles " + join(sizes) + ": " + fr(a) + " vs " + fr(b); });
  }
  return s.finish();
}

SuiteResult suite_debruijn() {
  Suite s("closed-forms/debruijn");
  for (std::int64_t k = 1; k <= 3; ++k) {
    for (std::int64_t n = 0; n <= 3; ++n) {
      const ProductGeodesics pg(
          ProductSpec(std::vector<Graph>(static_cast<std::size_t>(k), path_graph(n + 1))));
      const Coordinates lo(static_cast<std::size_t>(k), 0);
      const Coordinates hi(static_cast<std::size_t>(k), static_cast<Vertex>(n));
      const BigInt expected = debruijn_count(k, n);
      const BigInt got = product_sigma(pg, lo, hi);
      s.check(expected == got, [&] {
        return "s(" + std::to_string(k) + "," + std::to_string(n) + ") = " + expected.get_str() +
               ", corner sigma " + got.get_str();
      });
    }
  }
  return s.finish();
}

SuiteResult suite_grid() {
  Suite s("grid");
  for (std::size_t m = 1; m <= 7; ++m) {
    for (std::size_t n = 1; n <= 7; ++n) {
      if (m * n < 2) continue;
      const Graph g = grid_graph(m, n);
      const auto report = betweenness(g, Method::kBrandes);
      ExactRational sum = 0;
      for (std::size_t a = 1; a <= m; ++a) {
        for (std::size_t b = 1; b <= n; ++b) {
          const auto id = (a - 1) * n + (b - 1);
          const auto value = grid_bc(static_cast<std::int64_t>(m), static_cast<std::int64_t>(n),
                                     static_cast<std::int64_t>(a), static_cast<std::int64_t>(b));
          sum += value;
          s.check(value == report.values[id], [&] {
            return "grid " + std::to_string(m) + "x" + std::to_string(n) + " at (" +
                   std::to_string(a) + "," + std::to_string(b) + "): quadrant " + fr(value) +
                   ", brandes " + fr(report.values[id]);
          });
        }
      }
      const ExactRational identity = ExactRational(wiener(g) - binomial(m * n, 2));
      s.check(sum == identity, [&] {
        return "grid " + std::to_string(m) + "x" + std::to_string(n) + ": sum " + fr(sum) +
               ", W - C(n,2) " + fr(identity);
      });
    }
  }
  return s.finish();
}

SuiteResult suite_method_agreement() {
  Suite s("products/method-agreement");
  for (const auto& inst : agreement_instances()) {
    const auto product = cartesian_product(inst.factors);
    const auto def = betweenness(product.graph, Method::kDefinitional);
    const auto bra = betweenness(product.graph, Method::kBrandes);
    const auto fac = factorized_betweenness(ProductGeodesics(product.spec));
    for (std::size_t v = 0; v < product.graph.order(); ++v) {
      const bool ok = def.values[v] == bra.values[v] && bra.values[v] == fac.values[v];
      s.check(ok, [&] {
        return inst.name + " vertex " + std::to_string(v) + ": definitional " +
               fr(def.values[v]) + ", brandes " + fr(bra.values[v]) + ", factorized " +
               fr(fac.values[v]);
      });
    }
  }
  return s.finish();
}

SuiteResult suite_pair_dependency() {
  Suite s("products/pair-dependency");
  for (const auto& inst : agreement_instances()) {
    const auto product = cartesian_product(inst.factors);
    const ProductGeodesics pg(product.spec);
    const AllPairsGeodesics direct(product.graph);
    const auto n = static_cast<Vertex>(product.graph.order());
    std::vector<Coordinates> coords;
    for (Vertex v = 0; v < n; ++v) coords.push_back(product.spec.decode(v));
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        for (Vertex x = 0; x < n; ++x) {
          const auto fac = product_pair_dependency(pg, coords[u], coords[v], coords[x]);
          const auto mat = direct.pair_dependency(u, v, x);
          s.check(fac == mat, [&] {
            return inst.name + " delta(" + std::to_string(u) + "," + std::to_string(v) + "|" +
                   std::to_string(x) + "): factorized " + fr(fac) + ", materialized " + fr(mat);
          });
        }
      }
    }
  }
  return s.finish();
}

SuiteResult suite_sigma() {
  Suite s("sigma/product-vs-bfs");
  for (const auto& inst : agreement_instances()) {
    const auto product = cartesian_product(inst.factors);
    const ProductGeodesics pg(product.spec);
    const AllPairsGeodesics direct(product.graph);
    const auto n = static_cast<Vertex>(product.graph.order());
    for (Vertex u = 0; u < n; ++u) {
      const auto cu = product.spec.decode(u);
      for (Vertex v = 0; v < n; ++v) {
        const auto cv = product.spec.decode(v);
        const BigInt got = product_sigma(pg, cu, cv);
        s.check(got == direct.sigma(u, v), [&] {
          return inst.name + " sigma(" + std::to_string(u) + "," + std::to_string(v) +
                 "): formula " + got.get_str() + ", bfs " + direct.sigma(u, v).get_str();
        });
      }
    }
  }
  return s.finish();
}

SuiteResult suite_hypercube_sigma() {
  Suite s("sigma/hypercube-factorial");
  for (std::size_t r = 1; r <= 6; ++r) {
    const Graph q = hypercube_graph(r);
    const AllPairsGeodesics geo(q);
    for (Vertex u = 0; u < q.order(); ++u) {
      for (Vertex v = 0; v < q.order(); ++v) {
        const BigInt expected = factorial(geo.dist(u, v));
        s.check(geo.sigma(u, v) == expected, [&] {
          return "Q" + std::to_string(r) + " sigma(" + std::to_string(u) + "," +
                 std::to_string(v) + ") = " + geo.sigma(u, v).get_str() + ", d! = " +
                 expected.get_str();
        });
      }
    }
  }
  return s.finish();
}

SuiteResult suite_distance_and_interval() {
  Suite s("structural/distance-interval");
  for (const auto& inst : agreement_instances()) {
    const auto product = cartesian_product(inst.factors);
    const ProductGeodesics pg(product.spec);
    const AllPairsGeodesics direct(product.graph);
    const auto n = static_cast<Vertex>(product.graph.order());
    std::vector<Coordinates> coords;
    for (Vertex v = 0; v < n; ++v) coords.push_back(product.spec.decode(v));
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = 0; v < n; ++v) {
        const auto d = product_distance(pg, coords[u], coords[v]);
        s.check(d == direct.dist(u, v), [&] {
          return inst.name + " d(" + std::to_string(u) + "," + std::to_string(v) + "): sum " +
                 std::to_string(d) + ", bfs " + std::to_string(direct.dist(u, v));
        });
        for (Vertex w = 0; w < n; ++w) {
          const bool member = interval_membership(pg, coords[u], coords[v], coords[w]);
          s.check(member == direct.on_geodesic(u, v, w), [&] {
            return inst.name + " interval(" + std::to_string(u) + "," + std::to_string(v) +
                   ") contains " + std::to_string(w) + ": coordinatewise " +
                   (member ? "yes" : "no") + ", distance test " +
                   (direct.on_geodesic(u, v, w) ? "yes" : "no");
          });
        }
      }
    }
  }
  return s.finish();
}

SuiteResult suite_diameter() {
  Suite s("structural/diameter-additivity");
  for (const auto& inst : agreement_instances()) {
    const auto product = cartesian_product(inst.factors);
    Distance sum = 0;
    for (const auto& f : inst.factors) sum += diameter(f);
    const Distance d = diameter(product.graph);
    s.check(sum == d, [&] {
      return inst.name + ": diameter " + std::to_string(d) + ", sum over factors " +
             std::to_string(sum);
    });
  }
  return s.finish();
}

SuiteResult suite_fibers() {
  Suite s("structural/fiber-convexity");
  for (const auto& inst : agreement_instances()) {
    const auto product = cartesian_product(inst.factors);
    const auto& spec = product.spec;
    const AllPairsGeodesics direct(product.graph);
    const auto n = static_cast<Vertex>(product.graph.order());
    std::vector<Coordinates> coords;
    for (Vertex v = 0; v < n; ++v) coords.push_back(spec.decode(v));
    const auto same_fiber = [&](Vertex a, Vertex b, std::size_t i) {
      for (std::size_t j = 0; j < spec.factor_count(); ++j) {
        if (j != i && coords[a][j] != coords[b][j]) return false;
      }
      return true;
    };
    for (std::size_t i = 0; i < spec.factor_count(); ++i) {
      const AllPairsGeodesics factor(spec.factor(i));
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
          if (!same_fiber(u, v, i)) continue;
          const auto df = factor.dist(coords[u][i], coords[v][i]);
          s.check(df == direct.dist(u, v), [&] {
            return inst.name + " fiber " + std::to_string(i) + " pair (" + std::to_string(u) +
                   "," + std::to_string(v) + "): fiber distance " + std::to_string(df) +
                   ", product " + std::to_string(direct.dist(u, v));
          });
          // Convex: every vertex on a u-v geodesic stays in the fiber.
          for (Vertex w = 0; w < n; ++w) {
            if (!direct.on_geodesic(u, v, w)) continue;
            s.check(same_fiber(u, w, i), [&] {
              return inst.name + " geodesic (" + std::to_string(u) + "," + std::to_string(v) +
                     ") leaves fiber " + std::to_string(i) + " at " + std::to_string(w);
            });
          }
        }
      }
    }
  }
  return s.finish();
}

SuiteResult suite_labeling() {
  Suite s("structural/labeling");
  for (const auto& inst : agreement_instances()) {
    const ProductSpec spec(inst.factors);
    for (Vertex id = 0; id < spec.order(); ++id) {
      const auto c = spec.decode(id);
      s.check(spec.encode(c) == id, [&] {
        return inst.name + " id " + std::to_string(id) + " decodes to " + format_coords(c) +
               " which encodes to " + std::to_string(spec.encode(c));
      });
    }
  }
  return s.finish();
}

SuiteResult suite_wiener() {
  Suite s("wiener");
  for (const auto& inst : agreement_instances()) {
    const auto product = cartesian_product(inst.factors);
    const BigInt formula = product_wiener(inst.factors);
    const BigInt direct = wiener(product.graph);
    s.check(formula == direct, [&] {
      return inst.name + ": product formula " + formula.get_str() + ", all-pairs " + direct.get_str();
    });
  }
  for (std::int64_t n = 3; n <= 40; ++n) {
    const BigInt formula = cycle_wiener(n);
    const BigInt direct = wiener(cycle_graph(static_cast<std::size_t>(n)));
    s.check(formula == direct, [&] {
      return "C" + std::to_string(n) + ": closed form " + formula.get_str() + ", all-pairs " +
             direct.get_str();
    });
  }
  for (const auto& [sizes, parity] :
       std::vector<std::pair<std::vector<std::int64_t>, CycleParity>>{
           {{4, 4}, CycleParity::kEven},   {{3, 3}, CycleParity::kOdd},
           {{6}, CycleParity::kEven},      {{4, 6, 8}, CycleParity::kEven},
           {{3, 5, 7}, CycleParity::kOdd}, {{5, 9}, CycleParity::kOdd}}) {
    const BigInt closed = cycle_product_wiener(sizes, parity);
    const BigInt formula = product_wiener(cycles_of(sizes));
    s.check(closed == formula, [&] {
      return "cycles " + join(sizes) + ": closed form " + closed.get_str() + ", product formula " +
             formula.get_str();
    });
  }
  return s.finish();
}

std::vector<std::pair<std::string, Graph>> identity_graphs() {
  std::vector<std::pair<std::string, Graph>> graphs;
  for (const auto& inst : agreement_instances()) {
    graphs.emplace_back(inst.name, cartesian_product(inst.factors).graph);
  }
  for (std::size_t n = 1; n <= 12; ++n) graphs.emplace_back("P" + std::to_string(n), path_graph(n));
  for (std::size_t n = 3; n <= 12; ++n) graphs.emplace_back("C" + std::to_string(n), cycle_graph(n));
  for (std::size_t n = 1; n <= 8; ++n) graphs.emplace_back("K" + std::to_string(n), complete_graph(n));
  for (std::size_t n = 1; n <= 8; ++n) graphs.emplace_back("S" + std::to_string(n), star_graph(n));
  graphs.emplace_back("Q5", hypercube_graph(5));
  graphs.emplace_back("K3xK4", hamming_graph(std::vector<std::size_t>{3, 4}));
  graphs.emplace_back("C4xC6", torus_graph(4, 6));
  graphs.emplace_back("C5xC5", torus_graph(5, 5));
  graphs.emplace_back("C3xC4", torus_graph(3, 4));
  graphs.emplace_back("P6xP5", grid_graph(6, 5));
  return graphs;
}

SuiteResult suite_sum_identity() {
  Suite s("sum-identity");
  for (const auto& [name, g] : identity_graphs()) {
    const auto report = betweenness(g, Method::kBrandes);
    const ExactRational sum = std::accumulate(report.values.begin(), report.values.end(),
                                              ExactRational(0));
    const ExactRational expected(wiener(g) - binomial(g.order(), 2));
    s.check(sum == expected, [&] {
      return name + ": sum of betweenness " + fr(sum) + ", W - C(n,2) " + fr(expected);
    });
    // Per pair: dependencies of interior vertices sum to d(u, v) - 1.
    const AllPairsGeodesics geo(g);
    for (Vertex u = 0; u < g.order(); ++u) {
      for (Vertex v = u + 1; v < g.order(); ++v) {
        ExactRational pair_sum = 0;
        for (Vertex x = 0; x < g.order(); ++x) {
          if (x != u && x != v) pair_sum += geo.pair_dependency(u, v, x);
        }
        s.check(pair_sum == geo.dist(u, v) - 1, [&] {
          return name + " pair (" + std::to_string(u) + "," + std::to_string(v) +
                 "): dependency sum " + fr(pair_sum) + ", d - 1 = " +
                 std::to_string(geo.dist(u, v) - 1);
        });
      }
    }
  }
  return s.finish();
}

SuiteResult suite_round_trip() {
  Suite s("round-trip");
  for (const auto& [name, g] : identity_graphs()) {
    std::stringstream text;
    write_edge_list(text, g);
    const Graph back = read_edge_list(text);
    s.check(back == g, [&] { return name + ": edge list does not parse back to the same graph"; });

    const auto report = betweenness(g, Method::kBrandes);
    std::stringstream csv;
    write_report_csv(csv, report);
    const auto values = read_report_csv(csv);
    s.check(values == report.values, [&] { return name + ": report CSV exact fields differ"; });
  }
  return s.finish();
}

using SuiteFn = SuiteResult (*)();

const std::vector<std::pair<std::string_view, std::vector<SuiteFn>>>& scope_table() {
  static const std::vector<std::pair<std::string_view, std::vector<SuiteFn>>> table{
      {"closed-forms",
       {suite_hamming, suite_uniform_kn, suite_hypercube, suite_even_cycles, suite_odd_cycles,
        suite_torus, suite_debruijn}},
      {"grid", {suite_grid}},
      {"products", {suite_method_agreement, suite_pair_dependency}},
      {"sigma", {suite_sigma, suite_hypercube_sigma}},
      {"structural", {suite_distance_and_interval, suite_diameter, suite_fibers, suite_labeling}},
      {"wiener", {suite_wiener}},
      {"sum-identity", {suite_sum_identity}},
      {"round-trip", {suite_round_trip}},
  };
  return table;
}

}  // namespace

std::vector<std::string_view> verify_scopes() {
  std::vector<std::string_view> names;
  for (const auto& [name, suites] : scope_table()) names.push_back(name);
  names.push_back("all");
  return names;
}

std::vector<SuiteResult> run_verification(std::string_view scope) {
  std::vector<SuiteResult> results;
  bool matched = false;
  for (const auto& [name, suites] : scope_table()) {
    if (scope != "all" && scope != name) continue;
    matched = true;
    for (SuiteFn fn : suites) results.push_back(fn());
  }
  if (!matched) {
    throw InvalidParameterError("unknown verify scope '" + std::string(scope) + "'");
  }
  return results;
}

}  // namespace cpbc
