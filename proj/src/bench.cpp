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

#include "cpbc/bench.hpp"

#include <chrono>
#include <cstdio>
#include <optional>
#include <ostream>

#include "cpbc/generators.hpp"
#include "cpbc/product.hpp"

namespace cpbc {

namespace {

struct Family {
  std::string_view name;
  std::size_t min_size;
  std::vector<Graph> (*factors)(std::size_t);
};

std::vector<Graph> torus_factors(std::size_t s) { return {cycle_graph(s), cycle_graph(s)}; }
std::vector<Graph> hamming_factors(std::size_t s) { return {complete_graph(s), complete_graph(s)}; }
std::vector<Graph> grid_factors(std::size_t s) { return {path_graph(s), path_graph(s)}; }
std::vector<Graph> hypercube_factors(std::size_t r) {
  return std::vector<Graph>(r, complete_graph(2));
}

const Family& find_family(std::string_view name) {
  static const std::vector<Family> families{{"torus", 3, torus_factors},
                                            {"hamming", 2, hamming_factors},
                                            {"grid", 2, grid_factors},
                                            {"hypercube", 1, hypercube_factors}};
  for (const auto& f : families) {
    if (f.name == name) return f;
  }
  throw InvalidParameterError("bench supports torus, hamming, grid and hypercube, not '" +
                              std::string(name) + "'");
}

}  // namespace

std::vector<std::size_t> bench_sizes(std::string_view family, std::size_t max_size) {
  const Family& f = find_family(family);
  if (max_size < f.min_size) {
    throw InvalidParameterError("bench --max for " + std::string(family) + " must be >= " +
                                std::to_string(f.min_size));
  }
  // Every size up to 6, then growth by half so large maxima stay affordable.
  std::vector<std::size_t> sizes;
  for (std::size_t s = f.min_size; s < max_size;) {
    sizes.push_back(s);
    s = s < 6 ? s + 1 : s + s / 2;
  }
  sizes.push_back(max_size);
  return sizes;
}

std::vector<BenchRow> run_bench(std::string_view family, std::size_t max_size,
                                const std::vector<Method>& methods) {
  const Family& f = find_family(family);
  std::vector<BenchRow> rows;
  for (std::size_t s : bench_sizes(family, max_size)) {
    const auto product = cartesian_product(f.factors(s));
    const std::string instance = std::string(family) + "-" + std::to_string(s);
    std::optional<std::vector<ExactRational>> reference;
    for (Method method : methods) {
      const auto start = std::chrono::steady_clock::now();
      CentralityReport report;
      if (method == Method::kFactorized) {
        report = factorized_betweenness(ProductGeodesics(product.spec));
      } else {
        report = betweenness(product.graph, method);
      }
      const auto stop = std::chrono::steady_clock::now();
      if (!reference) {
        reference = report.values;
      } else if (*reference != report.values) {
        throw std::logic_error("bench: methods disagree on " + instance);
      }
      rows.push_back({instance, product.graph.order(), method,
                      std::chrono::duration<double, std::milli>(stop - start).count()});
    }
  }
  return rows;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << "instance,n,method,wall_ms\n";
  for (const auto& row : rows) {
    char ms[32];
    std::snprintf(ms, sizeof ms, "%.3f", row.wall_ms);
    out << row.instance << ',' << row.order << ',' << to_string(row.method) << ',' << ms << '\n';
  }
}

}  // namespace cpbc
