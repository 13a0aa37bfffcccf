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

#ifndef CPBC_BENCH_HPP
#define CPBC_BENCH_HPP

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "cpbc/centrality.hpp"

namespace cpbc {

struct BenchRow {
  std::string instance;
  std::size_t order = 0;
  Method method = Method::kBrandes;
  double wall_ms = 0;
};

/// Square instances of a product family (torus, hamming, grid: factor size s;
/// hypercube: dimension s) for a ladder of sizes up to max_size, each timed
/// with every requested method. Rows are ordered by size, then by method
/// order as given. Every method's values must equal the first method's,
/// otherwise std::logic_error is thrown.
std::vector<BenchRow> run_bench(std::string_view family, std::size_t max_size,
                                const std::vector<Method>& methods);

/// Sizes the bench visits for a family, ascending.
std::vector<std::size_t> bench_sizes(std::string_view family, std::size_t max_size);

/// CSV with header "instance,n,method,wall_ms".
void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows);

}  // namespace cpbc

#endif  // CPBC_BENCH_HPP
