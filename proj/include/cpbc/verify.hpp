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

#ifndef CPBC_VERIFY_HPP
#define CPBC_VERIFY_HPP

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "cpbc/graph.hpp"

namespace cpbc {

/// A named factor list whose product is checked against direct computation.
struct ProductCase {
  std::string name;
  std::vector<Graph> factors;
};

/// Small factor pool: P_2..P_5, C_3..C_6, K_2..K_5 and the 3-leaf star.
std::vector<ProductCase> factor_pool();

/// Every ordered pair from factor_pool() with at most max_order product
/// vertices, followed by Q_3, Q_4 and K_2 x K_2 x K_3.
std::vector<ProductCase> agreement_instances(std::size_t max_order = 36);

struct SuiteResult {
  std::string name;
  std::size_t checks = 0;
  std::size_t failures = 0;
  /// First failing check, with the exact values involved.
  std::string counterexample;
  double seconds = 0;

  bool passed() const noexcept { return failures == 0; }
};

/// Scopes: closed-forms, products, sigma, structural, wiener, sum-identity,
/// grid, round-trip, or all.
std::vector<std::string_view> verify_scopes();

/// Runs the suites of a scope. Throws InvalidParameterError for an unknown scope.
std::vector<SuiteResult> run_verification(std::string_view scope);

}  // namespace cpbc

#endif  // CPBC_VERIFY_HPP
