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

#ifndef CPBC_CENTRALITY_HPP
#define CPBC_CENTRALITY_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cpbc/graph.hpp"
#include "cpbc/rational.hpp"

namespace cpbc {

enum class Method { kDefinitional, kBrandes, kFactorized, kClosedForm };

std::string_view to_string(Method m);
std::optional<Method> parse_method(std::string_view name);

/// Exact per-vertex betweenness with provenance.
struct CentralityReport {
  Method method = Method::kBrandes;
  std::string graph;
  std::vector<ExactRational> values;
  /// Set when a closed form yields one value shared by every vertex.
  bool uniform = false;
};

/// Betweenness over unordered pairs {u, v} with x outside the pair.
/// Accepts kDefinitional (pair-by-pair triple loop over all-pairs tables) or
/// kBrandes (per-source dependency accumulation). Both are exact.
CentralityReport betweenness(const Graph& g, Method method, std::string descriptor = {});

BigInt wiener(const Graph& g);

/// W(G) / C(|G|, 2). Requires at least two vertices.
ExactRational average_distance(const Graph& g);

}  // namespace cpbc

#endif  // CPBC_CENTRALITY_HPP
