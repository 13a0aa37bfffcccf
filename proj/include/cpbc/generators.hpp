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

#ifndef CPBC_GENERATORS_HPP
#define CPBC_GENERATORS_HPP

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cpbc/graph.hpp"

namespace cpbc {

// Paths and cycles are labeled by position; star(n) puts the center at 0.
// Grid, torus, hypercube and Hamming graphs are Cartesian products of paths,
// cycles and complete graphs, labeled by the product's mixed-radix rule.

Graph path_graph(std::size_t n);                 // n >= 1
Graph cycle_graph(std::size_t n);                // n >= 3
Graph complete_graph(std::size_t n);             // n >= 1
Graph star_graph(std::size_t leaves);            // leaves >= 1, order leaves + 1
Graph grid_graph(std::size_t m, std::size_t n);  // P_m x P_n, m, n >= 1
Graph torus_graph(std::size_t m, std::size_t n); // C_m x C_n, m, n >= 3
Graph hypercube_graph(std::size_t r);            // r >= 1
Graph hamming_graph(std::span<const std::size_t> sizes);  // every size >= 2

/// Dispatch by family name: path, cycle, complete, star, grid, hypercube,
/// hamming, torus. Throws InvalidParameterError on an unknown family or a
/// parameter below the family minimum.
Graph generate(std::string_view family, std::span<const std::size_t> params);

std::vector<std::string_view> family_names();

/// "family p1 p2 ..." as used in report headers.
std::string describe(std::string_view family, std::span<const std::size_t> params);

}  // namespace cpbc

#endif  // CPBC_GENERATORS_HPP
