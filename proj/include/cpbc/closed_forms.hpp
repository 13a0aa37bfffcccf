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

#ifndef CPBC_CLOSED_FORMS_HPP
#define CPBC_CLOSED_FORMS_HPP

#include <cstdint>
#include <span>

#include "cpbc/rational.hpp"

namespace cpbc {

// Closed-form betweenness of the (vertex-transitive) product families and of
// grid vertices. All values are exact and use unordered-pair betweenness.
// Invalid parameters raise InvalidParameterError.

/// Hamming graph K_{n_1} x ... x K_{n_r}, every n_i >= 2.
ExactRational hamming_bc(std::span<const std::int64_t> sizes);

/// r-fold power of K_n.
ExactRational uniform_kn_bc(std::int64_t n, std::int64_t r);

/// Q_r = K_2^r, r >= 1.
ExactRational hypercube_bc(std::int64_t r);

/// Product of even cycles, each n_i >= 4, via the size-sum form.
ExactRational even_cycles_bc(std::span<const std::int64_t> sizes);
/// Same value through the half-length form n_i = 2 k_i.
ExactRational even_cycles_bc_half_lengths(std::span<const std::int64_t> sizes);

/// Product of odd cycles, each n_i >= 3.
ExactRational odd_cycles_bc(std::span<const std::int64_t> sizes);

/// C_m x C_n for any parities, m, n >= 3. A mixed pair is reordered so the
/// odd length comes first.
ExactRational torus_bc(std::int64_t m, std::int64_t n);
/// Same value through the half-length form (m = 2k_1 or 2k_1 + 1, etc.).
ExactRational torus_bc_half_lengths(std::int64_t m, std::int64_t n);

/// Betweenness of vertex (a, b), 1-based, of the m x n grid P_m x P_n, by
/// summing pair dependencies over the two pairs of opposite closed quadrants
/// around (a, b) and removing the axis pairs that both sums count.
ExactRational grid_bc(std::int64_t m, std::int64_t n, std::int64_t a, std::int64_t b);

/// W(C_n): n^3/8 for even n, (n^3 - n)/8 for odd n.
BigInt cycle_wiener(std::int64_t n);

enum class CycleParity { kEven, kOdd };

/// W of a product of cycles that all share the given parity. Mixed parities
/// are rejected; use product_wiener for those.
BigInt cycle_product_wiener(std::span<const std::int64_t> sizes, CycleParity parity);

/// (kn)! / (n!)^k: corner-to-corner geodesics in the k-fold power of P_{n+1}.
BigInt debruijn_count(std::int64_t k, std::int64_t n);

}  // namespace cpbc

#endif  // CPBC_CLOSED_FORMS_HPP
