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

#include "cpbc/closed_forms.hpp"

#include <cstdlib>
#include <string>
#include <utility>

#include "cpbc/graph.hpp"

namespace cpbc {

namespace {

BigInt big(std::int64_t v) { return BigInt(static_cast<long>(v)); }

void require(bool ok, const std::string& message) {
  if (!ok) throw InvalidParameterError(message);
}

void require_nonempty(std::span<const std::int64_t> sizes, const char* family) {
  require(!sizes.empty(), std::string(family) + " needs at least one factor size");
}

BigInt product_of(std::span<const std::int64_t> sizes) {
  BigInt p = 1;
  for (auto s : sizes) p *= big(s);
  return p;
}

ExactRational as_integer(const ExactRational& value, const char* what) {
  if (value.get_den() != 1) {
    throw std::logic_error(std::string(what) + " produced a non-integer value");
  }
  return value;
}

// sigma in a grid is the number of monotone lattice paths.
BigInt grid_sigma(std::int64_t di, std::int64_t dj) {
  return binomial(static_cast<std::uint64_t>(std::llabs(di) + std::llabs(dj)),
                  static_cast<std::uint64_t>(std::llabs(di)));
}

}  // namespace

ExactRational hamming_bc(std::span<const std::int64_t> sizes) {
  require_nonempty(sizes, "hamming");
  ExactRational reciprocal_sum = 0;
  for (auto n : sizes) {
    require(n >= 2, "hamming factor sizes must be >= 2");
    reciprocal_sum += make_rational(1, n);
  }
  const auto r = static_cast<std::int64_t>(sizes.size());
  const ExactRational bracket = ExactRational(big(r - 1)) - reciprocal_sum;
  return ExactRational(product_of(sizes)) * bracket / 2 + make_rational(1, 2);
}

ExactRational uniform_kn_bc(std::int64_t n, std::int64_t r) {
  require(n >= 2, "uniform_kn needs n >= 2");
  require(r >= 1, "uniform_kn needs r >= 1");
  const auto ur = static_cast<std::uint64_t>(r);
  const BigInt value = big(r - 1) * power(big(n), ur) - big(r) * power(big(n), ur - 1) + 1;
  return make_rational(value, 2);
}

ExactRational hypercube_bc(std::int64_t r) {
  require(r >= 1, "hypercube needs r >= 1");
  // 2^(r-2) is 1/2 at r = 1.
  const ExactRational scale = r >= 2 ? ExactRational(power(2, static_cast<std::uint64_t>(r - 2)))
                                     : make_rational(1, 2);
  return ExactRational(big(r - 2)) * scale + make_rational(1, 2);
}

ExactRational even_cycles_bc(std::span<const std::int64_t> sizes) {
  require_nonempty(sizes, "even cycles");
  BigInt sum = 0;
  for (auto n : sizes) {
    require(n >= 4 && n % 2 == 0, "even cycle lengths must be even and >= 4");
    sum += big(n);
  }
  const BigInt prod = product_of(sizes);
  return make_rational(prod * sum - 4 * (prod - 1), 8);
}

ExactRational even_cycles_bc_half_lengths(std::span<const std::int64_t> sizes) {
  require_nonempty(sizes, "even cycles");
  BigInt prod_k = 1;
  BigInt sum_k = 0;
  for (auto n : sizes) {
    require(n >= 4 && n % 2 == 0, "even cycle lengths must be even and >= 4");
    prod_k *= big(n / 2);
    sum_k += big(n / 2);
  }
  const auto r = static_cast<std::int64_t>(sizes.size());
  const ExactRational scale = r >= 2 ? ExactRational(power(2, static_cast<std::uint64_t>(r - 2)))
                                     : make_rational(1, 2);
  return scale * ExactRational(prod_k * (sum_k - 2)) + make_rational(1, 2);
}

ExactRational odd_cycles_bc(std::span<const std::int64_t> sizes) {
  require_nonempty(sizes, "odd cycles");
  ExactRational sum = 0;
  for (auto n : sizes) {
    require(n >= 3 && n % 2 == 1, "odd cycle lengths must be odd and >= 3");
    sum += ExactRational(big(n)) - make_rational(1, n);
  }
  const BigInt prod = product_of(sizes);
  return (ExactRational(prod) * sum - ExactRational(4 * (prod - 1))) / 8;
}

ExactRational torus_bc(std::int64_t m, std::int64_t n) {
  require(m >= 3 && n >= 3, "torus needs m, n >= 3");
  if (m % 2 == 0 && n % 2 == 1) std::swap(m, n);
  const BigInt M = big(m), N = big(n);
  if (m % 2 == 1 && n % 2 == 1) {
    return make_rational((M * N - 1) * (M + N - 4), 8);
  }
  if (m % 2 == 0) {
    return make_rational(M * N * N + M * (M - 4) * N + 4, 8);
  }
  return make_rational(M * N * N + (M * M - 4 * M - 1) * N + 4, 8);
}

ExactRational torus_bc_half_lengths(std::int64_t m, std::int64_t n) {
  require(m >= 3 && n >= 3, "torus needs m, n >= 3");
  if (m % 2 == 0 && n % 2 == 1) std::swap(m, n);
  const BigInt k1 = big(m / 2), k2 = big(n / 2);
  const ExactRational half = make_rational(1, 2);
  if (m % 2 == 1 && n % 2 == 1) {
    return ExactRational(k1 * k2 * (k1 + k2)) + ExactRational(k1 * (k1 - 1) / 2) +
           ExactRational(k2 * (k2 - 1) / 2);
  }
  if (m % 2 == 0) {
    return ExactRational(k1 * k2 * (k1 + k2 - 2)) + half;
  }
  return ExactRational(k1 * k2 * (k1 + k2 - 1)) + half * ExactRational((k2 - 1) * (k2 - 1));
}

ExactRational grid_bc(std::int64_t m, std::int64_t n, std::int64_t a, std::int64_t b) {
  require(m >= 1 && n >= 1 && m * n >= 2, "grid needs m, n >= 1 and at least two vertices");
  require(a >= 1 && a <= m && b >= 1 && b <= n, "grid position out of range");

  // Closed quadrants around x = (a, b): each includes the axis row and column.
  struct Box {
    std::int64_t i0, i1, j0, j1;
  };
  const Box lower_left{1, a, 1, b};
  const Box upper_right{a, m, b, n};
  const Box upper_left{1, a, b, n};
  const Box lower_right{a, m, 1, b};

  auto diagonal_sum = [&](const Box& first, const Box& second) {
    ExactRational total = 0;
    for (auto ui = first.i0; ui <= first.i1; ++ui) {
      for (auto uj = first.j0; uj <= first.j1; ++uj) {
        if (ui == a && uj == b) continue;
        const BigInt to_x = grid_sigma(ui - a, uj - b);
        for (auto vi = second.i0; vi <= second.i1; ++vi) {
          for (auto vj = second.j0; vj <= second.j1; ++vj) {
            if (vi == a && vj == b) continue;
            total += make_rational(to_x * grid_sigma(vi - a, vj - b), grid_sigma(vi - ui, vj - uj));
          }
        }
      }
    }
    return total;
  };

  const ExactRational both = diagonal_sum(lower_left, upper_right) + diagonal_sum(upper_left, lower_right);
  // Pairs on the axis row or column through x lie in both diagonal sums.
  const std::int64_t axis_pairs = (a - 1) * (m - a) + (b - 1) * (n - b);
  return both - ExactRational(big(axis_pairs));
}

BigInt cycle_wiener(std::int64_t n) {
  require(n >= 3, "cycle needs n >= 3");
  const BigInt cube = big(n) * big(n) * big(n);
  return n % 2 == 0 ? BigInt(cube / 8) : BigInt((cube - big(n)) / 8);
}

BigInt cycle_product_wiener(std::span<const std::int64_t> sizes, CycleParity parity) {
  require_nonempty(sizes, "cycle product");
  ExactRational sum = 0;
  for (auto n : sizes) {
    require(n >= 3, "cycle lengths must be >= 3");
    const bool even = n % 2 == 0;
    require(even == (parity == CycleParity::kEven),
            "cycle length " + std::to_string(n) + " does not match the requested parity; "
            "mixed-parity products go through product_wiener");
    sum += even ? ExactRational(big(n)) : ExactRational(big(n)) - make_rational(1, n);
  }
  const BigInt prod = product_of(sizes);
  const ExactRational value = ExactRational(prod * prod) * sum / 8;
  return as_integer(value, "cycle_product_wiener").get_num();
}

BigInt debruijn_count(std::int64_t k, std::int64_t n) {
  require(k >= 1 && n >= 0, "debruijn_count needs k >= 1 and n >= 0");
  const auto uk = static_cast<std::uint64_t>(k);
  const auto un = static_cast<std::uint64_t>(n);
  return factorial(uk * un) / power(factorial(un), uk);
}

}  // namespace cpbc
