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

#ifndef CPBC_RATIONAL_HPP
#define CPBC_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace cpbc {

/// Arbitrary-precision integer used for geodesic counts and Wiener indices.
using BigInt = mpz_class;

/// Reduced fraction with positive denominator. GMP keeps every arithmetic
/// result canonical; values built from a raw numerator/denominator pair must
/// go through make_rational().
using ExactRational = mpq_class;

ExactRational make_rational(const BigInt& num, const BigInt& den);
ExactRational make_rational(std::int64_t num, std::int64_t den = 1);

/// "p/q" in lowest terms; integers are written with an explicit "/1".
std::string to_fraction_string(const ExactRational& value);

/// Accepts "p/q" or a bare integer "p". Throws std::invalid_argument.
ExactRational parse_rational(std::string_view text);

/// Display-only rendering with 12 significant digits.
std::string to_decimal_string(const ExactRational& value);

BigInt binomial(std::uint64_t n, std::uint64_t k);
BigInt factorial(std::uint64_t n);
BigInt power(const BigInt& base, std::uint64_t exponent);

}  // namespace cpbc

#endif  // CPBC_RATIONAL_HPP
