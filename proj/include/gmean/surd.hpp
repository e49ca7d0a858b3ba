// Copyright 2026 The gmean Authors
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

#ifndef GMEAN_SURD_HPP
#define GMEAN_SURD_HPP

#include <compare>
#include <cstdint>
#include <string>

#include "gmean/rational.hpp"

namespace gmean {

/// Exact real number rat + coeff * sqrt(radicand).
///
/// Normal form: radicand is square-free and >= 2 whenever coeff != 0;
/// otherwise coeff = 0 and radicand = 0. Zero is (0, 0, 0).
class QuadraticSurd {
 public:
  QuadraticSurd() = default;
  QuadraticSurd(Rational r) : rat_(std::move(r)) {}  // NOLINT: implicit by intent
  QuadraticSurd(std::int64_t r) : rat_(r) {}         // NOLINT

  /// a + b*sqrt(d), normalized. Square factors of d move into the
  /// coefficient; a perfect-square d folds into the rational part.
  static QuadraticSurd make(Rational a, Rational b, std::uint64_t d);

  /// sqrt(v) for v >= 0, exact: sqrt(n/d) = sqrt(n*d)/d.
  /// Throws InvalidArgument for v < 0 and Overflow when n*d exceeds 64 bits.
  static QuadraticSurd sqrt(const Rational& v);

  const Rational& rat() const noexcept { return rat_; }
  const Rational& coeff() const noexcept { return coeff_; }
  std::uint64_t radicand() const noexcept { return radicand_; }

  bool is_rational() const noexcept { return coeff_.is_zero(); }
  bool is_zero() const noexcept { return rat_.is_zero() && coeff_.is_zero(); }

  /// -1, 0 or +1, decided with integer arithmetic only.
  int sign() const;

  QuadraticSurd abs() const { return sign() < 0 ? -*this : *this; }
  QuadraticSurd conjugate() const;

  double to_double() const;

  /// Compact exact form "(A + B*sqrt(d))/C" with integers A, B, C.
  std::string to_string() const;

  QuadraticSurd operator-() const;

  friend bool operator==(const QuadraticSurd&, const QuadraticSurd&) = default;

 private:
  QuadraticSurd(Rational a, Rational b, std::uint64_t d)
      : rat_(std::move(a)), coeff_(std::move(b)), radicand_(d) {}

  Rational rat_;
  Rational coeff_;
  std::uint64_t radicand_ = 0;
};

enum class SurdOp { Add, Sub, Mul, Div };

/// Field arithmetic inside Q(sqrt(d)). Operands must share a radicand unless
/// one of them is rational. Throws MixedRadicands or DivisionByZero.
QuadraticSurd combine(SurdOp op, const QuadraticSurd& lhs, const QuadraticSurd& rhs);

inline QuadraticSurd operator+(const QuadraticSurd& a, const QuadraticSurd& b) {
  return combine(SurdOp::Add, a, b);
}
inline QuadraticSurd operator-(const QuadraticSurd& a, const QuadraticSurd& b) {
  return combine(SurdOp::Sub, a, b);
}
inline QuadraticSurd operator*(const QuadraticSurd& a, const QuadraticSurd& b) {
  return combine(SurdOp::Mul, a, b);
}
inline QuadraticSurd operator/(const QuadraticSurd& a, const QuadraticSurd& b) {
  return combine(SurdOp::Div, a, b);
}

/// Exact ordering. Works across different radicands as well.
std::strong_ordering compare(const QuadraticSurd& lhs, const QuadraticSurd& rhs);

inline std::strong_ordering operator<=>(const QuadraticSurd& a, const QuadraticSurd& b) {
  return compare(a, b);
}

/// Decimal expansion truncated toward zero to `digits` fractional digits.
/// Every digit is exact. Negative values keep their sign even when the
/// truncated magnitude is zero ("-0.00"). Requires 1 <= digits <= 1000.
std::string to_decimal(const QuadraticSurd& v, unsigned digits);

/// Splits d = k^2 * s with s square-free; returns s and writes k.
/// Trial division up to sqrt(d).
std::uint64_t square_free_part(std::uint64_t d, std::uint64_t* square_root_of_rest = nullptr);

}  // namespace gmean

#endif  // GMEAN_SURD_HPP
