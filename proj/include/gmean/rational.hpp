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

#ifndef GMEAN_RATIONAL_HPP
#define GMEAN_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace gmean {

using BigInt = boost::multiprecision::cpp_int;

/// Exact fraction num/den with den > 0 and gcd(|num|, den) = 1.
///
/// Every constructor and arithmetic operator returns a reduced value, so two
/// Rationals are equal iff their numerators and denominators are equal.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT: implicit by intent
  Rational(BigInt n) : num_(std::move(n)), den_(1) {}  // NOLINT
  Rational(BigInt num, BigInt den);

  /// Accepts "7", "-3/2", "0.25" and "-1.5". Throws InvalidArgument.
  static Rational parse(std::string_view text);

  const BigInt& num() const noexcept { return num_; }
  const BigInt& den() const noexcept { return den_; }

  int sign() const noexcept { return num_.sign(); }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_integer() const noexcept { return den_ == 1; }

  Rational abs() const { return sign() < 0 ? -*this : *this; }
  Rational pow(unsigned exponent) const;

  /// Largest integer <= value.
  BigInt floor() const;

  double to_double() const;

  /// "num" for integers, "num/den" otherwise.
  std::string to_string() const;

  Rational operator-() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  /// Throws DivisionByZero.
  friend Rational operator/(const Rational& a, const Rational& b);

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  struct Reduced {};
  Rational(BigInt num, BigInt den, Reduced)
      : num_(std::move(num)), den_(std::move(den)) {}

  BigInt num_;
  BigInt den_;
};

/// floor(sqrt(n)) for n >= 0.
BigInt isqrt(const BigInt& n);

/// Returns true and sets root when n is a perfect square.
bool is_perfect_square(const BigInt& n, BigInt* root = nullptr);

}  // namespace gmean

#endif  // GMEAN_RATIONAL_HPP
