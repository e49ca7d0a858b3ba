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

#include "gmean/surd.hpp"

#include <cmath>
#include <limits>

#include "gmean/error.hpp"

namespace gmean {

namespace mp = boost::multiprecision;

std::uint64_t square_free_part(std::uint64_t d, std::uint64_t* square_root_of_rest) {
  std::uint64_t free_part = 1;
  std::uint64_t root = 1;
  std::uint64_t rest = d;
  for (std::uint64_t f = 2; f <= rest / f; ++f) {
    if (rest % f != 0) continue;
    unsigned exponent = 0;
    while (rest % f == 0) {
      rest /= f;
      ++exponent;
    }
    for (unsigned i = 0; i < exponent / 2; ++i) root *= f;
    if (exponent % 2 == 1) free_part *= f;
  }
  free_part *= rest;  // leftover is 1 or a prime
  if (square_root_of_rest) *square_root_of_rest = root;
  return free_part;
}

QuadraticSurd QuadraticSurd::make(Rational a, Rational b, std::uint64_t d) {
  if (b.is_zero() || d == 0) return QuadraticSurd(std::move(a), Rational(), 0);
  std::uint64_t k = 1;
  const std::uint64_t s = square_free_part(d, &k);
  b *= Rational(BigInt(k));
  if (s == 1) return QuadraticSurd(a + b, Rational(), 0);
  return QuadraticSurd(std::move(a), std::move(b), s);
}

QuadraticSurd QuadraticSurd::sqrt(const Rational& v) {
  if (v.sign() < 0) {
    throw Error(ErrorCode::InvalidArgument, "square root of negative value " + v.to_string());
  }
  const BigInt n = v.num() * v.den();
  if (n > std::numeric_limits<std::uint64_t>::max()) {
    throw Error(ErrorCode::Overflow, "radicand of sqrt(" + v.to_string() + ") exceeds 64 bits");
  }
  return make(Rational(), Rational(BigInt(1), v.den()), n.convert_to<std::uint64_t>());
}

namespace {

// sign(a + b*sqrt(d)) for square-free d >= 2.
int surd_sign(const Rational& a, const Rational& b, std::uint64_t d) {
  const int sa = a.sign();
  const int sb = b.sign();
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  const Rational a2 = a * a;
  const Rational b2d = b * b * Rational(BigInt(d));
  if (a2 > b2d) return sa;
  if (a2 < b2d) return sb;
  return 0;
}

std::strong_ordering from_sign(int s) {
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

bool same_field(const QuadraticSurd& x, const QuadraticSurd& y) {
  return x.is_rational() || y.is_rational() || x.radicand() == y.radicand();
}

std::uint64_t shared_radicand(const QuadraticSurd& x, const QuadraticSurd& y) {
  return x.is_rational() ? y.radicand() : x.radicand();
}

}  // namespace

int QuadraticSurd::sign() const { return surd_sign(rat_, coeff_, radicand_); }

QuadraticSurd QuadraticSurd::conjugate() const {
  return QuadraticSurd(rat_, -coeff_, radicand_);
}

QuadraticSurd QuadraticSurd::operator-() const {
  return QuadraticSurd(-rat_, -coeff_, radicand_);
}

double QuadraticSurd::to_double() const {
  if (is_rational()) return rat_.to_double();
  return rat_.to_double() + coeff_.to_double() * std::sqrt(static_cast<double>(radicand_));
}

std::string QuadraticSurd::to_string() const {
  if (is_rational()) return rat_.to_string();
  const BigInt den = mp::lcm(rat_.den(), coeff_.den());
  const BigInt a = rat_.num() * (den / rat_.den());
  const BigInt b = coeff_.num() * (den / coeff_.den());
  const std::string root = "sqrt(" + std::to_string(radicand_) + ")";

  std::string term;
  const BigInt mag = mp::abs(b);
  if (mag != 1) term = mag.str() + "*";
  term += root;

  std::string numerator;
  if (a.is_zero()) {
    numerator = (b.sign() < 0 ? "-" : "") + term;
  } else {
    numerator = a.str() + (b.sign() < 0 ? " - " : " + ") + term;
  }
  if (den == 1) return numerator;
  if (a.is_zero()) return numerator + "/" + den.str();
  return "(" + numerator + ")/" + den.str();
}

QuadraticSurd combine(SurdOp op, const QuadraticSurd& lhs, const QuadraticSurd& rhs) {
  if (!same_field(lhs, rhs)) {
    throw Error(ErrorCode::MixedRadicands,
                "operands live in Q(sqrt(" + std::to_string(lhs.radicand()) + ")) and Q(sqrt(" +
                    std::to_string(rhs.radicand()) + "))");
  }
  const std::uint64_t d = shared_radicand(lhs, rhs);
  const Rational dd{BigInt(d)};
  const Rational& a1 = lhs.rat();
  const Rational& b1 = lhs.coeff();
  const Rational& a2 = rhs.rat();
  const Rational& b2 = rhs.coeff();
  switch (op) {
    case SurdOp::Add:
      return QuadraticSurd::make(a1 + a2, b1 + b2, d);
    case SurdOp::Sub:
      return QuadraticSurd::make(a1 - a2, b1 - b2, d);
    case SurdOp::Mul:
      return QuadraticSurd::make(a1 * a2 + b1 * b2 * dd, a1 * b2 + a2 * b1, d);
    case SurdOp::Div: {
      if (rhs.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero surd");
      // Multiply through by the conjugate; the norm a2^2 - b2^2 d is nonzero
      // because d is square-free.
      const Rational norm = a2 * a2 - b2 * b2 * dd;
      const Rational re = a1 * a2 - b1 * b2 * dd;
      const Rational im = b1 * a2 - a1 * b2;
      return QuadraticSurd::make(re / norm, im / norm, d);
    }
  }
  throw Error(ErrorCode::InvalidArgument, "unknown surd operation");
}

std::strong_ordering compare(const QuadraticSurd& lhs, const QuadraticSurd& rhs) {
  if (same_field(lhs, rhs)) return from_sign((lhs - rhs).sign());

  // lhs - rhs = u + v with u = (a1 - a2) + b1 sqrt(d1) and v = -b2 sqrt(d2).
  const QuadraticSurd u = QuadraticSurd::make(lhs.rat() - rhs.rat(), lhs.coeff(), lhs.radicand());
  const int su = u.sign();
  const int sv = -rhs.coeff().sign();
  if (su == 0) return from_sign(sv);
  if (su == sv) return from_sign(su);
  // Opposite signs: the larger magnitude wins; compare u^2 with v^2.
  const QuadraticSurd v2(rhs.coeff() * rhs.coeff() * Rational(BigInt(rhs.radicand())));
  const int mag = (u * u - v2).sign();
  if (mag > 0) return from_sign(su);
  if (mag < 0) return from_sign(sv);
  return std::strong_ordering::equal;
}

std::string to_decimal(const QuadraticSurd& v, unsigned digits) {
  if (digits < 1 || digits > 1000) {
    throw Error(ErrorCode::InvalidArgument, "digits must be in 1..1000");
  }
  const bool negative = v.sign() < 0;
  const QuadraticSurd w = negative ? -v : v;

  // w = (a + b sqrt(d)) / c over a common denominator c > 0. For integer n
  // and c, floor((n + x)/c) = floor((n + floor(x))/c), so only the integer
  // square root of b^2 s^2 d is needed and every digit is exact.
  const BigInt scale = mp::pow(BigInt(10), digits);
  const BigInt c = mp::lcm(w.rat().den(), w.coeff().den());
  const BigInt a = w.rat().num() * (c / w.rat().den());
  const BigInt b = w.coeff().num() * (c / w.coeff().den());

  BigInt irrational_floor = 0;
  if (!b.is_zero()) {
    const BigInt bs = b * scale;
    const BigInt root = isqrt(bs * bs * w.radicand());
    // sqrt(b^2 s^2 d) is irrational, so floor(-x) = -(floor(x) + 1).
    irrational_floor = b.sign() > 0 ? root : BigInt(-(root + 1));
  }
  const BigInt scaled = Rational(a * scale + irrational_floor, c).floor();

  BigInt whole, frac;
  mp::divide_qr(scaled, scale, whole, frac);
  std::string frac_str = frac.str();
  frac_str.insert(0, digits - frac_str.size(), '0');
  return (negative ? "-" : "") + whole.str() + "." + frac_str;
}

}  // namespace gmean
