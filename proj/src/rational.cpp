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

#include "gmean/rational.hpp"

#include <cctype>
#include <cmath>

#include "gmean/error.hpp"

namespace gmean {

namespace mp = boost::multiprecision;

Rational::Rational(BigInt num, BigInt den) {
  if (den.is_zero()) {
    throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
  }
  if (den.sign() < 0) {
    num = -num;
    den = -den;
  }
  BigInt g = mp::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  num_ = std::move(num);
  den_ = std::move(den);
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInt parse_unsigned(std::string_view s) {
  BigInt out = 0;
  for (char c : s) out = out * 10 + (c - '0');
  return out;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  auto fail = [&]() -> Error {
    return Error(ErrorCode::InvalidArgument,
                 "not a rational number: '" + std::string(text) + "'");
  };
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view n = s.substr(0, slash);
    std::string_view d = s.substr(slash + 1);
    if (!all_digits(n) || !all_digits(d)) throw fail();
    BigInt den = parse_unsigned(d);
    if (den.is_zero()) throw Error(ErrorCode::DivisionByZero, "zero denominator in '" + std::string(text) + "'");
    value = Rational(parse_unsigned(n), den);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view ip = s.substr(0, dot);
    std::string_view fp = s.substr(dot + 1);
    if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)) ||
        (ip.empty() && fp.empty())) {
      throw fail();
    }
    BigInt scale = mp::pow(BigInt(10), static_cast<unsigned>(fp.size()));
    BigInt whole = ip.empty() ? BigInt(0) : parse_unsigned(ip);
    BigInt frac = fp.empty() ? BigInt(0) : parse_unsigned(fp);
    value = Rational(whole * scale + frac, scale);
  } else {
    if (!all_digits(s)) throw fail();
    value = Rational(parse_unsigned(s));
  }
  return negative ? -value : value;
}

Rational Rational::pow(unsigned exponent) const {
  return Rational(mp::pow(num_, exponent), mp::pow(den_, exponent), Reduced{});
}

BigInt Rational::floor() const {
  BigInt q, r;
  mp::divide_qr(num_, den_, q, r);
  if (r.sign() < 0) q -= 1;
  return q;
}

double Rational::to_double() const {
  // Shift both parts into the double range before dividing so huge
  // numerators and denominators do not overflow to inf.
  const unsigned nb = num_.is_zero() ? 0 : mp::msb(mp::abs(num_));
  const unsigned db = mp::msb(den_);
  const int shift_n = nb > 900 ? static_cast<int>(nb) - 900 : 0;
  const int shift_d = db > 900 ? static_cast<int>(db) - 900 : 0;
  const double n = static_cast<double>(BigInt(num_ >> shift_n));
  const double d = static_cast<double>(BigInt(den_ >> shift_d));
  return std::ldexp(n / d, shift_n - shift_d);
}

std::string Rational::to_string() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

Rational Rational::operator-() const { return Rational(-num_, den_, Reduced{}); }

Rational operator+(const Rational& a, const Rational& b) {
  if (a.den_ == b.den_) return Rational(a.num_ + b.num_, a.den_);
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
  return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const BigInt lhs = a.num_ * b.den_;
  const BigInt rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

BigInt isqrt(const BigInt& n) {
  if (n.sign() < 0) throw Error(ErrorCode::InvalidArgument, "isqrt of negative value");
  return mp::sqrt(n);
}

bool is_perfect_square(const BigInt& n, BigInt* root) {
  if (n.sign() < 0) return false;
  BigInt s = mp::sqrt(n);
  if (s * s != n) return false;
  if (root) *root = std::move(s);
  return true;
}

}  // namespace gmean
