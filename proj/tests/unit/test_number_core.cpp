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

#include <doctest.h>

#include <random>

#include "gmean/continued_fraction.hpp"
#include "gmean/error.hpp"
#include "gmean/surd.hpp"
#include "oracles.hpp"

using gmean::BigInt;
using gmean::ContinuedFraction;
using gmean::ErrorCode;
using gmean::QuadraticSurd;
using gmean::Rational;

namespace {

Rational R(std::int64_t n, std::int64_t d = 1) { return Rational(BigInt(n), BigInt(d)); }

QuadraticSurd S(Rational a, Rational b, std::uint64_t d) {
  return QuadraticSurd::make(std::move(a), std::move(b), d);
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const gmean::Error& e) {
    return e.code();
  }
  FAIL("expected gmean::Error");
  return ErrorCode::InvalidArgument;
}

std::vector<BigInt> big(std::initializer_list<int> xs) {
  std::vector<BigInt> out;
  for (int x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_SUITE("rational") {
  TEST_CASE("reduces and normalizes the sign") {
    const Rational r(BigInt(6), BigInt(-4));
    CHECK(r.num() == -3);
    CHECK(r.den() == 2);
    CHECK(R(0, 7) == R(0));
    CHECK(R(0, 7).den() == 1);
  }

  TEST_CASE("parses integers, fractions and decimals") {
    CHECK(Rational::parse("7") == R(7));
    CHECK(Rational::parse("-3/2") == R(-3, 2));
    CHECK(Rational::parse("0.25") == R(1, 4));
    CHECK(Rational::parse("-1.5") == R(-3, 2));
    CHECK(Rational::parse("+4/6") == R(2, 3));
    CHECK(code_of([] { Rational::parse("abc"); }) == ErrorCode::InvalidArgument);
    CHECK(code_of([] { Rational::parse("1/0"); }) == ErrorCode::DivisionByZero);
    CHECK(code_of([] { Rational::parse(""); }) == ErrorCode::InvalidArgument);
    CHECK(code_of([] { Rational::parse("."); }) == ErrorCode::InvalidArgument);
  }

  TEST_CASE("floor rounds toward negative infinity") {
    CHECK(R(7, 2).floor() == 3);
    CHECK(R(-7, 2).floor() == -4);
    CHECK(R(-4).floor() == -4);
  }

  TEST_CASE("division by zero throws") {
    CHECK(code_of([] { (void)(R(1) / R(0)); }) == ErrorCode::DivisionByZero);
  }

  TEST_CASE("to_double survives huge parts") {
    const BigInt huge = boost::multiprecision::pow(BigInt(10), 400);
    CHECK(Rational(huge + 1, huge).to_double() == doctest::Approx(1.0));
    CHECK(R(1, 3).to_double() == doctest::Approx(1.0 / 3.0));
  }

  TEST_CASE("integer square roots") {
    CHECK(gmean::isqrt(BigInt(24)) == 4);
    CHECK(gmean::isqrt(BigInt(25)) == 5);
    BigInt root;
    CHECK(gmean::is_perfect_square(BigInt(144), &root));
    CHECK(root == 12);
    CHECK_FALSE(gmean::is_perfect_square(BigInt(145)));
    CHECK_FALSE(gmean::is_perfect_square(BigInt(-4)));
  }
}

TEST_SUITE("surd_normalize") {
  TEST_CASE("perfect square folds into the rational part") {
    const QuadraticSurd v = S(R(0), R(1), 9);
    CHECK(v.rat() == R(3));
    CHECK(v.coeff() == R(0));
    CHECK(v.radicand() == 0);
  }

  TEST_CASE("square factors move into the coefficient") {
    const QuadraticSurd v = S(R(0), R(2, 4), 12);
    CHECK(v.rat() == R(0));
    CHECK(v.coeff() == R(1));
    CHECK(v.radicand() == 3);
  }

  TEST_CASE("golden ratio reduces its fractions") {
    const QuadraticSurd v = S(R(2, 4), R(2, 4), 5);
    CHECK(v.rat() == R(1, 2));
    CHECK(v.coeff() == R(1, 2));
    CHECK(v.radicand() == 5);
    CHECK(v.to_string() == "(1 + sqrt(5))/2");
  }

  TEST_CASE("zero coefficient or radicand gives the canonical rational") {
    CHECK(S(R(0), R(0), 7) == QuadraticSurd());
    CHECK(S(R(5), R(3), 0).radicand() == 0);
    CHECK(S(R(5), R(3), 1) == QuadraticSurd(R(8)));
  }

  TEST_CASE("radicand is square-free for every d up to 2000") {
    for (std::uint64_t d = 0; d <= 2000; ++d) {
      const QuadraticSurd v = S(R(1, 3), R(2, 7), d);
      if (v.is_rational()) {
        CHECK(v.radicand() == 0);
        continue;
      }
      CHECK(v.radicand() >= 2);
      CHECK(gmean::oracle::is_square_free(v.radicand()));
      // value preserved: coeff^2 * radicand == (2/7)^2 * d
      CHECK(v.coeff() * v.coeff() * Rational(BigInt(v.radicand())) ==
            R(4, 49) * Rational(BigInt(d)));
    }
  }

  TEST_CASE("sqrt of a rational") {
    const QuadraticSurd v = QuadraticSurd::sqrt(R(3, 4));
    CHECK(v == S(R(0), R(1, 2), 3));
    CHECK(QuadraticSurd::sqrt(R(9, 4)) == QuadraticSurd(R(3, 2)));
    CHECK(code_of([] { QuadraticSurd::sqrt(R(-1)); }) == ErrorCode::InvalidArgument);
  }
}

TEST_SUITE("surd_combine") {
  const QuadraticSurd phi_small = S(R(-1, 2), R(1, 2), 5);  // (-1 + sqrt 5)/2
  const QuadraticSurd phi_conj = S(R(-1, 2), R(-1, 2), 5);  // (-1 - sqrt 5)/2

  TEST_CASE("conjugate sum and product") {
    CHECK(phi_small + phi_conj == QuadraticSurd(R(-1)));
    CHECK(phi_small * phi_conj == QuadraticSurd(R(-1)));
    const QuadraticSurd a = S(R(-1, 2), R(1, 2), 3);
    const QuadraticSurd b = S(R(-1, 2), R(-1, 2), 3);
    CHECK(a * b == QuadraticSurd(R(-1, 2)));
  }

  TEST_CASE("division inverts multiplication") {
    const QuadraticSurd q = phi_small / phi_conj;
    CHECK(q * phi_conj == phi_small);
    CHECK(QuadraticSurd(R(1)) / phi_small == phi_small + QuadraticSurd(R(1)));
  }

  TEST_CASE("errors") {
    const QuadraticSurd root2 = S(R(0), R(1), 2);
    const QuadraticSurd root3 = S(R(0), R(1), 3);
    CHECK(code_of([&] { (void)(root2 * root3); }) == ErrorCode::MixedRadicands);
    CHECK(code_of([&] { (void)(root2 + root3); }) == ErrorCode::MixedRadicands);
    CHECK(code_of([&] { (void)(root2 / QuadraticSurd()); }) == ErrorCode::DivisionByZero);
    // a rational operand never mixes fields
    CHECK(root2 * QuadraticSurd(R(3)) == S(R(0), R(3), 2));
  }

  TEST_CASE("field axioms on random values of a shared radicand") {
    std::mt19937_64 rng(20260419);
    std::uniform_int_distribution<int> num(-30, 30);
    std::uniform_int_distribution<int> den(1, 12);
    const std::uint64_t radicands[] = {2, 3, 5, 6, 7, 10, 13};
    auto draw = [&](std::uint64_t d) {
      return S(R(num(rng), den(rng)), R(num(rng), den(rng)), d);
    };
    for (int trial = 0; trial < 300; ++trial) {
      const std::uint64_t d = radicands[trial % 7];
      const QuadraticSurd x = draw(d), y = draw(d), z = draw(d);
      CHECK((x + y) + z == x + (y + z));
      CHECK((x * y) * z == x * (y * z));
      CHECK(x + y == y + x);
      CHECK(x * y == y * x);
      CHECK(x * (y + z) == x * y + x * z);
      CHECK(x + (-x) == QuadraticSurd());
      if (!x.is_zero()) CHECK(x * (QuadraticSurd(R(1)) / x) == QuadraticSurd(R(1)));
    }
  }
}

TEST_SUITE("surd_compare") {
  TEST_CASE("examples") {
    CHECK(gmean::compare(S(R(-1, 2), R(1, 2), 5), QuadraticSurd()) > 0);
    CHECK(gmean::compare(S(R(-1, 2), R(-1, 2), 3), QuadraticSurd()) < 0);
    CHECK(gmean::compare(S(R(1, 2), R(1, 2), 5), S(R(1, 2), R(1, 2), 5)) == 0);
  }

  TEST_CASE("different radicands") {
    const QuadraticSurd root2 = S(R(0), R(1), 2);
    const QuadraticSurd root3 = S(R(0), R(1), 3);
    CHECK(root2 < root3);
    CHECK(S(R(1), R(1), 2) > root3);          // 2.414 > 1.732
    CHECK(S(R(-1), R(1), 2) < S(R(0), R(1, 4), 3));  // 0.414 < 0.433
  }

  TEST_CASE("agrees with 30-digit decimals whenever those differ") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> num(-20, 20);
    std::uniform_int_distribution<int> den(1, 9);
    std::uniform_int_distribution<int> rad(0, 40);
    for (int trial = 0; trial < 400; ++trial) {
      const QuadraticSurd x = S(R(num(rng), den(rng)), R(num(rng), den(rng)), rad(rng));
      const QuadraticSurd y = S(R(num(rng), den(rng)), R(num(rng), den(rng)), rad(rng));
      const std::string dx = gmean::to_decimal(x, 30);
      const std::string dy = gmean::to_decimal(y, 30);
      if (dx == dy) continue;
      const long double fx = std::stold(dx);
      const long double fy = std::stold(dy);
      const auto c = gmean::compare(x, y);
      if (fx < fy) CHECK(c < 0);
      if (fx > fy) CHECK(c > 0);
    }
  }
}

TEST_SUITE("to_decimal") {
  TEST_CASE("printed roots") {
    CHECK(gmean::to_decimal(S(R(-1, 2), R(1, 2), 5), 7) == "0.6180339");
    CHECK(gmean::to_decimal(S(R(-1, 2), R(1, 2), 3), 7) == "0.3660254");
    CHECK(gmean::to_decimal(QuadraticSurd(R(3, 4)), 5) == "0.75000");
  }

  TEST_CASE("negative values truncate toward zero") {
    CHECK(gmean::to_decimal(S(R(-1, 2), R(-1, 2), 5), 7) == "-1.6180339");
    CHECK(gmean::to_decimal(QuadraticSurd(R(-1, 3)), 4) == "-0.3333");
    CHECK(gmean::to_decimal(QuadraticSurd(R(-1, 1000)), 2) == "-0.00");
  }

  TEST_CASE("long expansion matches a reference") {
    // 40 digits of sqrt 2 - 1, from an mpmath computation.
    CHECK(gmean::to_decimal(S(R(-1), R(1), 2), 40) ==
          "0.4142135623730950488016887242096980785696");
  }

  TEST_CASE("digit bounds") {
    CHECK(code_of([] { gmean::to_decimal(QuadraticSurd(R(1)), 0); }) == ErrorCode::InvalidArgument);
    CHECK(code_of([] { gmean::to_decimal(QuadraticSurd(R(1)), 1001); }) == ErrorCode::InvalidArgument);
    CHECK(gmean::to_decimal(S(R(0), R(1), 2), 1000).size() == 1002);
  }

  TEST_CASE("shorter expansions are prefixes of longer ones") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> num(-50, 50);
    std::uniform_int_distribution<int> den(1, 16);
    std::uniform_int_distribution<int> rad(0, 60);
    for (int trial = 0; trial < 200; ++trial) {
      const QuadraticSurd v = S(R(num(rng), den(rng)), R(num(rng), den(rng)), rad(rng));
      for (unsigned n = 1; n <= 25; n += 4) {
        const std::string shorter = gmean::to_decimal(v, n);
        const std::string longer = gmean::to_decimal(v, n + 5);
        CHECK(longer.compare(0, shorter.size(), shorter) == 0);
      }
    }
  }
}

TEST_SUITE("continued_fraction_of") {
  TEST_CASE("golden ratio") {
    const ContinuedFraction cf = gmean::continued_fraction_of(S(R(1, 2), R(1, 2), 5), 50);
    CHECK(cf.initial_terms == big({1}));
    CHECK(cf.periodic_part == big({1}));
    CHECK_FALSE(cf.truncated);
  }

  TEST_CASE("silver ratio") {
    const ContinuedFraction cf = gmean::continued_fraction_of(S(R(1), R(1), 2), 50);
    CHECK(cf.initial_terms == big({2}));
    CHECK(cf.periodic_part == big({2}));
  }

  TEST_CASE("(sqrt 3 - 1)/2 against the floating-point expansion") {
    const QuadraticSurd v = S(R(-1, 2), R(1, 2), 3);
    const ContinuedFraction cf = gmean::continued_fraction_of(v, 50);
    CHECK(cf.initial_terms == big({0}));
    CHECK(cf.periodic_part == big({2, 1}));
    // Unroll the exact expansion to 12 terms and compare with the oracle.
    const auto expected = gmean::oracle::float_continued_fraction(v.to_double(), 12);
    std::vector<std::int64_t> unrolled;
    for (const auto& t : cf.initial_terms) unrolled.push_back(t.convert_to<std::int64_t>());
    for (std::size_t i = 0; unrolled.size() < 12; ++i) {
      unrolled.push_back(cf.periodic_part[i % cf.periodic_part.size()].convert_to<std::int64_t>());
    }
    CHECK(unrolled == expected);
  }

  TEST_CASE("metallic means with q = 1 have period [p]") {
    for (int p = 1; p <= 10; ++p) {
      // (p + sqrt(p^2 + 4)) / 2
      const QuadraticSurd v = S(R(p, 2), R(1, 2), static_cast<std::uint64_t>(p * p + 4));
      const ContinuedFraction cf = gmean::continued_fraction_of(v, 50);
      CAPTURE(p);
      CHECK(cf.initial_terms == big({p}));
      CHECK(cf.periodic_part == big({p}));
    }
  }

  TEST_CASE("pre-period and longer periods") {
    // sqrt 7 = [2; (1, 1, 1, 4)]
    const ContinuedFraction cf = gmean::continued_fraction_of(S(R(0), R(1), 7), 50);
    CHECK(cf.initial_terms == big({2}));
    CHECK(cf.periodic_part == big({1, 1, 1, 4}));
    // (sqrt 7)/3 has a non-reduced start; check against the oracle.
    const QuadraticSurd w = S(R(0), R(1, 3), 7);
    const ContinuedFraction cw = gmean::continued_fraction_of(w, 50);
    CHECK_FALSE(cw.periodic_part.empty());
    const auto expected = gmean::oracle::float_continued_fraction(w.to_double(), 10);
    std::vector<std::int64_t> unrolled;
    for (const auto& t : cw.initial_terms) unrolled.push_back(t.convert_to<std::int64_t>());
    for (std::size_t i = 0; unrolled.size() < 10; ++i) {
      unrolled.push_back(cw.periodic_part[i % cw.periodic_part.size()].convert_to<std::int64_t>());
    }
    unrolled.resize(10);
    CHECK(unrolled == expected);
  }

  TEST_CASE("rationals terminate") {
    const ContinuedFraction cf = gmean::continued_fraction_of(QuadraticSurd(R(43, 19)), 50);
    CHECK(cf.initial_terms == big({2, 3, 1, 4}));
    CHECK(cf.periodic_part.empty());
    CHECK_FALSE(cf.truncated);
  }

  TEST_CASE("term budget") {
    const ContinuedFraction cf = gmean::continued_fraction_of(S(R(0), R(1), 7), 3);
    CHECK(cf.truncated);
    CHECK(cf.periodic_part.empty());
    CHECK(cf.initial_terms == big({2, 1, 1}));
  }

  TEST_CASE("non-positive input") {
    CHECK(code_of([] { gmean::continued_fraction_of(QuadraticSurd(), 10); }) == ErrorCode::NonPositive);
    CHECK(code_of([] { gmean::continued_fraction_of(S(R(-1, 2), R(-1, 2), 5), 10); }) ==
          ErrorCode::NonPositive);
  }
}
