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

#include "gmean/continued_fraction.hpp"

#include <map>
#include <utility>

#include "gmean/error.hpp"

namespace gmean {

namespace mp = boost::multiprecision;

namespace {

ContinuedFraction expand_rational(const Rational& v, unsigned max_terms) {
  ContinuedFraction cf;
  BigInt num = v.num();
  BigInt den = v.den();
  while (!den.is_zero()) {
    if (cf.initial_terms.size() == max_terms) {
      cf.truncated = true;
      break;
    }
    BigInt q, r;
    mp::divide_qr(num, den, q, r);
    cf.initial_terms.push_back(q);
    num = std::move(den);
    den = std::move(r);
  }
  return cf;
}

// floor((p + sqrt(disc)) / q) for non-square disc and q != 0.
BigInt partial_quotient(const BigInt& p, const BigInt& q, const BigInt& root) {
  if (q.sign() > 0) return Rational(p + root, q).floor();
  return -(Rational(p + root, -q).floor() + 1);
}

}  // namespace

ContinuedFraction continued_fraction_of(const QuadraticSurd& v, unsigned max_terms) {
  if (v.sign() <= 0) {
    throw Error(ErrorCode::NonPositive, "continued fraction needs a positive value, got " + v.to_string());
  }
  if (max_terms == 0) throw Error(ErrorCode::InvalidArgument, "max_terms must be positive");
  if (v.is_rational()) return expand_rational(v.rat(), max_terms);

  // Bring v into the form (p + sqrt(disc)) / q with q | disc - p^2.
  const BigInt c = mp::lcm(v.rat().den(), v.coeff().den());
  const BigInt a = v.rat().num() * (c / v.rat().den());
  const BigInt b = v.coeff().num() * (c / v.coeff().den());
  const int s = b.sign();
  BigInt p = a * s;
  BigInt q = c * s;
  BigInt disc = b * b * v.radicand();
  if (((disc - p * p) % q) != 0) {
    const BigInt mag = mp::abs(q);
    p *= mag;
    disc *= q * q;
    q *= mag;
  }
  const BigInt root = isqrt(disc);

  ContinuedFraction cf;
  std::vector<BigInt> terms;
  std::map<std::pair<BigInt, BigInt>, std::size_t> seen;
  for (std::size_t i = 0;; ++i) {
    if (i >= 1) {
      auto [it, inserted] = seen.try_emplace({p, q}, i);
      if (!inserted) {
        const auto start = static_cast<std::ptrdiff_t>(it->second);
        cf.initial_terms.assign(terms.begin(), terms.begin() + start);
        cf.periodic_part.assign(terms.begin() + start, terms.end());
        return cf;
      }
    }
    if (i == max_terms) break;
    BigInt term = partial_quotient(p, q, root);
    p = term * q - p;
    q = (disc - p * p) / q;
    terms.push_back(std::move(term));
  }
  cf.initial_terms = std::move(terms);
  cf.truncated = true;
  return cf;
}

}  // namespace gmean
