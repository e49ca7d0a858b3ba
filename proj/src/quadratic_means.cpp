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

#include "gmean/quadratic_means.hpp"

#include "gmean/error.hpp"

namespace gmean {

RootPair solve_quadratic(const QuadraticSpec& spec) {
  if (spec.p == 0) throw Error(ErrorCode::InvalidArgument, "p must be at least 1");
  const Rational p{BigInt(spec.p)};
  const Rational disc = p * p + Rational(4) * spec.q;
  if (disc.sign() < 0) {
    throw Error(ErrorCode::NoRealRoots, "discriminant " + disc.to_string() + " is negative");
  }
  const QuadraticSurd centre(Rational(-sign_value(spec.sign)) * p / Rational(2));
  const QuadraticSurd half_root = QuadraticSurd::sqrt(disc) / QuadraticSurd(2);
  return RootPair{centre + half_root, centre - half_root, disc, std::nullopt};
}

RootPair generalized_gm(std::uint64_t m) {
  RootPair roots = solve_quadratic({1, Rational(BigInt(m), BigInt(2)), Sign::Plus});
  roots.r = 2 * m + 1;
  return roots;
}

QuadraticSurd metallic_mean(std::uint64_t p, const Rational& q) {
  if (q.sign() < 0) {
    throw Error(ErrorCode::InvalidArgument, "metallic means need q >= 0, got " + q.to_string());
  }
  return solve_quadratic({p, q, Sign::Minus}).x1;
}

std::optional<std::pair<std::uint64_t, std::uint64_t>> integer_metallic(std::uint64_t q) {
  BigInt root;
  if (!is_perfect_square(1 + 4 * BigInt(q), &root)) return std::nullopt;
  // 1 + 4q is odd, so its square root is odd as well.
  const auto k = ((root - 1) / 2).convert_to<std::uint64_t>();
  return std::pair{k, k + 1};
}

}  // namespace gmean
