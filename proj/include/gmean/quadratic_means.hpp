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

#ifndef GMEAN_QUADRATIC_MEANS_HPP
#define GMEAN_QUADRATIC_MEANS_HPP

#include <cstdint>
#include <optional>
#include <utility>

#include "gmean/rational.hpp"
#include "gmean/surd.hpp"

namespace gmean {

/// Sign of the linear term. Plus: x^2 + p x - q = 0 (golden-mean branch).
/// Minus: x^2 - p x - q = 0 (metallic branch).
enum class Sign { Plus, Minus };

inline int sign_value(Sign s) noexcept { return s == Sign::Plus ? 1 : -1; }

struct QuadraticSpec {
  std::uint64_t p = 1;  // >= 1
  Rational q;
  Sign sign = Sign::Plus;
};

/// Both real roots of a QuadraticSpec, x1 >= x2.
struct RootPair {
  QuadraticSurd x1;
  QuadraticSurd x2;
  Rational discriminant;  // p^2 + 4q
  /// 2m + 1, set only by generalized_gm.
  std::optional<std::uint64_t> r;
};

/// Exact roots (-s p +/- sqrt(p^2 + 4q)) / 2. Throws NoRealRoots when the
/// discriminant is negative, InvalidArgument when p = 0.
RootPair solve_quadratic(const QuadraticSpec& spec);

/// x^2 + x = m/2, i.e. roots (-1 +/- sqrt(2m + 1)) / 2.
RootPair generalized_gm(std::uint64_t m);

/// Positive root (p + sqrt(p^2 + 4q)) / 2 of x^2 - p x - q = 0.
/// Requires p >= 1 and q >= 0.
QuadraticSurd metallic_mean(std::uint64_t p, const Rational& q);

/// (k, k + 1) when q = k(k + 1), i.e. when 1 + 4q is an odd perfect square.
std::optional<std::pair<std::uint64_t, std::uint64_t>> integer_metallic(std::uint64_t q);

}  // namespace gmean

#endif  // GMEAN_QUADRATIC_MEANS_HPP
