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

#ifndef GMEAN_TRINOMIAL_HPP
#define GMEAN_TRINOMIAL_HPP

#include <cstdint>
#include <vector>

#include "gmean/quadratic_means.hpp"
#include "gmean/rational.hpp"

namespace gmean {

enum class LowerExponent { One, NMinusOne };

/// x^n + s p x^e = m/2 with e = 1 or e = n - 1.
struct TrinomialSpec {
  unsigned n = 2;
  std::uint64_t p = 1;
  Sign sign = Sign::Plus;
  std::uint64_t m = 0;
  LowerExponent lower = LowerExponent::One;
};

struct SolverConfig {
  /// Bound on |f(x)| relative to 1 + |x|^n.
  double tolerance = 1e-12;
  unsigned max_iterations = 200;
  double bracket_growth = 2.0;

  /// Throws InvalidArgument unless tolerance > 0, max_iterations >= 1 and
  /// bracket_growth > 1.
  void validate() const;
};

struct Bracket {
  double lo = 0.0;
  double hi = 0.0;
};

struct RootEntry {
  double value = 0.0;
  Bracket bracket;  // isolating interval; lo == hi for roots located exactly
  double residual = 0.0;
  unsigned iterations = 0;
};

/// Real roots in ascending order.
struct RootSet {
  std::vector<RootEntry> roots;
  bool exhaustive = true;
};

/// One disjoint bracket per real root, ascending. The sign of f at every
/// critical point is decided exactly, so brackets never miss a root and a
/// multiple root shows up as a zero-width bracket. Throws DegenerateIdentity
/// for x - x = m/2.
std::vector<Bracket> isolate_real_roots(const TrinomialSpec& spec, const SolverConfig& cfg = {});

/// Every real root, refined by bisection with guarded Newton steps.
RootSet solve_trinomial(const TrinomialSpec& spec, const SolverConfig& cfg = {});

/// x^n + x = m/2.
RootSet solve_gm_general(unsigned n, std::uint64_t m, const SolverConfig& cfg = {});

enum class StakhovVariant {
  A,  // x^n + x = 1
  B,  // x^n + x^(n-1) = 1
};

/// The unique non-negative root of the chosen variant (0 for variant B at n = 1).
double solve_stakhov(unsigned n, StakhovVariant variant, const SolverConfig& cfg = {});

enum class EulerMode {
  Direct,       // b^n = n x - a
  Constrained,  // a = b, so b^n + b = n x
};

/// Real solutions b of (a + b^n) / n = x. In constrained mode `a` is ignored.
/// Throws NoRealRoot in direct mode when n is even and n x - a < 0.
RootSet solve_euler(const Rational& a, unsigned n, const Rational& x, EulerMode mode,
                    const SolverConfig& cfg = {});

}  // namespace gmean

#endif  // GMEAN_TRINOMIAL_HPP
