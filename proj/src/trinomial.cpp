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

#include "gmean/trinomial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>

#include "gmean/error.hpp"

namespace gmean {

void SolverConfig::validate() const {
  if (!(tolerance > 0.0) || !std::isfinite(tolerance)) {
    throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
  }
  if (max_iterations < 1) throw Error(ErrorCode::InvalidArgument, "max_iterations must be >= 1");
  if (!(bracket_growth > 1.0) || !std::isfinite(bracket_growth)) {
    throw Error(ErrorCode::InvalidArgument, "bracket_growth must be > 1");
  }
}

namespace {

double ipow(double x, unsigned e) {
  double out = 1.0;
  while (e > 0) {
    if (e & 1U) out *= x;
    x *= x;
    e >>= 1U;
  }
  return out;
}

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

// f(x) = x^n + k x^e - c where e = 1 (linear_lower) or e = n - 1.
struct Trinomial {
  unsigned n = 1;
  std::int64_t k = 0;
  bool linear_lower = true;
  Rational c;
  double c_approx = 0.0;

  Trinomial(unsigned n_, std::int64_t k_, bool linear, Rational c_)
      : n(n_), k(k_), linear_lower(linear), c(std::move(c_)), c_approx(c.to_double()) {}

  unsigned lower() const { return linear_lower ? 1 : n - 1; }

  double operator()(double x) const {
    return ipow(x, n) + static_cast<double>(k) * ipow(x, lower()) - c_approx;
  }

  double derivative(double x) const {
    const unsigned e = lower();
    const double lower_term = e == 0 ? 0.0 : static_cast<double>(k) * e * ipow(x, e - 1);
    return n * ipow(x, n - 1) + lower_term;
  }

  Rational exact(const Rational& x) const {
    return x.pow(n) + Rational(k) * x.pow(lower()) - c;
  }

  double scale(double x) const { return 1.0 + ipow(std::fabs(x), n); }

  // Sign of f as x -> +inf and x -> -inf.
  int sign_at_pos_inf() const {
    if (linear_lower && n == 1) return (k > -1) - (k < -1);
    return 1;
  }
  int sign_at_neg_inf() const { return n % 2 == 1 ? -sign_at_pos_inf() : sign_at_pos_inf(); }
};

Trinomial from_spec(const TrinomialSpec& spec) {
  if (spec.n < 1) throw Error(ErrorCode::InvalidArgument, "n must be at least 1");
  if (spec.p < 1) throw Error(ErrorCode::InvalidArgument, "p must be at least 1");
  if (spec.p > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
    throw Error(ErrorCode::Overflow, "p does not fit in a signed 64-bit integer");
  }
  const auto k = static_cast<std::int64_t>(spec.p) * sign_value(spec.sign);
  const bool linear = spec.lower == LowerExponent::One;
  if (linear && spec.n == 1 && k == -1) {
    throw Error(ErrorCode::DegenerateIdentity,
                spec.m == 0 ? "x - x = 0 holds for every x"
                            : "x - x = " + Rational(BigInt(spec.m), BigInt(2)).to_string() +
                                  " has no solution");
  }
  return Trinomial(spec.n, k, linear, Rational(BigInt(spec.m), BigInt(2)));
}

// Point where f' vanishes (or the origin), with the sign of f there decided
// exactly. `exact` holds the location whenever it is rational and needed.
struct Breakpoint {
  double at = 0.0;
  std::optional<Rational> exact;
  int f_sign = 0;
};

// sign(t - threshold) for t = direction * root^(1/degree), root > 0.
int compare_real_root(int direction, const Rational& root, unsigned degree,
                      const Rational& threshold) {
  if (direction > 0) {
    if (threshold.sign() <= 0) return 1;
    const auto c = root <=> threshold.pow(degree);
    return c > 0 ? 1 : (c < 0 ? -1 : 0);
  }
  if (threshold.sign() >= 0) return -1;
  const auto c = root <=> (-threshold).pow(degree);
  return c > 0 ? -1 : (c < 0 ? 1 : 0);
}

Breakpoint rational_breakpoint(const Trinomial& f, Rational x) {
  const int s = f.exact(x).sign();
  const double at = x.to_double();
  return Breakpoint{at, std::move(x), s};
}

std::vector<Breakpoint> breakpoints(const Trinomial& f) {
  std::vector<Breakpoint> pts;
  const unsigned n = f.n;
  if (n >= 2) {
    if (f.linear_lower && f.k != 0) {
      // f'(x) = n x^(n-1) + k; at a zero t of f', t^n = -k t / n, hence
      // f(t) = k (n-1)/n * (t - threshold) with the rational threshold below.
      const Rational ratio = Rational(BigInt(std::abs(f.k)), BigInt(n));
      const int direction = f.k > 0 ? -1 : 1;
      const unsigned degree = n - 1;
      const Rational threshold =
          f.c * Rational(BigInt(n)) / (Rational(f.k) * Rational(BigInt(degree)));
      std::vector<int> taus;
      if (degree % 2 == 1) {
        taus.push_back(direction);
      } else if (direction > 0) {
        taus = {-1, 1};
      }
      const double magnitude = std::pow(ratio.to_double(), 1.0 / degree);
      for (int tau : taus) {
        const int s = (f.k > 0 ? 1 : -1) * compare_real_root(tau, ratio, degree, threshold);
        Breakpoint bp{tau * magnitude, std::nullopt, s};
        if (s == 0) {
          bp.exact = threshold;
          bp.at = threshold.to_double();
        }
        pts.push_back(std::move(bp));
      }
    } else if (f.linear_lower) {
      pts.push_back(rational_breakpoint(f, Rational()));
    } else {
      // f'(x) = x^(n-2) (n x + k (n-1)).
      pts.push_back(rational_breakpoint(
          f, Rational(BigInt(-f.k) * (n - 1), BigInt(n))));
    }
  }
  const bool has_origin = std::any_of(pts.begin(), pts.end(), [](const Breakpoint& b) {
    return b.exact && b.exact->is_zero();
  });
  if (!has_origin) pts.push_back(rational_breakpoint(f, Rational()));
  std::sort(pts.begin(), pts.end(),
            [](const Breakpoint& a, const Breakpoint& b) { return a.at < b.at; });
  return pts;
}

struct Isolated {
  Bracket bracket;
  int sign_lo = 0;  // sign of f just right of bracket.lo; 0 for exact roots
  std::optional<Rational> exact;
};

constexpr unsigned kMaxExpansions = 4096;

Bracket expand(const Trinomial& f, double anchor, int direction, int target_sign,
               const SolverConfig& cfg) {
  double step = 1.0;
  double prev = anchor;
  for (unsigned i = 0; i < kMaxExpansions; ++i) {
    const double x = anchor + direction * step;
    if (!std::isfinite(x)) break;
    const double fx = f(x);
    if (sign_of(fx) == target_sign || fx == 0.0) {
      return direction > 0 ? Bracket{prev, x} : Bracket{x, prev};
    }
    prev = x;
    step *= cfg.bracket_growth;
  }
  throw Error(ErrorCode::NoConvergence, "bracket expansion did not reach a sign change");
}

std::vector<Isolated> isolate(const Trinomial& f, const SolverConfig& cfg) {
  const std::vector<Breakpoint> pts = breakpoints(f);
  std::vector<Isolated> out;

  const int neg_inf = f.sign_at_neg_inf();
  if (neg_inf * pts.front().f_sign < 0) {
    out.push_back({expand(f, pts.front().at, -1, neg_inf, cfg), neg_inf, std::nullopt});
  }
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const Breakpoint& bp = pts[i];
    if (bp.f_sign == 0) {
      out.push_back({Bracket{bp.at, bp.at}, 0, bp.exact});
    }
    if (i + 1 < pts.size() && bp.f_sign * pts[i + 1].f_sign < 0) {
      out.push_back({Bracket{bp.at, pts[i + 1].at}, bp.f_sign, std::nullopt});
    }
  }
  const int pos_inf = f.sign_at_pos_inf();
  if (pos_inf * pts.back().f_sign < 0) {
    out.push_back({expand(f, pts.back().at, 1, pos_inf, cfg), pts.back().f_sign, std::nullopt});
  }
  return out;
}

RootEntry refine(const Trinomial& f, const Isolated& iso, const SolverConfig& cfg) {
  if (iso.sign_lo == 0) {
    const double x = iso.bracket.lo;
    return RootEntry{x, iso.bracket, std::fabs(f(x)), 0};
  }
  double lo = iso.bracket.lo;
  double hi = iso.bracket.hi;
  for (double end : {lo, hi}) {
    if (f(end) == 0.0) return RootEntry{end, iso.bracket, 0.0, 0};
  }

  double x = 0.5 * (lo + hi);
  double dx = hi - lo;
  double dx_old = dx;
  for (unsigned it = 1; it <= cfg.max_iterations; ++it) {
    const double fx = f(x);
    if (std::fabs(fx) <= cfg.tolerance * f.scale(x)) {
      return RootEntry{x, iso.bracket, std::fabs(fx), it};
    }
    if (sign_of(fx) == iso.sign_lo) {
      lo = x;
    } else {
      hi = x;
    }
    // Newton is taken only when it lands strictly inside the bracket and
    // shrinks faster than bisection did two steps ago.
    const double dfx = f.derivative(x);
    const double step = dfx != 0.0 ? fx / dfx : std::numeric_limits<double>::infinity();
    const double newton = x - step;
    dx_old = dx;
    if (std::isfinite(newton) && newton > lo && newton < hi &&
        std::fabs(2.0 * step) <= std::fabs(dx_old)) {
      dx = step;
      x = newton;
    } else {
      dx = 0.5 * (hi - lo);
      x = lo + dx;
      if (!(x > lo && x < hi)) break;  // bracket down to adjacent doubles
    }
  }
  throw Error(ErrorCode::NoConvergence,
              "root in [" + std::to_string(iso.bracket.lo) + ", " +
                  std::to_string(iso.bracket.hi) + "] not refined within tolerance");
}

RootSet solve(const Trinomial& f, const SolverConfig& cfg) {
  cfg.validate();
  RootSet out;
  for (const Isolated& iso : isolate(f, cfg)) out.roots.push_back(refine(f, iso, cfg));
  std::sort(out.roots.begin(), out.roots.end(),
            [](const RootEntry& a, const RootEntry& b) { return a.value < b.value; });
  return out;
}

}  // namespace

std::vector<Bracket> isolate_real_roots(const TrinomialSpec& spec, const SolverConfig& cfg) {
  cfg.validate();
  std::vector<Bracket> out;
  for (const Isolated& iso : isolate(from_spec(spec), cfg)) out.push_back(iso.bracket);
  return out;
}

RootSet solve_trinomial(const TrinomialSpec& spec, const SolverConfig& cfg) {
  return solve(from_spec(spec), cfg);
}

RootSet solve_gm_general(unsigned n, std::uint64_t m, const SolverConfig& cfg) {
  return solve_trinomial({n, 1, Sign::Plus, m, LowerExponent::One}, cfg);
}

double solve_stakhov(unsigned n, StakhovVariant variant, const SolverConfig& cfg) {
  const LowerExponent lower =
      variant == StakhovVariant::A ? LowerExponent::One : LowerExponent::NMinusOne;
  const RootSet roots = solve_trinomial({n, 1, Sign::Plus, 2, lower}, cfg);
  if (roots.roots.empty() || roots.roots.back().value < 0.0) {
    throw Error(ErrorCode::NoConvergence, "no non-negative root found");
  }
  return roots.roots.back().value;
}

RootSet solve_euler(const Rational& a, unsigned n, const Rational& x, EulerMode mode,
                    const SolverConfig& cfg) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be at least 1");
  const Rational nx = Rational(BigInt(n)) * x;
  if (mode == EulerMode::Constrained) return solve(Trinomial(n, 1, true, nx), cfg);

  const Rational target = nx - a;
  if (n % 2 == 0 && target.sign() < 0) {
    throw Error(ErrorCode::NoRealRoot,
                "b^" + std::to_string(n) + " = " + target.to_string() + " has no real solution");
  }
  return solve(Trinomial(n, 0, true, target), cfg);
}

}  // namespace gmean
