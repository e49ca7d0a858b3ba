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

#ifndef GMEAN_CONTINUED_FRACTION_HPP
#define GMEAN_CONTINUED_FRACTION_HPP

#include <vector>

#include "gmean/rational.hpp"
#include "gmean/surd.hpp"

namespace gmean {

/// Simple continued fraction [a0; a1, ..., ak, (period)].
///
/// initial_terms always starts with a0. periodic_part is empty for rationals
/// and for expansions cut off by the term budget (truncated = true).
struct ContinuedFraction {
  std::vector<BigInt> initial_terms;
  std::vector<BigInt> periodic_part;
  bool truncated = false;

  friend bool operator==(const ContinuedFraction&, const ContinuedFraction&) = default;
};

/// Expands v > 0 using the (P + sqrt(D))/Q recurrence; the period is found
/// when a (P, Q) state after a0 repeats. At most max_terms partial quotients
/// are produced. Throws NonPositive for v <= 0.
ContinuedFraction continued_fraction_of(const QuadraticSurd& v, unsigned max_terms);

}  // namespace gmean

#endif  // GMEAN_CONTINUED_FRACTION_HPP
