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

#ifndef GMEAN_TRIANGLE_CATALOG_HPP
#define GMEAN_TRIANGLE_CATALOG_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "gmean/rational.hpp"
#include "gmean/surd.hpp"

namespace gmean {

/// Right triangle with odd first leg a, second leg b and hypotenuse c = b + 1.
struct PythagoreanTriple {
  BigInt a;
  BigInt b;
  BigInt c;

  friend bool operator==(const PythagoreanTriple&, const PythagoreanTriple&) = default;
};

/// (2N + 1, 2N(N + 1), 2N(N + 1) + 1).
PythagoreanTriple diophantus_triple(std::uint64_t index);

/// m_0 = 0, m_N = m_(N-1) + 4N; each term is checked against 2N(N + 1).
std::vector<std::uint64_t> four_k_sequence(std::size_t count);

enum class TableSide { Left, Right };
enum class SideSelect { Left, Right, Both };

/// One row of the integer / non-integer solution table.
///
/// Left rows: m = 2N(N+1), h = m + 1, r = (2N+1)^2, x1 = N and x2 = N + 1 as
/// printed. Right rows: m = N, h = N + 1, r = 2N + 1, with x1, x2 the exact
/// roots of x^2 + x = m/2. Both sides satisfy h^2 = m^2 + r.
struct TableOneRow {
  TableSide side = TableSide::Left;
  std::uint64_t index = 0;
  std::uint64_t m = 0;
  std::uint64_t h = 0;
  std::uint64_t r = 0;
  QuadraticSurd x1;
  QuadraticSurd x2;
};

/// Rows 0..rows-1. With SideSelect::Both, rows alternate left, right for each
/// index. Right rows are checked exactly: x1^2 + x2^2 = h and
/// (|x1| + |x2|)^2 = r.
std::vector<TableOneRow> table_one(std::uint64_t rows, SideSelect side);

TableOneRow table_one_row(std::uint64_t index, TableSide side);

/// 2N(N + 1): the right-hand row that reproduces left row N.
std::uint64_t left_to_right_index(std::uint64_t index);

enum class TripletTag { Fibonacci, Lucas, Neither };

struct TripletClass {
  TripletTag tag = TripletTag::Neither;
  /// Sequence indices of the three members, when tag != Neither.
  std::optional<std::array<std::uint64_t, 3>> member_indices;
};

/// Checks whether (t0, t1, t2), taken in the given order, are consecutive
/// Fibonacci (F0 = 0, F1 = 1) or Lucas (L0 = 2, L1 = 1) numbers. Fibonacci
/// takes precedence. Values above 10^18 are rejected.
TripletClass classify_triplet(const std::array<std::uint64_t, 3>& t);

}  // namespace gmean

#endif  // GMEAN_TRIANGLE_CATALOG_HPP
