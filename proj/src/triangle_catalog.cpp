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

#include "gmean/triangle_catalog.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "gmean/error.hpp"
#include "gmean/quadratic_means.hpp"

namespace gmean {

namespace {

std::uint64_t narrow(const BigInt& v, const char* what) {
  if (v.sign() < 0 || v > std::numeric_limits<std::uint64_t>::max()) {
    throw Error(ErrorCode::Overflow, std::string(what) + " exceeds 64 bits");
  }
  return v.convert_to<std::uint64_t>();
}

void check(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::CrossCheckFailed, what);
}

}  // namespace

PythagoreanTriple diophantus_triple(std::uint64_t index) {
  const BigInt n(index);
  PythagoreanTriple t{2 * n + 1, 2 * n * (n + 1), 2 * n * (n + 1) + 1};
  check(t.a * t.a + t.b * t.b == t.c * t.c, "triple " + std::to_string(index) + " is not Pythagorean");
  return t;
}

std::vector<std::uint64_t> four_k_sequence(std::size_t count) {
  std::vector<std::uint64_t> out;
  out.reserve(count);
  BigInt m = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const BigInt n(i);
    m += 4 * n;
    check(m == 2 * n * (n + 1), "4k recurrence diverged from 2N(N+1) at N = " + std::to_string(i));
    out.push_back(narrow(m, "4k term"));
  }
  return out;
}

TableOneRow table_one_row(std::uint64_t index, TableSide side) {
  TableOneRow row;
  row.side = side;
  row.index = index;
  const BigInt n(index);
  if (side == TableSide::Left) {
    const BigInt m = 2 * n * (n + 1);
    row.m = narrow(m, "m");
    row.h = narrow(m + 1, "h");
    row.r = narrow((2 * n + 1) * (2 * n + 1), "r");
    row.x1 = QuadraticSurd(Rational(n));
    row.x2 = QuadraticSurd(Rational(n + 1));
    check(BigInt(row.h) == row.x1.rat().num() * row.x1.rat().num() +
                               row.x2.rat().num() * row.x2.rat().num(),
          "left row " + std::to_string(index) + ": N^2 + (N+1)^2 != h");
  } else {
    row.m = index;
    row.h = narrow(n + 1, "h");
    row.r = narrow(2 * n + 1, "r");
    const RootPair roots = generalized_gm(index);
    row.x1 = roots.x1;
    row.x2 = roots.x2;
    const QuadraticSurd squares = row.x1 * row.x1 + row.x2 * row.x2;
    const QuadraticSurd abs_sum = row.x1.abs() + row.x2.abs();
    check(squares == QuadraticSurd(Rational(BigInt(row.h))),
          "right row " + std::to_string(index) + ": x1^2 + x2^2 != h");
    check(abs_sum * abs_sum == QuadraticSurd(Rational(BigInt(row.r))),
          "right row " + std::to_string(index) + ": (|x1| + |x2|)^2 != r");
  }
  const BigInt h(row.h), m(row.m), r(row.r);
  check(h * h == m * m + r, "row " + std::to_string(index) + ": h^2 != m^2 + r");
  return row;
}

std::vector<TableOneRow> table_one(std::uint64_t rows, SideSelect side) {
  std::vector<TableOneRow> out;
  for (std::uint64_t i = 0; i < rows; ++i) {
    if (side != SideSelect::Right) out.push_back(table_one_row(i, TableSide::Left));
    if (side != SideSelect::Left) out.push_back(table_one_row(i, TableSide::Right));
  }
  return out;
}

std::uint64_t left_to_right_index(std::uint64_t index) {
  const BigInt n(index);
  return narrow(2 * n * (n + 1), "right index");
}

namespace {

constexpr std::uint64_t kTripletLimit = 1'000'000'000'000'000'000ULL;

std::optional<std::array<std::uint64_t, 3>> find_consecutive(
    std::uint64_t first, std::uint64_t second, const std::array<std::uint64_t, 3>& t) {
  const std::uint64_t top = std::max({t[0], t[1], t[2]});
  std::vector<std::uint64_t> seq{first, second};
  while (seq.size() < 3 || seq[seq.size() - 3] <= top) {
    seq.push_back(seq[seq.size() - 1] + seq[seq.size() - 2]);
  }
  for (std::size_t i = 0; i + 2 < seq.size(); ++i) {
    if (seq[i] == t[0] && seq[i + 1] == t[1] && seq[i + 2] == t[2]) {
      return std::array<std::uint64_t, 3>{i, i + 1, i + 2};
    }
  }
  return std::nullopt;
}

}  // namespace

TripletClass classify_triplet(const std::array<std::uint64_t, 3>& t) {
  if (std::max({t[0], t[1], t[2]}) > kTripletLimit) {
    throw Error(ErrorCode::InvalidArgument, "triplet values must not exceed 10^18");
  }
  if (auto idx = find_consecutive(0, 1, t)) return {TripletTag::Fibonacci, idx};
  if (auto idx = find_consecutive(2, 1, t)) return {TripletTag::Lucas, idx};
  return {TripletTag::Neither, std::nullopt};
}

}  // namespace gmean
