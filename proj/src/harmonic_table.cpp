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

#include "gmean/harmonic_table.hpp"

#include <string>

#include "gmean/error.hpp"
#include "gmean/quadratic_means.hpp"

namespace gmean {

namespace {
constexpr std::size_t kMaxSize = 65536;
constexpr std::uint64_t kMaxKey = 4'000'000'000ULL;  // keeps k*(k+1) inside 64 bits
}  // namespace

HarmonicTable::HarmonicTable(std::size_t size) : size_(size) {
  if (size == 0 || size > kMaxSize) {
    throw Error(ErrorCode::InvalidArgument, "table size must be in 1..65536");
  }
  cells_.resize(size * size);
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) cells_[i * size + j] = std::uint64_t{i} * j;
  }
}

std::uint64_t HarmonicTable::cell(std::size_t row, std::size_t col) const {
  if (row >= size_ || col >= size_) {
    throw Error(ErrorCode::InvalidArgument, "cell (" + std::to_string(row) + ", " +
                                                std::to_string(col) + ") outside the table");
  }
  return cells_[row * size_ + col];
}

HarmonicTable build_table(std::size_t size) { return HarmonicTable(size); }

std::vector<DoubletReport> find_doublets(const HarmonicTable& table) {
  std::vector<DoubletReport> out;
  for (std::size_t k = 0; k + 1 < table.size(); ++k) {
    const std::uint64_t upper = table.cell(k, k + 1);
    const std::uint64_t lower = table.cell(k + 1, k);
    if (upper != lower) {
      throw Error(ErrorCode::CrossCheckFailed, "table is not symmetric at k = " + std::to_string(k));
    }
    out.push_back({upper, k, {k, k + 1}, {k + 1, k}});
  }
  return out;
}

std::vector<KeyRow> key_rows(std::uint64_t k_max) {
  if (k_max > kMaxKey) throw Error(ErrorCode::Overflow, "k_max too large for 64-bit products");
  std::vector<KeyRow> out;
  for (std::uint64_t k = 0; k <= k_max; ++k) {
    KeyRow row{k, k * k + k, k * (k + 1)};
    if (row.square_plus_k != row.product) {
      throw Error(ErrorCode::CrossCheckFailed, "k^2 + k != k(k+1) at k = " + std::to_string(k));
    }
    out.push_back(row);
  }
  return out;
}

std::vector<IntegerMeanMatch> cross_check_integer_means(const HarmonicTable& table) {
  std::vector<IntegerMeanMatch> out;
  for (const DoubletReport& d : find_doublets(table)) {
    const auto roots = integer_metallic(d.q);
    if (!roots || roots->first != d.k || roots->second != d.k + 1) {
      throw Error(ErrorCode::CrossCheckFailed,
                  "integer metallic mean disagrees with doublet q = " + std::to_string(d.q));
    }
    out.push_back({d.q, *roots});
  }
  return out;
}

}  // namespace gmean
