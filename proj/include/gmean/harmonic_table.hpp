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

#ifndef GMEAN_HARMONIC_TABLE_HPP
#define GMEAN_HARMONIC_TABLE_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace gmean {

/// size x size multiplication grid, cell(i, j) = i * j.
class HarmonicTable {
 public:
  /// Throws InvalidArgument for size 0 or size > 65536.
  explicit HarmonicTable(std::size_t size);

  std::size_t size() const noexcept { return size_; }
  std::uint64_t cell(std::size_t row, std::size_t col) const;

 private:
  std::size_t size_;
  std::vector<std::uint64_t> cells_;  // row-major
};

using Cell = std::pair<std::size_t, std::size_t>;

/// q = k(k + 1) sitting in the two cells next to the main diagonal.
struct DoubletReport {
  std::uint64_t q = 0;
  std::uint64_t k = 0;
  Cell upper;  // (k, k + 1)
  Cell lower;  // (k + 1, k)
};

HarmonicTable build_table(std::size_t size);

/// One report per k in 0..size-2, ascending in q.
std::vector<DoubletReport> find_doublets(const HarmonicTable& table);

struct KeyRow {
  std::uint64_t k = 0;
  std::uint64_t square_plus_k = 0;  // k*k + k
  std::uint64_t product = 0;        // k*(k + 1)
};

/// Rows k = 0..k_max, both expressions computed separately.
std::vector<KeyRow> key_rows(std::uint64_t k_max);

struct IntegerMeanMatch {
  std::uint64_t q = 0;
  std::pair<std::uint64_t, std::uint64_t> roots;
};

/// Pairs every doublet q with integer_metallic(q); throws CrossCheckFailed
/// when the two disagree.
std::vector<IntegerMeanMatch> cross_check_integer_means(const HarmonicTable& table);

}  // namespace gmean

#endif  // GMEAN_HARMONIC_TABLE_HPP
