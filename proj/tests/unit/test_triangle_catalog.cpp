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

#include <doctest.h>

#include "gmean/error.hpp"
#include "gmean/quadratic_means.hpp"
#include "gmean/triangle_catalog.hpp"

using gmean::BigInt;
using gmean::SideSelect;
using gmean::TableOneRow;
using gmean::TableSide;
using gmean::TripletTag;

TEST_SUITE("diophantus_triple") {
  TEST_CASE("examples") {
    CHECK(gmean::diophantus_triple(0) == gmean::PythagoreanTriple{1, 0, 1});
    CHECK(gmean::diophantus_triple(1) == gmean::PythagoreanTriple{3, 4, 5});
    CHECK(gmean::diophantus_triple(6) == gmean::PythagoreanTriple{13, 84, 85});
  }

  TEST_CASE("Pythagorean for N up to 10^4") {
    for (std::uint64_t n = 0; n <= 10000; ++n) {
      const auto t = gmean::diophantus_triple(n);
      CHECK(t.a * t.a + t.b * t.b == t.c * t.c);
      CHECK(t.c == t.b + 1);
      CHECK(t.a == BigInt(2 * n + 1));
    }
  }

  TEST_CASE("huge index stays exact") {
    const std::uint64_t n = ~std::uint64_t{0};
    const auto t = gmean::diophantus_triple(n);
    CHECK(t.a * t.a + t.b * t.b == t.c * t.c);
  }
}

TEST_SUITE("four_k_sequence") {
  TEST_CASE("examples") {
    CHECK(gmean::four_k_sequence(5) == std::vector<std::uint64_t>{0, 4, 12, 24, 40});
    CHECK(gmean::four_k_sequence(6).back() == 60);
    CHECK(gmean::four_k_sequence(1) == std::vector<std::uint64_t>{0});
  }

  TEST_CASE("closed form") {
    const auto seq = gmean::four_k_sequence(2000);
    for (std::uint64_t n = 0; n < seq.size(); ++n) CHECK(seq[n] == 2 * n * (n + 1));
  }
}

TEST_SUITE("table_one") {
  TEST_CASE("examples") {
    const auto left = gmean::table_one(3, SideSelect::Left);
    REQUIRE(left.size() == 3);
    CHECK(left[2].m == 12);
    CHECK(left[2].h == 13);
    CHECK(left[2].r == 25);
    const auto right = gmean::table_one(3, SideSelect::Right);
    REQUIRE(right.size() == 3);
    CHECK(right[2].m == 2);
    CHECK(right[2].h == 3);
    CHECK(right[2].r == 5);
    const auto both = gmean::table_one(1, SideSelect::Both);
    REQUIRE(both.size() == 2);
    CHECK(both[0].side == TableSide::Left);
    CHECK(both[1].side == TableSide::Right);
    for (const TableOneRow& row : both) {
      CHECK(row.m == 0);
      CHECK(row.h == 1);
      CHECK(row.r == 1);
    }
  }

  TEST_CASE("rows 0..5") {
    const auto left = gmean::table_one(6, SideSelect::Left);
    const auto right = gmean::table_one(6, SideSelect::Right);
    const std::uint64_t lm[] = {0, 4, 12, 24, 40, 60};
    const std::uint64_t lh[] = {1, 5, 13, 25, 41, 61};
    const std::uint64_t lr[] = {1, 9, 25, 49, 81, 121};
    for (std::size_t i = 0; i < 6; ++i) {
      CHECK(left[i].m == lm[i]);
      CHECK(left[i].h == lh[i]);
      CHECK(left[i].r == lr[i]);
      CHECK(right[i].m == i);
      CHECK(right[i].h == i + 1);
      CHECK(right[i].r == 2 * i + 1);
    }
  }

  TEST_CASE("row identities hold exactly") {
    for (const TableOneRow& row : gmean::table_one(200, SideSelect::Both)) {
      CHECK(row.h * row.h == row.m * row.m + row.r);
      const gmean::QuadraticSurd h(gmean::Rational(BigInt(row.h)));
      const gmean::QuadraticSurd r(gmean::Rational(BigInt(row.r)));
      if (row.side == TableSide::Right) {
        CHECK(row.x1 * row.x1 + row.x2 * row.x2 == h);
        const auto s = row.x1.abs() + row.x2.abs();
        CHECK(s * s == r);
      } else {
        CHECK(row.x1 * row.x1 + row.x2 * row.x2 == h);
        CHECK(row.x1 + row.x2 == gmean::QuadraticSurd(gmean::Rational(BigInt(2 * row.index + 1))));
      }
    }
  }

  TEST_CASE("right rows step by (1, 1, 2)") {
    const auto right = gmean::table_one(50, SideSelect::Right);
    for (std::size_t i = 1; i < right.size(); ++i) {
      CHECK(right[i].m - right[i - 1].m == 1);
      CHECK(right[i].h - right[i - 1].h == 1);
      CHECK(right[i].r - right[i - 1].r == 2);
    }
  }

  TEST_CASE("left hypotenuses follow the Diophantus triples") {
    const auto left = gmean::table_one(7, SideSelect::Left);
    const std::uint64_t expected[] = {1, 5, 13, 25, 41, 61, 85};
    for (std::size_t i = 0; i < 7; ++i) {
      CHECK(left[i].h == expected[i]);
      CHECK(BigInt(left[i].h) == gmean::diophantus_triple(i).c);
    }
  }
}

TEST_SUITE("left_to_right_index") {
  TEST_CASE("examples") {
    CHECK(gmean::left_to_right_index(0) == 0);
    CHECK(gmean::left_to_right_index(1) == 4);
    CHECK(gmean::left_to_right_index(3) == 24);
  }

  TEST_CASE("mapped rows agree for N up to 100") {
    for (std::uint64_t n = 0; n <= 100; ++n) {
      const TableOneRow left = gmean::table_one_row(n, TableSide::Left);
      const TableOneRow right =
          gmean::table_one_row(gmean::left_to_right_index(n), TableSide::Right);
      CHECK(left.m == right.m);
      CHECK(left.h == right.h);
      CHECK(left.r == right.r);
    }
  }

  TEST_CASE("left r is the square of the same-index right r") {
    for (std::uint64_t n = 0; n <= 100; ++n) {
      const TableOneRow left = gmean::table_one_row(n, TableSide::Left);
      const TableOneRow right = gmean::table_one_row(n, TableSide::Right);
      CHECK(left.r == right.r * right.r);
    }
  }

  TEST_CASE("overflow") {
    CHECK_THROWS_AS(gmean::left_to_right_index(std::uint64_t{1} << 40), gmean::Error);
  }
}

TEST_SUITE("classify_triplet") {
  TEST_CASE("examples") {
    CHECK(gmean::classify_triplet({2, 3, 5}).tag == TripletTag::Fibonacci);
    const auto lucas = gmean::classify_triplet({3, 4, 7});
    CHECK(lucas.tag == TripletTag::Lucas);
    REQUIRE(lucas.member_indices.has_value());
    CHECK(*lucas.member_indices == std::array<std::uint64_t, 3>{2, 3, 4});
    const auto none = gmean::classify_triplet({4, 5, 9});
    CHECK(none.tag == TripletTag::Neither);
    CHECK_FALSE(none.member_indices.has_value());
  }

  TEST_CASE("right rows 0..3") {
    const auto right = gmean::table_one(4, SideSelect::Right);
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(gmean::classify_triplet({right[i].m, right[i].h, right[i].r}).tag ==
            TripletTag::Fibonacci);
    }
    CHECK(gmean::classify_triplet({right[3].m, right[3].h, right[3].r}).tag == TripletTag::Lucas);
  }

  TEST_CASE("bounds") {
    CHECK_THROWS_AS(gmean::classify_triplet({1, 2, 2000000000000000000ULL}), gmean::Error);
    // F(88) is above the limit; F(85), F(86), F(87) are not
    CHECK_THROWS_AS(gmean::classify_triplet({420196140727489673ULL, 679891637638612258ULL,
                                             420196140727489673ULL + 679891637638612258ULL}),
                    gmean::Error);
    CHECK(gmean::classify_triplet({259695496911122585ULL, 420196140727489673ULL,
                                   679891637638612258ULL})
              .tag == TripletTag::Fibonacci);
  }
}
