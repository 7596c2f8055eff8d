// Copyright 2026 The Authors.
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


#include <gtest/gtest.h>

#include <random>

#include "tropdiag/exact.hpp"
#include "tropdiag/smith.hpp"

namespace tropdiag {
namespace {

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
  EXPECT_EQ(parse_rational("-4"), Rational(-4));
  EXPECT_EQ(to_string(Rational(-6, 4)), "-3/2");
  EXPECT_EQ(to_string(Rational(5)), "5");
  EXPECT_THROW(parse_rational("1/0"), InputError);
  EXPECT_THROW(parse_rational("x"), InputError);
}

TEST(Rational, FloorAndFrac) {
  EXPECT_EQ(floor(Rational(-1, 3)), Integer(-1));
  EXPECT_EQ(floor(Rational(7, 3)), Integer(2));
  EXPECT_EQ(frac(Rational(-1, 3)), Rational(2, 3));
  EXPECT_EQ(frac(Rational(4)), Rational(0));
}

TEST(Determinant, IntegerAndRationalAgree) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> entry(-4, 4);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 5;
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = entry(rng);
    EXPECT_EQ(Rational(determinant(m)), determinant(to_rational(m)));
  }
  EXPECT_EQ(determinant(IntMatrix{{0, 1}, {1, 0}}), Integer(-1));
  EXPECT_EQ(determinant(IntMatrix{{2, 0, 0}, {0, 3, 0}, {1, 1, 4}}), Integer(24));
}

TEST(Inverse, SingularAndRegular) {
  EXPECT_FALSE(inverse(RatMatrix{{1, 2}, {2, 4}}).has_value());
  const RatMatrix a{{2, 1}, {1, 1}};
  EXPECT_EQ(a * *inverse(a), RatMatrix::identity(2));
}

TEST(SolveInSpan, FindsCoefficients) {
  const std::vector<std::vector<Integer>> cols = {{1, 0, 1}, {0, 1, 1}};
  const auto c = solve_in_span(cols, {2, 3, 5});
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ((*c)[0], Rational(2));
  EXPECT_EQ((*c)[1], Rational(3));
  EXPECT_FALSE(solve_in_span(cols, {1, 1, 0}).has_value());
  EXPECT_TRUE(solve_in_span({}, {0, 0}).has_value());
}

TEST(EchelonBasis, Rank) {
  EchelonBasis b(3);
  EXPECT_TRUE(b.insert({1, 2, 3}));
  EXPECT_FALSE(b.insert({2, 4, 6}));
  EXPECT_TRUE(b.insert({0, 0, 1}));
  EXPECT_EQ(b.rank(), 2u);
  EXPECT_EQ(rank_of_rows({{1, 1}, {1, -1}, {3, 1}}), 2u);
}

TEST(Binomial, SmallValues) {
  EXPECT_EQ(binomial(6, 3), Integer(20));
  EXPECT_EQ(binomial(4, 5), Integer(0));
  EXPECT_EQ(k_subsets(5, 2).size(), 10u);
  EXPECT_EQ(k_subsets(3, 0).size(), 1u);
}

TEST(Smith, DecompositionHolds) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> entry(-5, 5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = 1 + trial % 4, c = 1 + (trial / 4) % 4;
    IntMatrix a(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) a(i, j) = entry(rng);
    const SmithForm s = smith_normal_form(a);
    EXPECT_EQ(s.left * a * s.right, s.diagonal);
    EXPECT_EQ(abs(determinant(s.left)), Integer(1));
    EXPECT_EQ(abs(determinant(s.right)), Integer(1));
    const auto f = s.invariant_factors();
    for (std::size_t i = 0; i + 1 < f.size(); ++i)
      if (f[i + 1] != 0) {
        EXPECT_EQ(f[i + 1] % f[i], 0);
      }
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (i != j) {
          EXPECT_EQ(s.diagonal(i, j), 0);
        }
  }
}

TEST(Smith, KnownInvariantFactors) {
  const auto f = smith_normal_form(IntMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}).invariant_factors();
  EXPECT_EQ(f, (std::vector<Integer>{2, 6, 12}));
}

}  // namespace
}  // namespace tropdiag
