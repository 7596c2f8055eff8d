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

#include "tropdiag/acceptance.hpp"
#include "tropdiag/cycles.hpp"

namespace tropdiag {
namespace {

Chain chain_of(std::initializer_list<std::initializer_list<int>> members, int ground) {
  std::vector<Mask> ms;
  for (const auto& m : members) ms.push_back(mask_of(std::vector<int>(m)));
  return canonical_chain(ms, ground);
}

TEST(IndicatorVector, Normalization) {
  EXPECT_EQ(indicator_vector(bit(0), 3), (Vector{1, 1}));
  EXPECT_EQ(indicator_vector(bit(1), 3), (Vector{-1, 0}));
  EXPECT_EQ(indicator_vector(full_mask(3), 3), (Vector{0, 0}));
  EXPECT_EQ(indicator_vector(0, 3), (Vector{0, 0}));
}

TEST(IndicatorVector, ComplementsAreOpposite) {
  // v_S + v_{E \ S} = v_E = 0 projectively.
  for (Mask s = 0; s < 32; ++s) {
    Vector sum = indicator_vector(s, 5);
    accumulate(sum, indicator_vector(full_mask(5) & ~s, 5), Integer(1));
    EXPECT_TRUE(is_zero(sum)) << format_set(s);
  }
}

TEST(Chain, CanonicalOrderAndValidation) {
  const Chain c = canonical_chain({bit(1), bit(1) | bit(2)}, 4);
  EXPECT_EQ(c, (Chain{bit(1) | bit(2), bit(1)}));
  EXPECT_THROW(canonical_chain({bit(1), bit(2)}, 4), InputError);
  EXPECT_THROW(canonical_chain({full_mask(4)}, 4), InputError);
  EXPECT_THROW(canonical_chain({0}, 4), InputError);
}

TEST(Chain, CoordinatesRecoverCombination) {
  const Chain c = chain_of({{1, 2, 3}, {1}}, 5);
  Vector w(4, Integer(0));
  accumulate(w, indicator_vector(c[0], 5), Integer(3));
  accumulate(w, indicator_vector(c[1], 5), Integer(-2));
  const auto coords = chain_coordinates(c, w, 5);
  ASSERT_TRUE(coords.has_value());
  EXPECT_EQ(*coords, (Vector{3, -2}));
  EXPECT_FALSE(chain_coordinates(c, Vector{1, 2, 0, 0}, 5).has_value());
}

TEST(MatroidFan, Examples) {
  const TropicalCycle u23 = matroid_fan(Matroid::uniform(2, 3));
  EXPECT_EQ(u23.dimension(), 1);
  EXPECT_EQ(u23.size(), 3u);
  for (int i = 0; i < 3; ++i) EXPECT_EQ(u23.weight({bit(i)}), 1);
  EXPECT_EQ(matroid_fan(Matroid::uniform(3, 4)).size(), 12u);
  const TropicalCycle point = matroid_fan(Matroid::uniform(1, 3));
  EXPECT_EQ(point.dimension(), 0);
  EXPECT_EQ(degree0(point), 1);
}

TEST(MatroidFan, BalancedAndUnimodular) {
  auto pool = acceptance::matroid_suite();
  pool.push_back({"U(2,3)+U(1,1)", direct_sum(Matroid::uniform(2, 3), Matroid::uniform(1, 1))});
  pool.push_back({"U(3,8)", Matroid::uniform(3, 8)});
  for (const auto& [name, m] : pool) {
    if (m.size() > 8) continue;
    const TropicalCycle fan = matroid_fan(m);
    EXPECT_TRUE(is_balanced(fan).balanced) << name;
    for (const auto& [c, w] : fan.weights()) EXPECT_TRUE(chain_is_unimodular(c, m.size())) << name;
  }
}

TEST(MatroidFan, MaximalChainCountsMatchEnumeration) {
  for (const auto& [name, m] : acceptance::matroid_suite()) {
    const auto chains = chains_of_flats(flats(m), m.size(), m.fan_dimension());
    EXPECT_EQ(chains.size(), matroid_fan(m).size()) << name;
  }
}

TEST(Balance, FlippedWeightFails) {
  TropicalCycle x(3, 1);
  x.add({bit(0)}, 1);
  x.add({bit(1)}, 1);
  x.add({bit(2)}, -1);
  const BalanceReport r = is_balanced(x);
  EXPECT_FALSE(r.balanced);
  ASSERT_TRUE(r.face.has_value());
  EXPECT_TRUE(r.face->empty());
  EXPECT_FALSE(is_zero(r.residual));
}

TEST(Balance, XOneOfU34) {
  TropicalCycle x(4, 1);
  x.add({bit(0)}, 1);
  for (int i = 1; i <= 3; ++i) x.add({bit(i)}, -1);
  x.add({bit(1) | bit(2)}, 1);
  x.add({bit(1) | bit(3)}, 1);
  x.add({bit(2) | bit(3)}, 1);
  EXPECT_TRUE(is_balanced(x).balanced);
}

TEST(Stars, Examples) {
  const auto s23 = codim1_stars(matroid_fan(Matroid::uniform(2, 3)));
  ASSERT_EQ(s23.size(), 1u);
  EXPECT_EQ(s23.begin()->second.size(), 3u);
  const auto s34 = codim1_stars(matroid_fan(Matroid::uniform(3, 4)));
  EXPECT_EQ(s34.at({bit(1)}).size(), 3u);
  const auto& around = s34.at({bit(1) | bit(2)});
  bool found = false;
  for (const auto& e : around) found = found || (e.added == bit(1) && e.generator == indicator_vector(bit(1), 4));
  EXPECT_TRUE(found);
}

TEST(Cycle, ArithmeticAndEquality) {
  TropicalCycle a(3, 1), b(3, 1);
  a.add({bit(0)}, 2);
  a.add({bit(1)}, 1);
  b.add({bit(1)}, 1);
  b.add({bit(0)}, 2);
  EXPECT_EQ(a, b);
  EXPECT_TRUE((a + (-b)).empty());
  a.add({bit(1)}, -1);
  EXPECT_EQ(a.size(), 1u);
  EXPECT_THROW(a.add(Chain{}, 1), InputError);
  EXPECT_EQ(degree0(TropicalCycle(3, 0)), 0);
  EXPECT_THROW(degree0(a), InputError);
}

TEST(Points, BraidChainOfPoint) {
  const Chain c = chain_of({{1, 2}, {1}}, 4);
  const auto p = point_in_cone(c, {Rational(2), Rational(3)}, 4);
  EXPECT_EQ(braid_chain_of_point(p, 4), c);
  EXPECT_TRUE(support_contains(matroid_fan(Matroid::uniform(3, 4)), p));
  const auto q = point_in_cone(chain_of({{1, 2, 3}}, 4), {Rational(1)}, 4);
  EXPECT_FALSE(support_contains(matroid_fan(Matroid::uniform(2, 4)), q));
}

// The fan of M (+)_0 M contains every product of points of the two factor
// fans; points are drawn with random positive coefficients.
TEST(ProductSupport, ParallelConnectionContainsProducts) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> coeff(1, 9);
  for (const Matroid& m : {Matroid::uniform(2, 3), Matroid::uniform(2, 4), Matroid::uniform(3, 4),
                           direct_sum(Matroid::uniform(1, 1), Matroid::uniform(1, 1))}) {
    const int n = m.size();
    const TropicalCycle fan = matroid_fan(m);
    const TropicalCycle big = matroid_fan(parallel_connection_self(m));
    EXPECT_EQ(big.dimension(), 2 * m.fan_dimension());
    for (const auto& [c1, w1] : fan.weights())
      for (const auto& [c2, w2] : fan.weights())
        for (int sample = 0; sample < 4; ++sample) {
          std::vector<Rational> a1, a2;
          for (std::size_t j = 0; j < c1.size(); ++j) a1.push_back(Rational(coeff(rng), coeff(rng)));
          for (std::size_t j = 0; j < c2.size(); ++j) a2.push_back(Rational(coeff(rng), coeff(rng)));
          std::vector<Rational> p = point_in_cone(c1, a1, n);
          const std::vector<Rational> q = point_in_cone(c2, a2, n);
          p.insert(p.end(), q.begin(), q.end());
          EXPECT_TRUE(support_contains(big, p))
              << format_chain(c1) << " x " << format_chain(c2);
        }
  }
}

}  // namespace
}  // namespace tropdiag
