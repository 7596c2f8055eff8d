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
#include "tropdiag/curve.hpp"

namespace tropdiag {
namespace {

using acceptance::theta_swap_edges;
using acceptance::theta_swap_vertices;

CurveMorphism identity_map(const TropicalCurve& c) { return star_scaling(c, 1); }

TEST(Curve, ValidationRejectsMalformedCurves) {
  TropicalCurve loop{{{"v", false}}, {{"e", 0, 0, Rational(1)}}};
  EXPECT_THROW(validate_curve(loop), InputError);
  TropicalCurve finite_ray{{{"v", false}}, {{"a", 0, kOpenEnd, Rational(1)}, {"b", 0, kOpenEnd, std::nullopt}}};
  EXPECT_THROW(validate_curve(finite_ray), InputError);
  TropicalCurve infinite_bounded = theta_curve(1, 2, 3);
  infinite_bounded.edges[0].length.reset();
  EXPECT_THROW(validate_curve(infinite_bounded), InputError);
  TropicalCurve bad_sedentary = star_curve(3, 1);
  bad_sedentary.edges.push_back({"extra", 0, 1, std::nullopt});
  EXPECT_THROW(validate_curve(bad_sedentary), InputError);
  TropicalCurve leaf{{{"a", false}, {"b", false}}, {{"e", 0, 1, Rational(1)}}};
  EXPECT_THROW(validate_curve(leaf), InputError);  // ordinary vertices of valence 1
  TropicalCurve split = theta_curve(1, 2, 3);
  split.vertices.push_back({"lonely", false});
  EXPECT_THROW(validate_curve(split), InputError);
  TropicalCurve dup = theta_curve(1, 2, 3);
  dup.edges[1].id = "e1";
  EXPECT_THROW(validate_curve(dup), InputError);
  EXPECT_NO_THROW(validate_curve(theta_curve(1, 2, 3)));
  EXPECT_NO_THROW(validate_curve(star_curve(3, 3)));
}

TEST(Morphism, ValidationDiagnostics) {
  const TropicalCurve theta = theta_curve(1, 2, 3);
  EXPECT_TRUE(validate_morphism(theta, theta_swap_vertices()).valid);
  CurveMorphism wrong_len = theta_swap_edges();  // e1 and e2 differ in length here
  EXPECT_FALSE(validate_morphism(theta, wrong_len).valid);
  CurveMorphism collapsed = identity_map(theta);
  collapsed.stretch[0] = 0;
  EXPECT_FALSE(validate_morphism(theta, collapsed).valid);
  CurveMorphism twice = identity_map(theta);
  twice.edge_map[1] = 0;
  EXPECT_FALSE(validate_morphism(theta, twice).valid);
  CurveMorphism improper = identity_map(theta);
  improper.proper = false;
  EXPECT_FALSE(validate_morphism(theta, improper).valid);

  const TropicalCurve line = star_curve(3);
  CurveMorphism flipped = star_scaling(line, 1);
  flipped.stretch[0] = -1;
  EXPECT_FALSE(validate_morphism(line, flipped).valid);
  CurveMorphism uneven = star_scaling(line, 2);
  uneven.stretch[1] = 3;
  EXPECT_FALSE(validate_morphism(line, uneven).valid);

  const TropicalCurve ends = star_curve(3, 1);
  CurveMorphism swap_sedentary = star_scaling(ends, 1);
  swap_sedentary.vertex_map = {1, 0};
  EXPECT_FALSE(validate_morphism(ends, swap_sedentary).valid);

  CurveMorphism constant;
  constant.constant = 0;
  EXPECT_TRUE(validate_morphism(theta, constant).valid);
  EXPECT_FALSE(validate_morphism(line, constant).valid);
}

TEST(Morphism, HigherDegreeNeedsAStar) {
  const TropicalCurve theta = theta_curve(1, 1, 1);
  CurveMorphism doubled = identity_map(theta);
  for (auto& s : doubled.stretch) s = 2;
  EXPECT_THROW(require_valid(theta, doubled), InputError);
  const TropicalCurve half_line{{{"s", true}}, {{"r", 0, kOpenEnd, std::nullopt}}};
  EXPECT_THROW(require_valid(half_line, star_scaling(half_line, 2)), ExclusionError);
  EXPECT_EQ(require_valid(half_line, star_scaling(half_line, 1)), 1);
}

TEST(Morphism, CircleGraphsNeedTheCircleForm) {
  const TropicalCurve circle{{{"a", false}, {"b", false}},
                             {{"e", 0, 1, Rational(1)}, {"f", 1, 0, Rational(1)}}};
  EXPECT_TRUE(validate_morphism(circle, identity_map(circle)).valid);
  CurveMorphism doubled = identity_map(circle);
  doubled.stretch = {2, 2};
  EXPECT_FALSE(validate_morphism(circle, doubled).valid);
}

TEST(Weil, ThetaExamples) {
  const WeilVerdict a = weil_verify(theta_curve(1, 2, 3), theta_swap_vertices());
  EXPECT_EQ(a.lhs, 6);
  EXPECT_EQ(a.rhs_bm, 6);
  EXPECT_TRUE(a.equal);
  const WeilVerdict b = weil_verify(theta_curve(1, 1, 2), theta_swap_edges());
  EXPECT_EQ(b.lhs, 2);
  EXPECT_EQ(b.rhs_bm, 2);
  ASSERT_TRUE(b.rhs_ordinary.has_value());
  EXPECT_EQ(*b.rhs_ordinary, 2);
}

TEST(Weil, ThetaFixedCycle) {
  const FixedCycle fc = stable_fixed_cycle(theta_curve(1, 2, 3), theta_swap_vertices());
  // Three midpoints, each of multiplicity 2; the vertices are swapped.
  ASSERT_EQ(fc.points.size(), 3u);
  for (const auto& p : fc.points) EXPECT_EQ(p.multiplicity, 2);
}

TEST(Weil, LineScaling) {
  const TropicalCurve line = star_curve(3);
  for (long d = 1; d <= 5; ++d) {
    const WeilVerdict v = weil_verify(line, star_scaling(line, d));
    EXPECT_EQ(v.lhs, d - 2);
    EXPECT_EQ(v.rhs_bm, d - 2);
    EXPECT_EQ(trace_side(line, star_scaling(line, d), Homology::kOrdinary), 1 - 2 * d);
    EXPECT_EQ(v.rhs_ordinary.has_value(), d <= 1);
  }
  const WeilVerdict three = weil_verify(line, star_scaling(line, 3));
  EXPECT_EQ(three.lhs, 1);
  EXPECT_TRUE(three.equal);
}

TEST(Weil, StarsWithPointsAtInfinity) {
  for (int rays = 2; rays <= 5; ++rays)
    for (int ends = 0; ends <= rays; ++ends) {
      const TropicalCurve star = star_curve(rays, ends);
      for (long d = 1; d <= 5; ++d) {
        const WeilVerdict v = weil_verify(star, star_scaling(star, d));
        EXPECT_EQ(v.lhs, d + 1 - rays + ends) << rays << " " << ends << " " << d;
        EXPECT_TRUE(v.equal);
      }
    }
}

TEST(Weil, RayPermutationsOfStars) {
  const TropicalCurve star = star_curve(4);
  std::vector<int> perm = {0, 1, 2, 3};
  do {
    CurveMorphism m = star_scaling(star, 1);
    for (int i = 0; i < 4; ++i) m.edge_map[i] = perm[i];
    const WeilVerdict v = weil_verify(star, m);
    EXPECT_TRUE(v.equal);
    int fixed = 0;
    for (int i = 0; i < 4; ++i) fixed += perm[i] == i;
    EXPECT_EQ(v.lhs, 2 - fixed);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST(Weil, ConstantMap) {
  CurveMorphism constant;
  constant.constant = 1;
  const WeilVerdict v = weil_verify(theta_curve(1, 2, 3), constant);
  EXPECT_EQ(v.degree, 0);
  EXPECT_EQ(v.lhs, 1);
  EXPECT_EQ(v.rhs_bm, 1);
  EXPECT_TRUE(v.equal);
}

TEST(StarMultiplicity, DiagonalRouteAgrees) {
  for (int v = 2; v <= 5; ++v) {
    std::vector<int> perm(v);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      for (long d = 1; d <= 4; ++d) {
        const bool all_fixed = std::is_sorted(perm.begin(), perm.end());
        if (d >= 2 && !all_fixed) continue;
        EXPECT_EQ(star_multiplicity_via_diagonal(d, perm), star_multiplicity(d, perm));
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  EXPECT_EQ(star_multiplicity_via_diagonal(3, {1, 0}), 4);
}

TEST(SedentaryMultiplicity, MinRule) {
  EXPECT_EQ(sedentary_multiplicity(1, 1, 1, 3), 1);
  EXPECT_EQ(sedentary_multiplicity(2, 1, 1, 3), 1);
  EXPECT_EQ(sedentary_multiplicity(1, 2, 3, 1), 1);
}

TEST(Subdivision, OrbitSubdivisionChangesNothing) {
  const TropicalCurve theta = theta_curve(1, 1, 2);
  const CurveMorphism psi = theta_swap_edges();
  const auto [c1, m1] = subdivide_orbit(theta, psi, 0, Rational(1, 3));
  EXPECT_EQ(c1.vertices.size(), 4u);
  const WeilVerdict before = weil_verify(theta, psi);
  const WeilVerdict after = weil_verify(c1, m1);
  EXPECT_EQ(before.lhs, after.lhs);
  EXPECT_EQ(before.rhs_bm, after.rhs_bm);
  EXPECT_EQ(*before.rhs_ordinary, *after.rhs_ordinary);
  const auto [c2, m2] = subdivide_orbit(c1, m1, 2, Rational(1, 4));  // the fixed edge e3
  EXPECT_EQ(weil_verify(c2, m2).lhs, before.lhs);
  EXPECT_THROW(subdivide_orbit(theta, theta_swap_vertices(), 0, Rational(1, 3)), InputError);
}

TEST(Subdivision, RandomAutomorphismsStayInvariant) {
  std::mt19937 rng(99);
  int subdivided = 0;
  for (int t = 0; t < 30; ++t) {
    const auto ra = acceptance::random_curve_automorphism(rng);
    const WeilVerdict base = weil_verify(ra.curve, ra.map);
    EXPECT_TRUE(base.equal);
    for (int e = 0; e < static_cast<int>(ra.curve.edges.size()); ++e) {
      if (!ra.curve.edges[e].length) continue;
      // x = 1/2 is consistent along any orbit.
      const auto [c, m] = subdivide_orbit(ra.curve, ra.map, e, Rational(1, 2));
      const WeilVerdict v = weil_verify(c, m);
      EXPECT_EQ(v.lhs, base.lhs);
      EXPECT_EQ(v.rhs_bm, base.rhs_bm);
      ++subdivided;
      break;
    }
  }
  EXPECT_GT(subdivided, 0);
}

TEST(RandomCurves, SuiteHasNontrivialMaps) {
  std::mt19937 rng(acceptance::kCurveSeed);
  int moved = 0;
  for (int t = 0; t < acceptance::kRandomCurveCount; ++t) {
    const auto ra = acceptance::random_curve_automorphism(rng);
    bool identity = true;
    for (std::size_t v = 0; v < ra.map.vertex_map.size(); ++v)
      identity = identity && ra.map.vertex_map[v] == static_cast<int>(v);
    for (std::size_t e = 0; e < ra.map.edge_map.size(); ++e)
      identity = identity && ra.map.edge_map[e] == static_cast<int>(e) && ra.map.stretch[e] > 0;
    moved += !identity;
    EXPECT_LE(ra.curve.vertices.size(), 8u);
    const WeilVerdict v = weil_verify(ra.curve, ra.map);
    EXPECT_TRUE(v.equal);
  }
  EXPECT_GT(moved, 10);
}

TEST(Circle, FixedPointsAndTorusAgreement) {
  for (long d = -3; d <= 4; ++d) {
    const CircleVerdict v = circle_verify(Rational(2), d, Rational(1, 5));
    EXPECT_EQ(v.lhs, (1 - d) * (1 - d));
    EXPECT_TRUE(v.equal);
    if (d != 1 && d != 0) {
      EXPECT_EQ(static_cast<long>(v.fixed_points.size()), std::labs(1 - d));
    }
  }
  const CircleVerdict three = circle_verify(Rational(1), 3, Rational(0));
  EXPECT_EQ(three.fixed_points, (std::vector<Rational>{Rational(0), Rational(1, 2)}));
  EXPECT_THROW(circle_verify(Rational(0), 2, Rational(0)), InputError);
}

}  // namespace
}  // namespace tropdiag
