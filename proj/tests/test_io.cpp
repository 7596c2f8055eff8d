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

#include "tropdiag/acceptance.hpp"
#include "tropdiag/io.hpp"

namespace tropdiag {
namespace {

TEST(MatroidDocument, AllTypes) {
  EXPECT_EQ(matroid_from_json(parse_document("uniform(2,3)")), Matroid::uniform(2, 3));
  EXPECT_EQ(matroid_from_json(Json::parse(R"({"type":"uniform","rank":2,"elements":3})")),
            Matroid::uniform(2, 3));
  EXPECT_EQ(matroid_from_json(Json::parse(R"({"type":"bases","elements":3,"bases":[[0,1],[0,2],[1,2]]})")),
            Matroid::uniform(2, 3));
  EXPECT_EQ(matroid_from_json(Json::parse(R"({"type":"graphic","vertices":3,"edges":[[0,1],[1,2],[0,2]]})")),
            Matroid::uniform(2, 3));
  EXPECT_EQ(matroid_from_json(Json::parse(R"({"type":"rank_table","elements":2,"ranks":[0,1,1,1]})")),
            Matroid::uniform(1, 2));
  EXPECT_EQ(matroid_from_json(Json::parse(
                R"({"type":"rank_table","elements":2,"ranks":[{"set":[],"rank":0},{"set":[0],"rank":1},
                    {"set":[1],"rank":1},{"set":[0,1],"rank":2}]})")),
            Matroid::uniform(2, 2));
  EXPECT_EQ(matroid_from_json(Json::parse(
                R"({"type":"direct_sum","parts":[{"type":"uniform","rank":1,"elements":1},
                    {"type":"uniform","rank":1,"elements":1}]})")),
            direct_sum(Matroid::uniform(1, 1), Matroid::uniform(1, 1)));
}

TEST(MatroidDocument, Relabel) {
  const Matroid m = matroid_from_json(Json::parse(
      R"({"type":"direct_sum","relabel":[2,1,0],"parts":[{"type":"uniform","rank":1,"elements":1},
          {"type":"uniform","rank":1,"elements":2}]})"));
  EXPECT_EQ(m.rank(bit(0) | bit(1)), 1);
  EXPECT_EQ(m.rank(bit(2) | bit(1)), 2);
}

TEST(MatroidDocument, Errors) {
  EXPECT_THROW(matroid_from_json(Json::parse(R"({"type":"nope"})")), InputError);
  EXPECT_THROW(matroid_from_json(Json::parse(R"({"rank":1})")), InputError);
  EXPECT_THROW(matroid_from_json(Json::parse(R"({"type":"uniform","rank":"2","elements":3})")), InputError);
  EXPECT_THROW(matroid_from_json(Json::parse(R"({"type":"rank_table","elements":2,"ranks":[0,1,1]})")), InputError);
  EXPECT_THROW(matroid_from_json(Json::parse(
                   R"({"type":"rank_table","elements":1,"ranks":[{"set":[],"rank":0}]})")),
               InputError);
  EXPECT_THROW(matroid_from_json(Json::parse(R"({"type":"bases","elements":2,"bases":[[0]]})")), InputError);
  EXPECT_THROW(parse_document("{not json"), InputError);
}

TEST(MatroidDocument, RankTableRoundTrip) {
  for (const auto& [name, m] : acceptance::matroid_suite())
    EXPECT_EQ(matroid_from_json(matroid_json(m)), m) << name;
}

TEST(CycleDocument, SortedRecords) {
  const Json j = cycle_json(matroid_fan(Matroid::uniform(3, 4)));
  ASSERT_EQ(j.size(), 12u);
  EXPECT_EQ(j[0].dump(), R"({"chain":[[0,1],[0]],"weight":1})");
  for (std::size_t i = 1; i < j.size(); ++i) EXPECT_LT(j[i - 1]["chain"], j[i]["chain"]);
  EXPECT_EQ(cycle_json(TropicalCycle(3, 0)).dump(), "[]");
}

TEST(CycleDocument, Deterministic) {
  const Matroid m = acceptance::k4();
  EXPECT_EQ(cycle_json(xk(m, 1)).dump(), cycle_json(xk(m, 1)).dump());
}

TEST(FunctionDocument, NonzeroValuesOnly) {
  const Json j = function_json(f_function(Matroid::uniform(2, 3), 1));
  EXPECT_EQ(j.dump(), R"([{"set":[0],"value":1},{"set":[1],"value":-1},)"
                      R"({"set":[1,2],"value":-1},{"set":[2],"value":-1}])");
}

TEST(Scalars, Rationals) {
  EXPECT_EQ(rational_from_json(Json(3), "x"), Rational(3));
  EXPECT_EQ(rational_from_json(Json("-2/6"), "x"), Rational(-1, 3));
  EXPECT_THROW(rational_from_json(Json(0.5), "x"), InputError);
  EXPECT_EQ(rational_json(Rational(1, 2)).dump(), R"("1/2")");
  EXPECT_EQ(rational_json(Rational(4)).dump(), "4");
}

const char* kTheta = R"({
  "vertices": [{"id": "v1", "sedentarity": false}, {"id": "v2", "sedentarity": false}],
  "edges": [{"id": "e1", "ends": ["v1", "v2"], "length": 1},
            {"id": "e2", "ends": ["v1", "v2"], "length": "2"},
            {"id": "e3", "ends": ["v1", "v2"], "length": "5/2"}],
  "morphism": {"vertex_map": {"v1": "v2", "v2": "v1"},
               "edge_map": {"e1": "e1", "e2": "e2", "e3": "e3"},
               "stretch": {"e1": -1, "e2": -1, "e3": -1}}})";

TEST(CurveDocument, Theta) {
  const CurveInput in = curve_from_json(Json::parse(kTheta));
  ASSERT_EQ(in.curve.edges.size(), 3u);
  EXPECT_EQ(*in.curve.edges[2].length, Rational(5, 2));
  EXPECT_EQ(in.morphism.vertex_map, (std::vector<int>{1, 0}));
  EXPECT_EQ(weil_verify(in.curve, in.morphism).lhs, 6);
}

TEST(CurveDocument, RaysAndConstants) {
  const CurveInput ray = curve_from_json(Json::parse(R"({
    "vertices": [{"id": "o"}, {"id": "s", "sedentary": true}],
    "edges": [{"id": "a", "ends": ["o", null], "length": "inf"},
              {"id": "b", "ends": ["o", "s"], "length": "inf"}],
    "morphism": {"vertex_map": {"o": "o", "s": "s"}, "edge_map": {"a": "a", "b": "b"},
                 "stretch": {"a": 1, "b": 1}}})"));
  EXPECT_EQ(ray.curve.edges[0].head, kOpenEnd);
  EXPECT_TRUE(ray.curve.vertices[1].sedentary);
  const CurveInput constant = curve_from_json(Json::parse(R"({
    "vertices": [{"id": "v1"}, {"id": "v2"}],
    "edges": [{"id": "e1", "ends": ["v1", "v2"], "length": 1},
              {"id": "e2", "ends": ["v1", "v2"], "length": 1}],
    "morphism": {"constant": "v2"}})"));
  EXPECT_EQ(constant.morphism.constant, 1);
}

TEST(CurveDocument, Errors) {
  Json j = Json::parse(kTheta);
  j["morphism"]["edge_map"].erase("e3");
  EXPECT_THROW(curve_from_json(j), InputError);
  j = Json::parse(kTheta);
  j["edges"][0]["ends"][1] = "v9";
  EXPECT_THROW(curve_from_json(j), InputError);
  j = Json::parse(kTheta);
  j["morphism"]["stretch"]["e1"] = 1.5;
  EXPECT_THROW(curve_from_json(j), InputError);
  j = Json::parse(kTheta);
  j["vertices"][0]["sedentarity"] = "yes";
  EXPECT_THROW(curve_from_json(j), InputError);
}

TEST(CircleDocument, Parse) {
  const Json j = Json::parse(R"({"circle": {"length": "3/2", "d": -2, "c": 1}})");
  ASSERT_TRUE(is_circle_document(j));
  const CircleInput c = circle_from_json(j);
  EXPECT_EQ(c.length, Rational(3, 2));
  EXPECT_EQ(c.d, -2);
  EXPECT_EQ(c.shift, Rational(1));
  EXPECT_THROW(circle_from_json(Json::parse(R"({"circle": {"d": 2}})")), InputError);
}

TEST(TorusDocument, DefaultsAndValidation) {
  const TorusEndo e = torus_from_json(Json::parse(R"({"A": [[0, -1], [1, 0]]})"));
  EXPECT_EQ(e.n, 2);
  EXPECT_EQ(e.basis, RatMatrix::identity(2));
  EXPECT_EQ(intersection_side(e), 4);
  EXPECT_THROW(torus_from_json(Json::parse(R"({"A": [["1/2"]]})")), InputError);
  EXPECT_THROW(torus_from_json(Json::parse(R"({"n": 2, "A": [[1]]})")), InputError);
  EXPECT_THROW(torus_from_json(Json::parse(R"({"A": [[2]], "v": [1, 2]})")), InputError);
}

}  // namespace
}  // namespace tropdiag
