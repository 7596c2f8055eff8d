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

// JSON documents: matroid, curve and torus inputs, cycle and function dumps.

#pragma once

#include <algorithm>
#include <fstream>
#include <limits>
#include <map>
#include <regex>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "tropdiag/curve.hpp"
#include "tropdiag/cycles.hpp"
#include "tropdiag/divisor.hpp"
#include "tropdiag/exact.hpp"
#include "tropdiag/matroid.hpp"
#include "tropdiag/torus.hpp"

namespace tropdiag {

using Json = nlohmann::json;

// ---- scalars

/// Integers that fit in 64 bits become JSON numbers, others strings.
inline Json integer_json(const Integer& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
    return Json(x.convert_to<long long>());
  return Json(x.str());
}

inline Json rational_json(const Rational& q) {
  if (is_integral(q)) return integer_json(numerator(q));
  return Json(to_string(q));
}

inline Rational rational_from_json(const Json& j, const std::string& what) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const InputError&) {
      throw InputError(what + ": cannot parse rational '" + j.get<std::string>() + "'");
    }
  }
  throw InputError(what + ": expected an integer or a \"p/q\" string");
}

inline int int_field(const Json& obj, const char* key, const std::string& what) {
  if (!obj.contains(key) || !obj.at(key).is_number_integer())
    throw InputError(what + ": missing integer field \"" + key + "\"");
  return obj.at(key).get<int>();
}

inline std::vector<int> int_list(const Json& j, const std::string& what) {
  if (!j.is_array()) throw InputError(what + ": expected a list of integers");
  std::vector<int> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw InputError(what + ": expected a list of integers");
    out.push_back(x.get<int>());
  }
  return out;
}

inline Json set_json(Mask s) {
  Json out = Json::array();
  for (int e : elements_of(s)) out.push_back(e);
  return out;
}

// ---- matroids

inline Matroid matroid_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("type") || !j.at("type").is_string())
    throw InputError("matroid: expected an object with a string field \"type\"");
  const std::string type = j.at("type").get<std::string>();
  auto build = [&]() -> Matroid {
    if (type == "uniform")
      return Matroid::uniform(int_field(j, "rank", "uniform"), int_field(j, "elements", "uniform"));
    if (type == "bases") {
      const int n = int_field(j, "elements", "bases");
      if (!j.contains("bases") || !j.at("bases").is_array())
        throw InputError("bases: missing list \"bases\"");
      std::vector<std::vector<int>> bases;
      for (const auto& b : j.at("bases")) bases.push_back(int_list(b, "bases"));
      return Matroid::from_bases(n, bases);
    }
    if (type == "graphic") {
      const int v = int_field(j, "vertices", "graphic");
      if (!j.contains("edges") || !j.at("edges").is_array())
        throw InputError("graphic: missing list \"edges\"");
      std::vector<std::pair<int, int>> edges;
      for (const auto& e : j.at("edges")) {
        auto ends = int_list(e, "graphic edge");
        if (ends.size() != 2) throw InputError("graphic: each edge needs two endpoints");
        edges.push_back({ends[0], ends[1]});
      }
      return Matroid::graphic(v, edges);
    }
    if (type == "rank_table") {
      const int n = int_field(j, "elements", "rank_table");
      if (n < 0 || n > kMaxElements) throw InputError("rank_table: element count out of range");
      if (!j.contains("ranks") || !j.at("ranks").is_array())
        throw InputError("rank_table: missing list \"ranks\"");
      const Json& ranks = j.at("ranks");
      std::vector<int> table(std::size_t{1} << n, -1);
      if (!ranks.empty() && ranks.front().is_number_integer()) {
        table = int_list(ranks, "rank_table");
      } else {
        for (const auto& rec : ranks) {
          if (!rec.is_object() || !rec.contains("set"))
            throw InputError("rank_table: records need \"set\" and \"rank\"");
          Mask s = 0;
          for (int e : int_list(rec.at("set"), "rank_table set")) {
            if (e < 0 || e >= n) throw InputError("rank_table: element out of range");
            s |= bit(e);
          }
          table[s] = int_field(rec, "rank", "rank_table");
        }
        if (std::find(table.begin(), table.end(), -1) != table.end())
          throw InputError("rank_table: every subset needs a rank");
      }
      return Matroid::from_rank_table(n, table);
    }
    if (type == "direct_sum") {
      if (!j.contains("parts") || !j.at("parts").is_array() || j.at("parts").empty())
        throw InputError("direct_sum: missing list \"parts\"");
      Matroid acc = matroid_from_json(j.at("parts").front());
      for (std::size_t i = 1; i < j.at("parts").size(); ++i)
        acc = direct_sum(acc, matroid_from_json(j.at("parts")[i]));
      return acc;
    }
    throw InputError("matroid: unknown type \"" + type + "\"");
  };
  Matroid m = build();
  if (j.contains("relabel")) m = m.relabeled(int_list(j.at("relabel"), "relabel"));
  return m;
}

/// Reads a file, an inline JSON document, or the shorthand uniform(r,n).
inline std::string read_document(const std::string& arg) {
  std::ifstream in(arg);
  if (in) {
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  return arg;
}

inline Json parse_document(const std::string& arg) {
  static const std::regex shorthand(R"(\s*uniform\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*)");
  std::smatch match;
  if (std::regex_match(arg, match, shorthand))
    return Json{{"type", "uniform"}, {"rank", std::stoi(match[1])}, {"elements", std::stoi(match[2])}};
  const std::string text = read_document(arg);
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError("input is neither a readable file, uniform(r,n), nor JSON: " +
                     std::string(e.what()));
  }
}

inline Json matroid_json(const Matroid& m) {
  Json ranks = Json::array();
  for (std::uint8_t r : m.rank_table()) ranks.push_back(static_cast<int>(r));
  return Json{{"type", "rank_table"}, {"elements", m.size()}, {"ranks", ranks}};
}

// ---- cycles and functions

inline Json chain_json(const Chain& c) {
  Json out = Json::array();
  for (Mask f : c) out.push_back(set_json(f));
  return out;
}

/// Records sorted by their chain written as element lists.
inline Json cycle_json(const TropicalCycle& x) {
  std::vector<std::pair<Json, Json>> rows;
  for (const auto& [chain, w] : x.weights()) rows.push_back({chain_json(chain), integer_json(w)});
  std::sort(rows.begin(), rows.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  Json out = Json::array();
  for (auto& [c, w] : rows) out.push_back(Json{{"chain", c}, {"weight", w}});
  return out;
}

inline Json function_json(const PLFunction& f) {
  std::vector<std::pair<Json, Json>> rows;
  for (Mask s = 0; s < (Mask{1} << f.ground_size()); ++s)
    if (f.value(s) != 0) rows.push_back({set_json(s), integer_json(f.value(s))});
  std::sort(rows.begin(), rows.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  Json out = Json::array();
  for (auto& [s, v] : rows) out.push_back(Json{{"set", s}, {"value", v}});
  return out;
}

// ---- curves

struct CurveInput {
  TropicalCurve curve;
  CurveMorphism morphism;
};

struct CircleInput {
  Rational length;
  long d = 1;
  Rational shift;
};

inline bool is_circle_document(const Json& j) { return j.is_object() && j.contains("circle"); }

inline CircleInput circle_from_json(const Json& j) {
  const Json& c = j.at("circle");
  if (!c.is_object() || !c.contains("length") || !c.contains("d"))
    throw InputError("circle: needs \"length\" and \"d\"");
  CircleInput out;
  out.length = rational_from_json(c.at("length"), "circle length");
  if (!c.at("d").is_number_integer()) throw InputError("circle: \"d\" must be an integer");
  out.d = c.at("d").get<long>();
  out.shift = c.contains("c") ? rational_from_json(c.at("c"), "circle shift") : Rational(0);
  return out;
}

inline CurveInput curve_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges") || !j.contains("morphism"))
    throw InputError("curve: needs \"vertices\", \"edges\" and \"morphism\"");
  CurveInput in;
  std::map<std::string, int> vid, eid;
  for (const auto& v : j.at("vertices")) {
    if (!v.is_object() || !v.contains("id") || !v.at("id").is_string())
      throw InputError("curve: vertex records need a string \"id\"");
    const std::string id = v.at("id").get<std::string>();
    if (vid.count(id)) throw InputError("curve: duplicate vertex id " + id);
    vid[id] = static_cast<int>(in.curve.vertices.size());
    const char* key = v.contains("sedentarity") ? "sedentarity" : "sedentary";
    if (v.contains(key) && !v.at(key).is_boolean())
      throw InputError("curve: sedentarity of " + id + " must be a boolean");
    in.curve.vertices.push_back({id, v.value(key, false)});
  }
  auto vertex = [&](const Json& x, const std::string& what) {
    if (!x.is_string() || !vid.count(x.get<std::string>()))
      throw InputError(what + ": unknown vertex " + x.dump());
    return vid.at(x.get<std::string>());
  };
  for (const auto& e : j.at("edges")) {
    if (!e.is_object() || !e.contains("id") || !e.contains("ends") || !e.contains("length"))
      throw InputError("curve: edge records need \"id\", \"ends\" and \"length\"");
    CurveEdge edge;
    edge.id = e.at("id").get<std::string>();
    const Json& ends = e.at("ends");
    if (!ends.is_array() || ends.size() != 2) throw InputError("curve: ends must be [v, w]");
    edge.tail = vertex(ends[0], "edge " + edge.id);
    edge.head = ends[1].is_null() ? kOpenEnd : vertex(ends[1], "edge " + edge.id);
    const Json& len = e.at("length");
    if (!(len.is_string() && len.get<std::string>() == "inf"))
      edge.length = rational_from_json(len, "edge " + edge.id + " length");
    if (eid.count(edge.id)) throw InputError("curve: duplicate edge id " + edge.id);
    eid[edge.id] = static_cast<int>(in.curve.edges.size());
    in.curve.edges.push_back(edge);
  }
  const Json& m = j.at("morphism");
  if (!m.is_object()) throw InputError("curve: morphism must be an object");
  in.morphism.proper = m.value("proper", true);
  if (m.contains("constant")) {
    in.morphism.constant = vertex(m.at("constant"), "constant map");
    return in;
  }
  if (!m.contains("vertex_map") || !m.contains("edge_map") || !m.contains("stretch"))
    throw InputError("curve: morphism needs vertex_map, edge_map and stretch");
  const std::size_t nv = in.curve.vertices.size(), ne = in.curve.edges.size();
  in.morphism.vertex_map.assign(nv, -1);
  in.morphism.edge_map.assign(ne, -1);
  in.morphism.stretch.assign(ne, 0);
  for (const auto& [k, v] : m.at("vertex_map").items())
    in.morphism.vertex_map.at(vertex(Json(k), "vertex_map")) = vertex(v, "vertex_map");
  auto edge = [&](const std::string& k, const std::string& what) {
    if (!eid.count(k)) throw InputError(what + ": unknown edge " + k);
    return eid.at(k);
  };
  for (const auto& [k, v] : m.at("edge_map").items()) {
    if (!v.is_string()) throw InputError("edge_map: images must be edge ids");
    in.morphism.edge_map.at(edge(k, "edge_map")) = edge(v.get<std::string>(), "edge_map");
  }
  for (const auto& [k, v] : m.at("stretch").items()) {
    if (!v.is_number_integer()) throw InputError("stretch: values must be integers");
    in.morphism.stretch.at(edge(k, "stretch")) = v.get<long>();
  }
  for (std::size_t i = 0; i < nv; ++i)
    if (in.morphism.vertex_map[i] < 0)
      throw InputError("vertex_map: no image for " + in.curve.vertices[i].id);
  for (std::size_t i = 0; i < ne; ++i)
    if (in.morphism.edge_map[i] < 0)
      throw InputError("edge_map: no image for " + in.curve.edges[i].id);
  return in;
}

// ---- tori

inline RatMatrix rational_matrix_from_json(const Json& j, std::size_t n, const std::string& what) {
  if (!j.is_array() || j.size() != n) throw InputError(what + ": expected " + std::to_string(n) + " rows");
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!j[i].is_array() || j[i].size() != n)
      throw InputError(what + ": expected " + std::to_string(n) + " columns");
    for (std::size_t k = 0; k < n; ++k) m(i, k) = rational_from_json(j[i][k], what);
  }
  return m;
}

inline TorusEndo torus_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("A")) throw InputError("torus: needs \"A\"");
  const int n = j.contains("n") ? int_field(j, "n", "torus") : static_cast<int>(j.at("A").size());
  if (n < 1) throw InputError("torus: n must be positive");
  const std::size_t sn = static_cast<std::size_t>(n);
  const RatMatrix a = rational_matrix_from_json(j.at("A"), sn, "A");
  const RatMatrix basis = j.contains("lattice_basis")
                              ? rational_matrix_from_json(j.at("lattice_basis"), sn, "lattice_basis")
                              : RatMatrix(to_rational(IntMatrix::identity(sn)));
  RationalVector v(sn, Rational(0));
  if (j.contains("v")) {
    if (!j.at("v").is_array() || j.at("v").size() != sn)
      throw InputError("torus: v must have n entries");
    for (std::size_t i = 0; i < sn; ++i) v[i] = rational_from_json(j.at("v")[i], "v");
  }
  return make_torus_endo(basis, a, v);
}

}  // namespace tropdiag
