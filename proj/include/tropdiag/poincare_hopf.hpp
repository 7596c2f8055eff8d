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

// Cutting out the diagonal of a matroid fan and intersecting it with itself.
//
// The diagonal in Sigma_M x Sigma_M is cut out by functions g_1..g_n on the
// doubled ground set; their pullbacks f_1..f_n along x -> (x, x) are applied
// to Sigma_M in the order f_1 first. X_k is the cycle after k steps.

#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "tropdiag/cycles.hpp"
#include "tropdiag/divisor.hpp"
#include "tropdiag/exact.hpp"
#include "tropdiag/matroid.hpp"
#include "tropdiag/subset.hpp"

namespace tropdiag {

/// Dehomogenized diagonal-cutting function g_i on E' (values by plain rank
/// of the two halves).
inline PLFunction g_function(const Matroid& m, int i) {
  const int n = m.fan_dimension();
  if (i < 1 || i > n) throw InputError("g_function: index out of range");
  const int size = 2 * m.size() - 1;
  if (size > kMaxElements) throw SizeGuardError("g_function: doubled ground set too large");
  return PLFunction::from_values(size, [&](Mask x) -> Integer {
    auto [f, g] = split_pair(m.size(), x);
    const int lhs = m.rank(f) + m.rank(g);
    const int rhs = m.rank(f | g) + n + 1 - i;
    if (!contains(x, 0)) return lhs >= rhs ? -1 : 0;
    return lhs <= rhs ? 1 : 0;
  });
}

/// f_i(F): -1 if 0 not in F and rk F >= n+1-i; +1 if 0 in F and
/// rk F <= n+1-i; 0 otherwise. Checked against the pullback of g_i.
inline PLFunction f_function(const Matroid& m, int i) {
  const int n = m.fan_dimension();
  if (i < 1 || i > n) throw InputError("f_function: index out of range");
  PLFunction f = PLFunction::from_values(m.size(), [&](Mask s) -> Integer {
    if (s == m.ground()) return 0;
    if (!contains(s, 0)) return m.rank(s) >= n + 1 - i ? -1 : 0;
    return m.rank(s) <= n + 1 - i ? 1 : 0;
  });
  if (2 * m.size() - 1 <= kMaxElements &&
      !(pullback_diagonal(g_function(m, i), m.size()) == f))
    throw InternalInconsistency("f_function: disagrees with pullback of g_function");
  return f;
}

inline constexpr int kDiagonalDefaultLimit = 5;

/// g_n ... g_1 applied to the fan of M (+)_0 M.
inline TropicalCycle diagonal_cycle(const Matroid& m, bool allow_large = false) {
  if (m.size() > kDiagonalDefaultLimit && !allow_large)
    throw SizeGuardError("diagonal_cycle: |E| = " + std::to_string(m.size()) +
                         " exceeds the default bound of " +
                         std::to_string(kDiagonalDefaultLimit));
  TropicalCycle x = matroid_fan(parallel_connection_self(m));
  for (int i = 1; i <= m.fan_dimension(); ++i) x = divisor(g_function(m, i), x);
  return x;
}

/// Whether the computed diagonal equals the unit-weight fan of M_Delta.
inline bool diagonal_matches(const Matroid& m, const TropicalCycle& diag) {
  return diag == matroid_fan(diagonal_matroid(m));
}

enum class ChainKind { kTypeRS, kTypeK, kOther };

struct GapType {
  std::vector<int> gap;
  ChainKind kind = ChainKind::kOther;
  int r = 0;
  int s = 0;
  int k = 0;
  bool zero_in_first = false;

  std::string label() const {
    switch (kind) {
      case ChainKind::kTypeRS:
        return "(" + std::to_string(r) + "," + std::to_string(s) + ")";
      case ChainKind::kTypeK:
        return "(" + std::to_string(k) + ")";
      default:
        return "other";
    }
  }
};

inline std::vector<int> gap_sequence(const Matroid& m, const Chain& c) {
  std::vector<int> gap;
  int above = m.rank();
  for (Mask f : c) {
    gap.push_back(above - m.rank(f) - 1);
    above = m.rank(f);
  }
  gap.push_back(above - 1);
  return gap;
}

/// The trivial chain E > {} counts as type (0, n).
inline GapType classify_chain(const Matroid& m, const Chain& c) {
  for (Mask f : c)
    if (!m.is_flat(f)) throw InputError("classify_chain: " + format_set(f) + " is not a flat");
  GapType t;
  t.gap = gap_sequence(m, c);
  if (c.empty()) {
    t.kind = ChainKind::kTypeRS;
    t.r = 0;
    t.s = m.fan_dimension();
    return t;
  }
  t.zero_in_first = contains(c.front(), 0);
  auto zero_from = [&](std::size_t start) {
    for (std::size_t i = start; i < t.gap.size(); ++i)
      if (t.gap[i] != 0) return false;
    return true;
  };
  if (!t.zero_in_first && zero_from(2)) {
    t.kind = ChainKind::kTypeRS;
    t.r = t.gap[0];
    t.s = t.gap[1];
  } else if (t.zero_in_first && zero_from(1)) {
    t.kind = ChainKind::kTypeK;
    t.k = t.gap[0];
  }
  return t;
}

/// Cones of type (r, s) with r + s = k weighted (-1)^(rk(M/F_1) - 1)
/// beta(M/F_1), and cones of type (k) with weight 1.
inline TropicalCycle xk_predicted(const Matroid& m, int k) {
  const int n = m.fan_dimension();
  if (k < 0 || k > n) throw InputError("xk_predicted: k out of range");
  TropicalCycle out(m.size(), n - k);
  const FlatsLattice lat = flats(m);
  for (const Chain& c : chains_of_flats(lat, m.size(), n - k)) {
    const GapType t = classify_chain(m, c);
    if (t.kind == ChainKind::kTypeK && t.k == k) {
      out.add(c, Integer(1));
    } else if (t.kind == ChainKind::kTypeRS && t.r + t.s == k) {
      const Mask f1 = c.empty() ? Mask{0} : c.front();
      const Matroid quotient = contract(m, f1);
      out.add(c, sign_power(quotient.rank() - 1) * beta(quotient));
    }
  }
  return out;
}

/// Which of the four mutually exclusive situations a codimension-one face
/// of X_k is in, read off from the last nonzero gap G > H.
enum class FaceCase { kA, kB, kC, kD };

inline char face_case_letter(FaceCase c) { return "ABCD"[static_cast<int>(c)]; }

struct FaceCaseCounts {
  std::size_t a = 0, b = 0, c = 0, d = 0;
  std::size_t d_on_vh = 0;  // case D faces whose relation is a multiple of v_H alone
};

inline FaceCase classify_face(const Matroid& m, const Chain& face, int k) {
  const int n = m.fan_dimension();
  const std::vector<int> gap = gap_sequence(m, face);
  std::size_t last = gap.size();
  for (std::size_t i = gap.size(); i-- > 0;)
    if (gap[i] != 0) {
      last = i;
      break;
    }
  if (last == gap.size())
    throw InternalInconsistency("face " + format_chain(face) + " has no rank gap");
  const Mask g = last == 0 ? m.ground() : face[last - 1];
  const Mask h = last < face.size() ? face[last] : Mask{0};
  const bool in_a = m.rank(g | 1U) <= n - k;
  const bool in_b = m.rank(g) >= n - k && !contains(g, 0);
  const bool in_c = g == m.ground() && contains(h, 0);
  const bool in_d = g == m.ground() && !contains(h, 0);
  const int count = in_a + in_b + in_c + in_d;
  if (count != 1)
    throw InternalInconsistency("face " + format_chain(face) + " falls in " +
                                std::to_string(count) + " cases");
  return in_a ? FaceCase::kA : in_b ? FaceCase::kB : in_c ? FaceCase::kC : FaceCase::kD;
}

struct XkReport {
  TropicalCycle cycle;
  std::vector<FaceCaseCounts> steps;  // steps[j] describes f_{j+1} . X_j
};

/// Iterated divisor with the face-case analysis checked at every step.
inline XkReport xk_with_report(const Matroid& m, int k) {
  const int n = m.fan_dimension();
  if (k < 0 || k > n) throw InputError("xk: k out of range");
  XkReport report{matroid_fan(m), {}};
  for (int j = 0; j < k; ++j) {
    FaceCaseCounts counts;
    auto observe = [&](const FaceContribution& fc) {
      switch (classify_face(m, fc.face, j)) {
        case FaceCase::kA:
          ++counts.a;
          if (fc.weight != 0)
            throw InternalInconsistency("case A face " + format_chain(fc.face) +
                                        " received weight " + fc.weight.str());
          break;
        case FaceCase::kB:
          ++counts.b;
          break;
        case FaceCase::kC:
          ++counts.c;
          break;
        case FaceCase::kD: {
          ++counts.d;
          Vector sum(static_cast<std::size_t>(m.size() - 1), Integer(0));
          for (const auto& e : fc.star) accumulate(sum, e.generator, e.weight);
          auto coeffs = chain_coordinates(fc.face, sum, m.size());
          if (coeffs && (coeffs->empty() ||
                         std::all_of(coeffs->begin() + 1, coeffs->end(),
                                     [](const Integer& c) { return c == 0; })))
            ++counts.d_on_vh;
          break;
        }
      }
    };
    report.cycle = divisor(f_function(m, j + 1), report.cycle, observe);
    report.steps.push_back(counts);
  }
  return report;
}

inline TropicalCycle xk(const Matroid& m, int k) { return xk_with_report(m, k).cycle; }

/// deg(f_n ... f_1 . Sigma_M). Does not consult the beta invariant.
inline Integer self_intersection(const Matroid& m) {
  return degree0(xk(m, m.fan_dimension()));
}

}  // namespace tropdiag
