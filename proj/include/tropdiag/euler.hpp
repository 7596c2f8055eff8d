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

// Framing groups of a matroid fan and Euler characteristics.

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tropdiag/cycles.hpp"
#include "tropdiag/exact.hpp"
#include "tropdiag/matroid.hpp"

namespace tropdiag {

inline constexpr long kFramingCoordinateLimit = 20000;

struct FramingBasisReport {
  int p = 0;
  std::size_t dimension = 0;
  std::size_t generators = 0;
};

/// Coordinates of v_1 ^ ... ^ v_p in the lexicographic basis of the p-th
/// exterior power of Z^dim: the p x p minors of the dim x p matrix.
inline std::vector<Integer> wedge_coordinates(const std::vector<Vector>& vs, std::size_t dim) {
  const std::size_t p = vs.size();
  std::vector<Integer> out;
  for (const auto& rows : k_subsets(dim, p)) {
    IntMatrix minor(p, p);
    for (std::size_t a = 0; a < p; ++a)
      for (std::size_t b = 0; b < p; ++b) minor(a, b) = vs[b][rows[a]];
    out.push_back(determinant(minor));
  }
  return out;
}

/// Rank of the span of all wedges of generators lying in a common cone of the
/// fine subdivision.
inline FramingBasisReport framing_report(const Matroid& m, int p,
                                         long coordinate_limit = kFramingCoordinateLimit) {
  const int n = m.fan_dimension();
  if (p < 0 || p > n) throw InputError("framing_dim: degree out of range");
  const std::size_t dim = static_cast<std::size_t>(m.size() - 1);
  const Integer coords = binomial(static_cast<int>(dim), p);
  if (coords > coordinate_limit)
    throw SizeGuardError("framing_dim: exterior power has " + coords.str() + " coordinates");
  FramingBasisReport report;
  report.p = p;
  if (p == 0) {
    report.dimension = 1;
    report.generators = 1;
    return report;
  }
  EchelonBasis basis(static_cast<std::size_t>(coords));
  const FlatsLattice lat = flats(m);
  for (const Chain& c : chains_of_flats(lat, m.size(), p)) {
    ++report.generators;
    basis.insert(wedge_coordinates(chain_generators(c, m.size()), dim));
  }
  report.dimension = basis.rank();
  return report;
}

inline std::size_t framing_dim(const Matroid& m, int p) {
  return framing_report(m, p).dimension;
}

/// Unsigned Whitney number of the first kind: sum of |mu(empty, F)| over
/// flats of rank p.
inline Integer os_dim(const Matroid& m, int p) {
  if (p < 0 || p > m.rank()) throw InputError("os_dim: degree out of range");
  const FlatsLattice lat = flats(m);
  Integer sum = 0;
  for (std::size_t i = 0; i < lat.size(); ++i)
    if (lat.rank_of[i] == p) sum += abs(lat.mobius[i]);
  return sum;
}

/// Graded dimension of the projectivized algebra: coefficients of the
/// characteristic polynomial divided by (t - 1), unsigned.
inline Integer projective_os_dim(const Matroid& m, int p) {
  if (p < 0 || p > m.fan_dimension()) throw InputError("projective_os_dim: degree out of range");
  Integer sum = 0;
  for (int j = 0; j <= p; ++j) sum += sign_power(p - j) * os_dim(m, j);
  return sum;
}

inline Integer euler_char_fan(const Matroid& m) {
  Integer chi = 0;
  for (int p = 0; p <= m.fan_dimension(); ++p)
    chi += sign_power(p) * Integer(framing_dim(m, p));
  return chi;
}

}  // namespace tropdiag
