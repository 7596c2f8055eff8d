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

// Affine endomorphisms x -> Ax + v of tropical tori R^n / Lambda.

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tropdiag/exact.hpp"
#include "tropdiag/smith.hpp"

namespace tropdiag {

using RationalVector = std::vector<Rational>;

/// Columns of `basis` span Lambda. `v` is kept reduced to the fundamental
/// parallelepiped of the basis.
struct TorusEndo {
  int n = 0;
  RatMatrix basis;
  IntMatrix a;
  RationalVector v;
};

namespace detail {

inline RationalVector mat_vec(const RatMatrix& m, const RationalVector& x) {
  RationalVector out(m.rows(), Rational(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * x[j];
  return out;
}

inline RationalVector reduce_mod_one(RationalVector y) {
  for (auto& c : y) c = frac(c);
  return y;
}

}  // namespace detail

/// Checks integrality of A and of A in lattice coordinates, and reduces v.
inline TorusEndo make_torus_endo(const RatMatrix& basis, const RatMatrix& a,
                                 const RationalVector& v) {
  const std::size_t n = basis.rows();
  if (n == 0 || basis.cols() != n || a.rows() != n || a.cols() != n || v.size() != n)
    throw InputError("torus: dimensions do not match");
  auto inv = inverse(basis);
  if (!inv) throw InputError("torus: lattice basis is not invertible");
  IntMatrix ai(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!is_integral(a(i, j))) throw InputError("torus: A is not integral");
      ai(i, j) = numerator(a(i, j));
    }
  const RatMatrix conj = (*inv) * a * basis;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!is_integral(conj(i, j))) throw InputError("torus: A does not preserve the lattice");
  TorusEndo e;
  e.n = static_cast<int>(n);
  e.basis = basis;
  e.a = ai;
  e.v = detail::mat_vec(basis, detail::reduce_mod_one(detail::mat_vec(*inv, v)));
  return e;
}

/// A in lattice coordinates, B^-1 A B.
inline IntMatrix lattice_matrix(const TorusEndo& e) {
  const RatMatrix conj = *inverse(e.basis) * to_rational(e.a) * e.basis;
  IntMatrix out(conj.rows(), conj.cols());
  for (std::size_t i = 0; i < conj.rows(); ++i)
    for (std::size_t j = 0; j < conj.cols(); ++j) out(i, j) = numerator(conj(i, j));
  return out;
}

inline Integer det_one_minus(const IntMatrix& a) {
  return determinant(IntMatrix::identity(a.rows()) - a);
}

/// |det [[I, I], [A, I]]|, the intersection multiplicity of the graph and the
/// diagonal at a fixed point.
inline Integer local_multiplicity(const IntMatrix& a) {
  const std::size_t n = a.rows();
  IntMatrix block(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    block(i, i) = 1;
    block(i, n + i) = 1;
    block(n + i, n + i) = 1;
    for (std::size_t j = 0; j < n; ++j) block(n + i, j) = a(i, j);
  }
  return abs(determinant(block));
}

struct FixedPointSet {
  bool degenerate = false;
  std::vector<RationalVector> points;  // ambient coordinates
  Integer multiplicity = 0;            // shared by every point
};

/// Solutions of (I - A)x = v modulo Lambda via Smith normal form in lattice
/// coordinates.
inline FixedPointSet fixed_points(const TorusEndo& e) {
  const std::size_t n = static_cast<std::size_t>(e.n);
  FixedPointSet out;
  const IntMatrix c = IntMatrix::identity(n) - lattice_matrix(e);
  if (determinant(c) == 0) {
    out.degenerate = true;
    return out;
  }
  out.multiplicity = local_multiplicity(e.a);
  const RatMatrix inv = *inverse(e.basis);
  const SmithForm snf = smith_normal_form(c);
  const RationalVector target = detail::mat_vec(to_rational(snf.left), detail::mat_vec(inv, e.v));
  std::vector<Integer> d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = snf.diagonal(i, i);

  std::vector<Integer> k(n, Integer(0));
  while (true) {
    RationalVector z(n);
    for (std::size_t i = 0; i < n; ++i) z[i] = (target[i] + Rational(k[i])) / Rational(d[i]);
    RationalVector y = detail::reduce_mod_one(detail::mat_vec(to_rational(snf.right), z));
    out.points.push_back(detail::mat_vec(e.basis, y));
    std::size_t i = 0;
    while (i < n && ++k[i] == d[i]) k[i++] = 0;
    if (i == n) break;
  }

  // Every representative must solve the congruence.
  const RatMatrix one_minus_a = to_rational(IntMatrix::identity(n) - e.a);
  for (const auto& x : out.points) {
    RationalVector r = detail::mat_vec(one_minus_a, x);
    for (std::size_t i = 0; i < n; ++i) r[i] -= e.v[i];
    for (const auto& coord : detail::mat_vec(inv, r))
      if (!is_integral(coord))
        throw InternalInconsistency("torus: fixed point representative fails the congruence");
  }
  return out;
}

struct IntersectionReport {
  Integer total = 0;
  Integer classical_factor = 0;  // number of fixed points
  Integer tropical_factor = 0;   // multiplicity at each point
};

inline IntersectionReport intersection_report(const TorusEndo& e) {
  const FixedPointSet fp = fixed_points(e);
  IntersectionReport r;
  if (fp.degenerate) return r;
  r.classical_factor = Integer(fp.points.size());
  r.tropical_factor = fp.multiplicity;
  for (std::size_t i = 0; i < fp.points.size(); ++i) r.total += fp.multiplicity;
  return r;
}

inline Integer intersection_side(const TorusEndo& e) { return intersection_report(e).total; }

/// m_k = sum of principal k x k minors.
inline std::vector<Integer> principal_minor_sums(const IntMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<Integer> m(n + 1, Integer(0));
  m[0] = 1;
  for (std::size_t k = 1; k <= n; ++k)
    for (const auto& idx : k_subsets(n, k)) m[k] += determinant(a.minor_matrix(idx, idx));
  return m;
}

struct TraceReport {
  std::vector<Integer> minor_sums;
  Integer graded_trace = 0;  // sum (-1)^k m_k
  Integer total = 0;         // sum over (p, q) of (-1)^(p+q) m_p m_q
};

inline TraceReport trace_report(const TorusEndo& e) {
  TraceReport r;
  r.minor_sums = principal_minor_sums(e.a);
  for (std::size_t k = 0; k < r.minor_sums.size(); ++k)
    r.graded_trace += ((k % 2) ? -1 : 1) * r.minor_sums[k];
  if (r.graded_trace != det_one_minus(e.a))
    throw InternalInconsistency("torus: minor sums disagree with det(I - A)");
  for (std::size_t p = 0; p < r.minor_sums.size(); ++p)
    for (std::size_t q = 0; q < r.minor_sums.size(); ++q)
      r.total += (((p + q) % 2) ? -1 : 1) * r.minor_sums[p] * r.minor_sums[q];
  if (r.total != r.graded_trace * r.graded_trace)
    throw InternalInconsistency("torus: (p, q) trace table disagrees with its square");
  return r;
}

inline Integer trace_side(const TorusEndo& e) { return trace_report(e).total; }

struct LefschetzVerdict {
  Integer lhs, middle, rhs;
  bool all_equal = false;
};

inline LefschetzVerdict lefschetz_verify(const TorusEndo& e) {
  LefschetzVerdict v;
  v.lhs = intersection_side(e);
  const Integer d = det_one_minus(e.a);
  v.middle = d * d;
  v.rhs = trace_side(e);
  v.all_equal = v.lhs == v.middle && v.middle == v.rhs;
  return v;
}

}  // namespace tropdiag
