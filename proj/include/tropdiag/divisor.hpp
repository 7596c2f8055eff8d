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

// Functions linear on the cones of the braid fan, and intersecting cycles
// with them.

#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "tropdiag/cycles.hpp"
#include "tropdiag/exact.hpp"
#include "tropdiag/matroid.hpp"
#include "tropdiag/subset.hpp"

namespace tropdiag {

/// Raised when a weighted generator sum leaves the span of its face, which
/// means the cycle being cut was not balanced.
class NotInSpan : public InputError {
 public:
  using InputError::InputError;
};

/// Braid-linear function on R^{N+1} / R1, stored by its values on v_S for
/// every subset S. value(empty) = value(E) = 0.
class PLFunction {
 public:
  explicit PLFunction(int ground_size)
      : ground_size_(ground_size), values_(std::size_t{1} << ground_size, Integer(0)) {
    if (ground_size < 1 || ground_size > kMaxElements)
      throw InputError("function ground set size out of range");
  }

  static PLFunction from_values(int ground_size, const std::function<Integer(Mask)>& fn) {
    PLFunction f(ground_size);
    const Mask full = full_mask(ground_size);
    for (Mask s = 1; s < full; ++s) f.values_[s] = fn(s);
    if (fn(0) != 0 || fn(full) != 0)
      throw InputError("function must vanish on the empty set and on E");
    return f;
  }

  int ground_size() const { return ground_size_; }
  const Integer& value(Mask s) const { return values_.at(s); }

  void set(Mask s, const Integer& v) {
    if ((s == 0 || s == full_mask(ground_size_)) && v != 0)
      throw InputError("function must vanish on the empty set and on E");
    values_.at(s) = v;
  }

  /// Value at an arbitrary point of R^N (gauge x_0 = 0), through the braid
  /// cone containing it.
  Rational evaluate(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != ground_size_ - 1)
      throw InputError("evaluate: point has wrong length");
    std::vector<Rational> lifted(ground_size_, Rational(0));
    for (int i = 1; i < ground_size_; ++i) lifted[i] = point[i - 1];
    std::vector<Rational> levels = lifted;
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    Rational out = 0;
    for (std::size_t j = 0; j + 1 < levels.size(); ++j) {
      Mask s = 0;
      for (int i = 0; i < ground_size_; ++i)
        if (lifted[i] <= levels[j]) s |= bit(i);
      out += (levels[j + 1] - levels[j]) * Rational(values_[s]);
    }
    return out;
  }

  PLFunction operator+(const PLFunction& o) const {
    check_same(o);
    PLFunction out = *this;
    for (std::size_t s = 0; s < values_.size(); ++s) out.values_[s] += o.values_[s];
    return out;
  }

  PLFunction operator-(const PLFunction& o) const {
    check_same(o);
    PLFunction out = *this;
    for (std::size_t s = 0; s < values_.size(); ++s) out.values_[s] -= o.values_[s];
    return out;
  }

  friend bool operator==(const PLFunction& a, const PLFunction& b) {
    return a.ground_size_ == b.ground_size_ && a.values_ == b.values_;
  }

 private:
  void check_same(const PLFunction& o) const {
    if (ground_size_ != o.ground_size_) throw InputError("functions on different spaces");
  }

  int ground_size_;
  std::vector<Integer> values_;
};

/// Values of a function on R^{N+1} before the constant direction is
/// factored out. Only used to build dehomogenized functions.
struct HomogeneousValues {
  int ground_size;
  std::vector<Integer> values;  // indexed by subset mask
};

/// Subtracts the multiple of x_0 that kills the value at v_E:
/// g(S) = g'(S) - g'(E) [0 in S].
inline PLFunction dehomogenize(const HomogeneousValues& h) {
  const Mask full = full_mask(h.ground_size);
  const Integer at_e = h.values.at(full);
  const Integer at_empty = h.values.at(0);
  if (at_empty != 0) throw InputError("homogeneous function must vanish at v_empty");
  return PLFunction::from_values(h.ground_size, [&](Mask s) -> Integer {
    return h.values[s] - (contains(s, 0) ? at_e : Integer(0));
  });
}

/// Rank function rk_i(S) = min(rk_N(S) + i, rk_M(S)) of the truncation chain.
inline Matroid intermediate_matroid(const Matroid& quotient, const Matroid& m, int i) {
  std::vector<std::uint8_t> table(std::size_t{1} << m.size());
  for (Mask s = 0; s < table.size(); ++s)
    table[s] = static_cast<std::uint8_t>(std::min(quotient.rank(s) + i, m.rank(s)));
  return Matroid::derived(m.size(), std::move(table));
}

inline bool is_quotient(const Matroid& quotient, const Matroid& m) {
  if (quotient.size() != m.size()) return false;
  const FlatsLattice lat = flats(quotient);
  return std::all_of(lat.flats.begin(), lat.flats.end(),
                     [&](Mask f) { return m.is_flat(f); });
}

/// Homogeneous g'_1, ..., g'_s for a quotient N of M; g'_i(S) = -1 exactly
/// when rk_M(S) >= rk_N(S) + s + 1 - i.
inline std::vector<HomogeneousValues> quotient_chain_homogeneous(const Matroid& quotient,
                                                                 const Matroid& m) {
  if (!is_quotient(quotient, m))
    throw InputError("quotient chain: flats of N are not all flats of M");
  const int s = m.rank() - quotient.rank();
  if (s < 0) throw InputError("quotient chain: rank of N exceeds rank of M");
  std::vector<HomogeneousValues> out;
  for (int i = 1; i <= s; ++i) {
    HomogeneousValues h{m.size(), std::vector<Integer>(std::size_t{1} << m.size())};
    for (Mask x = 0; x < h.values.size(); ++x)
      h.values[x] = m.rank(x) >= quotient.rank(x) + s + 1 - i ? -1 : 0;
    out.push_back(std::move(h));
  }
  return out;
}

inline std::vector<PLFunction> quotient_chain_functions(const Matroid& quotient,
                                                        const Matroid& m) {
  std::vector<PLFunction> out;
  for (const auto& h : quotient_chain_homogeneous(quotient, m)) out.push_back(dehomogenize(h));
  return out;
}

/// f evaluated on w through the linear extension of f restricted to the cone
/// of the chain. w must lie in the span of the chain's generators.
inline Rational evaluate_on_face(const PLFunction& f, const Chain& face, const Vector& w) {
  auto coeffs = chain_coordinates(face, w, f.ground_size());
  if (!coeffs) throw NotInSpan("vector not in span of face " + format_chain(face));
  Integer out = 0;
  for (std::size_t j = 0; j < face.size(); ++j) out += (*coeffs)[j] * f.value(face[j]);
  return Rational(out);
}

/// Per-face data handed to divisor observers.
struct FaceContribution {
  const Chain& face;
  const std::vector<StarEntry>& star;
  const Integer& weight;
};

using FaceObserver = std::function<void(const FaceContribution&)>;

/// f . X: weight of a codimension-one face is the sum over adjacent facets of
/// w(sigma) f(v_{sigma/tau}) minus f extended linearly from tau to the
/// weighted generator sum.
inline TropicalCycle divisor(const PLFunction& f, const TropicalCycle& x,
                             const FaceObserver& observer = {}) {
  if (f.ground_size() != x.ground_size())
    throw InputError("divisor: function and cycle live on different spaces");
  if (x.dimension() < 1) throw InputError("divisor: cycle has dimension 0");
  TropicalCycle out(x.ground_size(), x.dimension() - 1);
  for (const auto& [face, star] : codim1_stars(x)) {
    Vector sum(static_cast<std::size_t>(x.ambient_dimension()), Integer(0));
    Integer direct = 0;
    for (const auto& e : star) {
      accumulate(sum, e.generator, e.weight);
      direct += e.weight * f.value(e.added);
    }
    const Rational correction = evaluate_on_face(f, face, sum);
    if (!is_integral(correction))
      throw InternalInconsistency("divisor: non-integral correction at " + format_chain(face));
    const Integer weight = direct - numerator(correction);
    if (observer) observer({face, star, weight});
    out.add(face, weight);
  }
  const BalanceReport report = is_balanced(out);
  if (!report.balanced)
    throw InternalInconsistency("divisor output unbalanced at " + format_chain(*report.face));
  return out;
}

/// f(S) = g(S, S) for g on the doubled ground set.
inline PLFunction pullback_diagonal(const PLFunction& g, int ground_size) {
  if (g.ground_size() != 2 * ground_size - 1)
    throw InputError("pullback: function does not live on the doubled ground set");
  return PLFunction::from_values(ground_size, [&](Mask s) {
    return g.value(pair_mask(ground_size, s, s));
  });
}

}  // namespace tropdiag
