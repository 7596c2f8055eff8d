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

// Weighted subfans of the braid arrangement fan.
//
// Coordinates live on R^N = R^{N+1} / R1 in the gauge x_0 = 0. A cone is a
// chain of subsets E > F_1 > ... > F_l > {} (only the interior members are
// stored) and is spanned by the indicator vectors v_{F_i}.

#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tropdiag/exact.hpp"
#include "tropdiag/matroid.hpp"
#include "tropdiag/smith.hpp"
#include "tropdiag/subset.hpp"

namespace tropdiag {

/// Interior members of a chain, strictly decreasing.
using Chain = std::vector<Mask>;
using Vector = std::vector<Integer>;

/// Representative of v_S with x_0 = 0: -1 on S when 0 is not in S, +1 off S
/// when 0 is in S. Indexed by the elements 1..N.
inline Vector indicator_vector(Mask s, int ground_size) {
  const int big_n = ground_size - 1;
  Vector v(static_cast<std::size_t>(std::max(big_n, 0)), Integer(0));
  const bool has_zero = contains(s, 0);
  for (int i = 1; i <= big_n; ++i) {
    if (has_zero && !contains(s, i)) v[i - 1] = 1;
    if (!has_zero && contains(s, i)) v[i - 1] = -1;
  }
  return v;
}

inline void accumulate(Vector& acc, const Vector& v, const Integer& scale) {
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += scale * v[i];
}

inline bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

/// Sorts the members decreasingly and checks strict inclusion with every
/// member proper and nonempty.
inline Chain canonical_chain(std::vector<Mask> members, int ground_size) {
  std::sort(members.begin(), members.end(), [](Mask a, Mask b) {
    return cardinality(a) != cardinality(b) ? cardinality(a) > cardinality(b) : a < b;
  });
  const Mask full = full_mask(ground_size);
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members[i] == 0 || members[i] == full || !is_subset(members[i], full))
      throw InputError("chain member " + format_set(members[i]) +
                       " is not a proper nonempty subset");
    if (i > 0 && (members[i] == members[i - 1] || !is_subset(members[i], members[i - 1])))
      throw InputError("chain members are not nested");
  }
  return members;
}

inline std::string format_chain(const Chain& c) {
  std::string out = "(";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += " > ";
    out += format_set(c[i]);
  }
  return out + ")";
}

/// Layer coefficients of w in the span of a chain's generators, or nullopt.
///
/// With x_0 = 0 lifted, w lies in span(v_{G_1}, ..., v_{G_l}) + R1 iff it is
/// constant on each layer G_j \ G_{j+1}; the coefficient of v_{G_j} is then
/// the drop between consecutive layer values.
inline std::optional<Vector> chain_coordinates(const Chain& chain, const Vector& w,
                                               int ground_size) {
  const Mask full = full_mask(ground_size);
  auto lifted = [&](int i) -> const Integer& {
    static const Integer zero = 0;
    return i == 0 ? zero : w[i - 1];
  };
  std::vector<Integer> layer_value;
  layer_value.reserve(chain.size() + 1);
  for (std::size_t j = 0; j <= chain.size(); ++j) {
    const Mask upper = j == 0 ? full : chain[j - 1];
    const Mask lower = j == chain.size() ? 0 : chain[j];
    const Mask layer = upper & ~lower;
    const std::vector<int> elems = elements_of(layer);
    const Integer& a = lifted(elems.front());
    for (int e : elems)
      if (lifted(e) != a) return std::nullopt;
    layer_value.push_back(a);
  }
  Vector coeffs(chain.size());
  for (std::size_t j = 0; j < chain.size(); ++j)
    coeffs[j] = layer_value[j] - layer_value[j + 1];
  return coeffs;
}

inline std::vector<Vector> chain_generators(const Chain& chain, int ground_size) {
  std::vector<Vector> gens;
  gens.reserve(chain.size());
  for (Mask f : chain) gens.push_back(indicator_vector(f, ground_size));
  return gens;
}

/// The generators of the cone extend to a basis of Z^N: every invariant
/// factor of the N x l generator matrix is 1.
inline bool chain_is_unimodular(const Chain& chain, int ground_size) {
  const int big_n = ground_size - 1;
  IntMatrix m(static_cast<std::size_t>(big_n), chain.size());
  for (std::size_t j = 0; j < chain.size(); ++j) {
    Vector v = indicator_vector(chain[j], ground_size);
    for (int i = 0; i < big_n; ++i) m(i, j) = v[i];
  }
  const auto factors = smith_normal_form(m).invariant_factors();
  if (factors.size() < chain.size()) return false;
  return std::all_of(factors.begin(), factors.end(),
                     [](const Integer& d) { return d == 1; });
}

/// Pure-dimensional weighted fan with chain-indexed cones. Zero weights are
/// never stored, so equality of weight maps is equality of cycles.
class TropicalCycle {
 public:
  TropicalCycle(int ground_size, int dimension)
      : ground_size_(ground_size), dimension_(dimension) {
    if (dimension < 0) throw InputError("cycle dimension must be >= 0");
  }

  int ground_size() const { return ground_size_; }
  int dimension() const { return dimension_; }
  int ambient_dimension() const { return ground_size_ - 1; }
  const std::map<Chain, Integer>& weights() const { return weights_; }
  std::size_t size() const { return weights_.size(); }
  bool empty() const { return weights_.empty(); }

  void add(const Chain& chain, const Integer& w) {
    if (static_cast<int>(chain.size()) != dimension_)
      throw InputError("cone " + format_chain(chain) + " has wrong dimension");
    if (w == 0) return;
    auto [it, inserted] = weights_.try_emplace(chain, w);
    if (!inserted) {
      it->second += w;
      if (it->second == 0) weights_.erase(it);
    }
  }

  Integer weight(const Chain& chain) const {
    auto it = weights_.find(chain);
    return it == weights_.end() ? Integer(0) : it->second;
  }

  TropicalCycle operator+(const TropicalCycle& other) const {
    check_compatible(other);
    TropicalCycle out = *this;
    for (const auto& [c, w] : other.weights_) out.add(c, w);
    return out;
  }

  TropicalCycle operator-() const {
    TropicalCycle out(ground_size_, dimension_);
    for (const auto& [c, w] : weights_) out.add(c, -w);
    return out;
  }

  friend bool operator==(const TropicalCycle& a, const TropicalCycle& b) {
    return a.ground_size_ == b.ground_size_ && a.dimension_ == b.dimension_ &&
           a.weights_ == b.weights_;
  }

 private:
  void check_compatible(const TropicalCycle& other) const {
    if (ground_size_ != other.ground_size_ || dimension_ != other.dimension_)
      throw InputError("cycles live in different spaces");
  }

  int ground_size_;
  int dimension_;
  std::map<Chain, Integer> weights_;
};

/// Chains of proper nonempty flats of the given length, in lexicographic order
/// of the flats' lattice indices.
inline std::vector<Chain> chains_of_flats(const FlatsLattice& lat, int ground_size,
                                          int length) {
  const Mask full = full_mask(ground_size);
  std::vector<std::size_t> proper;
  for (std::size_t i = 0; i < lat.size(); ++i)
    if (lat.flats[i] != 0 && lat.flats[i] != full) proper.push_back(i);
  std::vector<Chain> out;
  Chain cur;
  std::function<void(Mask)> extend = [&](Mask above) {
    if (static_cast<int>(cur.size()) == length) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i : proper) {
      Mask f = lat.flats[i];
      if (f != above && is_subset(f, above)) {
        cur.push_back(f);
        extend(f);
        cur.pop_back();
      }
    }
  };
  extend(full);
  std::sort(out.begin(), out.end());
  return out;
}

/// The fine subdivision of the projective matroid fan, all weights 1.
inline TropicalCycle matroid_fan(const Matroid& m) {
  if (m.rank() < 1) throw InputError("matroid fan needs rank >= 1");
  const int n = m.fan_dimension();
  TropicalCycle fan(m.size(), n);
  const FlatsLattice lat = flats(m);
  Chain cur;
  std::function<void(std::size_t)> descend = [&](std::size_t idx) {
    if (lat.rank_of[idx] == 1) {
      fan.add(cur, Integer(1));
      return;
    }
    for (std::size_t lower : lat.lower_covers[idx]) {
      cur.push_back(lat.flats[lower]);
      descend(lower);
      cur.pop_back();
    }
  };
  if (n == 0) {
    fan.add(Chain{}, Integer(1));
  } else {
    descend(lat.index_of(m.ground()));
  }
  return fan;
}

struct StarEntry {
  Chain facet;
  Mask added;
  Vector generator;
  Integer weight;
};

/// For every facet and every deleted member, the codimension-one face it
/// leaves behind together with the deleted flat and its generator.
inline std::map<Chain, std::vector<StarEntry>> codim1_stars(const TropicalCycle& x) {
  if (x.dimension() < 1) throw InputError("codim1_stars needs dimension >= 1");
  std::map<Chain, std::vector<StarEntry>> stars;
  for (const auto& [facet, w] : x.weights()) {
    for (std::size_t i = 0; i < facet.size(); ++i) {
      Chain face;
      face.reserve(facet.size() - 1);
      for (std::size_t j = 0; j < facet.size(); ++j)
        if (j != i) face.push_back(facet[j]);
      stars[face].push_back(
          {facet, facet[i], indicator_vector(facet[i], x.ground_size()), w});
    }
  }
  return stars;
}

struct BalanceReport {
  bool balanced = true;
  std::optional<Chain> face;
  Vector residual;  // weighted generator sum that left the face's span
};

/// Exact balancing test: around every codimension-one face the weighted sum
/// of facet generators must lie in the linear span of the face.
inline BalanceReport is_balanced(const TropicalCycle& x) {
  BalanceReport report;
  if (x.dimension() == 0) return report;
  const auto stars = codim1_stars(x);
  for (const auto& [face, entries] : stars) {
    Vector sum(static_cast<std::size_t>(x.ambient_dimension()), Integer(0));
    for (const auto& e : entries) accumulate(sum, e.generator, e.weight);
    if (!solve_in_span(chain_generators(face, x.ground_size()), sum)) {
      report.balanced = false;
      report.face = face;
      report.residual = sum;
      return report;
    }
  }
  return report;
}

/// Weight at the origin of a zero-dimensional cycle.
inline Integer degree0(const TropicalCycle& x) {
  if (x.dimension() != 0) throw InputError("degree of a positive-dimensional cycle");
  return x.weight(Chain{});
}

/// Chain of the smallest braid cone whose relative interior holds the point.
inline Chain braid_chain_of_point(const std::vector<Rational>& point, int ground_size) {
  std::vector<Rational> lifted(static_cast<std::size_t>(ground_size), Rational(0));
  for (int i = 1; i < ground_size; ++i) lifted[i] = point[i - 1];
  std::vector<Rational> levels = lifted;
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  Chain chain;
  // Sublevel sets below the top level, largest first.
  for (std::size_t j = levels.size() - 1; j-- > 0;) {
    Mask s = 0;
    for (int i = 0; i < ground_size; ++i)
      if (lifted[i] <= levels[j]) s |= bit(i);
    chain.push_back(s);
  }
  return chain;
}

/// Whether the point lies in the support of the cycle.
inline bool support_contains(const TropicalCycle& x, const std::vector<Rational>& point) {
  const Chain needed = braid_chain_of_point(point, x.ground_size());
  for (const auto& [chain, w] : x.weights()) {
    if (std::all_of(needed.begin(), needed.end(), [&](Mask s) {
          return std::find(chain.begin(), chain.end(), s) != chain.end();
        }))
      return true;
  }
  return false;
}

/// Sum of c_j v_{F_j} for a chain and rational coefficients.
inline std::vector<Rational> point_in_cone(const Chain& chain,
                                           const std::vector<Rational>& coeffs,
                                           int ground_size) {
  std::vector<Rational> p(static_cast<std::size_t>(ground_size - 1), Rational(0));
  for (std::size_t j = 0; j < chain.size(); ++j) {
    Vector v = indicator_vector(chain[j], ground_size);
    for (std::size_t i = 0; i < p.size(); ++i) p[i] += coeffs[j] * Rational(v[i]);
  }
  return p;
}

}  // namespace tropdiag
