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

// Loopless matroids on {0, ..., N} with a fully tabulated rank function.
//
// Every constructor funnels through one validating constructor, so a Matroid
// value always satisfies the rank axioms and has no loops. Element 0 is the
// distinguished basepoint used by the diagonal construction; use
// `relabeled` to move a different element into that position.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tropdiag/exact.hpp"
#include "tropdiag/subset.hpp"

namespace tropdiag {

enum class Provenance { kBases, kUniform, kGraphic, kRankTable, kDerived };

class Matroid {
 public:
  static Matroid uniform(int rank, int elements) {
    if (elements < 0 || elements > kMaxElements)
      throw InputError("uniform matroid: element count out of range");
    if (rank < 0 || rank > elements)
      throw InputError("uniform matroid: need 0 <= rank <= elements");
    std::vector<std::uint8_t> table(std::size_t{1} << elements);
    for (Mask s = 0; s < table.size(); ++s)
      table[s] = static_cast<std::uint8_t>(std::min(cardinality(s), rank));
    return Matroid(elements, std::move(table), Provenance::kUniform);
  }

  static Matroid from_bases(int elements,
                            const std::vector<std::vector<int>>& bases) {
    if (elements < 0 || elements > kMaxElements)
      throw InputError("bases matroid: element count out of range");
    if (bases.empty()) throw InputError("bases matroid: empty bases list");
    std::set<Mask> basis_set;
    int basis_size = -1;
    for (const auto& b : bases) {
      Mask m = 0;
      for (int e : b) {
        if (e < 0 || e >= elements)
          throw InputError("bases matroid: element " + std::to_string(e) +
                           " out of range");
        if (contains(m, e))
          throw InputError("bases matroid: repeated element in a basis");
        m |= bit(e);
      }
      if (basis_size == -1) basis_size = cardinality(m);
      if (cardinality(m) != basis_size)
        throw InputError("bases matroid: bases of different sizes");
      basis_set.insert(m);
    }
    // Basis exchange: for B1, B2 and x in B1 \ B2 some y in B2 \ B1 has
    // B1 - x + y a basis.
    for (Mask b1 : basis_set)
      for (Mask b2 : basis_set)
        for (int x : elements_of(b1 & ~b2)) {
          bool ok = false;
          for (int y : elements_of(b2 & ~b1))
            if (basis_set.count((b1 & ~bit(x)) | bit(y))) {
              ok = true;
              break;
            }
          if (!ok)
            throw InputError("bases matroid: basis exchange fails for " +
                             format_set(b1) + ", " + format_set(b2));
        }
    const std::size_t size = std::size_t{1} << elements;
    std::vector<char> independent(size, 0);
    for (Mask b : basis_set) independent[b] = 1;
    for (std::size_t s = size; s-- > 0;) {
      if (independent[s]) continue;
      for (int e = 0; e < elements; ++e)
        if (!contains(static_cast<Mask>(s), e) && independent[s | bit(e)]) {
          independent[s] = 1;
          break;
        }
    }
    std::vector<std::uint8_t> table(size, 0);
    for (std::size_t s = 1; s < size; ++s) {
      if (independent[s]) {
        table[s] = static_cast<std::uint8_t>(cardinality(static_cast<Mask>(s)));
        continue;
      }
      std::uint8_t best = 0;
      for (int e : elements_of(static_cast<Mask>(s)))
        best = std::max(best, table[s & ~bit(e)]);
      table[s] = best;
    }
    return Matroid(elements, std::move(table), Provenance::kBases);
  }

  /// Cycle matroid of a multigraph; edge i of the list is element i.
  static Matroid graphic(int vertices,
                         const std::vector<std::pair<int, int>>& edges) {
    const int n = static_cast<int>(edges.size());
    if (n > kMaxElements) throw InputError("graphic matroid: too many edges");
    if (vertices < 0) throw InputError("graphic matroid: negative vertex count");
    for (std::size_t i = 0; i < edges.size(); ++i) {
      auto [u, w] = edges[i];
      if (u < 0 || w < 0 || u >= vertices || w >= vertices)
        throw InputError("graphic matroid: edge endpoint out of range");
      if (u == w)
        throw InputError("graphic matroid: edge " + std::to_string(i) +
                         " is a self-loop, which is a matroid loop");
    }
    std::vector<std::uint8_t> table(std::size_t{1} << n);
    std::vector<int> parent(static_cast<std::size_t>(vertices));
    for (Mask s = 0; s < table.size(); ++s) {
      std::iota(parent.begin(), parent.end(), 0);
      auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
      };
      int merges = 0;
      for (int e : elements_of(s)) {
        int a = find(edges[e].first), b = find(edges[e].second);
        if (a != b) {
          parent[a] = b;
          ++merges;
        }
      }
      table[s] = static_cast<std::uint8_t>(merges);
    }
    return Matroid(n, std::move(table), Provenance::kGraphic);
  }

  /// `ranks[s]` is the rank of the subset with bit mask s.
  static Matroid from_rank_table(int elements, const std::vector<int>& ranks) {
    if (elements < 0 || elements > kMaxElements)
      throw InputError("rank table: element count out of range");
    if (ranks.size() != (std::size_t{1} << elements))
      throw InputError("rank table: expected one rank per subset");
    std::vector<std::uint8_t> table(ranks.size());
    for (std::size_t s = 0; s < ranks.size(); ++s) {
      if (ranks[s] < 0 || ranks[s] > elements)
        throw InputError("rank table: rank out of range");
      table[s] = static_cast<std::uint8_t>(ranks[s]);
    }
    return Matroid(elements, std::move(table), Provenance::kRankTable);
  }

  /// Internal constructor for derived matroids (contractions, sums, ...).
  static Matroid derived(int elements, std::vector<std::uint8_t> table) {
    return Matroid(elements, std::move(table), Provenance::kDerived);
  }

  int size() const { return n_; }
  Mask ground() const { return full_mask(n_); }
  int rank() const { return table_.back(); }
  int rank(Mask s) const { return table_[s & ground()]; }
  /// Dimension n of the projective matroid fan; the matroid has rank n + 1.
  int fan_dimension() const { return rank() - 1; }
  Provenance provenance() const { return provenance_; }
  const std::vector<std::uint8_t>& rank_table() const { return table_; }

  Mask closure(Mask s) const {
    const int r = rank(s);
    Mask out = s;
    for (int e = 0; e < n_; ++e)
      if (!contains(s, e) && rank(s | bit(e)) == r) out |= bit(e);
    return out;
  }

  bool is_flat(Mask s) const { return is_subset(s, ground()) && closure(s) == s; }

  /// perm[old] = new label.
  Matroid relabeled(const std::vector<int>& perm) const {
    if (perm.size() != static_cast<std::size_t>(n_))
      throw InputError("relabel: permutation has wrong length");
    std::vector<char> seen(perm.size(), 0);
    for (int p : perm) {
      if (p < 0 || p >= n_ || seen[p]) throw InputError("relabel: not a permutation");
      seen[p] = 1;
    }
    std::vector<std::uint8_t> table(table_.size());
    for (Mask s = 0; s < table_.size(); ++s) {
      Mask image = 0;
      for (int e : elements_of(s)) image |= bit(perm[e]);
      table[image] = table_[s];
    }
    return Matroid(n_, std::move(table), provenance_);
  }

  friend bool operator==(const Matroid& a, const Matroid& b) {
    return a.n_ == b.n_ && a.table_ == b.table_;
  }

 private:
  Matroid(int n, std::vector<std::uint8_t> table, Provenance provenance)
      : n_(n), table_(std::move(table)), provenance_(provenance) {
    validate();
  }

  void validate() const {
    if (table_[0] != 0) throw InputError("rank axioms: rank of empty set is not 0");
    const Mask full = ground();
    for (Mask s = 0; s <= full; ++s) {
      for (int e = 0; e < n_; ++e) {
        if (contains(s, e)) continue;
        const int inc = table_[s | bit(e)] - table_[s];
        if (inc != 0 && inc != 1)
          throw InputError("rank axioms: rank(S+e) - rank(S) not in {0,1} at S=" +
                           format_set(s));
        for (int f = e + 1; f < n_; ++f) {
          if (contains(s, f)) continue;
          if (table_[s | bit(e)] + table_[s | bit(f)] <
              table_[s | bit(e) | bit(f)] + table_[s])
            throw InputError("rank axioms: submodularity fails at S=" +
                             format_set(s));
        }
      }
      if (s == full) break;
    }
    for (int e = 0; e < n_; ++e)
      if (table_[bit(e)] != 1)
        throw InputError("loop: element " + std::to_string(e) +
                         " has rank 0 (is in no basis); loopless matroids only");
  }

  int n_;
  std::vector<std::uint8_t> table_;
  Provenance provenance_;
};

/// The lattice of flats L(M) with ranks, covers and mu(empty, F).
struct FlatsLattice {
  std::vector<Mask> flats;  // sorted by (rank, mask)
  std::vector<int> rank_of;
  std::vector<Integer> mobius;
  std::vector<std::vector<std::size_t>> upper_covers;
  std::vector<std::vector<std::size_t>> lower_covers;
  std::unordered_map<Mask, std::size_t> index;

  std::size_t size() const { return flats.size(); }
  bool contains_flat(Mask f) const { return index.count(f) != 0; }
  std::size_t index_of(Mask f) const {
    auto it = index.find(f);
    if (it == index.end()) throw InputError("not a flat: " + format_set(f));
    return it->second;
  }
};

inline FlatsLattice flats(const Matroid& m) {
  std::set<std::pair<int, Mask>> found;
  const Mask full = m.ground();
  for (Mask s = 0;; ++s) {
    Mask c = m.closure(s);
    found.emplace(m.rank(c), c);
    if (s == full) break;
  }
  FlatsLattice lat;
  for (auto [r, f] : found) {
    lat.index.emplace(f, lat.flats.size());
    lat.flats.push_back(f);
    lat.rank_of.push_back(r);
  }
  const std::size_t k = lat.flats.size();
  lat.upper_covers.assign(k, {});
  lat.lower_covers.assign(k, {});
  for (std::size_t i = 0; i < k; ++i) {
    std::set<std::size_t> ups;
    for (int e = 0; e < m.size(); ++e)
      if (!contains(lat.flats[i], e))
        ups.insert(lat.index.at(m.closure(lat.flats[i] | bit(e))));
    for (std::size_t j : ups) {
      lat.upper_covers[i].push_back(j);
      lat.lower_covers[j].push_back(i);
    }
  }
  lat.mobius.assign(k, Integer(0));
  for (std::size_t i = 0; i < k; ++i) {
    if (lat.flats[i] == 0) {
      lat.mobius[i] = 1;
      continue;
    }
    Integer sum = 0;
    for (std::size_t j = 0; j < i; ++j)
      if (lat.flats[j] != lat.flats[i] && is_subset(lat.flats[j], lat.flats[i]))
        sum += lat.mobius[j];
    lat.mobius[i] = -sum;
  }
  return lat;
}

/// mu(lo, hi) on the lattice of flats; zero unless lo is contained in hi.
inline Integer mobius_interval(const FlatsLattice& lat, Mask lo, Mask hi) {
  if (!is_subset(lo, hi)) return Integer(0);
  std::unordered_map<Mask, Integer> mu;
  for (std::size_t i = 0; i < lat.size(); ++i) {
    Mask f = lat.flats[i];
    if (!is_subset(lo, f) || !is_subset(f, hi)) continue;
    if (f == lo) {
      mu[f] = 1;
      continue;
    }
    Integer sum = 0;
    for (auto& [g, v] : mu)
      if (g != f && is_subset(g, f)) sum += v;
    mu[f] = -sum;
  }
  return mu.at(hi);
}

inline Integer sign_power(int e) { return (e % 2 == 0) ? Integer(1) : Integer(-1); }

/// (-1)^(n+1) * sum over flats of mu(empty, F) * rk(F).
inline Integer beta_definition(const Matroid& m) {
  const FlatsLattice lat = flats(m);
  Integer sum = 0;
  for (std::size_t i = 0; i < lat.size(); ++i) sum += lat.mobius[i] * lat.rank_of[i];
  return sign_power(m.rank()) * sum;
}

/// (-1)^n * sum of mu(empty, F) over flats avoiding the basepoint.
inline Integer beta_basepoint(const Matroid& m, int basepoint) {
  if (basepoint < 0 || basepoint >= m.size())
    throw InputError("beta: basepoint out of range");
  if (m.rank() < 1) throw InputError("beta: basepoint formula needs rank >= 1");
  const FlatsLattice lat = flats(m);
  Integer sum = 0;
  for (std::size_t i = 0; i < lat.size(); ++i)
    if (!contains(lat.flats[i], basepoint)) sum += lat.mobius[i];
  return sign_power(m.fan_dimension()) * sum;
}

/// Beta invariant; both formulas are evaluated and must agree.
inline Integer beta(const Matroid& m) {
  Integer by_definition = beta_definition(m);
  if (m.size() == 0 || m.rank() == 0) return by_definition;
  Integer by_basepoint = beta_basepoint(m, 0);
  if (by_definition != by_basepoint)
    throw InternalInconsistency("beta: definition gives " + by_definition.str() +
                                " but basepoint formula gives " +
                                by_basepoint.str());
  return by_definition;
}

/// No partition E = A + B into nonempty parts with rk(A) + rk(B) = rk(E).
inline bool is_connected(const Matroid& m) {
  if (m.size() <= 1) return true;
  const Mask full = m.ground();
  for (Mask a = 1; a < full; a += 2) {  // A contains element 0
    if (m.rank(a) + m.rank(full & ~a) == m.rank()) return false;
  }
  return true;
}

/// M / F on E \ F, relabeled order-preservingly to {0, ..., |E \ F| - 1}.
inline Matroid contract(const Matroid& m, Mask flat) {
  if (!m.is_flat(flat))
    throw InputError("contract: " + format_set(flat) + " is not a flat");
  const std::vector<int> rest = elements_of(m.ground() & ~flat);
  const int k = static_cast<int>(rest.size());
  std::vector<std::uint8_t> table(std::size_t{1} << k);
  const int base = m.rank(flat);
  for (Mask s = 0; s < table.size(); ++s) {
    Mask lifted = flat;
    for (int i : elements_of(s)) lifted |= bit(rest[i]);
    table[s] = static_cast<std::uint8_t>(m.rank(lifted) - base);
  }
  return Matroid::derived(k, std::move(table));
}

/// Elements of `b` are shifted past those of `a`.
inline Matroid direct_sum(const Matroid& a, const Matroid& b) {
  const int n = a.size() + b.size();
  if (n > kMaxElements) throw SizeGuardError("direct sum: too many elements");
  std::vector<std::uint8_t> table(std::size_t{1} << n);
  for (Mask s = 0; s < table.size(); ++s)
    table[s] = static_cast<std::uint8_t>(a.rank(s & a.ground()) +
                                         b.rank(s >> a.size()));
  return Matroid::derived(n, std::move(table));
}

// The doubled ground set E' of M (+)_0 M: element 0 is shared, element i of
// the first copy keeps label i, element i of the second copy gets N + i.

/// Subset (F, G) of E'; requires 0 in both or in neither.
inline Mask pair_mask(int ground_size, Mask first, Mask second) {
  if (contains(first, 0) != contains(second, 0))
    throw InputError("pair: 0 must lie in both parts or in neither");
  const int big_n = ground_size - 1;
  return (first & ~Mask{1}) | ((second & ~Mask{1}) << big_n) | (first & 1U);
}

/// Inverse of pair_mask for an arbitrary subset of E'.
inline std::pair<Mask, Mask> split_pair(int ground_size, Mask x) {
  const int big_n = ground_size - 1;
  Mask first = x & full_mask(ground_size);
  Mask second = ((x >> big_n) & ~Mask{1}) | (x & 1U);
  return {first, second};
}

/// Parallel connection of M with itself along element 0.
inline Matroid parallel_connection_self(const Matroid& m) {
  if (m.size() < 1) throw InputError("parallel connection needs element 0");
  const int size = 2 * m.size() - 1;
  if (size > kMaxElements)
    throw SizeGuardError("parallel connection: doubled ground set too large");
  std::vector<std::uint8_t> table(std::size_t{1} << size);
  for (Mask x = 0; x < table.size(); ++x) {
    auto [f, g] = split_pair(m.size(), x);
    int r;
    if (contains(x, 0)) {
      r = m.rank(f) + m.rank(g) - 1;
    } else {
      r = std::min(m.rank(f) + m.rank(g), m.rank(f | 1U) + m.rank(g | 1U) - 1);
    }
    table[x] = static_cast<std::uint8_t>(r);
  }
  return Matroid::derived(size, std::move(table));
}

/// M_Delta on E': rank of (F, G) is rk(F u G) in E.
inline Matroid diagonal_matroid(const Matroid& m) {
  if (m.size() < 1) throw InputError("diagonal matroid needs element 0");
  const int size = 2 * m.size() - 1;
  if (size > kMaxElements)
    throw SizeGuardError("diagonal matroid: doubled ground set too large");
  std::vector<std::uint8_t> table(std::size_t{1} << size);
  for (Mask x = 0; x < table.size(); ++x) {
    auto [f, g] = split_pair(m.size(), x);
    table[x] = static_cast<std::uint8_t>(m.rank(f | g));
  }
  return Matroid::derived(size, std::move(table));
}

}  // namespace tropdiag
