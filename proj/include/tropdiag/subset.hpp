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

// Subsets of a ground set {0, ..., N} as bit masks. Bit i is element i.

#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace tropdiag {

using Mask = std::uint32_t;

inline constexpr int kMaxElements = 16;

constexpr Mask bit(int e) { return Mask{1} << e; }
constexpr Mask full_mask(int n) { return n >= 32 ? ~Mask{0} : bit(n) - 1; }
constexpr bool contains(Mask s, int e) { return (s >> e) & 1U; }
constexpr bool is_subset(Mask a, Mask b) { return (a & ~b) == 0; }
constexpr int cardinality(Mask s) { return std::popcount(s); }

inline std::vector<int> elements_of(Mask s) {
  std::vector<int> out;
  for (int e = 0; s != 0; ++e, s >>= 1)
    if (s & 1U) out.push_back(e);
  return out;
}

template <class Range>
Mask mask_of(const Range& elems) {
  Mask m = 0;
  for (int e : elems) m |= bit(e);
  return m;
}

inline std::string format_set(Mask s) {
  std::string out = "{";
  bool first = true;
  for (int e : elements_of(s)) {
    if (!first) out += ",";
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

}  // namespace tropdiag
