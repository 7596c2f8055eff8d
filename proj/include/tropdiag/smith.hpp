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

#pragma once

#include <cstddef>
#include <vector>

#include "tropdiag/exact.hpp"

namespace tropdiag {

/// left * A * right = diagonal, with left and right unimodular and the
/// diagonal entries non-negative, each dividing the next.
struct SmithForm {
  IntMatrix left;
  IntMatrix diagonal;
  IntMatrix right;

  std::vector<Integer> invariant_factors() const {
    std::vector<Integer> out;
    for (std::size_t i = 0; i < diagonal.rows() && i < diagonal.cols(); ++i)
      out.push_back(diagonal(i, i));
    return out;
  }
};

namespace detail {

inline void add_row_multiple(IntMatrix& m, std::size_t dst, std::size_t src,
                             const Integer& q) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) += q * m(src, j);
}

inline void add_col_multiple(IntMatrix& m, std::size_t dst, std::size_t src,
                             const Integer& q) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) += q * m(i, src);
}

}  // namespace detail

inline SmithForm smith_normal_form(const IntMatrix& a) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  IntMatrix d = a;
  IntMatrix u = IntMatrix::identity(rows);
  IntMatrix v = IntMatrix::identity(cols);

  for (std::size_t t = 0; t < rows && t < cols; ++t) {
    bool progress = true;
    while (progress) {
      progress = false;
      // Smallest nonzero magnitude in the trailing block becomes the pivot.
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (d(i, j) != 0 && (pr == rows || abs(d(i, j)) < abs(d(pr, pc)))) {
            pr = i;
            pc = j;
          }
      if (pr == rows) return {u, d, v};
      d.swap_rows(t, pr);
      u.swap_rows(t, pr);
      d.swap_cols(t, pc);
      v.swap_cols(t, pc);

      for (std::size_t i = t + 1; i < rows; ++i) {
        if (d(i, t) == 0) continue;
        Integer q = floor_div(d(i, t), d(t, t));
        detail::add_row_multiple(d, i, t, -q);
        detail::add_row_multiple(u, i, t, -q);
        if (d(i, t) != 0) progress = true;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (d(t, j) == 0) continue;
        Integer q = floor_div(d(t, j), d(t, t));
        detail::add_col_multiple(d, j, t, -q);
        detail::add_col_multiple(v, j, t, -q);
        if (d(t, j) != 0) progress = true;
      }
      if (progress) continue;

      // Row and column are clear; enforce divisibility of the remainder.
      for (std::size_t i = t + 1; i < rows && !progress; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (d(i, j) % d(t, t) != 0) {
            detail::add_row_multiple(d, t, i, Integer(1));
            detail::add_row_multiple(u, t, i, Integer(1));
            progress = true;
            break;
          }
    }
    if (d(t, t) < 0) {
      for (std::size_t j = 0; j < cols; ++j) d(t, j) = -d(t, j);
      for (std::size_t j = 0; j < rows; ++j) u(t, j) = -u(t, j);
    }
  }
  return {u, d, v};
}

}  // namespace tropdiag
