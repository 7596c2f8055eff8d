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

// Exact scalar types, dense matrices and the elimination routines shared by
// every module. Nothing in this library touches floating point.

#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tropdiag {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Malformed or out-of-contract user input.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computation exceeded a configured feasibility bound.
class SizeGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two independent routes that must agree did not. Always a bug or a
/// counterexample; never recoverable.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline Integer numerator(const Rational& q) {
  return boost::multiprecision::numerator(q);
}
inline Integer denominator(const Rational& q) {
  return boost::multiprecision::denominator(q);
}
inline bool is_integral(const Rational& q) { return denominator(q) == 1; }

inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;  // truncates toward zero
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Integer floor(const Rational& q) {
  return floor_div(numerator(q), denominator(q));
}

/// Fractional part in [0, 1).
inline Rational frac(const Rational& q) { return q - Rational(floor(q)); }

/// Parses "p", "-p", "p/q". Throws InputError on anything else.
inline Rational parse_rational(const std::string& text) {
  try {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(Integer(text));
    Integer num(text.substr(0, slash));
    Integer den(text.substr(slash + 1));
    if (den == 0) throw InputError("zero denominator in '" + text + "'");
    return Rational(num, den);
  } catch (const InputError&) {
    throw;
  } catch (const std::exception&) {
    throw InputError("not a rational number: '" + text + "'");
  }
}

inline std::string to_string(const Rational& q) {
  if (is_integral(q)) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

/// Dense row-major matrix over an exact scalar.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw InputError("ragged matrix literal");
      for (const auto& x : row) data_.push_back(x);
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw InputError("matrix shape mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
      }
    return out;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw InputError("matrix shape mismatch");
    Matrix out(a);
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
    return out;
  }

  std::vector<T> apply(const std::vector<T>& x) const {
    if (x.size() != cols_) throw InputError("vector shape mismatch");
    std::vector<T> y(rows_, T(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) y[i] += (*this)(i, j) * x[j];
    return y;
  }

  /// Square submatrix on the given rows and columns.
  Matrix minor_matrix(const std::vector<std::size_t>& rs,
                      const std::vector<std::size_t>& cs) const {
    Matrix m(rs.size(), cs.size());
    for (std::size_t i = 0; i < rs.size(); ++i)
      for (std::size_t j = 0; j < cs.size(); ++j) m(i, j) = (*this)(rs[i], cs[j]);
    return m;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

inline RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
  return out;
}

/// Fraction-free (Bareiss) determinant; exact over the integers.
inline Integer determinant(IntMatrix m) {
  if (m.rows() != m.cols()) throw InputError("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Integer(1);
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return Integer(0);
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

inline Rational determinant(RatMatrix m) {
  if (m.rows() != m.cols()) throw InputError("determinant of non-square matrix");
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m(p, k) == 0) ++p;
    if (p == n) return Rational(0);
    if (p != k) {
      m.swap_rows(k, p);
      det = -det;
    }
    det *= m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m(i, k) == 0) continue;
      Rational factor = m(i, k) / m(k, k);
      for (std::size_t j = k; j < n; ++j) m(i, j) -= factor * m(k, j);
    }
  }
  return det;
}

inline std::optional<RatMatrix> inverse(const RatMatrix& a) {
  if (a.rows() != a.cols()) throw InputError("inverse of non-square matrix");
  const std::size_t n = a.rows();
  RatMatrix m = a;
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m(p, k) == 0) ++p;
    if (p == n) return std::nullopt;
    m.swap_rows(k, p);
    inv.swap_rows(k, p);
    Rational pivot = m(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      m(k, j) /= pivot;
      inv(k, j) /= pivot;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || m(i, k) == 0) continue;
      Rational factor = m(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) -= factor * m(k, j);
        inv(i, j) -= factor * inv(k, j);
      }
    }
  }
  return inv;
}

/// Rank over Q of a list of integer row vectors of equal length.
inline std::size_t rank_of_rows(std::vector<std::vector<Integer>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[rank], rows[p]);
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      Integer a = rows[rank][c];
      Integer b = rows[i][c];
      Integer g = 0;
      for (std::size_t j = c; j < cols; ++j) {
        rows[i][j] = rows[i][j] * a - rows[rank][j] * b;
        g = gcd(g, rows[i][j]);
      }
      if (g > 1)
        for (std::size_t j = c; j < cols; ++j) rows[i][j] /= g;
    }
    ++rank;
  }
  return rank;
}

/// Incrementally maintained row echelon basis over Q for integer vectors;
/// `insert` returns whether the vector enlarged the span.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t dim) : dim_(dim) {}

  bool insert(std::vector<Integer> v) {
    if (v.size() != dim_) throw InputError("echelon basis dimension mismatch");
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const std::size_t c = pivots_[r];
      if (v[c] == 0) continue;
      Integer a = rows_[r][c];
      Integer b = v[c];
      for (std::size_t j = 0; j < dim_; ++j) v[j] = v[j] * a - rows_[r][j] * b;
      normalize(v);
    }
    std::size_t pivot = 0;
    while (pivot < dim_ && v[pivot] == 0) ++pivot;
    if (pivot == dim_) return false;
    rows_.push_back(std::move(v));
    pivots_.push_back(pivot);
    return true;
  }

  std::size_t rank() const { return rows_.size(); }

 private:
  static void normalize(std::vector<Integer>& v) {
    Integer g = 0;
    for (const auto& x : v) g = gcd(g, x);
    if (g > 1)
      for (auto& x : v) x /= g;
  }

  std::size_t dim_;
  std::vector<std::vector<Integer>> rows_;
  std::vector<std::size_t> pivots_;
};

/// Solves columns * c = target over Q. Returns nullopt when target is not in
/// the column span; when the columns are dependent, free variables are 0.
inline std::optional<std::vector<Rational>> solve_in_span(
    const std::vector<std::vector<Integer>>& columns,
    const std::vector<Integer>& target) {
  const std::size_t n = target.size();
  const std::size_t k = columns.size();
  for (const auto& c : columns)
    if (c.size() != n) throw InputError("column length mismatch");
  // Augmented system [C | t], eliminated over Q.
  RatMatrix m(n, k + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) m(i, j) = Rational(columns[j][i]);
    m(i, k) = Rational(target[i]);
  }
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t c = 0; c < k && row < n; ++c) {
    std::size_t p = row;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) continue;
    m.swap_rows(row, p);
    Rational pivot = m(row, c);
    for (std::size_t j = c; j <= k; ++j) m(row, j) /= pivot;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == row || m(i, c) == 0) continue;
      Rational factor = m(i, c);
      for (std::size_t j = c; j <= k; ++j) m(i, j) -= factor * m(row, j);
    }
    pivot_col.push_back(c);
    ++row;
  }
  for (std::size_t i = row; i < n; ++i)
    if (m(i, k) != 0) return std::nullopt;
  std::vector<Rational> coeffs(k, Rational(0));
  for (std::size_t r = 0; r < pivot_col.size(); ++r) coeffs[pivot_col[r]] = m(r, k);
  return coeffs;
}

inline Integer binomial(int n, int k) {
  if (k < 0 || k > n) return Integer(0);
  Integer r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// All k-element subsets of {0, ..., n-1} in lexicographic order.
inline std::vector<std::vector<std::size_t>> k_subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

}  // namespace tropdiag
