// Copyright 2026 The cubicplane Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CUBICPLANE_LINALG_HPP
#define CUBICPLANE_LINALG_HPP

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cubicplane/scalar.hpp"

namespace cubicplane {

/// Dense row-major matrix over any exact field type F (Scalar, Quad<...>).
template <class F>
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, const F& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix from_rows(const std::vector<std::vector<F>>& rows) {
    if (rows.empty() || rows[0].empty()) throw std::invalid_argument("empty matrix");
    Matrix m(rows.size(), rows[0].size(), rows[0][0]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != m.cols_) throw std::invalid_argument("ragged matrix");
      for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  F& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const F& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if (!((*this)(i, j) == (*this)(j, i))) return false;
    return true;
  }

  std::vector<F> apply(const std::vector<F>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("dimension mismatch");
    std::vector<F> out(rows_, zero_like(data_[0]));
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out[r] = out[r] + (*this)(r, c) * v[c];
    return out;
  }

  Matrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
    Matrix m(rows.size(), cols.size(), data_[0]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j) m(i, j) = (*this)(rows[i], cols[j]);
    return m;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<F> data_;
};

using ScalarMatrix = Matrix<Scalar>;

template <class F>
struct Echelon {
  Matrix<F> rref;
  std::vector<std::size_t> pivot_cols;
  /// Product of pivots times the sign of the row permutation; the
  /// determinant for square full-rank input.
  F det;
};

/// Reduced row echelon form by Gauss-Jordan elimination.
template <class F>
Echelon<F> row_reduce(Matrix<F> m) {
  const F zero = zero_like(m(0, 0));
  F det = one_like(m(0, 0));
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && is_zero(m(sel, col))) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(sel, c), m(row, c));
      det = -det;
    }
    F pivot = m(row, col);
    det = det * pivot;
    F inv = pivot.inverse();
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) = m(row, c) * inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || is_zero(m(r, col))) continue;
      F factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) = m(r, c) - factor * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  if (m.rows() != m.cols() || pivots.size() != m.rows()) det = zero;
  return Echelon<F>{std::move(m), std::move(pivots), det};
}

template <class F>
std::size_t rank(const Matrix<F>& m) {
  return row_reduce(m).pivot_cols.size();
}

template <class F>
F determinant(const Matrix<F>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  return row_reduce(m).det;
}

/// Basis of the right kernel, one vector per free column of the RREF, with
/// a 1 in that column. Deterministic for a given matrix.
template <class F>
std::vector<std::vector<F>> kernel_basis(const Matrix<F>& m) {
  Echelon<F> e = row_reduce(m);
  const F zero = zero_like(m(0, 0));
  const F one = one_like(m(0, 0));
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<F>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<F> v(m.cols(), zero);
    v[free] = one;
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) v[e.pivot_cols[i]] = -e.rref(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

struct KernelRankDet {
  int rank;
  Scalar det;
  std::vector<std::vector<Scalar>> kernel;
};

KernelRankDet kernel_rank_det(const ScalarMatrix& m);

}  // namespace cubicplane

#endif  // CUBICPLANE_LINALG_HPP
