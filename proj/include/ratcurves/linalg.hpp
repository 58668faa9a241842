// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ratcurves Authors
#pragma once

#include <array>
#include <utility>
#include <vector>

#include "ratcurves/error.hpp"
#include "ratcurves/rational.hpp"

namespace ratcurves {

/// Dense row-major matrix over Q, sized at construction.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  /// Reduced row echelon form in place; returns the pivot columns.
  std::vector<std::size_t> rref() {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
      std::size_t p = row;
      while (p < rows_ && (*this)(p, col) == 0) ++p;
      if (p == rows_) continue;
      swap_rows(p, row);
      const Rational inv = 1 / (*this)(row, col);
      for (std::size_t c = col; c < cols_; ++c) (*this)(row, c) *= inv;
      for (std::size_t r = 0; r < rows_; ++r) {
        if (r == row || (*this)(r, col) == 0) continue;
        const Rational f = (*this)(r, col);
        for (std::size_t c = col; c < cols_; ++c) (*this)(r, c) -= f * (*this)(row, c);
      }
      pivots.push_back(col);
      ++row;
    }
    return pivots;
  }

  std::size_t rank() const {
    Matrix m = *this;
    return m.rref().size();
  }

  /// Basis of the right null space, one vector per free column.
  std::vector<std::vector<Rational>> kernel() const {
    Matrix m = *this;
    const auto pivots = m.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
      if (is_pivot[free]) continue;
      std::vector<Rational> v(cols_);
      v[free] = 1;
      for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m(i, free);
      basis.push_back(std::move(v));
    }
    return basis;
  }

  Rational determinant() const {
    require(rows_ == cols_, ErrorKind::Domain, "determinant of a non-square matrix");
    Matrix m = *this;
    Rational det(1);
    for (std::size_t col = 0; col < cols_; ++col) {
      std::size_t p = col;
      while (p < rows_ && m(p, col) == 0) ++p;
      if (p == rows_) return 0;
      if (p != col) {
        m.swap_rows(p, col);
        det = -det;
      }
      det *= m(col, col);
      const Rational inv = 1 / m(col, col);
      for (std::size_t r = col + 1; r < rows_; ++r) {
        if (m(r, col) == 0) continue;
        const Rational f = m(r, col) * inv;
        for (std::size_t c = col; c < cols_; ++c) m(r, c) -= f * m(col, c);
      }
    }
    return det;
  }

 private:
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

using Vector3 = std::array<Rational, 3>;

/// 3x3 matrix acting on column vectors.
struct Matrix3 {
  std::array<std::array<Rational, 3>, 3> m{};

  static Matrix3 identity() {
    Matrix3 r;
    for (int i = 0; i < 3; ++i) r.m[i][i] = 1;
    return r;
  }
  static Matrix3 diagonal(const Rational& a, const Rational& b, const Rational& c) {
    Matrix3 r;
    r.m[0][0] = a;
    r.m[1][1] = b;
    r.m[2][2] = c;
    return r;
  }
  /// Matrix whose columns are the given vectors.
  static Matrix3 from_columns(const Vector3& c0, const Vector3& c1, const Vector3& c2) {
    Matrix3 r;
    for (int i = 0; i < 3; ++i) {
      r.m[i][0] = c0[i];
      r.m[i][1] = c1[i];
      r.m[i][2] = c2[i];
    }
    return r;
  }

  Rational determinant() const {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  }

  Matrix3 inverse() const {
    const Rational det = determinant();
    require(det != 0, ErrorKind::SingularMatrix, "matrix is not invertible");
    Matrix3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        const int i1 = (j + 1) % 3, i2 = (j + 2) % 3, j1 = (i + 1) % 3, j2 = (i + 2) % 3;
        r.m[i][j] = (m[i1][j1] * m[i2][j2] - m[i1][j2] * m[i2][j1]) / det;
      }
    return r;
  }

  Vector3 operator*(const Vector3& v) const {
    Vector3 r;
    for (int i = 0; i < 3; ++i) r[i] = m[i][0] * v[0] + m[i][1] * v[1] + m[i][2] * v[2];
    return r;
  }
  friend Matrix3 operator*(const Matrix3& a, const Matrix3& b) {
    Matrix3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r.m[i][j] = a.m[i][0] * b.m[0][j] + a.m[i][1] * b.m[1][j] + a.m[i][2] * b.m[2][j];
    return r;
  }
  friend bool operator==(const Matrix3& a, const Matrix3& b) { return a.m == b.m; }
};

}  // namespace ratcurves
