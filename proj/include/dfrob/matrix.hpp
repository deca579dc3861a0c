/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The dfrob Authors
 */
#pragma once

#include "dfrob/error.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace dfrob {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;
using IndexSet = std::vector<std::size_t>;

/// Dense row-major matrix over an exact ring. Zero-sized shapes are allowed so
/// that degenerate reductions (no extra rows, no free variables) stay uniform.
template <class T> class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto &row : init) {
      if (row.size() != cols_)
        throw Error(ErrorCode::Dimension, "ragged matrix initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      m(i, i) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return data_.empty(); }

  T &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T &operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const T> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }

  std::vector<T> column(std::size_t j) const {
    std::vector<T> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      c[i] = (*this)(i, j);
    return c;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b)
      return;
    for (std::size_t j = 0; j < cols_; ++j)
      std::swap((*this)(a, j), (*this)(b, j));
  }

  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b)
      return;
    for (std::size_t i = 0; i < rows_; ++i)
      std::swap((*this)(i, a), (*this)(i, b));
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix select_rows(std::span<const std::size_t> idx) const {
    Matrix s(idx.size(), cols_);
    for (std::size_t r = 0; r < idx.size(); ++r)
      for (std::size_t j = 0; j < cols_; ++j)
        s(r, j) = (*this)(idx[r], j);
    return s;
  }

  Matrix select_cols(std::span<const std::size_t> idx) const {
    Matrix s(rows_, idx.size());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t c = 0; c < idx.size(); ++c)
        s(i, c) = (*this)(i, idx[c]);
    return s;
  }

  Matrix submatrix(std::span<const std::size_t> r,
                   std::span<const std::size_t> c) const {
    Matrix s(r.size(), c.size());
    for (std::size_t i = 0; i < r.size(); ++i)
      for (std::size_t j = 0; j < c.size(); ++j)
        s(i, j) = (*this)(r[i], c[j]);
    return s;
  }

  /// Stack `below` under this matrix.
  Matrix stack(const Matrix &below) const {
    if (below.cols_ != cols_ && !below.empty() && !empty())
      throw Error(ErrorCode::Dimension, "stack: column mismatch");
    Matrix s(rows_ + below.rows_, empty() ? below.cols_ : cols_);
    std::copy(data_.begin(), data_.end(), s.data_.begin());
    std::copy(below.data_.begin(), below.data_.end(),
              s.data_.begin() + data_.size());
    return s;
  }

  bool is_zero() const {
    for (const auto &v : data_)
      if (v != 0)
        return false;
    return true;
  }

  friend bool operator==(const Matrix &a, const Matrix &b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::span<const T> values() const { return data_; }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

template <class T>
Matrix<T> operator*(const Matrix<T> &a, const Matrix<T> &b) {
  if (a.cols() != b.rows())
    throw Error(ErrorCode::Dimension, "matrix product shape mismatch");
  Matrix<T> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0)
        continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

template <class T>
std::vector<T> operator*(const Matrix<T> &a, const std::vector<T> &x) {
  if (a.cols() != x.size())
    throw Error(ErrorCode::Dimension, "matrix-vector shape mismatch");
  std::vector<T> y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      y[i] += a(i, j) * x[j];
  return y;
}

RatMatrix to_rational(const IntMatrix &m);
RatVector to_rational(const IntVector &v);

/// num/den in lowest terms. den must be nonzero.
inline Rational fraction(const Integer &num, const Integer &den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Floor/ceil of an exact rational.
Integer floor(const Rational &q);
Integer ceil(const Rational &q);
bool is_integral(const Rational &q);
bool is_integral(const RatVector &v);

/// Rational vector to integer, throws Precondition if any entry is fractional.
IntVector to_integer(const RatVector &v);

/// Least common multiple of all denominators.
Integer common_denominator(const RatMatrix &m);

std::string to_string(const Integer &v);
std::string to_string(const Rational &v);

template <class T> std::ostream &operator<<(std::ostream &os, const Matrix<T> &m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j)
      os << (j ? " " : "") << m(i, j);
    os << '\n';
  }
  return os;
}

} // namespace dfrob
