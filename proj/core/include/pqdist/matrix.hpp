#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "pqdist/errors.hpp"
#include "pqdist/rational.hpp"

namespace pqdist {

/// Dense row-major matrix over a ring T.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, const T& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_symmetric() const {
    if (!square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  /// Principal submatrix on the given index list.
  Matrix principal(const std::vector<std::size_t>& idx) const {
    Matrix s(idx.size(), idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = 0; j < idx.size(); ++j) s(i, j) = (*this)(idx[i], idx[j]);
    return s;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    check_same(a, b);
    Matrix c = a;
    for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] += b.data_[k];
    return c;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    check_same(a, b);
    Matrix c = a;
    for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] -= b.data_[k];
    return c;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DomainError("matrix shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& x = a(i, k);
        if (x == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += x * b(k, j);
      }
    return c;
  }
  friend Matrix operator*(const T& s, const Matrix& a) {
    Matrix c = a;
    for (auto& x : c.data_) x *= s;
    return c;
  }
  Matrix operator-() const {
    Matrix c = *this;
    for (auto& x : c.data_) x = -x;
    return c;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::vector<T> apply(const std::vector<T>& v) const {
    if (v.size() != cols_) throw DomainError("vector length mismatch");
    std::vector<T> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
  }

 private:
  static void check_same(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("matrix shape mismatch");
  }
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;
using IntegerMatrix = Matrix<Integer>;

/// Characteristic polynomial det(xI - A) by Berkowitz's division-free
/// recurrence; coefficients lowest degree first.
template <typename T>
std::vector<T> berkowitz(const Matrix<T>& a) {
  const std::size_t n = a.rows();
  if (!a.square()) throw DomainError("characteristic polynomial of non-square matrix");
  // c holds coefficients highest degree first.
  std::vector<T> c{T(1)};
  for (std::size_t r = 0; r < n; ++r) {
    // Toeplitz column: 1, -a_rr, -R S, -R A S, ..., -R A^{r-1} S
    std::vector<T> t(r + 2);
    t[0] = T(1);
    t[1] = -a(r, r);
    std::vector<T> s(r);
    for (std::size_t i = 0; i < r; ++i) s[i] = a(i, r);
    for (std::size_t k = 0; k < r; ++k) {
      T acc = T(0);
      for (std::size_t j = 0; j < r; ++j) acc += a(r, j) * s[j];
      t[k + 2] = -acc;
      if (k + 1 < r) {
        std::vector<T> ns(r);
        for (std::size_t i = 0; i < r; ++i) {
          T v = T(0);
          for (std::size_t j = 0; j < r; ++j) v += a(i, j) * s[j];
          ns[i] = v;
        }
        s.swap(ns);
      }
    }
    std::vector<T> next(r + 2);
    for (std::size_t i = 0; i < r + 2; ++i) {
      T acc = T(0);
      for (std::size_t j = 0; j <= std::min(i, r); ++j) acc += t[i - j] * c[j];
      next[i] = acc;
    }
    c.swap(next);
  }
  std::vector<T> low(c.rbegin(), c.rend());
  return low;
}

}  // namespace pqdist
