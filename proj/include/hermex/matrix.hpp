#pragma once

#include "hermex/error.hpp"
#include "hermex/scalar.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace hermex {

/// Dense row-major complex matrix. Zero-sized dimensions are allowed.
template <class T>
class Matrix {
 public:
  using value_type = T;
  using Traits = ScalarTraits<T>;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Traits::zero()) {}

  /// Row-wise literal: Matrix<T>{{1, 0}, {0, 1}}.
  Matrix(std::initializer_list<std::initializer_list<T>> rows) : rows_(rows.size()) {
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix zeros(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Traits::one();
    return m;
  }
  static Matrix diagonal(const std::vector<T>& d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const std::vector<T>& data() const { return data_; }

  Matrix adjoint() const {
    Matrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(j, i) = Traits::conj((*this)(i, j));
    return r;
  }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t h, std::size_t w) const {
    if (r0 + h > rows_ || c0 + w > cols_) throw DimensionMismatch("block out of range");
    Matrix r(h, w);
    for (std::size_t i = 0; i < h; ++i)
      for (std::size_t j = 0; j < w; ++j) r(i, j) = (*this)(r0 + i, c0 + j);
    return r;
  }

  void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw DimensionMismatch("block out of range");
    for (std::size_t i = 0; i < b.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!Traits::is_zero(x)) return false;
    return true;
  }

  Matrix& operator+=(const Matrix& o) {
    require_same_shape(o, "+");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    require_same_shape(o, "-");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Matrix& operator*=(const T& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator-(Matrix a) {
    for (auto& x : a.data_) x = -x;
    return a;
  }
  friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
  friend Matrix operator*(const T& s, Matrix a) { return a *= s; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) {
      throw DimensionMismatch("product of " + a.shape() + " and " + b.shape());
    }
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (Traits::is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
      }
    return r;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

 private:
  void require_same_shape(const Matrix& o, const char* op) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
      throw DimensionMismatch(std::string("operator") + op + " on " + shape() + " and " + o.shape());
    }
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using ExactMatrix = Matrix<Gaussian>;
using FloatMatrix = Matrix<Complex>;

template <class T>
Matrix<T> adj(const Matrix<T>& m) {
  return m.adjoint();
}

/// Converts an exact matrix to the float backend.
inline FloatMatrix to_float(const ExactMatrix& m) {
  FloatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = {m(i, j).real_double(), m(i, j).imag_double()};
  return r;
}

/// Square matrix known to satisfy A = A*. The exact backend checks equality;
/// the float backend accepts entrywise deviations up to `tol` (relative to the
/// largest entry) and stores the Hermitian part.
template <class T>
class Hermitian {
 public:
  Hermitian() = default;
  explicit Hermitian(Matrix<T> m, double tol = 1e-9);

  /// Skips the check; for matrices Hermitian by construction.
  static Hermitian trusted(Matrix<T> m) {
    Hermitian h;
    h.m_ = std::move(m);
    return h;
  }

  const Matrix<T>& matrix() const { return m_; }
  operator const Matrix<T>&() const { return m_; }  // NOLINT(google-explicit-constructor)
  std::size_t size() const { return m_.rows(); }

 private:
  Matrix<T> m_;
};

template <class T>
Hermitian<T>::Hermitian(Matrix<T> m, double tol) {
  using Tr = ScalarTraits<T>;
  if (!m.is_square()) throw NotSquare("Hermitian matrix must be square, got " + m.shape());
  const std::size_t n = m.rows();
  if constexpr (Tr::exact) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j)
        if (!(m(i, j) == Tr::conj(m(j, i)))) {
          throw NotHermitian("entry (" + std::to_string(i) + "," + std::to_string(j) + ") breaks A = A*");
        }
    m_ = std::move(m);
  } else {
    double scale = 0.0;
    for (const auto& x : m.data()) scale = std::max(scale, std::abs(x));
    const double limit = tol * std::max(scale, 1.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        if (std::abs(m(i, j) - std::conj(m(j, i))) > limit) {
          throw NotHermitian("entry (" + std::to_string(i) + "," + std::to_string(j) + ") breaks A = A*");
        }
        const Complex avg = 0.5 * (m(i, j) + std::conj(m(j, i)));
        m(i, j) = avg;
        m(j, i) = std::conj(avg);
      }
    m_ = std::move(m);
  }
}

}  // namespace hermex
