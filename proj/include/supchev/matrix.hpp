#pragma once

#include "supchev/dual.hpp"

#include <vector>

namespace supchev {

// Ring glue for the generic matrix: zero tests and unit inverses.
inline bool ring_is_zero(const Scalar& x) { return x.is_zero(); }
inline bool ring_is_unit(const Scalar& x) { return !x.is_zero(); }
inline Scalar ring_inv(const Scalar& x) { return x.inv(); }
inline bool ring_is_zero(const Rational& x) { return x == 0; }
inline bool ring_is_unit(const Rational& x) { return x != 0; }
inline Rational ring_inv(const Rational& x) { return Rational(1) / x; }
inline bool ring_is_zero(const GrassmannElem& x) { return x.is_zero(); }
inline bool ring_is_unit(const GrassmannElem& x) { return x.is_unit(); }
inline GrassmannElem ring_inv(const GrassmannElem& x) { return x.inv_any(); }
inline bool ring_is_zero(const DualGrassmann& x) { return x.is_zero(); }
inline bool ring_is_unit(const DualGrassmann& x) { return x.v.is_unit(); }
inline DualGrassmann ring_inv(const DualGrassmann& x) {
  GrassmannElem vi = x.v.inv_any();
  return {vi, -(vi * x.d * vi)};
}

/// Dense matrix over an exact ring (value semantics, immutable use).
template <class T>
class Matrix {
public:
  Matrix() : r_(0), c_(0) {}
  Matrix(int rows, int cols) : r_(rows), c_(cols), e_(size_t(rows) * cols) {}

  static Matrix identity(int n, const T& one) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  int rows() const { return r_; }
  int cols() const { return c_; }
  T& operator()(int i, int j) { return e_[size_t(i) * c_ + j]; }
  const T& operator()(int i, int j) const { return e_[size_t(i) * c_ + j]; }

  bool is_zero() const {
    for (auto& x : e_) if (!ring_is_zero(x)) return false;
    return true;
  }

  Matrix operator-() const {
    Matrix m(r_, c_);
    for (size_t k = 0; k < e_.size(); ++k) m.e_[k] = -e_[k];
    return m;
  }
  Matrix& operator+=(const Matrix& o) {
    check_same(o);
    for (size_t k = 0; k < e_.size(); ++k) e_[k] += o.e_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same(o);
    for (size_t k = 0; k < e_.size(); ++k) e_[k] -= o.e_[k];
    return *this;
  }
  friend Matrix operator+(Matrix x, const Matrix& y) { return x += y; }
  friend Matrix operator-(Matrix x, const Matrix& y) { return x -= y; }
  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.c_ != y.r_) throw std::domain_error("Matrix: size mismatch");
    Matrix m(x.r_, y.c_);
    for (int i = 0; i < x.r_; ++i)
      for (int k = 0; k < x.c_; ++k) {
        const T& a = x(i, k);
        if (ring_is_zero(a)) continue;
        for (int j = 0; j < y.c_; ++j) {
          const T& b = y(k, j);
          if (ring_is_zero(b)) continue;
          m(i, j) += a * b;
        }
      }
    return m;
  }
  friend Matrix operator*(const T& c, const Matrix& x) {
    Matrix m(x.r_, x.c_);
    for (size_t k = 0; k < x.e_.size(); ++k) m.e_[k] = c * x.e_[k];
    return m;
  }
  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.r_ == y.r_ && x.c_ == y.c_ && x.e_ == y.e_;
  }
  friend bool operator!=(const Matrix& x, const Matrix& y) { return !(x == y); }

  /// Gaussian inverse; pivots must be ring units (for Grassmann entries,
  /// body-invertible). Throws if the matrix is singular over the ring.
  Matrix inverse(const T& one) const {
    if (r_ != c_) throw std::domain_error("Matrix: inverse of non-square");
    Matrix a = *this, inv = identity(r_, one);
    for (int col = 0; col < c_; ++col) {
      int piv = -1;
      for (int i = col; i < r_; ++i)
        if (ring_is_unit(a(i, col))) { piv = i; break; }
      if (piv < 0) throw std::domain_error("Matrix: singular (no unit pivot)");
      if (piv != col)
        for (int j = 0; j < c_; ++j) {
          std::swap(a(piv, j), a(col, j));
          std::swap(inv(piv, j), inv(col, j));
        }
      T pi = ring_inv(a(col, col));
      for (int j = 0; j < c_; ++j) { a(col, j) = pi * a(col, j); inv(col, j) = pi * inv(col, j); }
      for (int i = 0; i < r_; ++i) {
        if (i == col || ring_is_zero(a(i, col))) continue;
        T f = a(i, col);
        for (int j = 0; j < c_; ++j) {
          a(i, j) -= f * a(col, j);
          inv(i, j) -= f * inv(col, j);
        }
      }
    }
    return inv;
  }

  Matrix<T> power(long n, const T& one) const {
    Matrix m = identity(r_, one), b = *this;
    while (n > 0) {
      if (n & 1) m = m * b;
      b = b * b;
      n >>= 1;
    }
    return m;
  }

private:
  void check_same(const Matrix& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw std::domain_error("Matrix: size mismatch");
  }
  int r_, c_;
  std::vector<T> e_;
};

using QMatrix = Matrix<Scalar>;

} // namespace supchev
