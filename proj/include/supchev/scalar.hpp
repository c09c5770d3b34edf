#pragma once

#include "supchev/rational.hpp"

namespace supchev {

/// Exact element of Q or Q(sqrt(d)), value a + b*sqrt(d).
/// d = 0 means plain Q; only d in {0, 2} is supported (d = 2 is what the
/// type-B matrix bases need).  Values with b = 0 are normalized to d = 0,
/// so plain rationals mix freely with any extension; two values with
/// distinct nonzero discriminants refuse to combine.
class Scalar {
public:
  Scalar() : a_(0), b_(0), d_(0) {}
  Scalar(long v) : a_(v), b_(0), d_(0) {}
  Scalar(const BigInt& v) : a_(v), b_(0), d_(0) {}
  Scalar(const Rational& v) : a_(v), b_(0), d_(0) {}
  Scalar(const Rational& a, const Rational& b, int d) : a_(a), b_(b), d_(d) {
    if (d != 0 && d != 2) throw std::domain_error("Scalar: unsupported discriminant");
    normalize();
  }

  static Scalar sqrt2() { return Scalar(0, 1, 2); }

  const Rational& rat() const { return a_; }
  const Rational& irr() const { return b_; }
  int disc() const { return d_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_rational() const { return b_ == 0; }
  bool is_integer() const { return b_ == 0 && supchev::is_integer(a_); }

  Scalar operator-() const { return Scalar(-a_, -b_, d_); }

  Scalar& operator+=(const Scalar& o) {
    int d = join(o);
    a_ += o.a_; b_ += o.b_; d_ = d; normalize(); return *this;
  }
  Scalar& operator-=(const Scalar& o) { return *this += -o; }
  Scalar& operator*=(const Scalar& o) {
    int d = join(o);
    Rational a = a_ * o.a_ + b_ * o.b_ * d;
    Rational b = a_ * o.b_ + b_ * o.a_;
    a_ = a; b_ = b; d_ = d; normalize(); return *this;
  }
  Scalar inv() const {
    if (is_zero()) throw std::domain_error("Scalar: division by zero");
    // (a + b s)^-1 = (a - b s) / (a^2 - d b^2); the norm is nonzero since
    // sqrt(d) is irrational for d = 2.
    Rational n = a_ * a_ - Rational(d_) * b_ * b_;
    return Scalar(a_ / n, -b_ / n, d_);
  }
  Scalar& operator/=(const Scalar& o) { return *this *= o.inv(); }

  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }
  friend bool operator==(const Scalar& x, const Scalar& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_ == 0 || x.d_ == y.d_);
  }
  friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }
  friend bool operator<(const Scalar& x, const Scalar& y) {
    if (x.a_ != y.a_) return x.a_ < y.a_;
    if (x.b_ != y.b_) return x.b_ < y.b_;
    return x.d_ < y.d_;
  }

  std::string str() const;

private:
  void normalize() { if (b_ == 0) d_ = 0; }
  int join(const Scalar& o) const {
    if (d_ != 0 && o.d_ != 0 && d_ != o.d_)
      throw std::domain_error("Scalar: mixed discriminants");
    return d_ != 0 ? d_ : o.d_;
  }
  Rational a_, b_;
  int d_;
};

} // namespace supchev
