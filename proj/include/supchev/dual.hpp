#pragma once

#include "supchev/grassmann.hpp"

namespace supchev {

/// Dual-number extension R[eps], eps even with eps^2 = 0.
/// An element is v + eps*d.
template <class R>
struct Dual {
  R v{}, d{};

  Dual() = default;
  Dual(const R& v_) : v(v_) {}
  Dual(const R& v_, const R& d_) : v(v_), d(d_) {}

  bool is_zero() const { return v.is_zero() && d.is_zero(); }

  Dual operator-() const { return {-v, -d}; }
  Dual& operator+=(const Dual& o) { v += o.v; d += o.d; return *this; }
  Dual& operator-=(const Dual& o) { v -= o.v; d -= o.d; return *this; }
  friend Dual operator+(Dual x, const Dual& y) { return x += y; }
  friend Dual operator-(Dual x, const Dual& y) { return x -= y; }
  friend Dual operator*(const Dual& x, const Dual& y) {
    return {x.v * y.v, x.v * y.d + x.d * y.v};
  }
  Dual& operator*=(const Dual& o) { return *this = *this * o; }
  friend bool operator==(const Dual& x, const Dual& y) { return x.v == y.v && x.d == y.d; }
  friend bool operator!=(const Dual& x, const Dual& y) { return !(x == y); }
};

using DualGrassmann = Dual<GrassmannElem>;

} // namespace supchev
