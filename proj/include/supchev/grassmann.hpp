#pragma once

#include "supchev/scalar.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace supchev {

/// Coefficient ring descriptor: the Grassmann algebra Lambda_N on `n_gens`
/// odd generators t1..tN, optionally truncated so that every term of odd
/// degree > `trunc` vanishes (trunc = n_gens means no truncation; trunc = 1
/// models rings with A1^2 = 0).
struct GrRing {
  int n_gens = 0;
  int trunc = -1; // -1: no truncation
  int degree_cap() const { return trunc < 0 ? n_gens : trunc; }
  friend bool operator==(const GrRing&, const GrRing&) = default;
};

/// Element of a Grassmann algebra over Scalar coefficients.  Terms map a
/// generator subset (bitmask, ascending canonical order) to a nonzero
/// Scalar.  A default-constructed element is the zero of every ring
/// (wildcard); any nonzero element knows its ring.
class GrassmannElem {
public:
  GrassmannElem() = default;
  explicit GrassmannElem(GrRing ring) : ring_(ring) {}
  GrassmannElem(GrRing ring, const Scalar& body) : ring_(ring) {
    if (!body.is_zero()) terms_[0] = body;
  }

  static GrassmannElem zero(GrRing r) { return GrassmannElem(r); }
  static GrassmannElem one(GrRing r) { return GrassmannElem(r, Scalar(1)); }
  static GrassmannElem theta(GrRing r, int i); // generator t_i, 1-based

  const GrRing& ring() const { return ring_; }
  bool ring_known() const { return ring_.n_gens > 0 || !terms_.empty(); }
  const std::map<std::uint64_t, Scalar>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  Scalar body() const {
    auto it = terms_.find(0);
    return it == terms_.end() ? Scalar() : it->second;
  }
  GrassmannElem soul() const {
    GrassmannElem s(ring_);
    for (auto& [m, c] : terms_) if (m != 0) s.terms_[m] = c;
    return s;
  }
  bool is_unit() const { return !body().is_zero(); }

  /// -1 if not homogeneous, else 0 (even) or 1 (odd).
  int parity() const;
  bool is_even() const;
  bool is_odd() const { return is_zero() || parity() == 1; }

  /// Sum of terms whose subset has exactly k generators.
  GrassmannElem graded_part(int k) const;
  int max_degree() const;

  GrassmannElem operator-() const;
  GrassmannElem& operator+=(const GrassmannElem& o);
  GrassmannElem& operator-=(const GrassmannElem& o);
  friend GrassmannElem operator+(GrassmannElem x, const GrassmannElem& y) { return x += y; }
  friend GrassmannElem operator-(GrassmannElem x, const GrassmannElem& y) { return x -= y; }
  friend GrassmannElem operator*(const GrassmannElem& x, const GrassmannElem& y);
  GrassmannElem& operator*=(const GrassmannElem& o) { return *this = *this * o; }
  friend GrassmannElem operator*(const Scalar& c, const GrassmannElem& x);

  /// Inverse of a unit (finite geometric series on the nilpotent soul).
  /// Works for any element with invertible body.
  GrassmannElem inv_any() const;
  /// Spec-facing inverse: requires an even unit.
  GrassmannElem inv() const;
  GrassmannElem pow(const BigInt& k) const;

  friend bool operator==(const GrassmannElem& x, const GrassmannElem& y) {
    return x.terms_ == y.terms_;
  }
  friend bool operator!=(const GrassmannElem& x, const GrassmannElem& y) { return !(x == y); }

  std::string str() const;

private:
  void set(std::uint64_t mask, const Scalar& c) {
    if (c.is_zero()) terms_.erase(mask); else terms_[mask] = c;
  }
  void add_term(std::uint64_t mask, const Scalar& c);
  GrRing join(const GrassmannElem& o) const;

  GrRing ring_{0, -1};
  std::map<std::uint64_t, Scalar> terms_;
};

/// Sign of merging two ascending generator subsets, 0 if they intersect.
int blade_merge_sign(std::uint64_t a, std::uint64_t b);

} // namespace supchev
