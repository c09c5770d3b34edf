#pragma once

#include "supchev/superalg.hpp"

#include <algorithm>
#include <optional>

namespace supchev {

/// One factor of a PBW-like monomial: a divided power X_alpha^(n) of an even
/// root vector, a binomial (H_i - z choose n) in a Cartan basis element, or a
/// single odd root vector X_gamma.
struct KFactor {
  enum class Kind { DivPow, CartanBin, Odd } kind;
  int idx = 0;   // root index (DivPow/Odd) or Cartan index (CartanBin)
  long n = 1;    // exponent / binomial degree, >= 1
  BigInt z = 0;  // shift, CartanBin only; 0 in normal form

  static KFactor divpow(int root, long n) { return {Kind::DivPow, root, n, 0}; }
  static KFactor cartan(int i, long n, BigInt z = 0) { return {Kind::CartanBin, i, n, std::move(z)}; }
  static KFactor odd(int root) { return {Kind::Odd, root, 1, 0}; }
  friend bool operator==(const KFactor& a, const KFactor& b) {
    return a.kind == b.kind && a.idx == b.idx && a.n == b.n && a.z == b.z;
  }
  friend bool operator<(const KFactor& a, const KFactor& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    if (a.idx != b.idx) return a.idx < b.idx;
    if (a.n != b.n) return a.n < b.n;
    return a.z < b.z;
  }
};

struct KMonomial {
  std::vector<KFactor> f;
  long ht() const;   // paper height: divided-power exponents + odd count
  long deg() const;  // ht plus Cartan binomial degrees
  long fac() const { return long(f.size()); }
  friend bool operator==(const KMonomial& a, const KMonomial& b) { return a.f == b.f; }
  friend bool operator<(const KMonomial& a, const KMonomial& b) {
    return std::lexicographical_compare(a.f.begin(), a.f.end(), b.f.begin(), b.f.end());
  }
};

/// Finite Q-linear combination of monomials.
struct KElement {
  std::map<KMonomial, Rational> t;

  static KElement zero() { return {}; }
  static KElement one() { return unit(KMonomial{}, 1); }
  static KElement unit(KMonomial m, Rational c);

  void add(const KMonomial& m, const Rational& c);
  KElement& operator+=(const KElement& o);
  KElement& operator-=(const KElement& o);
  friend KElement operator+(KElement a, const KElement& b) { return a += b; }
  friend KElement operator-(KElement a, const KElement& b) { return a -= b; }
  friend KElement operator*(const Rational& c, const KElement& x);
  friend bool operator==(const KElement&, const KElement&) = default;
};

/// Rational PBW form: ordered monomials with plain powers of basis letters
/// (letters are ChevalleyBasis indices), exponents collected.
struct OracleElement {
  std::map<std::vector<std::pair<int, long>>, Rational> t;
  friend bool operator==(const OracleElement&, const OracleElement&) = default;
};

struct NormStats {
  long moves = 0;
  long splices = 0, odd_squares = 0, cartan_merges = 0, swaps = 0, shift_elims = 0;
  long oracle_reorders = 0; // oracle-backed even-even reorders
  bool measure_violated = false;
};

/// The Kostant Z-form machinery over a fixed Chevalley basis: rewriting to
/// the ordered PBW-like normal form, the independent rational straightening
/// oracle, and basis enumeration.
class Kostant {
public:
  explicit Kostant(const ChevalleyBasis& cb) : cb_(cb) {}

  const ChevalleyBasis& basis() const { return cb_; }

  bool is_normal(const KMonomial& m) const;
  bool is_normal(const KElement& e) const;

  /// Rewrite to the ordered PBW-like normal form.  Every rewriting move
  /// strictly decreases the (ht, fac, inv, #shifted) measure; a violation
  /// throws (and is recorded in stats).
  KElement normalize(const KElement& e, NormStats* stats = nullptr) const;

  KElement multiply(const KElement& a, const KElement& b, NormStats* stats = nullptr) const;

  /// (H_i - z choose n) as a Z-combination of unshifted (H_i choose k).
  KElement binomial_shift_expand(int i, const BigInt& z, long n) const;

  /// Expand divided powers and Cartan binomials over Q and straighten using
  /// only the super-bracket; never touches the Kostant rules.
  OracleElement oracle_straighten(const KElement& e) const;

  /// True iff every coefficient is an integer; otherwise the first offender.
  std::optional<KMonomial> integrality_witness(const KElement& e) const;

  /// All normal monomials of total degree <= bound (divided-power exponents
  /// + Cartan binomial degrees + odd factors).
  std::vector<KMonomial> enumerate_basis(long bound) const;

  /// Order key of a factor in the fixed total order.
  long order_key(const KFactor& f) const;

  std::string factor_str(const KFactor& f) const;
  std::string monomial_str(const KMonomial& m) const;
  std::string element_str(const KElement& e) const;

private:
  const ChevalleyBasis& cb_;

  // (H-combination - z choose n) expanded over products of (H_i choose k)
  KElement cartan_combination_binomial(const std::vector<long>& hcoords, const BigInt& z,
                                       long n) const;
  OracleElement straighten_plain(const std::vector<int>& letters, const Rational& coeff) const;
  KElement recollect(const OracleElement& o) const;
};

} // namespace supchev
