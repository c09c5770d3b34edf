#pragma once

#include "supchev/lattice.hpp"

#include <random>

namespace supchev {

using GrMatrix = Matrix<GrassmannElem>;
using DualMatrix = Matrix<DualGrassmann>;

/// One-parameter generator of the Chevalley supergroup over a Grassmann
/// coefficient ring: x_alpha(t), x_beta(theta), x_gamma(t, theta) for the
/// 1|1 type (2 gamma a root), or a torus element h_H(t).
struct GroupGenerator {
  enum class Kind { Even, OddFree, OddSquare, Torus } kind;
  int root = -1;               // Even / OddFree / OddSquare
  std::vector<BigInt> H;       // Torus: coordinates over H_1..H_l
  GrassmannElem t;             // Even: parameter; OddSquare: even part; Torus: unit
  GrassmannElem theta;         // OddFree/OddSquare: odd parameter

  static GroupGenerator even(int root, GrassmannElem t);
  static GroupGenerator odd_free(int root, GrassmannElem theta);
  static GroupGenerator odd_square(int root, GrassmannElem t, GrassmannElem theta);
  static GroupGenerator torus(std::vector<BigInt> H, GrassmannElem t);
  GroupGenerator inverse() const;
};

struct GroupWord {
  std::vector<GroupGenerator> g;
  GroupWord reversed_inverses() const;
};

/// Unique big-cell coordinates of a group element:
/// g = g0 * prod_{negative odd, ordered}(1 + theta X) * prod_{positive odd}.
struct NormalForm {
  GrMatrix g0;
  std::map<int, GrassmannElem> theta_minus, theta_plus; // root index -> odd parameter
};

/// Matrix of theta (x) X over A (x) M: odd operators pick up the super sign
/// twist on odd-parity columns.
GrMatrix odd_twisted(const GrassmannElem& theta, const QMatrix& x,
                     const std::vector<int>& row_parity);
GrMatrix scalar_lift(const QMatrix& x, GrRing ring);

class Supergroup {
public:
  Supergroup(const ModuleRep& mod, GrRing ring) : mod_(mod), ring_(ring) {}

  const ModuleRep& module() const { return mod_; }
  const ChevalleyBasis& basis() const { return *mod_.cb; }
  GrRing ring() const { return ring_; }

  GrMatrix gen_to_matrix(const GroupGenerator& g) const;
  GrMatrix word_to_matrix(const GroupWord& w) const;
  GrMatrix identity() const;

  /// ad-chain along the alpha-string: (ad X_alpha)^s (X_rho) / s! =
  /// chain_s X_{rho + s alpha}; returns the (root, coefficient) list, s >= 0.
  std::vector<std::pair<int, BigInt>> ad_chain(int alpha, int rho) const;

  struct CommutatorResult {
    GroupWord predicted;
    GrMatrix predicted_matrix;
    GrMatrix direct;
    bool equal = false;
  };
  /// Closed-form commutator of two one-parameter generators plus the direct
  /// matrix (g1, g2) = g1 g2 g1^-1 g2^-1.
  CommutatorResult commutator(const GroupGenerator& g1, const GroupGenerator& g2) const;

  /// Big-cell factorization by word rewriting: even and torus factors are
  /// flushed left, odd factors are sorted with commutator corrections.  The
  /// result is verified against the word matrix.
  NormalForm factorize(const GroupWord& w) const;

  /// Independent second method: recover the odd coordinates of a group
  /// element by peeling Grassmann degrees through the A1-filtration.
  /// Throws if the element does not factor over this ring.
  NormalForm extract_odd_coordinates(const GrMatrix& g) const;

  GrMatrix normal_form_matrix(const NormalForm& nf) const;

  struct SemidirectReport {
    long pairs_checked = 0;
    bool odd_commute = true;
    bool minus_plus_swap = true;
    bool conj_preserves_odd = true;
    bool ok() const { return odd_commute && minus_plus_swap && conj_preserves_odd; }
  };
  /// Degenerate-ring checks: requires a coefficient ring with A1^2 = 0
  /// (truncation degree 1), where the odd part becomes abelian.
  SemidirectReport semidirect_check(std::uint64_t seed, int samples = 30) const;

  struct LieFunctorReport {
    long kernel_checked = 0, brackets_checked = 0;
    bool kernel_ok = true, brackets_ok = true;
    bool ok() const { return kernel_ok && brackets_ok; }
  };
  /// Over the dual-number extension: generators land in ker G(p), and
  /// Ad(1 + eps a)(b) = b + eps [a, b] reproduces the structure constants.
  LieFunctorReport lie_functor() const;

private:
  const ModuleRep& mod_;
  GrRing ring_;
  // phase helpers for factorize
  std::vector<GroupGenerator> conjugate_odd_by_even(const GroupGenerator& odd,
                                                    const GroupGenerator& ev) const;
};

/// Deterministic random data for the randomized suites.
GrassmannElem random_soul_odd(std::mt19937_64& rng, GrRing ring);
GrassmannElem random_even_param(std::mt19937_64& rng, GrRing ring);
GrassmannElem random_unit(std::mt19937_64& rng, GrRing ring);
GroupWord random_word(std::mt19937_64& rng, const ChevalleyBasis& cb, GrRing ring, int len);

} // namespace supchev
