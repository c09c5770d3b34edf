#pragma once

#include "supchev/linalg.hpp"

#include <string>
#include <vector>

namespace supchev {

enum class Parity { even, odd };

/// Supported families.  SL(m|n) with m != n; OSP(M|2n) with M >= 1, n >= 1;
/// P(n) with n >= 2, n != 3; D21A(a) with integer a not in {0, -1}.
struct Family {
  enum class Tag { SL, OSP, P, D21A } tag;
  int m = 0, n = 0;   // SL: (m, n); OSP: M = m, n delta-pairs; P: n
  long a = 0;         // D21A parameter
  std::string str() const;
  static Family sl(int m, int n);
  static Family osp(int M, int twoN);
  static Family p(int n);
  static Family d21a(long a);
  static Family parse(const std::string& s); // grammar: sl(m|n) osp(M|2n) P(n) D(2,1;a)
  friend bool operator==(const Family&, const Family&) = default;
};

struct Root {
  std::vector<long> coords;  // eps coords first, then delta (or alpha-basis for D21A)
  Parity parity;
  bool positive;
  std::vector<long> hvals;   // values on the Cartan basis H_1..H_l (canonical key)
  std::string label;         // a<k> for even, g<k> for odd, in the fixed order
};

/// Finite root-system combinatorics of one family instance.
///
/// Roots are stored in the fixed total order of the artifact:
/// even negatives, even positives, odd negatives, odd positives, each block
/// ordered lexicographically by coordinate vector.  The PBW order on
/// Delta u {1..l} places the Cartan indices between the even and odd blocks.
class RootDatum {
public:
  static RootDatum build(const Family& f);

  const Family& family() const { return fam_; }
  int rank() const { return rank_; }
  int matrix_size() const { return msize_; } // defining-rep size, 0 for D21A
  const std::vector<Root>& roots() const { return roots_; }
  const Root& root(int idx) const { return roots_[idx]; }
  int n_even() const { return n_even_; }
  int n_odd() const { return int(roots_.size()) - n_even_; }

  /// Index of the root with the given Cartan values, or -1.
  int index_of_hvals(const std::vector<long>& hvals) const;
  int index_of_coords(const std::vector<long>& coords) const;
  int negative_of(int idx) const;            // index of -alpha, or -1
  int sum_index(int i, int j) const;         // index of alpha_i + alpha_j, or -1
  bool sum_is_zero(int i, int j) const;      // alpha_i + alpha_j = 0 as functionals
  int index_of_label(const std::string& label) const;

  /// Coroot H_alpha in Cartan-basis coordinates; defined on Delta n (-Delta).
  bool has_coroot(int idx) const { return !coroots_[idx].empty(); }
  const std::vector<long>& coroot(int idx) const;

  /// alpha(H) for H given in Cartan-basis coordinates.
  BigInt eval(int root_idx, const std::vector<BigInt>& H) const;
  long eval_on_basis(int root_idx, int i) const { return roots_[root_idx].hvals[i]; }

  int sigma(int idx) const { // sign of [X_alpha, X_-alpha] = sigma H_alpha
    const Root& r = roots_[idx];
    return (r.parity == Parity::odd && !r.positive) ? -1 : 1;
  }

  /// alpha-string through beta: the largest r, q with beta + j alpha in
  /// Delta u {0} for -r <= j <= q.
  std::pair<int, int> alpha_string(int alpha, int beta) const;

  /// PBW total order key on Delta u {1..l}: even roots < Cartan < odd roots.
  /// Cartan index i is passed as root_idx = -1, cartan = i.
  long order_key_root(int root_idx) const;
  long order_key_cartan(int i) const;

  const std::vector<int>& simple_roots() const { return simple_; } // indices into roots()

  /// Positions (module basis indices) whose diagonal Cartan entries carry the
  /// eps/delta functionals, for matrix families.
  long coord_dim() const { return long(roots_.empty() ? 0 : roots_[0].coords.size()); }

private:
  friend class ChevalleyBasisBuilder;
  Family fam_;
  int rank_ = 0, msize_ = 0, n_even_ = 0;
  std::vector<Root> roots_;
  std::vector<std::vector<long>> coroots_;
  std::vector<int> simple_;
  std::map<std::vector<long>, int> by_hvals_;
  std::map<std::vector<long>, int> by_coords_;
};

} // namespace supchev
