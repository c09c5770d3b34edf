#pragma once

#include "supchev/matrix.hpp"

namespace supchev {

using IMatrix = std::vector<std::vector<BigInt>>;

/// Row-style Hermite normal form of the lattice spanned by the rows.
/// Returns the nonzero rows (a canonical basis of the row lattice).
IMatrix hermite_normal_form(IMatrix m);

/// True iff the two row sets span the same Z-lattice.
bool same_lattice(const IMatrix& a, const IMatrix& b);

struct SmithResult {
  std::vector<BigInt> diag; // elementary divisors (may include 0)
  IMatrix left, right;      // unimodular U, V with U*A*V = diag
};
SmithResult smith_normal_form(IMatrix a);

/// Solve x * A = b exactly over Q (row vector times matrix), A given by rows.
/// Returns empty optional if inconsistent.
std::optional<std::vector<Rational>> solve_left(const std::vector<std::vector<Rational>>& rowsA,
                                                const std::vector<Rational>& b);

/// Reduced row echelon form solver: pre-factor a set of spanning rows, then
/// express targets in that span.  Used to write brackets in basis coordinates.
class SpanSolver {
public:
  explicit SpanSolver(std::vector<std::vector<Scalar>> rows);
  /// Coordinates of v over the original rows; throws if v is outside the span.
  std::vector<Scalar> coords(const std::vector<Scalar>& v) const;
  int rank() const { return int(pivots_.size()); }

private:
  std::vector<std::vector<Scalar>> rr_;   // echelon rows
  std::vector<std::vector<Scalar>> ops_;  // combination of original rows giving rr_
  std::vector<int> pivots_;
  size_t width_;
};

} // namespace supchev
