#pragma once

#include "supchev/kostant.hpp"

namespace supchev {

/// A candidate lattice: columns span M inside the module's K-space.
using LatticeBasis = QMatrix;

struct AdmissibleResult {
  bool ok = true;
  std::string witness; // first violating generator / vector when !ok
};

/// M is admissible iff it is stable under all Kostant
/// generators: X_alpha^{(n)} (n <= nmax), X_gamma, (H_i choose n) (n <= nmax).
/// nmax must dominate the nilpotency degree of every root vector on V; pass
/// 0 to have it computed.
AdmissibleResult admissible_check(const ModuleRep& mod, const LatticeBasis& M, long nmax = 0);

/// Admissible lattices split over weights: projections of the basis onto
/// weight spaces stay in
/// the lattice (checked by exact change of basis).
bool weight_split_check(const ModuleRep& mod, const LatticeBasis& M);

struct CartanStabilizer {
  std::vector<std::vector<Rational>> basis; // columns, coordinates over H_i
  BigInt index_over_hz = 1;                 // [h_V : h_Z] when finite
  bool contains(const std::vector<Rational>& x, const ModuleRep& mod) const;
};

/// h_V = {H in h | mu(H) in Z for every weight mu of V}, computed
/// by exact Smith reduction of the weight matrix.
CartanStabilizer stabilizer_cartan(const ModuleRep& mod);

/// Whether mu(H) is integral for every weight mu (membership in h_V).
bool in_cartan_stabilizer(const ModuleRep& mod, const std::vector<Rational>& H);

/// The lattice K_Z(g).v generated from a vector
/// by iterated generator application with exact saturation.
LatticeBasis highest_weight_lattice(const ModuleRep& mod, const std::vector<Scalar>& v,
                                    long nmax = 0);

/// Is the column vector x in the Z-span of the columns of M?
bool lattice_member(const LatticeBasis& M, const std::vector<Scalar>& x);

} // namespace supchev
