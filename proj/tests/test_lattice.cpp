#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "supchev/lattice.hpp"

using namespace supchev;

TEST_CASE("standard lattice of the defining sl(2|1) module is admissible") {
  auto cb = ChevalleyBasis::build(Family::sl(2, 1));
  auto mod = ModuleRep::defining(cb);
  auto M = QMatrix::identity(mod.dimV, Scalar(1));
  auto res = admissible_check(mod, M);
  CHECK(res.ok);
  CHECK(weight_split_check(mod, M));
  // scale one vector by 1/2: fails with a witness
  auto bad = M;
  bad(1, 1) = Scalar(Rational(1, 2));
  auto res2 = admissible_check(mod, bad);
  CHECK(!res2.ok);
  CHECK(!res2.witness.empty());
  // scaling by 2 instead also breaks stability (X maps expanded vector out)
  auto doubled = M;
  doubled(0, 0) = Scalar(2);
  CHECK(!admissible_check(mod, doubled).ok);
}

TEST_CASE("adjoint lattice g^Z is admissible for several families") {
  for (auto f : {Family::osp(1, 2), Family::sl(2, 1), Family::osp(3, 2), Family::p(2),
                 Family::d21a(2)}) {
    auto cb = ChevalleyBasis::build(f);
    auto mod = ModuleRep::make_adjoint(cb);
    auto M = QMatrix::identity(mod.dimV, Scalar(1));
    auto res = admissible_check(mod, M);
    INFO(f.str(), " ", res.witness);
    CHECK(res.ok);
    CHECK(weight_split_check(mod, M));
  }
}

TEST_CASE("singular lattice matrix is rejected") {
  auto cb = ChevalleyBasis::build(Family::sl(2, 1));
  auto mod = ModuleRep::defining(cb);
  QMatrix sing(mod.dimV, mod.dimV);
  CHECK_THROWS(admissible_check(mod, sing));
}

TEST_CASE("stabilizer_cartan: defining and adjoint modules") {
  auto cb = ChevalleyBasis::build(Family::sl(2, 1));
  auto mod = ModuleRep::defining(cb);
  auto st = stabilizer_cartan(mod);
  // h_V contains h_Z
  for (int i = 0; i < cb.rank(); ++i) {
    std::vector<Rational> hi(cb.rank());
    hi[i] = 1;
    CHECK(st.contains(hi, mod));
  }
  CHECK(st.index_over_hz >= 1);
  // adjoint module: all coroots lie in h_V
  auto adj = ModuleRep::make_adjoint(cb);
  const auto& rd = cb.root_datum();
  for (int r = 0; r < int(rd.roots().size()); ++r) {
    if (!rd.has_coroot(r)) continue;
    std::vector<Rational> h(rd.coroot(r).begin(), rd.coroot(r).end());
    CHECK(in_cartan_stabilizer(adj, h));
  }
  // basis columns of h_V are genuinely in h_V
  for (auto& col : st.basis) CHECK(st.contains(col, mod));
}

TEST_CASE("weight set {0} gives the full Cartan") {
  // build a fake module footprint: weights all zero -> every H allowed
  auto cb = ChevalleyBasis::build(Family::sl(2, 1));
  ModuleRep mod = ModuleRep::defining(cb);
  for (auto& w : mod.weights) w.assign(cb.rank(), 0);
  auto st = stabilizer_cartan(mod);
  std::vector<Rational> wild(cb.rank(), Rational(1, 7));
  CHECK(st.contains(wild, mod));
}

TEST_CASE("stabilizer shape: Z X_alpha stabilizes, (1/2) X_alpha does not") {
  auto cb = ChevalleyBasis::build(Family::sl(2, 1));
  auto mod = ModuleRep::defining(cb);
  auto M = QMatrix::identity(mod.dimV, Scalar(1));
  auto Minv = M.inverse(Scalar(1));
  for (int r = 0; r < int(cb.root_datum().roots().size()); ++r) {
    QMatrix x = Minv * (mod.of_root(r) * M);
    bool intg = true;
    for (int i = 0; i < x.rows(); ++i)
      for (int j = 0; j < x.cols(); ++j)
        if (!x(i, j).is_integer()) intg = false;
    CHECK(intg);
    QMatrix h = Scalar(Rational(1, 2)) * x;
    bool half_ok = true;
    for (int i = 0; i < h.rows(); ++i)
      for (int j = 0; j < h.cols(); ++j)
        if (!h(i, j).is_integer()) half_ok = false;
    CHECK(!half_ok);
  }
}

TEST_CASE("highest-weight lattice for osp(1|2) defining module absorbs sqrt2") {
  auto cb = ChevalleyBasis::build(Family::osp(1, 2));
  auto mod = ModuleRep::defining(cb);
  // the standard basis lattice is NOT admissible (sqrt2 entries)
  auto std_lattice = QMatrix::identity(mod.dimV, Scalar(1));
  CHECK(!admissible_check(mod, std_lattice).ok);
  // highest weight vector: row of weight delta is index M+0 = 1
  std::vector<Scalar> v(mod.dimV);
  v[1] = Scalar(1);
  auto M = highest_weight_lattice(mod, v);
  auto res = admissible_check(mod, M);
  INFO(res.witness);
  CHECK(res.ok);
  CHECK(weight_split_check(mod, M));
}

TEST_CASE("adjoint highest-weight-style saturation: g^Z regenerates itself") {
  auto cb = ChevalleyBasis::build(Family::sl(2, 1));
  auto mod = ModuleRep::make_adjoint(cb);
  // start from a root vector of the highest root
  std::vector<Scalar> v(mod.dimV);
  int hi = cb.basis_of_root(cb.root_datum().index_of_coords({1, 0, -1}));
  v[hi] = Scalar(1);
  auto M = highest_weight_lattice(mod, v);
  CHECK(admissible_check(mod, M).ok);
}
