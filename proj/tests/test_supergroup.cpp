#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "supchev/supergroup.hpp"

using namespace supchev;

namespace {
GrRing L(int n) { return GrRing{n, -1}; }
} // namespace

TEST_CASE("gen_to_matrix basics in the defining sl(2|1) module") {
  auto cb = ChevalleyBasis::build(Family::sl(2, 1));
  auto mod = ModuleRep::defining(cb);
  GrRing r = L(4);
  Supergroup G(mod, r);
  const auto& rd = cb.root_datum();
  auto one = GrassmannElem::one(r);

  // EvenRoot(eps1-eps2, t) -> I + t e12
  int a = rd.index_of_coords({1, -1, 0});
  auto t = Scalar(3) * one + GrassmannElem::theta(r, 1) * GrassmannElem::theta(r, 2);
  auto m = G.gen_to_matrix(GroupGenerator::even(a, t));
  CHECK(m(0, 1) == t);
  CHECK(m(0, 0) == one);
  CHECK(m(1, 0).is_zero());

  // Torus(H, 1) = identity
  auto h = G.gen_to_matrix(GroupGenerator::torus({BigInt(2), BigInt(-1)}, one));
  CHECK(h == G.identity());

  // exp additivity for even one-parameter subgroups
  std::mt19937_64 rng(5);
  for (int it = 0; it < 10; ++it) {
    auto t1 = random_even_param(rng, r), t2 = random_even_param(rng, r);
    auto m1 = G.gen_to_matrix(GroupGenerator::even(a, t1));
    auto m2 = G.gen_to_matrix(GroupGenerator::even(a, t2));
    auto m12 = G.gen_to_matrix(GroupGenerator::even(a, t1 + t2));
    CHECK(m1 * m2 == m12);
  }

  // odd free: x(th) x(et) = x(th+et)
  int g1 = rd.index_of_coords({1, 0, -1});
  auto th = GrassmannElem::theta(r, 1), et = GrassmannElem::theta(r, 2);
  auto mg = G.gen_to_matrix(GroupGenerator::odd_free(g1, th));
  auto me = G.gen_to_matrix(GroupGenerator::odd_free(g1, et));
  CHECK(mg * me == G.gen_to_matrix(GroupGenerator::odd_free(g1, th + et)));

  // word times reversed inverses is the identity
  auto w = random_word(rng, cb, r, 6);
  auto winv = w.reversed_inverses();
  GroupWord both;
  both.g = w.g;
  both.g.insert(both.g.end(), winv.g.begin(), winv.g.end());
  CHECK(G.word_to_matrix(both) == G.identity());

  // torus with a non-unit parameter is rejected
  CHECK_THROWS(G.gen_to_matrix(GroupGenerator::torus({BigInt(1), BigInt(0)}, th * et)));
}

TEST_CASE("1|1 product law (t+t'-th th', th+th') in osp(1|2) and osp(3|2)") {
  for (auto f : {Family::osp(1, 2), Family::osp(3, 2)}) {
    auto cb = ChevalleyBasis::build(f);
    auto mod = ModuleRep::defining(cb);
    GrRing r = L(4);
    Supergroup G(mod, r);
    const auto& rd = cb.root_datum();
    int gamma = -1;
    for (int i = 0; i < int(rd.roots().size()); ++i)
      if (rd.root(i).parity == Parity::odd && rd.sum_index(i, i) >= 0) gamma = i;
    REQUIRE(gamma >= 0);
    std::mt19937_64 rng(11);
    for (int it = 0; it < 50; ++it) {
      auto t1 = random_even_param(rng, r), t2 = random_even_param(rng, r);
      auto th1 = random_soul_odd(rng, r), th2 = random_soul_odd(rng, r);
      auto lhs = G.gen_to_matrix(GroupGenerator::odd_square(gamma, t1, th1)) *
                 G.gen_to_matrix(GroupGenerator::odd_square(gamma, t2, th2));
      auto rhs = G.gen_to_matrix(
          GroupGenerator::odd_square(gamma, t1 + t2 - th1 * th2, th1 + th2));
      INFO(f.str(), " iteration ", it);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("closed-form commutators match direct matrices, all pairs") {
  for (auto f : {Family::sl(2, 1), Family::osp(3, 2)}) {
    auto cb = ChevalleyBasis::build(f);
    auto mod = ModuleRep::defining(cb);
    GrRing r = L(4);
    Supergroup G(mod, r);
    const auto& rd = cb.root_datum();
    std::mt19937_64 rng(17);
    auto th = [&] { return random_soul_odd(rng, r); };
    auto tt = [&] { return random_even_param(rng, r); };
    for (int i = 0; i < int(rd.roots().size()); ++i)
      for (int j = 0; j < int(rd.roots().size()); ++j) {
        bool oi = rd.root(i).parity == Parity::odd;
        bool oj = rd.root(j).parity == Parity::odd;
        if (oi && !oj) { // odd-even
          auto res = G.commutator(GroupGenerator::odd_free(i, th()),
                                  GroupGenerator::even(j, tt()));
          INFO(f.str(), " odd-even pair ", rd.root(i).label, " ", rd.root(j).label);
          CHECK(res.equal);
        } else if (oi && oj) { // odd-odd
          auto res = G.commutator(GroupGenerator::odd_free(i, th()),
                                  GroupGenerator::odd_free(j, th()));
          INFO(f.str(), " odd-odd pair ", rd.root(i).label, " ", rd.root(j).label);
          CHECK(res.equal);
        }
      }
    // torus conjugation for every root and several H
    for (int j = 0; j < int(rd.roots().size()); ++j)
      for (int hi = 0; hi < cb.rank(); ++hi) {
        std::vector<BigInt> H(cb.rank(), 0);
        H[hi] = 1 + (j % 2);
        GroupGenerator x =
            rd.root(j).parity == Parity::odd
                ? GroupGenerator::odd_free(j, th())
                : GroupGenerator::even(j, tt());
        auto res = G.commutator(GroupGenerator::torus(H, random_unit(rng, r)), x);
        INFO(f.str(), " torus-conj root ", rd.root(j).label);
        CHECK(res.equal);
      }
  }
}

TEST_CASE("identity commutator for disjoint odd roots") {
  auto cb = ChevalleyBasis::build(Family::sl(2, 1));
  auto mod = ModuleRep::defining(cb);
  GrRing r = L(4);
  Supergroup G(mod, r);
  const auto& rd = cb.root_datum();
  int g1 = rd.index_of_coords({1, 0, -1});
  int g2 = rd.index_of_coords({0, 1, -1});
  auto res = G.commutator(GroupGenerator::odd_free(g1, GrassmannElem::theta(r, 1)),
                          GroupGenerator::odd_free(g2, GrassmannElem::theta(r, 2)));
  CHECK(res.equal);
  CHECK(res.direct == G.identity());
}

TEST_CASE("factorize: simple cases") {
  auto cb = ChevalleyBasis::build(Family::sl(2, 1));
  auto mod = ModuleRep::defining(cb);
  GrRing r = L(6);
  Supergroup G(mod, r);
  const auto& rd = cb.root_datum();
  // single even generator: g0 is it, no thetas
  int a = rd.index_of_coords({1, -1, 0});
  GroupWord w;
  w.g.push_back(GroupGenerator::even(a, GrassmannElem::one(r)));
  auto nf = G.factorize(w);
  CHECK(nf.theta_minus.empty());
  CHECK(nf.theta_plus.empty());
  CHECK(nf.g0 == G.word_to_matrix(w));

  // x_gamma(th) x_{-gamma}(et): theta+ = th, theta- = et, g0 of torus type
  int gp = rd.index_of_coords({1, 0, -1});
  int gm = rd.negative_of(gp);
  auto th = GrassmannElem::theta(r, 1), et = GrassmannElem::theta(r, 2);
  GroupWord w2;
  w2.g.push_back(GroupGenerator::odd_free(gp, th));
  w2.g.push_back(GroupGenerator::odd_free(gm, et));
  auto nf2 = G.factorize(w2);
  REQUIRE(nf2.theta_plus.count(gp));
  REQUIRE(nf2.theta_minus.count(gm));
  CHECK(nf2.theta_plus.at(gp) == th);
  CHECK(nf2.theta_minus.at(gm) == et);
  // g0 equals h_gamma(1 - th et) as a matrix
  std::vector<BigInt> H;
  for (long h : rd.coroot(gp)) H.push_back(h);
  auto hg =
      G.gen_to_matrix(GroupGenerator::torus(H, GrassmannElem::one(r) - th * et));
  CHECK(nf2.g0 == hg);
}

TEST_CASE("factorize and extract agree on random words; stability under edits") {
  auto cb = ChevalleyBasis::build(Family::sl(2, 1));
  auto mod = ModuleRep::defining(cb);
  GrRing r = L(6);
  Supergroup G(mod, r);
  std::mt19937_64 rng(99);
  for (int it = 0; it < 25; ++it) {
    auto w = random_word(rng, cb, r, 1 + int(rng() % 8));
    auto m = G.word_to_matrix(w);
    auto nf = G.factorize(w);
    CHECK(G.normal_form_matrix(nf) == m);
    auto nf2 = G.extract_odd_coordinates(m);
    CHECK(nf2.theta_minus == nf.theta_minus);
    CHECK(nf2.theta_plus == nf.theta_plus);
    CHECK(nf2.g0 == nf.g0);
    // insert a canceling pair at a random position: same coordinates
    auto w3 = w;
    auto g = random_word(rng, cb, r, 1).g[0];
    size_t pos = rng() % (w3.g.size() + 1);
    w3.g.insert(w3.g.begin() + pos, g.inverse());
    w3.g.insert(w3.g.begin() + pos, g);
    auto nf3 = G.factorize(w3);
    CHECK(nf3.theta_minus == nf.theta_minus);
    CHECK(nf3.theta_plus == nf.theta_plus);
    CHECK(nf3.g0 == nf.g0);
  }
}

TEST_CASE("coordinate round trip: ordered products are injective in the thetas") {
  auto cb = ChevalleyBasis::build(Family::sl(2, 1));
  auto mod = ModuleRep::defining(cb);
  GrRing r = L(6);
  Supergroup G(mod, r);
  const auto& rd = cb.root_datum();
  std::mt19937_64 rng(123);
  for (int it = 0; it < 10; ++it) {
    NormalForm nf;
    nf.g0 = G.identity();
    for (int i = 0; i < int(rd.roots().size()); ++i) {
      if (rd.root(i).parity != Parity::odd) continue;
      auto th = random_soul_odd(rng, r);
      if (th.is_zero()) continue;
      if (rd.root(i).positive) nf.theta_plus[i] = th;
      else nf.theta_minus[i] = th;
    }
    auto m = G.normal_form_matrix(nf);
    auto back = G.extract_odd_coordinates(m);
    CHECK(back.theta_minus == nf.theta_minus);
    CHECK(back.theta_plus == nf.theta_plus);
  }
}

TEST_CASE("extract rejects non-factorizable input") {
  auto cb = ChevalleyBasis::build(Family::sl(2, 1));
  auto mod = ModuleRep::defining(cb);
  GrRing r = L(2);
  Supergroup G(mod, r);
  auto m = G.identity();
  m(0, 1) = GrassmannElem::theta(r, 1); // odd element in the even block
  CHECK_THROWS(G.extract_odd_coordinates(m));
}

TEST_CASE("semidirect degeneration over a ring with A1^2 = 0") {
  for (auto f : {Family::sl(2, 1), Family::osp(3, 2)}) {
    auto cb = ChevalleyBasis::build(f);
    auto mod = ModuleRep::defining(cb);
    for (GrRing r : {GrRing{1, -1}, GrRing{2, 1}, GrRing{4, 1}}) {
      Supergroup G(mod, r);
      auto rep = G.semidirect_check(7, 40);
      INFO(f.str(), " ngens ", r.n_gens);
      CHECK(rep.odd_commute);
      CHECK(rep.minus_plus_swap);
      CHECK(rep.conj_preserves_odd);
    }
  }
  // explicit: (1 + th1 X_g) and (1 + th1 X_d) commute over Lambda_1
  auto cb = ChevalleyBasis::build(Family::sl(2, 1));
  auto mod = ModuleRep::defining(cb);
  GrRing r{1, -1};
  Supergroup G(mod, r);
  const auto& rd = cb.root_datum();
  int g1 = rd.index_of_coords({1, 0, -1});
  int g2 = rd.index_of_coords({0, 1, -1});
  auto th = GrassmannElem::theta(r, 1);
  auto m1 = G.gen_to_matrix(GroupGenerator::odd_free(g1, th));
  auto m2 = G.gen_to_matrix(GroupGenerator::odd_free(g2, th));
  CHECK(m1 * m2 == m2 * m1);
}

TEST_CASE("lie functor recovers the bracket over dual numbers") {
  for (auto f : {Family::sl(2, 1), Family::osp(1, 2), Family::d21a(2)}) {
    auto cb = ChevalleyBasis::build(f);
    auto mod = cb.has_matrices() ? ModuleRep::defining(cb) : ModuleRep::make_adjoint(cb);
    Supergroup G(mod, L(2));
    auto rep = G.lie_functor();
    INFO(f.str());
    CHECK(rep.kernel_ok);
    CHECK(rep.brackets_ok);
    CHECK(rep.brackets_checked == long(cb.dim()) * cb.dim());
  }
}

TEST_CASE("torus word-level identity for two decompositions, matrix level") {
  auto cb = ChevalleyBasis::build(Family::sl(2, 1));
  auto mod = ModuleRep::defining(cb);
  GrRing r = L(4);
  Supergroup G(mod, r);
  std::mt19937_64 rng(3);
  auto t = random_unit(rng, r);
  auto lhs = G.gen_to_matrix(GroupGenerator::torus({BigInt(1), BigInt(1)}, t));
  auto rhs = G.gen_to_matrix(GroupGenerator::torus({BigInt(1), BigInt(0)}, t)) *
             G.gen_to_matrix(GroupGenerator::torus({BigInt(0), BigInt(1)}, t));
  CHECK(lhs == rhs);
}

TEST_CASE("factorize and extract handle 1|1 generators: osp words") {
  for (auto f : {Family::osp(1, 2), Family::osp(3, 2)}) {
    auto cb = ChevalleyBasis::build(f);
    auto mod = ModuleRep::defining(cb);
    GrRing ring{5, -1};
    Supergroup G(mod, ring);
    std::mt19937_64 rng(2718);
    for (int it = 0; it < 15; ++it) {
      auto w = random_word(rng, cb, ring, 1 + int(rng() % 6));
      auto m = G.word_to_matrix(w);
      auto nf = G.factorize(w);
      CHECK(G.normal_form_matrix(nf) == m);
      auto nf2 = G.extract_odd_coordinates(m);
      INFO(f.str(), " iteration ", it);
      CHECK(nf2.theta_minus == nf.theta_minus);
      CHECK(nf2.theta_plus == nf.theta_plus);
      CHECK(nf2.g0 == nf.g0);
    }
  }
}

TEST_CASE("group operations on the adjoint module") {
  auto cb = ChevalleyBasis::build(Family::d21a(2));
  auto mod = ModuleRep::make_adjoint(cb);
  GrRing ring{4, -1};
  Supergroup G(mod, ring);
  std::mt19937_64 rng(31337);
  for (int it = 0; it < 8; ++it) {
    auto w = random_word(rng, cb, ring, 1 + int(rng() % 5));
    auto m = G.word_to_matrix(w);
    auto nf = G.factorize(w);
    CHECK(G.normal_form_matrix(nf) == m);
    auto nf2 = G.extract_odd_coordinates(m);
    CHECK(nf2.theta_minus == nf.theta_minus);
    CHECK(nf2.theta_plus == nf.theta_plus);
  }
}
