#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "supchev/kostant.hpp"

#include <random>

using namespace supchev;

namespace {

KElement mono(std::vector<KFactor> f, Rational c = 1) {
  return KElement::unit(KMonomial{std::move(f)}, c);
}

// random Kostant generator: divided power, Cartan binomial, or odd vector
KElement random_generator(std::mt19937_64& rng, const Kostant& K) {
  const auto& rd = K.basis().root_datum();
  int pick = int(rng() % 3);
  if (pick == 0) {
    std::vector<int> even;
    for (int r = 0; r < int(rd.roots().size()); ++r)
      if (rd.root(r).parity == Parity::even) even.push_back(r);
    int r = even[rng() % even.size()];
    long n = 1 + long(rng() % 3);
    return mono({KFactor::divpow(r, n)});
  }
  if (pick == 1) {
    int i = int(rng() % rd.rank());
    long n = 1 + long(rng() % 2);
    return mono({KFactor::cartan(i, n)});
  }
  std::vector<int> odd;
  for (int r = 0; r < int(rd.roots().size()); ++r)
    if (rd.root(r).parity == Parity::odd) odd.push_back(r);
  return mono({KFactor::odd(odd[rng() % odd.size()])});
}

KElement random_product(std::mt19937_64& rng, const Kostant& K, int max_gens) {
  int n = 1 + int(rng() % max_gens);
  KMonomial m;
  for (int i = 0; i < n; ++i) {
    KElement g = random_generator(rng, K);
    const KMonomial& gm = g.t.begin()->first;
    m.f.insert(m.f.end(), gm.f.begin(), gm.f.end());
  }
  return KElement::unit(m, 1);
}

} // namespace

TEST_CASE("binomial shift expansion") {
  auto cb = ChevalleyBasis::build(Family::sl(2, 1));
  Kostant K(cb);
  // (H - 0 over n) -> (H over n)
  CHECK(K.binomial_shift_expand(0, 0, 3) == mono({KFactor::cartan(0, 3)}));
  // (H - 1 over 1) -> (H over 1) - 1
  KElement e1 = mono({KFactor::cartan(0, 1)});
  e1.add(KMonomial{}, -1);
  CHECK(K.binomial_shift_expand(0, 1, 1) == e1);
  // (H - 2 over 2) -> (H over 2) - 2 (H over 1) + 3
  KElement e2 = mono({KFactor::cartan(0, 2)});
  e2.add(KMonomial{{KFactor::cartan(0, 1)}}, -2);
  e2.add(KMonomial{}, 3);
  CHECK(K.binomial_shift_expand(0, 2, 2) == e2);
  // spot check by evaluation at H = 0..6
  for (long z : {-3L, -1L, 2L, 5L}) {
    auto ex = K.binomial_shift_expand(0, z, 3);
    for (long H = 0; H <= 6; ++H) {
      Rational lhs(binomial(BigInt(H - z), 3));
      Rational rhs = 0;
      for (auto& [m, c] : ex.t) {
        Rational term = c;
        for (auto& f : m.f) term *= Rational(binomial(BigInt(H), f.n));
        rhs += term;
      }
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("oracle: divided powers and binomials expand as stated") {
  auto cb = ChevalleyBasis::build(Family::sl(2, 1));
  Kostant K(cb);
  const auto& rd = cb.root_datum();
  int a = rd.index_of_coords({1, -1, 0});
  // X^(2) -> (1/2) X X
  auto o = K.oracle_straighten(mono({KFactor::divpow(a, 2)}));
  REQUIRE(o.t.size() == 1);
  auto [k, c] = *o.t.begin();
  CHECK(k == std::vector<std::pair<int, long>>{{cb.basis_of_root(a), 2}});
  CHECK(c == Rational(1, 2));
  // (H over 2) -> (1/2)(H H - H)
  auto o2 = K.oracle_straighten(mono({KFactor::cartan(0, 2)}));
  OracleElement want;
  want.t[{{0, 2}}] = Rational(1, 2);
  want.t[{{0, 1}}] = Rational(-1, 2);
  CHECK(o2 == want);
}

TEST_CASE("sl(2|1) odd squares vanish; osp(1|2) gives the 2 gamma rule") {
  auto cb = ChevalleyBasis::build(Family::sl(2, 1));
  Kostant K(cb);
  const auto& rd = cb.root_datum();
  int g = rd.index_of_coords({1, 0, -1});
  CHECK(K.normalize(mono({KFactor::odd(g), KFactor::odd(g)})) == KElement::zero());

  auto co = ChevalleyBasis::build(Family::osp(1, 2));
  Kostant Ko(co);
  int d1 = co.root_datum().index_of_coords({1});
  int d2 = co.root_datum().index_of_coords({2});
  auto r = Ko.normalize(mono({KFactor::odd(d1), KFactor::odd(d1)}));
  // X_gamma^2 = (c_{g,g}/2) X_{2g} = 2 X_{2g}^{(1)}
  CHECK(r == mono({KFactor::divpow(d2, 1)}, 2));
}

TEST_CASE("odd opposite pair produces the coroot binomials") {
  auto cb = ChevalleyBasis::build(Family::sl(2, 1));
  Kostant K(cb);
  const auto& rd = cb.root_datum();
  int g = rd.index_of_coords({1, 0, -1});   // positive odd
  int ng = rd.index_of_coords({-1, 0, 1});  // its opposite
  // X_g X_{-g} (wrong order) -> -X_{-g} X_g + sigma H_g expansion
  auto r = K.normalize(mono({KFactor::odd(g), KFactor::odd(ng)}));
  KElement want = mono({KFactor::odd(ng), KFactor::odd(g)}, -1);
  const auto& h = rd.coroot(g);
  for (int i = 0; i < rd.rank(); ++i)
    if (h[i] != 0) want.add(KMonomial{{KFactor::cartan(i, 1)}}, Rational(h[i]));
  CHECK(r == want);
  // the reversed-order identity holds after normalizing both sides
  auto lhs = K.normalize(mono({KFactor::odd(ng), KFactor::odd(g)}));
  KElement rhs = mono({KFactor::odd(g), KFactor::odd(ng)}, -1);
  for (int i = 0; i < rd.rank(); ++i)
    if (h[i] != 0) rhs.add(KMonomial{{KFactor::cartan(i, 1)}}, Rational(h[i]));
  CHECK(lhs == K.normalize(rhs));
}

TEST_CASE("opposite divided powers match the closed form and the oracle") {
  auto cb = ChevalleyBasis::build(Family::sl(2, 1));
  Kostant K(cb);
  const auto& rd = cb.root_datum();
  int a = rd.index_of_coords({1, -1, 0});
  int na = rd.index_of_coords({-1, 1, 0});
  for (long n = 1; n <= 3; ++n)
    for (long m = 1; m <= 3; ++m) {
      auto lhs = mono({KFactor::divpow(a, n), KFactor::divpow(na, m)});
      auto r = K.normalize(lhs);
      CHECK(K.is_normal(r));
      CHECK(!K.integrality_witness(r));
      CHECK(K.oracle_straighten(r) == K.oracle_straighten(lhs));
    }
}

TEST_CASE("odd past even divided powers, against closed forms") {
  auto co = ChevalleyBasis::build(Family::osp(1, 2));
  Kostant K(co);
  const auto& rd = co.root_datum();
  int g = rd.index_of_coords({1});
  int ng = rd.index_of_coords({-1});
  int a2 = rd.index_of_coords({2});
  int na2 = rd.index_of_coords({-2});
  // X_g X_{2g}^{(n)} = X_{2g}^{(n)} X_g exactly (they commute)
  for (long n = 1; n <= 3; ++n) {
    auto r = K.normalize(mono({KFactor::odd(g), KFactor::divpow(a2, n)}));
    CHECK(r == mono({KFactor::divpow(a2, n), KFactor::odd(g)}));
  }
  // X_{-g} X_{2g}^{(n)} = X_{2g}^{(n)} X_{-g} + c_{-g,2g} X_{2g}^{(n-1)} X_g
  BigInt c = co.cvalue(ng, a2);
  CHECK((c == 1 || c == -1));
  for (long n = 1; n <= 3; ++n) {
    auto r = K.normalize(mono({KFactor::odd(ng), KFactor::divpow(a2, n)}));
    KElement want = mono({KFactor::divpow(a2, n), KFactor::odd(ng)});
    KMonomial w2;
    if (n - 1 >= 1) w2.f.push_back(KFactor::divpow(a2, n - 1));
    w2.f.push_back(KFactor::odd(g));
    want.add(w2, Rational(c));
    CHECK(r == want);
    CHECK(K.oracle_straighten(r) ==
          K.oracle_straighten(mono({KFactor::odd(ng), KFactor::divpow(a2, n)})));
  }
  // X_g X_{-2g}^{(n)} against the oracle
  for (long n = 1; n <= 3; ++n) {
    auto e = mono({KFactor::odd(g), KFactor::divpow(na2, n)});
    auto r = K.normalize(e);
    CHECK(K.is_normal(r));
    CHECK(K.oracle_straighten(r) == K.oracle_straighten(e));
  }
  // string closed form on an osp(3|2) pair: prod epsilon_s binom(r+k,k)
  auto cb2 = ChevalleyBasis::build(Family::osp(3, 2));
  Kostant K2(cb2);
  const auto& rd2 = cb2.root_datum();
  int alpha = rd2.index_of_coords({1, 0});   // eps (even)
  int gamma = rd2.index_of_coords({-1, 1});  // delta - eps (odd)
  auto [rr, qq] = rd2.alpha_string(alpha, gamma);
  CHECK(qq >= 1);
  for (long n2 = 1; n2 <= 2; ++n2) {
    auto e = mono({KFactor::odd(gamma), KFactor::divpow(alpha, n2)});
    auto r = K2.normalize(e);
    CHECK(K2.oracle_straighten(r) == K2.oracle_straighten(e));
    // compare against X_a^{(n)} X_g = X_g X_a^{(n)} + sum_k eps (r+k choose k) X_{g+ka} X_a^{(n-k)}
    auto lhs = K2.normalize(mono({KFactor::divpow(alpha, n2), KFactor::odd(gamma)}));
    KElement rhs = mono({KFactor::odd(gamma), KFactor::divpow(alpha, n2)});
    int cur = gamma;
    Rational chain = 1;
    for (long k = 1; k <= n2; ++k) {
      BigInt cav = cb2.cvalue(alpha, cur);
      int nxt = rd2.sum_index(alpha, cur);
      if (cav == 0 || nxt < 0) break;
      chain *= Rational(cav) / Rational(k);
      // chain = (prod eps_s) * binom(r+k, k)
      CHECK(abs(num(chain)) == binomial(BigInt(rr + k), k));
      cur = nxt;
      KMonomial mng;
      mng.f.push_back(KFactor::odd(cur));
      if (n2 - k >= 1) mng.f.push_back(KFactor::divpow(alpha, n2 - k));
      rhs.add(mng, chain);
    }
    CHECK(lhs == K2.normalize(rhs));
  }
}

TEST_CASE("odd-odd reorder and multiply") {
  auto cb = ChevalleyBasis::build(Family::sl(2, 1));
  Kostant K(cb);
  const auto& rd = cb.root_datum();
  int g1 = rd.index_of_coords({1, 0, -1});
  int g2 = rd.index_of_coords({0, -1, 1}); // d1 - eps2, so g1+g2 = eps1-eps2 even
  int s = rd.sum_index(g1, g2);
  REQUIRE(s >= 0);
  auto x = mono({KFactor::odd(g1)});
  auto y = mono({KFactor::odd(g2)});
  auto lhs = K.multiply(x, y);
  KElement rhs = Rational(-1) * K.multiply(y, x);
  rhs.add(KMonomial{{KFactor::divpow(s, 1)}}, Rational(cb.cvalue(g1, g2)));
  CHECK(lhs == K.normalize(rhs));
  // 1 * x = normalize(x)
  CHECK(K.multiply(KElement::one(), x) == K.normalize(x));
}

TEST_CASE("associativity on random degree-3 products") {
  for (auto f : {Family::sl(2, 1), Family::osp(1, 2)}) {
    auto cb = ChevalleyBasis::build(f);
    Kostant K(cb);
    std::mt19937_64 rng(42);
    for (int it = 0; it < 40; ++it) {
      auto x = random_generator(rng, K);
      auto y = random_generator(rng, K);
      auto z = random_generator(rng, K);
      CHECK(K.multiply(K.multiply(x, y), z) == K.multiply(x, K.multiply(y, z)));
    }
  }
}

TEST_CASE("normalization: idempotence, integrality, oracle invariance, measure") {
  for (auto f : {Family::sl(2, 1), Family::osp(1, 2)}) {
    auto cb = ChevalleyBasis::build(f);
    Kostant K(cb);
    std::mt19937_64 rng(2024);
    for (int it = 0; it < 60; ++it) {
      auto e = random_product(rng, K, 5);
      NormStats st;
      auto r = K.normalize(e, &st);
      CHECK(!st.measure_violated);
      CHECK(K.is_normal(r));
      CHECK(!K.integrality_witness(r));
      CHECK(K.normalize(r) == r);
      CHECK(K.oracle_straighten(r) == K.oracle_straighten(e));
    }
  }
}

TEST_CASE("integrality check witnesses") {
  auto cb = ChevalleyBasis::build(Family::sl(2, 1));
  Kostant K(cb);
  int a = cb.root_datum().index_of_coords({1, -1, 0});
  auto bad = mono({KFactor::divpow(a, 1)}, Rational(1, 2));
  auto w = K.integrality_witness(bad);
  REQUIRE(w.has_value());
  CHECK(K.monomial_str(*w) == "X(a2)");
  CHECK(!K.integrality_witness(K.normalize(mono({KFactor::divpow(a, 2), KFactor::divpow(a, 3)}))));
}

TEST_CASE("enumerate_basis and the tensor factorization count") {
  auto cb = ChevalleyBasis::build(Family::sl(2, 1));
  Kostant K(cb);
  CHECK(K.enumerate_basis(0).size() == 1); // just 1
  // pure odd monomials: exactly 2^4 subsets
  auto all = K.enumerate_basis(4);
  long pure_odd = 0;
  for (auto& m : all) {
    bool odd_only = true;
    for (auto& f : m.f)
      if (f.kind != KFactor::Kind::Odd) odd_only = false;
    if (odd_only) ++pure_odd;
  }
  CHECK(pure_odd == 16);
  // every enumerated monomial is normal, all distinct
  for (auto& m : all) CHECK(K.is_normal(m));
  CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
  // independent generate-and-filter enumeration at small degree
  long bound = 2;
  std::set<KMonomial> filt;
  // sequences over all factor kinds with degree <= bound, filtered by is_normal
  std::vector<KFactor> alphabet;
  const auto& rd = cb.root_datum();
  for (int r = 0; r < int(rd.roots().size()); ++r) {
    if (rd.root(r).parity == Parity::even)
      for (long n = 1; n <= bound; ++n) alphabet.push_back(KFactor::divpow(r, n));
    else alphabet.push_back(KFactor::odd(r));
  }
  for (int i = 0; i < rd.rank(); ++i)
    for (long n = 1; n <= bound; ++n) alphabet.push_back(KFactor::cartan(i, n));
  std::function<void(KMonomial, long)> gen = [&](KMonomial m, long left) {
    if (K.is_normal(m) && m.deg() <= bound) filt.insert(m);
    if (left <= 0) return;
    for (auto& f : alphabet) {
      long d = f.kind == KFactor::Kind::Odd ? 1 : f.n;
      if (d > left) continue;
      KMonomial nm = m;
      nm.f.push_back(f);
      gen(nm, left - d);
    }
  };
  gen(KMonomial{}, bound);
  auto small = K.enumerate_basis(bound);
  CHECK(filt == std::set<KMonomial>(small.begin(), small.end()));
}

TEST_CASE("termination stats are populated") {
  auto cb = ChevalleyBasis::build(Family::osp(1, 2));
  Kostant K(cb);
  const auto& rd = cb.root_datum();
  int g = rd.index_of_coords({1}), ng = rd.index_of_coords({-1});
  int a2 = rd.index_of_coords({2}), na2 = rd.index_of_coords({-2});
  NormStats st;
  K.normalize(mono({KFactor::odd(g), KFactor::odd(ng), KFactor::divpow(a2, 2),
                    KFactor::divpow(na2, 1), KFactor::cartan(0, 1)}),
              &st);
  CHECK(st.moves > 0);
  CHECK(!st.measure_violated);
}

TEST_CASE("odd squares rewrite to 0 or +-2 X_{2 gamma}, never anything else") {
  for (auto f : {Family::sl(2, 1), Family::osp(1, 2), Family::osp(3, 2), Family::p(2)}) {
    auto cb = ChevalleyBasis::build(f);
    Kostant K(cb);
    const auto& rd = cb.root_datum();
    for (int g = 0; g < int(rd.roots().size()); ++g) {
      if (rd.root(g).parity != Parity::odd) continue;
      auto r = K.normalize(KElement::unit(KMonomial{{KFactor::odd(g), KFactor::odd(g)}}, 1));
      int two = rd.sum_index(g, g);
      INFO(f.str(), " gamma = ", rd.root(g).label);
      if (two < 0) {
        CHECK(r == KElement::zero());
      } else {
        REQUIRE(r.t.size() == 1);
        auto& [m, c] = *r.t.begin();
        CHECK(m.f.size() == 1);
        CHECK(m.f[0] == KFactor::divpow(two, 1));
        CHECK((c == 2 || c == -2));
      }
    }
  }
}

TEST_CASE("normalization is oracle-exact on families with exceptional constants") {
  // P(2) has the r+2 even-odd pairs, osp types carry the isotropic-pair
  // exceptions, D(2,1;a) has constants growing with a
  for (auto f : {Family::p(2), Family::osp(3, 2), Family::osp(2, 2), Family::d21a(2),
                 Family::d21a(-2)}) {
    auto cb = ChevalleyBasis::build(f);
    Kostant K(cb);
    const auto& rd = cb.root_datum();
    std::mt19937_64 rng(421);
    std::vector<int> even, odd;
    for (int r = 0; r < int(rd.roots().size()); ++r)
      (rd.root(r).parity == Parity::even ? even : odd).push_back(r);
    for (int it = 0; it < 60; ++it) {
      KMonomial m;
      int gens = 1 + int(rng() % 5);
      for (int g = 0; g < gens; ++g) {
        int pick = int(rng() % 3);
        if (pick == 0)
          m.f.push_back(KFactor::divpow(even[rng() % even.size()], 1 + long(rng() % 2)));
        else if (pick == 1)
          m.f.push_back(KFactor::cartan(int(rng() % cb.rank()), 1 + long(rng() % 2)));
        else
          m.f.push_back(KFactor::odd(odd[rng() % odd.size()]));
      }
      auto e = KElement::unit(m, 1);
      NormStats st;
      auto r = K.normalize(e, &st);
      INFO(f.str(), " input ", K.monomial_str(m));
      CHECK(K.is_normal(r));
      CHECK(!K.integrality_witness(r));
      CHECK(K.oracle_straighten(r) == K.oracle_straighten(e));
    }
  }
}
