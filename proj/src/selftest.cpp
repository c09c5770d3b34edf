#include "supchev/selftest.hpp"

#include <chrono>
#include <functional>
#include <sstream>

namespace supchev {

namespace {

using Clock = std::chrono::steady_clock;

struct Check {
  bool ok = true;
  std::ostringstream why;
  void require(bool cond, const std::string& msg) {
    if (!cond && ok) {
      ok = false;
      why << msg;
    }
  }
};

std::vector<Family> criterion1_families() {
  return {Family::sl(2, 1), Family::sl(3, 2), Family::osp(1, 2), Family::osp(3, 2),
          Family::osp(2, 2), Family::osp(2, 4), Family::osp(5, 2), Family::osp(4, 2),
          Family::p(2),      Family::p(4),     Family::d21a(1),   Family::d21a(2),
          Family::d21a(3),   Family::d21a(-2)};
}

// 1. Chevalley-basis certification, exact, < 10 s per instance
CriterionResult criterion1(const SelftestOptions&) {
  Check c;
  std::ostringstream detail;
  for (auto f : criterion1_families()) {
    auto t0 = Clock::now();
    auto cb = ChevalleyBasis::build(f);
    auto rep = cb.verify();
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    c.require(rep.ok(), f.str() + " axiom failures");
    c.require(secs < 10.0, f.str() + " exceeded 10 s");
    detail << f.str() << ":" << rep.n_pass << " ";
  }
  return {1, "Chevalley-basis axiom certification (14 instances)", c.ok,
          c.ok ? "checks per instance: " + detail.str() : c.why.str(), 0};
}

// 2. D(2,1;a) golden bracket table, symbolic in a, exact
CriterionResult criterion2(const SelftestOptions&) {
  Check c;
  for (long a : {1L, 2L, 3L, -2L}) {
    auto cb = ChevalleyBasis::build(Family::d21a(a));
    const auto& rd = cb.root_datum();
    auto R = [&](std::vector<long> v) { return cb.basis_of_root(rd.index_of_coords(v)); };
    auto row = [&](int i, int j) {
      return std::map<int, Rational>(cb.bracket(i, j).begin(), cb.bracket(i, j).end());
    };
    auto cart = [&](long c1, long c2, long c3) {
      std::map<int, Rational> m;
      long v0 = c1 + 2 * c2, v1 = -(1 + a) * c2, v2 = c3 - a * c2;
      if (v0) m[0] = Rational(v0);
      if (v1) m[1] = Rational(v1);
      if (v2) m[2] = Rational(v2);
      return m;
    };
    int e1 = R({1, 0, 0}), e2 = R({0, 1, 0}), e3 = R({0, 0, 1});
    int e12 = R({1, 1, 0}), e13 = R({1, 0, 1}), e123 = R({1, 1, 1}), e1123 = R({2, 1, 1});
    int f1 = R({-1, 0, 0}), f2 = R({0, -1, 0}), f3 = R({0, 0, -1});
    int f21 = R({-1, -1, 0}), f31 = R({-1, 0, -1}), f321 = R({-1, -1, -1}),
        f3211 = R({-2, -1, -1});
    auto one_term = [&](int k, long v) {
      std::map<int, Rational> m;
      m[k] = Rational(v);
      return m;
    };
    std::string at = " at a=" + std::to_string(a);
    c.require(row(e1, f31) == one_term(f3, a), "[e1,f31]" + at);
    c.require(row(e13, f31) == cart(1, 0, -a), "[e13,f31]" + at);
    c.require(row(f1, e13) == one_term(e3, a), "[f1,e13]" + at);
    c.require(row(e12, f21) == cart(1, -1, 0), "[e12,f21]" + at);
    c.require(row(e123, f321) == cart(1, -1, -a), "[e123,f321]" + at);
    c.require(row(e1, e123) == one_term(e1123, 1 + a), "[e1,e123]" + at);
    c.require(row(e12, e13) == one_term(e1123, -(1 + a)), "[e12,e13]" + at);
    c.require(row(f1, f321) == one_term(f3211, -(1 + a)), "[f1,f321]" + at);
    c.require(row(e12, f321) == one_term(f3, a), "[e12,f321]" + at);
    c.require(row(e13, f321) == one_term(f2, 1), "[e13,f321]" + at);
    c.require(row(f21, e123) == one_term(e3, a), "[f21,e123]" + at);
    c.require(row(f31, e123) == one_term(e2, 1), "[f31,e123]" + at);
    c.require(row(e2, e13) == one_term(e123, -1), "[e2,e13]" + at);
    c.require(row(e3, e12) == one_term(e123, -1), "[e3,e12]" + at);
    c.require(row(f2, f31) == one_term(f321, 1), "[f2,f31]" + at);
    c.require(row(f3, f21) == one_term(f321, 1), "[f3,f21]" + at);
    c.require(row(e1, f21) == one_term(f2, 1), "[e1,f21]" + at);
    c.require(row(e2, f21) == one_term(f1, 1), "[e2,f21]" + at);
    c.require(row(e2, f321) == one_term(f31, 1), "[e2,f321]" + at);
    c.require(row(e3, f31) == one_term(f1, 1), "[e3,f31]" + at);
    c.require(row(e3, f321) == one_term(f21, 1), "[e3,f321]" + at);
    c.require(row(f2, e12) == one_term(e1, -1), "[f2,e12]" + at);
    c.require(row(f2, e123) == one_term(e13, -1), "[f2,e123]" + at);
    c.require(row(f3, e13) == one_term(e1, -1), "[f3,e13]" + at);
    c.require(row(f3, e123) == one_term(e12, -1), "[f3,e123]" + at);
    c.require(row(f1, f2) == one_term(f21, -1), "[f1,f2]" + at);
    c.require(row(f1, f3) == one_term(f31, -1), "[f1,f3]" + at);
    c.require(row(f1, e12) == one_term(e2, 1), "[f1,e12]" + at);
    c.require(row(f1, e1123) == one_term(e123, 1), "[f1,e1123]" + at);
    c.require(row(e1, f3211) == one_term(f321, 1), "[e1,f3211]" + at);
    c.require(row(e12, f3211) == one_term(f31, -1), "[e12,f3211]" + at);
    c.require(row(e13, f3211) == one_term(f21, -1), "[e13,f3211]" + at);
    c.require(row(f21, f31) == one_term(f3211, 1 + a), "[f21,f31]" + at);
    c.require(row(f21, e1123) == one_term(e13, -1), "[f21,e1123]" + at);
    c.require(row(f31, e1123) == one_term(e12, -1), "[f31,e1123]" + at);
    c.require(row(e123, f3211) == one_term(f1, 1), "[e123,f3211]" + at);
    c.require(row(f321, e1123) == one_term(e1, 1), "[f321,e1123]" + at);
    // [e', f'] = -(1+a)(2h1 - h2 - a h3) in terms of the rescaled vectors
    {
      std::map<int, Rational> got;
      for (auto& [k, v] : cb.bracket(e1123, f3211))
        got[k] = Rational(1 + a) * Rational(-(1 + a)) * v;
      c.require(got == cart(-2 * (1 + a), (1 + a), a * (1 + a)), "[e',f']" + at);
    }
  }
  return {2, "D(2,1;a) golden bracket table, a in {1,2,3,-2}", c.ok, c.ok ? "38 brackets x 4 values of a" : c.why.str(),
          0};
}

// 3. PBW normalization: 200 seeded products, < 60 s per family
CriterionResult criterion3(const SelftestOptions& opts) {
  Check c;
  std::ostringstream detail;
  for (auto f : {Family::sl(2, 1), Family::osp(1, 2)}) {
    auto t0 = Clock::now();
    auto cb = ChevalleyBasis::build(f);
    Kostant K(cb);
    const auto& rd = cb.root_datum();
    std::mt19937_64 rng(opts.seed);
    std::vector<int> even, odd;
    for (int r = 0; r < int(rd.roots().size()); ++r)
      (rd.root(r).parity == Parity::even ? even : odd).push_back(r);
    long total_moves = 0;
    for (int it = 0; it < 200 && c.ok; ++it) {
      KMonomial m;
      int gens = 1 + int(rng() % 6);
      for (int g = 0; g < gens; ++g) {
        int pick = int(rng() % 3);
        if (pick == 0)
          m.f.push_back(KFactor::divpow(even[rng() % even.size()], 1 + long(rng() % 3)));
        else if (pick == 1)
          m.f.push_back(KFactor::cartan(int(rng() % cb.rank()), 1 + long(rng() % 2)));
        else
          m.f.push_back(KFactor::odd(odd[rng() % odd.size()]));
      }
      KElement e = KElement::unit(m, 1);
      NormStats st;
      KElement r;
      try {
        r = K.normalize(e, &st);
      } catch (const std::exception& ex) {
        c.require(false, f.str() + " normalize threw: " + ex.what());
        break;
      }
      total_moves += st.moves;
      c.require(!st.measure_violated, f.str() + " measure violated");
      c.require(K.is_normal(r), f.str() + " non-normal output");
      c.require(!K.integrality_witness(r), f.str() + " integrality failed");
      c.require(K.normalize(r) == r, f.str() + " not idempotent");
      c.require(K.oracle_straighten(r) == K.oracle_straighten(e),
                f.str() + " oracle disagrees");
    }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    c.require(secs < 60.0, f.str() + " exceeded 60 s");
    detail << f.str() << ": 200 products, " << total_moves << " moves, "
           << int(secs * 1000) << " ms; ";
  }
  return {3, "PBW normalization at desk scale", c.ok, c.ok ? detail.str() : c.why.str(), 0};
}

// 4. Basis tensor-factorization count at degree <= 4 for sl(2|1)
CriterionResult criterion4(const SelftestOptions&) {
  Check c;
  auto cb = ChevalleyBasis::build(Family::sl(2, 1));
  Kostant K(cb);
  const auto& rd = cb.root_datum();
  const long bound = 4;
  auto all = K.enumerate_basis(bound);
  // product enumeration: even-part monomials x odd subsets
  std::vector<KMonomial> evens;
  {
    std::vector<std::pair<KFactor::Kind, int>> slots;
    for (int r = 0; r < rd.n_even(); ++r) slots.push_back({KFactor::Kind::DivPow, r});
    for (int i = 0; i < cb.rank(); ++i) slots.push_back({KFactor::Kind::CartanBin, i});
    std::function<void(size_t, long, KMonomial)> rec = [&](size_t s, long left, KMonomial m) {
      if (s == slots.size()) {
        evens.push_back(m);
        return;
      }
      rec(s + 1, left, m);
      for (long e = 1; e <= left; ++e) {
        KMonomial nm = m;
        nm.f.push_back(slots[s].first == KFactor::Kind::DivPow
                           ? KFactor::divpow(slots[s].second, e)
                           : KFactor::cartan(slots[s].second, e));
        rec(s + 1, left - e, nm);
      }
    };
    rec(0, bound, KMonomial{});
  }
  std::set<KMonomial> product;
  std::vector<int> odd;
  for (int r = rd.n_even(); r < int(rd.roots().size()); ++r) odd.push_back(r);
  for (auto& em : evens)
    for (unsigned mask = 0; mask < (1u << odd.size()); ++mask) {
      KMonomial m = em;
      long deg = m.deg();
      for (size_t k = 0; k < odd.size(); ++k)
        if (mask & (1u << k)) {
          m.f.push_back(KFactor::odd(odd[k]));
          ++deg;
        }
      if (deg <= bound) product.insert(m);
    }
  c.require(std::set<KMonomial>(all.begin(), all.end()) == product,
            "enumerations differ");
  c.require(long(all.size()) == long(product.size()), "counts differ");
  std::ostringstream d;
  d << all.size() << " normal monomials at degree <= 4, factorized count matches";
  return {4, "Kostant basis tensor-factorization count", c.ok, c.ok ? d.str() : c.why.str(), 0};
}

// 5. one-parameter commutator identities over Lambda_4, every pair, < 30 s
CriterionResult criterion5(const SelftestOptions& opts) {
  Check c;
  auto t0 = Clock::now();
  long pairs = 0;
  for (auto f : {Family::sl(2, 1), Family::osp(3, 2)}) {
    auto cb = ChevalleyBasis::build(f);
    auto mod = ModuleRep::defining(cb);
    GrRing ring{4, -1};
    Supergroup G(mod, ring);
    const auto& rd = cb.root_datum();
    std::mt19937_64 rng(opts.seed);
    for (int i = 0; i < int(rd.roots().size()); ++i)
      for (int j = 0; j < int(rd.roots().size()); ++j) {
        bool oi = rd.root(i).parity == Parity::odd;
        bool oj = rd.root(j).parity == Parity::odd;
        if (oi && !oj) {
          auto res = G.commutator(GroupGenerator::odd_free(i, random_soul_odd(rng, ring)),
                                  GroupGenerator::even(j, random_even_param(rng, ring)));
          ++pairs;
          c.require(res.equal, f.str() + " odd-even commutator " + rd.root(i).label + "," + rd.root(j).label);
        } else if (oi && oj) {
          auto res = G.commutator(GroupGenerator::odd_free(i, random_soul_odd(rng, ring)),
                                  GroupGenerator::odd_free(j, random_soul_odd(rng, ring)));
          ++pairs;
          c.require(res.equal, f.str() + " odd-odd commutator " + rd.root(i).label + "," + rd.root(j).label);
        }
      }
    for (int j = 0; j < int(rd.roots().size()); ++j)
      for (int hi = 0; hi < cb.rank(); ++hi) {
        std::vector<BigInt> H(cb.rank(), 0);
        H[hi] = 1 + (j % 2);
        GroupGenerator x = rd.root(j).parity == Parity::odd
                               ? GroupGenerator::odd_free(j, random_soul_odd(rng, ring))
                               : GroupGenerator::even(j, random_even_param(rng, ring));
        auto res = G.commutator(GroupGenerator::torus(H, random_unit(rng, ring)), x);
        ++pairs;
        c.require(res.equal, f.str() + " torus conjugation " + rd.root(j).label);
      }
  }
  double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  c.require(secs < 30.0, "exceeded 30 s");
  std::ostringstream d;
  d << pairs << " commutator identities, " << int(secs * 1000) << " ms";
  return {5, "One-parameter commutator identities over Lambda_4", c.ok,
          c.ok ? d.str() : c.why.str(), 0};
}

// 6. the 1|1 one-parameter product law, osp(1|2) and osp(3|2), 50 seeds
CriterionResult criterion6(const SelftestOptions& opts) {
  Check c;
  for (auto f : {Family::osp(1, 2), Family::osp(3, 2)}) {
    auto cb = ChevalleyBasis::build(f);
    auto mod = ModuleRep::defining(cb);
    GrRing ring{4, -1};
    Supergroup G(mod, ring);
    const auto& rd = cb.root_datum();
    int gamma = -1;
    for (int i = 0; i < int(rd.roots().size()); ++i)
      if (rd.root(i).parity == Parity::odd && rd.sum_index(i, i) >= 0) gamma = i;
    c.require(gamma >= 0, f.str() + " has no 1|1 root");
    if (gamma < 0) continue;
    std::mt19937_64 rng(opts.seed);
    for (int it = 0; it < 50; ++it) {
      auto t1 = random_even_param(rng, ring), t2 = random_even_param(rng, ring);
      auto th1 = random_soul_odd(rng, ring), th2 = random_soul_odd(rng, ring);
      auto lhs = G.gen_to_matrix(GroupGenerator::odd_square(gamma, t1, th1)) *
                 G.gen_to_matrix(GroupGenerator::odd_square(gamma, t2, th2));
      auto rhs =
          G.gen_to_matrix(GroupGenerator::odd_square(gamma, t1 + t2 - th1 * th2, th1 + th2));
      c.require(lhs == rhs, f.str() + " law failed at sample " + std::to_string(it));
    }
  }
  return {6, "1|1 one-parameter product law", c.ok,
          c.ok ? "50 seeded products per family, exact" : c.why.str(), 0};
}

// 7. Unique factorization, 100 words of length <= 8 over Lambda_6, < 60 s
CriterionResult criterion7(const SelftestOptions& opts) {
  Check c;
  auto t0 = Clock::now();
  auto cb = ChevalleyBasis::build(Family::sl(2, 1));
  auto mod = ModuleRep::defining(cb);
  GrRing ring{opts.ngens, -1};
  Supergroup G(mod, ring);
  std::mt19937_64 rng(opts.seed);
  for (int it = 0; it < 100 && c.ok; ++it) {
    auto w = random_word(rng, cb, ring, 1 + int(rng() % 8));
    GrMatrix m = G.word_to_matrix(w);
    NormalForm nf;
    try {
      nf = G.factorize(w);
    } catch (const std::exception& ex) {
      c.require(false, std::string("factorize threw: ") + ex.what());
      break;
    }
    c.require(G.normal_form_matrix(nf) == m, "normal form matrix mismatch");
    NormalForm nf2;
    try {
      nf2 = G.extract_odd_coordinates(m);
    } catch (const std::exception& ex) {
      c.require(false, std::string("extract threw: ") + ex.what());
      break;
    }
    c.require(nf2.theta_minus == nf.theta_minus && nf2.theta_plus == nf.theta_plus &&
                  nf2.g0 == nf.g0,
              "extract disagrees with factorize");
    // re-associated + augmented equal word: identical coordinates
    auto w3 = w;
    auto extra = random_word(rng, cb, ring, 1).g[0];
    size_t pos = rng() % (w3.g.size() + 1);
    w3.g.insert(w3.g.begin() + pos, extra.inverse());
    w3.g.insert(w3.g.begin() + pos, extra);
    // also split an even parameter into two consecutive factors
    for (size_t k = 0; k < w3.g.size(); ++k)
      if (w3.g[k].kind == GroupGenerator::Kind::Even) {
        auto g1 = w3.g[k], g2 = w3.g[k];
        auto half = random_even_param(rng, ring);
        g1.t = half;
        g2.t = w3.g[k].t - half;
        w3.g[k] = g1;
        w3.g.insert(w3.g.begin() + k + 1, g2);
        break;
      }
    auto nf3 = G.factorize(w3);
    c.require(nf3.theta_minus == nf.theta_minus && nf3.theta_plus == nf.theta_plus &&
                  nf3.g0 == nf.g0,
              "coordinates changed under word edits");
  }
  double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  c.require(secs < 60.0, "exceeded 60 s");
  std::ostringstream d;
  d << "100 words over Lambda_" << opts.ngens << ", " << int(secs * 1000) << " ms";
  return {7, "Unique big-cell factorization", c.ok,
          c.ok ? d.str() : c.why.str(), 0};
}

// 8. semidirect degeneration over rings with A1^2 = 0
CriterionResult criterion8(const SelftestOptions& opts) {
  Check c;
  for (auto f : {Family::sl(2, 1), Family::osp(3, 2)}) {
    auto cb = ChevalleyBasis::build(f);
    auto mod = ModuleRep::defining(cb);
    for (GrRing ring : {GrRing{1, -1}, GrRing{2, 1}, GrRing{4, 1}}) {
      Supergroup G(mod, ring);
      auto rep = G.semidirect_check(opts.seed, 40);
      c.require(rep.odd_commute, f.str() + " odd generators failed to commute");
      c.require(rep.minus_plus_swap, f.str() + " G1- G1+ swap failed");
      c.require(rep.conj_preserves_odd, f.str() + " G0 conjugation left the odd part");
    }
  }
  return {8, "Semidirect degeneration with A1^2 = 0", c.ok,
          c.ok ? "40 samples x 3 rings x 2 families, exact" : c.why.str(), 0};
}

// 9. Lie functor over dual numbers reproduces every structure constant
CriterionResult criterion9(const SelftestOptions&) {
  Check c;
  long total = 0;
  for (auto f : criterion1_families()) {
    auto cb = ChevalleyBasis::build(f);
    auto mod = cb.has_matrices() ? ModuleRep::defining(cb) : ModuleRep::make_adjoint(cb);
    Supergroup G(mod, GrRing{2, -1});
    auto rep = G.lie_functor();
    c.require(rep.kernel_ok, f.str() + " kernel check failed");
    c.require(rep.brackets_ok, f.str() + " bracket table not reproduced");
    total += rep.brackets_checked;
  }
  std::ostringstream d;
  d << total << " bracket pairs across 14 instances";
  return {9, "Lie's Third Theorem check over dual numbers", c.ok, c.ok ? d.str() : c.why.str(),
          0};
}

// 10. Admissible lattices and the Cartan stabilizer, exact, < 10 s
CriterionResult criterion10(const SelftestOptions&) {
  Check c;
  auto t0 = Clock::now();
  // defining modules with integer matrices
  for (auto f : {Family::sl(2, 1), Family::sl(3, 2), Family::osp(2, 2), Family::osp(4, 2),
                 Family::p(2)}) {
    auto cb = ChevalleyBasis::build(f);
    auto mod = ModuleRep::defining(cb);
    auto M = QMatrix::identity(mod.dimV, Scalar(1));
    auto res = admissible_check(mod, M);
    c.require(res.ok, f.str() + " defining lattice: " + res.witness);
    c.require(weight_split_check(mod, M), f.str() + " weight split failed");
    auto bad = M;
    bad(0, 0) = Scalar(Rational(1, 2));
    auto res2 = admissible_check(mod, bad);
    c.require(!res2.ok && !res2.witness.empty(), f.str() + " half-scaled lattice passed");
  }
  // adjoint lattices everywhere
  for (auto f : criterion1_families()) {
    auto cb = ChevalleyBasis::build(f);
    auto mod = ModuleRep::make_adjoint(cb);
    auto M = QMatrix::identity(mod.dimV, Scalar(1));
    auto res = admissible_check(mod, M);
    c.require(res.ok, f.str() + " adjoint lattice: " + res.witness);
    // stabilizer contains all coroots
    const auto& rd = cb.root_datum();
    for (int r = 0; r < int(rd.roots().size()); ++r) {
      if (!rd.has_coroot(r)) continue;
      std::vector<Rational> h(rd.coroot(r).begin(), rd.coroot(r).end());
      c.require(in_cartan_stabilizer(mod, h), f.str() + " coroot outside h_V");
    }
  }
  // the sqrt2-absorbing highest-weight lattice for osp(1|2)
  {
    auto cb = ChevalleyBasis::build(Family::osp(1, 2));
    auto mod = ModuleRep::defining(cb);
    std::vector<Scalar> v(mod.dimV);
    v[1] = Scalar(1);
    auto M = highest_weight_lattice(mod, v);
    c.require(admissible_check(mod, M).ok, "osp(1|2) highest-weight lattice not admissible");
  }
  double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  c.require(secs < 10.0, "exceeded 10 s");
  std::ostringstream d;
  d << "defining + adjoint + highest-weight lattices, " << int(secs * 1000) << " ms";
  return {10, "Admissible lattices and Cartan stabilizer", c.ok,
          c.ok ? d.str() : c.why.str(), 0};
}

} // namespace

std::vector<CriterionResult> run_acceptance(const SelftestOptions& opts) {
  std::vector<std::function<CriterionResult(const SelftestOptions&)>> crits = {
      criterion1, criterion2, criterion3, criterion4, criterion5,
      criterion6, criterion7, criterion8, criterion9, criterion10};
  std::vector<CriterionResult> out;
  for (auto& fn : crits) {
    auto t0 = Clock::now();
    CriterionResult r;
    try {
      r = fn(opts);
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
      r.id = int(out.size()) + 1;
      r.name = "criterion " + std::to_string(r.id);
    }
    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    out.push_back(std::move(r));
  }
  return out;
}

} // namespace supchev
