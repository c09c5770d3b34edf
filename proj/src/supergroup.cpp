#include "supchev/supergroup.hpp"

#include <algorithm>
#include <list>

namespace supchev {

GroupGenerator GroupGenerator::even(int root, GrassmannElem t) {
  GroupGenerator g;
  g.kind = Kind::Even;
  g.root = root;
  g.t = std::move(t);
  return g;
}
GroupGenerator GroupGenerator::odd_free(int root, GrassmannElem theta) {
  GroupGenerator g;
  g.kind = Kind::OddFree;
  g.root = root;
  g.theta = std::move(theta);
  return g;
}
GroupGenerator GroupGenerator::odd_square(int root, GrassmannElem t, GrassmannElem theta) {
  GroupGenerator g;
  g.kind = Kind::OddSquare;
  g.root = root;
  g.t = std::move(t);
  g.theta = std::move(theta);
  return g;
}
GroupGenerator GroupGenerator::torus(std::vector<BigInt> H, GrassmannElem t) {
  GroupGenerator g;
  g.kind = Kind::Torus;
  g.H = std::move(H);
  g.t = std::move(t);
  return g;
}

GroupGenerator GroupGenerator::inverse() const {
  GroupGenerator g = *this;
  switch (kind) {
    case Kind::Even: g.t = -t; break;
    case Kind::OddFree: g.theta = -theta; break;
    case Kind::OddSquare: g.t = -t; g.theta = -theta; break;
    case Kind::Torus: g.t = t.inv(); break;
  }
  return g;
}

GroupWord GroupWord::reversed_inverses() const {
  GroupWord w;
  for (auto it = g.rbegin(); it != g.rend(); ++it) w.g.push_back(it->inverse());
  return w;
}

GrMatrix scalar_lift(const QMatrix& x, GrRing ring) {
  GrMatrix m(x.rows(), x.cols());
  for (int i = 0; i < x.rows(); ++i)
    for (int j = 0; j < x.cols(); ++j)
      if (!x(i, j).is_zero()) m(i, j) = GrassmannElem(ring, x(i, j));
  return m;
}

GrMatrix odd_twisted(const GrassmannElem& theta, const QMatrix& x,
                     const std::vector<int>& row_parity) {
  GrMatrix m(x.rows(), x.cols());
  for (int i = 0; i < x.rows(); ++i)
    for (int j = 0; j < x.cols(); ++j)
      if (!x(i, j).is_zero()) {
        Scalar c = row_parity[j] ? -x(i, j) : x(i, j);
        m(i, j) = c * theta;
      }
  return m;
}

GrMatrix Supergroup::identity() const {
  return GrMatrix::identity(mod_.dimV, GrassmannElem::one(ring_));
}

GrMatrix Supergroup::gen_to_matrix(const GroupGenerator& g) const {
  const RootDatum& rd = basis().root_datum();
  switch (g.kind) {
    case GroupGenerator::Kind::Even: {
      if (rd.root(g.root).parity != Parity::even)
        throw std::domain_error("even generator requires an even root");
      if (!g.t.is_even()) throw std::domain_error("even generator parameter must be even");
      const QMatrix& x = mod_.of_root(g.root);
      GrMatrix sum = identity();
      QMatrix p = x;
      GrassmannElem tp = g.t;
      BigInt fact = 1;
      for (long n = 1; !p.is_zero(); ++n) {
        GrMatrix term = scalar_lift(Scalar(Rational(BigInt(1), fact)) * p, ring_);
        // multiply by t^n
        for (int i = 0; i < term.rows(); ++i)
          for (int j = 0; j < term.cols(); ++j)
            if (!term(i, j).is_zero()) term(i, j) = term(i, j) * tp;
        sum += term;
        p = p * x;
        tp = tp * g.t;
        fact *= (n + 1);
        if (n > mod_.dimV + 1) throw std::logic_error("non-nilpotent exponential");
      }
      return sum;
    }
    case GroupGenerator::Kind::OddFree: {
      if (rd.root(g.root).parity != Parity::odd)
        throw std::domain_error("odd generator requires an odd root");
      if (!g.theta.is_odd()) throw std::domain_error("odd parameter must be odd");
      GrMatrix m = identity();
      m += odd_twisted(g.theta, mod_.of_root(g.root), mod_.row_parity);
      return m;
    }
    case GroupGenerator::Kind::OddSquare: {
      int two = rd.sum_index(g.root, g.root);
      if (two < 0) throw std::domain_error("odd_square requires 2 gamma to be a root");
      if (!g.theta.is_odd() || !g.t.is_even())
        throw std::domain_error("odd_square parameter parities");
      GrMatrix first = identity();
      first += odd_twisted(g.theta, mod_.of_root(g.root), mod_.row_parity);
      // exp(t X_gamma^2)
      QMatrix sq = mod_.of_root(g.root) * mod_.of_root(g.root);
      GrMatrix sum = identity();
      QMatrix p = sq;
      GrassmannElem tp = g.t;
      BigInt fact = 1;
      for (long n = 1; !p.is_zero(); ++n) {
        GrMatrix term = scalar_lift(Scalar(Rational(BigInt(1), fact)) * p, ring_);
        for (int i = 0; i < term.rows(); ++i)
          for (int j = 0; j < term.cols(); ++j)
            if (!term(i, j).is_zero()) term(i, j) = term(i, j) * tp;
        sum += term;
        p = p * sq;
        tp = tp * g.t;
        fact *= (n + 1);
        if (n > mod_.dimV + 1) throw std::logic_error("non-nilpotent exponential");
      }
      return first * sum;
    }
    case GroupGenerator::Kind::Torus: {
      if (!g.t.is_even() || !g.t.is_unit())
        throw std::domain_error("torus parameter must be an even unit");
      if (int(g.H.size()) != basis().rank())
        throw std::domain_error("torus H coordinate size mismatch");
      GrMatrix m(mod_.dimV, mod_.dimV);
      for (int k = 0; k < mod_.dimV; ++k) {
        BigInt e = 0;
        for (int i = 0; i < basis().rank(); ++i) e += g.H[i] * mod_.weights[k][i];
        m(k, k) = g.t.pow(e);
      }
      return m;
    }
  }
  throw std::logic_error("unreachable");
}

GrMatrix Supergroup::word_to_matrix(const GroupWord& w) const {
  GrMatrix m = identity();
  for (auto& g : w.g) m = m * gen_to_matrix(g);
  return m;
}

std::vector<std::pair<int, BigInt>> Supergroup::ad_chain(int alpha, int rho) const {
  const ChevalleyBasis& cb = basis();
  const RootDatum& rd = cb.root_datum();
  std::vector<std::pair<int, BigInt>> chain{{rho, BigInt(1)}};
  Rational c = 1;
  int cur = rho;
  for (long s = 1;; ++s) {
    BigInt cv = cb.cvalue(alpha, cur);
    int next = rd.sum_index(alpha, cur);
    if (cv == 0 || next < 0) break;
    c *= Rational(cv) / Rational(s);
    if (!is_integer(c)) throw std::logic_error("ad chain coefficient not integral");
    cur = next;
    chain.emplace_back(cur, to_int(c));
  }
  return chain;
}

std::vector<GroupGenerator> Supergroup::conjugate_odd_by_even(const GroupGenerator& odd,
                                                              const GroupGenerator& ev) const {
  // ev^{-1} x_rho(psi) ev written as a product of odd generators, so that
  // x_rho(psi) * ev = ev * (result)
  std::vector<GroupGenerator> out;
  if (ev.kind == GroupGenerator::Kind::Torus) {
    BigInt e = 0;
    for (int i = 0; i < basis().rank(); ++i)
      e += ev.H[i] * basis().root_datum().eval_on_basis(odd.root, i);
    out.push_back(GroupGenerator::odd_free(odd.root, ev.t.pow(-e) * odd.theta));
    return out;
  }
  // ev = x_alpha(t): conj by x_alpha(-t): factors x_{rho+s alpha}(c_s (-t)^s psi)
  GrassmannElem pw = GrassmannElem::one(ring_);
  GrassmannElem mt = -ev.t;
  auto chain = ad_chain(ev.root, odd.root);
  for (size_t s = 0; s < chain.size(); ++s) {
    if (s > 0) pw = pw * mt;
    GrassmannElem param = Scalar(Rational(chain[s].second)) * (pw * odd.theta);
    if (!param.is_zero()) out.push_back(GroupGenerator::odd_free(chain[s].first, param));
  }
  return out;
}

Supergroup::CommutatorResult Supergroup::commutator(const GroupGenerator& g1,
                                                    const GroupGenerator& g2) const {
  const RootDatum& rd = basis().root_datum();
  CommutatorResult res;
  GrMatrix m1 = gen_to_matrix(g1), m2 = gen_to_matrix(g2);
  GrassmannElem one = GrassmannElem::one(ring_);
  res.direct = m1 * m2 * m1.inverse(one) * m2.inverse(one);

  auto k1 = g1.kind, k2 = g2.kind;
  using K = GroupGenerator::Kind;
  if (k1 == K::OddFree && k2 == K::Even) {
    // odd-even: (x_g(th), x_a(t)) = prod_{s>0} x_{g+sa}(c_s t^s th), with
    // c_s = -(ad-chain coefficient) in the (g,h) = g h g^-1 h^-1 convention
    auto chain = ad_chain(g2.root, g1.root);
    GrassmannElem pw = one;
    for (size_t s = 1; s < chain.size(); ++s) {
      pw = pw * g2.t;
      GrassmannElem param = Scalar(Rational(-chain[s].second)) * (pw * g1.theta);
      if (!param.is_zero()) res.predicted.g.push_back(GroupGenerator::odd_free(chain[s].first, param));
    }
  } else if (k1 == K::OddFree && k2 == K::OddFree) {
    if (rd.sum_is_zero(g1.root, g2.root)) {
      // opposite odd roots: (x_g(th), x_{-g}(et)) = 1 - sigma_g th et H_g
      GrassmannElem u = one - Scalar(rd.sigma(g1.root)) * (g1.theta * g2.theta);
      std::vector<BigInt> H;
      for (long h : rd.coroot(g1.root)) H.push_back(h);
      res.predicted.g.push_back(GroupGenerator::torus(H, u));
    } else {
      int s = rd.sum_index(g1.root, g2.root);
      if (s >= 0) {
        GrassmannElem param = Scalar(Rational(-basis().cvalue(g1.root, g2.root))) *
                              (g1.theta * g2.theta);
        if (!param.is_zero()) res.predicted.g.push_back(GroupGenerator::even(s, param));
      }
    }
  } else if (k1 == K::Torus) {
    // torus conjugation: h(t) x_b(u) h(t)^{-1} = x_b(t^{b(H)} u), hence the
    // commutator is x_b(t^{b(H)} u) x_b(u)^{-1}
    GroupGenerator conj = g2;
    BigInt e = 0;
    for (int i = 0; i < basis().rank(); ++i)
      e += g1.H[i] * rd.eval_on_basis(g2.root, i);
    if (k2 == K::Even) conj.t = g1.t.pow(e) * g2.t;
    else if (k2 == K::OddFree) conj.theta = g1.t.pow(e) * g2.theta;
    else if (k2 == K::OddSquare) {
      conj.theta = g1.t.pow(e) * g2.theta;
      conj.t = g1.t.pow(2 * e) * g2.t;
    } else
      throw std::domain_error("commutator: torus-torus is trivial");
    res.predicted.g.push_back(conj);
    res.predicted.g.push_back(g2.inverse());
  } else {
    throw std::domain_error("commutator: unsupported generator pair for the closed form");
  }
  res.predicted_matrix = word_to_matrix(res.predicted);
  res.equal = (res.predicted_matrix == res.direct);
  return res;
}

NormalForm Supergroup::factorize(const GroupWord& w) const {
  const RootDatum& rd = basis().root_datum();
  GrassmannElem one = GrassmannElem::one(ring_);
  GrMatrix g0 = identity();
  std::list<GroupGenerator> odd;

  // z_gamma = c_{gamma,gamma}/2 for 1|1-type roots
  auto zgamma = [&](int root) { return Rational(basis().cvalue(root, root)) / 2; };

  // consume a generator from the right: state value = g0 * odd * g
  auto consume = [&](const GroupGenerator& g) {
    switch (g.kind) {
      case GroupGenerator::Kind::OddFree:
        if (!g.theta.is_zero()) odd.push_back(g);
        break;
      case GroupGenerator::Kind::OddSquare: {
        if (!g.theta.is_zero())
          odd.push_back(GroupGenerator::odd_free(g.root, g.theta));
        int two = rd.sum_index(g.root, g.root);
        GrassmannElem par = Scalar(zgamma(g.root)) * g.t;
        if (!par.is_zero()) {
          // even factor travels left through the odd suffix
          GroupGenerator ev = GroupGenerator::even(two, par);
          std::list<GroupGenerator> conj;
          for (auto& o : odd)
            for (auto& c : conjugate_odd_by_even(o, ev)) conj.push_back(c);
          odd = std::move(conj);
          g0 = g0 * gen_to_matrix(ev);
        }
        break;
      }
      case GroupGenerator::Kind::Even:
      case GroupGenerator::Kind::Torus: {
        if (g.kind == GroupGenerator::Kind::Even && g.t.is_zero()) break;
        std::list<GroupGenerator> conj;
        for (auto& o : odd)
          for (auto& c : conjugate_odd_by_even(o, g)) conj.push_back(c);
        odd = std::move(conj);
        g0 = g0 * gen_to_matrix(g);
        break;
      }
    }
  };
  for (auto& g : w.g) consume(g);

  // Order the odd factors.  A swap or merge at position p produces an even
  // correction C sitting right after p; flushing C into g0 conjugates the
  // prefix [0, p] by C (value: g0 Q C T = (g0 C) (C^-1 Q C) T).  Correction
  // parameters live in ever higher powers of A1, so nilpotence terminates
  // the loop.
  std::vector<GroupGenerator> ov(odd.begin(), odd.end());
  auto key = [&](int root) { return rd.order_key_root(root); };
  auto flush_correction = [&](const GroupGenerator& corr, size_t prefix_end) {
    // conjugate ov[0..prefix_end) by corr^{-1} ... i.e. x -> corr^-1 x corr,
    // which is exactly conjugate_odd_by_even(x, corr)
    std::vector<GroupGenerator> prefix;
    for (size_t k = 0; k < prefix_end; ++k)
      for (auto& c : conjugate_odd_by_even(ov[k], corr)) prefix.push_back(c);
    std::vector<GroupGenerator> rest(ov.begin() + prefix_end, ov.end());
    ov = std::move(prefix);
    ov.insert(ov.end(), rest.begin(), rest.end());
    g0 = g0 * gen_to_matrix(corr);
  };
  long guard = 0;
  bool changed = true;
  while (changed) {
    if (++guard > 100000) throw std::logic_error("factorize did not terminate");
    changed = false;
    for (size_t i = 0; i + 1 < ov.size(); ++i) {
      GroupGenerator a = ov[i], b = ov[i + 1];
      if (a.root == b.root) {
        GrassmannElem th = a.theta + b.theta;
        int two = rd.sum_index(a.root, a.root);
        GrassmannElem corr_par;
        if (two >= 0) corr_par = Scalar(-zgamma(a.root)) * (a.theta * b.theta);
        // replace the pair by the merged factor
        ov.erase(ov.begin() + i + 1);
        if (th.is_zero()) ov.erase(ov.begin() + i);
        else ov[i] = GroupGenerator::odd_free(a.root, th);
        size_t after = th.is_zero() ? i : i + 1;
        if (two >= 0 && !corr_par.is_zero())
          flush_correction(GroupGenerator::even(two, corr_par), after);
        changed = true;
        break;
      }
      if (key(a.root) > key(b.root)) {
        GroupGenerator corr;
        bool has_corr = false;
        if (rd.sum_is_zero(a.root, b.root)) {
          GrassmannElem u = one - a.theta * b.theta;
          if (u != one) {
            std::vector<BigInt> H;
            for (long h : rd.coroot(a.root)) H.push_back(h);
            corr = GroupGenerator::torus(H, u);
            has_corr = true;
          }
        } else {
          int s = rd.sum_index(a.root, b.root);
          if (s >= 0) {
            GrassmannElem par =
                Scalar(Rational(-basis().cvalue(a.root, b.root))) * (a.theta * b.theta);
            if (!par.is_zero()) {
              corr = GroupGenerator::even(s, par);
              has_corr = true;
            }
          }
        }
        ov[i] = b;
        ov[i + 1] = a;
        if (has_corr) flush_correction(corr, i + 2);
        changed = true;
        break;
      }
    }
  }

  NormalForm nf;
  nf.g0 = g0;
  for (auto& o : ov) {
    if (rd.root(o.root).positive) nf.theta_plus[o.root] = o.theta;
    else nf.theta_minus[o.root] = o.theta;
  }
  GrMatrix check = normal_form_matrix(nf);
  if (!(check == word_to_matrix(w)))
    throw std::logic_error("factorize: normal form does not reproduce the word matrix");
  // g0 lies in G_0: block-diagonal with even entries
  for (int i = 0; i < mod_.dimV; ++i)
    for (int j = 0; j < mod_.dimV; ++j)
      if (mod_.row_parity[i] != mod_.row_parity[j] && !nf.g0(i, j).is_zero())
        throw std::logic_error("factorize: g0 has off-diagonal odd block entries");
  return nf;
}

GrMatrix Supergroup::normal_form_matrix(const NormalForm& nf) const {
  GrMatrix m = nf.g0;
  for (auto& [root, th] : nf.theta_minus)
    m = m * gen_to_matrix(GroupGenerator::odd_free(root, th));
  for (auto& [root, th] : nf.theta_plus)
    m = m * gen_to_matrix(GroupGenerator::odd_free(root, th));
  return m;
}

NormalForm Supergroup::extract_odd_coordinates(const GrMatrix& g) const {
  const RootDatum& rd = basis().root_datum();
  int d = mod_.dimV;
  int N = ring_.n_gens;
  GrassmannElem one = GrassmannElem::one(ring_);

  // reference entries per odd root: (i, j, scalar) with rho(X)_ij != 0
  std::vector<int> odd_roots;
  for (int r = 0; r < int(rd.roots().size()); ++r)
    if (rd.root(r).parity == Parity::odd) odd_roots.push_back(r);

  auto graded = [&](const GrMatrix& m, int k) {
    GrMatrix out(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) out(i, j) = m(i, j).graded_part(k);
    return out;
  };

  // degree-0 part: the body of g0
  GrMatrix g0 = graded(g, 0);
  {
    // body must be invertible
    g0.inverse(one);
  }
  QMatrix body_inv_s(d, d);
  {
    QMatrix body(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) body(i, j) = g(i, j).graded_part(0).body();
    body_inv_s = body.inverse(Scalar(1));
  }
  GrMatrix body_inv = scalar_lift(body_inv_s, ring_);

  std::map<int, GrassmannElem> thm, thp;
  for (int r : odd_roots) {
    thm[r] = GrassmannElem(ring_);
  }
  auto current = [&]() {
    NormalForm nf;
    nf.g0 = g0;
    for (int r : odd_roots) {
      if (thm[r].is_zero()) continue;
      if (rd.root(r).positive) nf.theta_plus[r] = thm[r];
      else nf.theta_minus[r] = thm[r];
    }
    return normal_form_matrix(nf);
  };

  for (int k = 1; k <= N; ++k) {
    GrMatrix approx = current();
    GrMatrix R = graded(g, k) - graded(approx, k);
    if (R.is_zero()) continue;
    if (k % 2 == 1) {
      // R = g0[0] * sum theta_d[k] (.) rho(X_d)
      GrMatrix S = body_inv * R;
      GrMatrix rebuilt(d, d);
      for (int r : odd_roots) {
        const QMatrix& x = mod_.of_root(r);
        // any nonzero entry serves as reference
        GrassmannElem val;
        bool found = false;
        for (int i = 0; i < d && !found; ++i)
          for (int j = 0; j < d && !found; ++j)
            if (!x(i, j).is_zero()) {
              Scalar c = mod_.row_parity[j] ? -x(i, j) : x(i, j);
              val = c.inv() * S(i, j);
              found = true;
            }
        if (!found || val.is_zero()) continue;
        thm[r] += val;
        rebuilt += odd_twisted(val, x, mod_.row_parity);
      }
      if (!(S == rebuilt))
        throw std::domain_error("extract: degree residual outside the odd root span");
    } else {
      // even correction to g0; must stay block-diagonal
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
          if (!R(i, j).is_zero()) {
            if (mod_.row_parity[i] != mod_.row_parity[j])
              throw std::domain_error("extract: even residual in the odd block");
            g0(i, j) += R(i, j);
          }
    }
  }
  if (!(current() == g))
    throw std::domain_error("extract: element does not factor over this ring");
  NormalForm nf;
  nf.g0 = g0;
  for (int r : odd_roots) {
    if (thm[r].is_zero()) continue;
    if (rd.root(r).positive) nf.theta_plus[r] = thm[r];
    else nf.theta_minus[r] = thm[r];
  }
  return nf;
}

Supergroup::SemidirectReport Supergroup::semidirect_check(std::uint64_t seed, int samples) const {
  if (ring_.degree_cap() > 1)
    throw std::domain_error("semidirect_check needs a ring with A1^2 = 0");
  const RootDatum& rd = basis().root_datum();
  SemidirectReport rep;
  std::mt19937_64 rng(seed);
  std::vector<int> odd, even;
  for (int r = 0; r < int(rd.roots().size()); ++r)
    (rd.root(r).parity == Parity::odd ? odd : even).push_back(r);
  GrassmannElem one = GrassmannElem::one(ring_);
  for (int it = 0; it < samples; ++it) {
    int a = odd[rng() % odd.size()], b = odd[rng() % odd.size()];
    auto ga = GroupGenerator::odd_free(a, random_soul_odd(rng, ring_));
    auto gb = GroupGenerator::odd_free(b, random_soul_odd(rng, ring_));
    GrMatrix ma = gen_to_matrix(ga), mb = gen_to_matrix(gb);
    ++rep.pairs_checked;
    if (!(ma * mb == mb * ma)) rep.odd_commute = false;
    // minus/plus products coincide elementwise under A1^2 = 0
    if (rd.root(a).positive != rd.root(b).positive) {
      auto [neg, pos] = rd.root(a).positive ? std::pair{gb, ga} : std::pair{ga, gb};
      GrMatrix mn = gen_to_matrix(neg), mp = gen_to_matrix(pos);
      if (!(mn * mp == mp * mn)) rep.minus_plus_swap = false;
    }
    // G0-conjugation preserves the odd type
    GroupGenerator h = GroupGenerator::torus(
        [&] {
          std::vector<BigInt> H(basis().rank(), 0);
          H[rng() % basis().rank()] = 1 + long(rng() % 2);
          return H;
        }(),
        random_unit(rng, ring_));
    GrMatrix mh = gen_to_matrix(h);
    GrMatrix conj = mh * ma * mh.inverse(one);
    BigInt e = 0;
    for (int i = 0; i < basis().rank(); ++i) e += h.H[i] * rd.eval_on_basis(a, i);
    GrMatrix want = gen_to_matrix(GroupGenerator::odd_free(a, h.t.pow(e) * ga.theta));
    if (!(conj == want)) rep.conj_preserves_odd = false;
    if (!even.empty()) {
      GroupGenerator xe = GroupGenerator::even(even[rng() % even.size()],
                                               random_even_param(rng, ring_));
      GrMatrix me = gen_to_matrix(xe);
      GrMatrix conj2 = me * ma * me.inverse(one);
      // must equal the predicted product of odd one-parameter factors
      GrMatrix pred = identity();
      auto chain = ad_chain(xe.root, a);
      GrassmannElem pw = one;
      for (size_t s = 0; s < chain.size(); ++s) {
        if (s > 0) pw = pw * xe.t;
        GrassmannElem param = Scalar(Rational(chain[s].second)) * (pw * ga.theta);
        if (!param.is_zero())
          pred = pred * gen_to_matrix(GroupGenerator::odd_free(chain[s].first, param));
      }
      if (!(conj2 == pred)) rep.conj_preserves_odd = false;
    }
  }
  return rep;
}

Supergroup::LieFunctorReport Supergroup::lie_functor() const {
  LieFunctorReport rep;
  const ChevalleyBasis& cb = basis();
  int d = mod_.dimV;
  GrassmannElem gone = GrassmannElem::one(ring_);
  GrassmannElem th1 = GrassmannElem::theta(ring_, 1);
  GrassmannElem th2 = GrassmannElem::theta(ring_, 2);
  DualGrassmann one{gone, GrassmannElem(ring_)};

  auto lift = [&](const GrMatrix& m) {
    DualMatrix dm(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) dm(i, j) = DualGrassmann{m(i, j), GrassmannElem(ring_)};
    return dm;
  };
  auto eps_of = [&](const GrMatrix& m) {
    DualMatrix dm(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) dm(i, j) = DualGrassmann{GrassmannElem(ring_), m(i, j)};
    return dm;
  };

  // coefficient-dressed matrix of a basis element: even ones plain, odd ones
  // twisted with a Grassmann generator
  auto dressed = [&](int b, const GrassmannElem& th) {
    return cb.basis_parity(b) == 1 ? odd_twisted(th, mod_.rho[b], mod_.row_parity)
                                   : scalar_lift(mod_.rho[b], ring_);
  };

  // (i) kernel of G(p): 1 + eps X maps to the identity under eps -> 0
  for (int b = 0; b < cb.dim(); ++b) {
    DualMatrix e = lift(identity());
    GrMatrix x = dressed(b, th1);
    e += eps_of(x);
    ++rep.kernel_checked;
    // G(p): drop the eps part
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        if (e(i, j).v != (i == j ? gone : GrassmannElem(ring_))) rep.kernel_ok = false;
  }

  // (ii) ad(1 + eps a)(b) = b + eps [a, b], reproducing the whole table
  for (int a = 0; a < cb.dim(); ++a) {
    GrassmannElem ca = cb.basis_parity(a) == 1 ? th1 : gone;
    GrMatrix ma = dressed(a, th1);
    DualMatrix ga = lift(identity());
    ga += eps_of(ma);
    DualMatrix ga_inv = lift(identity());
    ga_inv -= eps_of(ma);
    for (int b = 0; b < cb.dim(); ++b) {
      GrassmannElem cbv = cb.basis_parity(b) == 1 ? th2 : gone;
      GrMatrix mb = dressed(b, th2);
      DualMatrix res = ga * lift(mb) * ga_inv;
      ++rep.brackets_checked;
      // value part must be b itself
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
          if (res(i, j).v != mb(i, j)) rep.brackets_ok = false;
      // eps part must equal (-1)^{p(a) p(b)}-free tensor-sign bracket:
      // [ca (x) a, cb (x) b] = (-1)^{p(a) p(b)} ca cb (x) [a, b]
      GrMatrix want(d, d);
      GrassmannElem coef = ca * cbv;
      if (cb.basis_parity(a) == 1 && cb.basis_parity(b) == 1) coef = -coef;
      for (auto& [k, c] : cb.bracket(a, b)) {
        GrMatrix term = cb.basis_parity(k) == 1
                            ? odd_twisted(coef, mod_.rho[k], mod_.row_parity)
                            : [&] {
                                GrMatrix t2 = scalar_lift(mod_.rho[k], ring_);
                                for (int i = 0; i < d; ++i)
                                  for (int j = 0; j < d; ++j)
                                    if (!t2(i, j).is_zero()) t2(i, j) = t2(i, j) * coef;
                                return t2;
                              }();
        for (int i = 0; i < d; ++i)
          for (int j = 0; j < d; ++j)
            if (!term(i, j).is_zero()) want(i, j) += Scalar(c) * term(i, j);
      }
      GrMatrix eps_part(d, d);
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) eps_part(i, j) = res(i, j).d;
      if (!(eps_part == want)) rep.brackets_ok = false;
    }
  }
  return rep;
}

GrassmannElem random_soul_odd(std::mt19937_64& rng, GrRing ring) {
  GrassmannElem x(ring);
  for (int i = 1; i <= ring.n_gens; ++i) {
    if (rng() % 2) {
      long c = long(rng() % 5) - 2;
      if (c) x += Scalar(c) * GrassmannElem::theta(ring, i);
    }
  }
  // occasionally add a degree-3 term
  if (ring.degree_cap() >= 3 && ring.n_gens >= 3 && rng() % 3 == 0) {
    auto t = GrassmannElem::theta(ring, 1) * GrassmannElem::theta(ring, 2) *
             GrassmannElem::theta(ring, 3);
    x += Scalar(long(rng() % 3) - 1) * t;
  }
  return x;
}

GrassmannElem random_even_param(std::mt19937_64& rng, GrRing ring) {
  GrassmannElem x(ring, Scalar(long(rng() % 7) - 3));
  if (ring.degree_cap() >= 2 && ring.n_gens >= 2) {
    for (int tries = 0; tries < 2; ++tries) {
      int i = 1 + int(rng() % ring.n_gens), j = 1 + int(rng() % ring.n_gens);
      if (i == j) continue;
      long c = long(rng() % 5) - 2;
      if (c)
        x += Scalar(c) * (GrassmannElem::theta(ring, i) * GrassmannElem::theta(ring, j));
    }
  }
  return x;
}

GrassmannElem random_unit(std::mt19937_64& rng, GrRing ring) {
  GrassmannElem x = random_even_param(rng, ring);
  Scalar b = x.body();
  // force a nonzero body from {1, -1, 2, -2, 3}
  static const long bodies[] = {1, -1, 2, -2, 3};
  x += GrassmannElem(ring, Scalar(bodies[rng() % 5]) - b);
  return x;
}

GroupWord random_word(std::mt19937_64& rng, const ChevalleyBasis& cb, GrRing ring, int len) {
  const RootDatum& rd = cb.root_datum();
  GroupWord w;
  for (int i = 0; i < len; ++i) {
    int pick = int(rng() % 3);
    if (pick == 0) {
      std::vector<int> even;
      for (int r = 0; r < int(rd.roots().size()); ++r)
        if (rd.root(r).parity == Parity::even) even.push_back(r);
      w.g.push_back(GroupGenerator::even(even[rng() % even.size()],
                                         random_even_param(rng, ring)));
    } else if (pick == 1) {
      std::vector<BigInt> H(cb.rank(), 0);
      H[rng() % cb.rank()] = long(rng() % 3) - 1;
      w.g.push_back(GroupGenerator::torus(std::move(H), random_unit(rng, ring)));
    } else {
      std::vector<int> odd;
      for (int r = 0; r < int(rd.roots().size()); ++r)
        if (rd.root(r).parity == Parity::odd) odd.push_back(r);
      int root = odd[rng() % odd.size()];
      int two = rd.sum_index(root, root);
      if (two >= 0 && rng() % 2)
        w.g.push_back(GroupGenerator::odd_square(root, random_even_param(rng, ring),
                                                 random_soul_odd(rng, ring)));
      else
        w.g.push_back(GroupGenerator::odd_free(root, random_soul_odd(rng, ring)));
    }
  }
  return w;
}

} // namespace supchev
