#include "supchev/rootdata.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace supchev {

std::string Family::str() const {
  std::ostringstream os;
  switch (tag) {
    case Tag::SL: os << "sl(" << m << "|" << n << ")"; break;
    case Tag::OSP: os << "osp(" << m << "|" << 2 * n << ")"; break;
    case Tag::P: os << "P(" << n << ")"; break;
    case Tag::D21A: os << "D(2,1;" << a << ")"; break;
  }
  return os.str();
}

Family Family::sl(int m, int n) {
  if (m < 1 || n < 1 || m == n) throw std::domain_error("sl(m|n): need m,n >= 1 and m != n");
  return {Tag::SL, m, n, 0};
}
Family Family::osp(int M, int twoN) {
  if (M < 1 || twoN < 2 || twoN % 2 != 0)
    throw std::domain_error("osp(M|2n): need M >= 1 and even second size >= 2");
  return {Tag::OSP, M, twoN / 2, 0};
}
Family Family::p(int n) {
  if (n < 2 || n == 3) throw std::domain_error("P(n): need n >= 2, n != 3");
  return {Tag::P, 0, n, 0};
}
Family Family::d21a(long a) {
  if (a == 0 || a == -1) throw std::domain_error("D(2,1;a): need integer a not in {0,-1}");
  return {Tag::D21A, 0, 0, a};
}

Family Family::parse(const std::string& s0) {
  std::string s;
  for (char c : s0)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  auto starts = [&](const char* p) { return s.rfind(p, 0) == 0; };
  auto nums = [&](size_t from, char sep, char close) -> std::pair<long, long> {
    size_t mid = s.find(sep, from), end = s.find(close, from);
    if (mid == std::string::npos || end == std::string::npos || mid > end)
      throw std::domain_error("bad family spec: " + s0);
    return {std::stol(s.substr(from, mid - from)), std::stol(s.substr(mid + 1, end - mid - 1))};
  };
  if (starts("sl(")) {
    auto [m, n] = nums(3, '|', ')');
    return sl(int(m), int(n));
  }
  if (starts("osp(")) {
    auto [M, N] = nums(4, '|', ')');
    return osp(int(M), int(N));
  }
  if (starts("P(") || starts("p(")) {
    size_t end = s.find(')');
    if (end == std::string::npos) throw std::domain_error("bad family spec: " + s0);
    return p(std::stoi(s.substr(2, end - 2)));
  }
  if (starts("D(2,1;") || starts("d(2,1;")) {
    size_t end = s.find(')');
    if (end == std::string::npos) throw std::domain_error("bad family spec: " + s0);
    return d21a(std::stol(s.substr(6, end - 6)));
  }
  throw std::domain_error("unknown family spec: " + s0);
}

namespace {

struct RawRoot {
  std::vector<long> coords;
  Parity parity;
  bool positive;
};

// first nonzero coordinate along the given priority list decides the sign
bool lex_positive(const std::vector<long>& coords, const std::vector<int>& prio) {
  for (int k : prio)
    if (coords[k] != 0) return coords[k] > 0;
  throw std::domain_error("zero vector has no sign");
}

} // namespace

RootDatum RootDatum::build(const Family& f) {
  RootDatum rd;
  rd.fam_ = f;

  std::vector<RawRoot> raw;
  std::vector<std::vector<long>> cartan_diag; // Cartan basis as diagonal vectors
  // positions of the eps/delta functionals in the diagonal, per coordinate
  std::vector<int> wpos;

  auto vec = [](int dim) { return std::vector<long>(dim, 0); };

  if (f.tag == Family::Tag::SL) {
    int M = f.m, N = f.n, sz = M + N;
    rd.msize_ = sz;
    rd.rank_ = sz - 1;
    int dim = sz;
    wpos.resize(dim);
    for (int i = 0; i < dim; ++i) wpos[i] = i;
    for (int i = 0; i < sz; ++i)
      for (int j = 0; j < sz; ++j) {
        if (i == j) continue;
        auto c = vec(dim);
        c[i] = 1; c[j] -= 1;
        raw.push_back({c, ((i < M) != (j < M)) ? Parity::odd : Parity::even, i < j});
      }
    for (int k = 0; k < rd.rank_; ++k) {
      auto h = vec(sz);
      h[k] = 1;
      h[k + 1] = (k == M - 1) ? 1 : -1;
      cartan_diag.push_back(h);
    }
  } else if (f.tag == Family::Tag::OSP) {
    int M = f.m, q = f.n, m = M / 2;
    bool mid = (M % 2 == 1);
    rd.msize_ = M + 2 * q;
    rd.rank_ = m + q;
    int dim = m + q;
    wpos.resize(dim);
    for (int i = 0; i < m; ++i) wpos[i] = i;
    for (int j = 0; j < q; ++j) wpos[m + j] = M + j;
    auto eps = [&](int i) { return i; };
    auto del = [&](int j) { return m + j; };
    std::vector<int> prio;
    if (M == 2) { // C-type: eps_1 leads
      prio.push_back(eps(0));
      for (int j = 0; j < q; ++j) prio.push_back(del(j));
    } else {
      for (int j = 0; j < q; ++j) prio.push_back(del(j));
      for (int i = 0; i < m; ++i) prio.push_back(eps(i));
    }
    auto push = [&](std::vector<long> c, Parity p) {
      raw.push_back({c, p, lex_positive(c, prio)});
    };
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        for (int si : {1, -1}) for (int sj : {1, -1}) {
          auto c = vec(dim); c[eps(i)] = si; c[eps(j)] = sj;
          push(c, Parity::even);
        }
    if (mid)
      for (int i = 0; i < m; ++i)
        for (int s : {1, -1}) { auto c = vec(dim); c[eps(i)] = s; push(c, Parity::even); }
    for (int i = 0; i < q; ++i)
      for (int j = i + 1; j < q; ++j)
        for (int si : {1, -1}) for (int sj : {1, -1}) {
          auto c = vec(dim); c[del(i)] = si; c[del(j)] = sj;
          push(c, Parity::even);
        }
    for (int i = 0; i < q; ++i)
      for (int s : {2, -2}) { auto c = vec(dim); c[del(i)] = s; push(c, Parity::even); }
    if (mid)
      for (int j = 0; j < q; ++j)
        for (int s : {1, -1}) { auto c = vec(dim); c[del(j)] = s; push(c, Parity::odd); }
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < q; ++j)
        for (int si : {1, -1}) for (int sj : {1, -1}) {
          auto c = vec(dim); c[eps(i)] = si; c[del(j)] = sj;
          push(c, Parity::odd);
        }
    for (int i = 0; i < m; ++i) {
      auto h = vec(rd.msize_);
      h[i] = 1; h[i + m] = -1;
      cartan_diag.push_back(h);
    }
    for (int j = 0; j < q; ++j) {
      auto h = vec(rd.msize_);
      h[M + j] = 1; h[M + q + j] = -1;
      cartan_diag.push_back(h);
    }
  } else if (f.tag == Family::Tag::P) {
    int n = f.n, sz = 2 * (n + 1);
    rd.msize_ = sz;
    rd.rank_ = n;
    int dim = n + 1;
    wpos.resize(dim);
    for (int i = 0; i < dim; ++i) wpos[i] = i;
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j) {
        if (i == j) continue;
        auto c = vec(dim); c[i] = 1; c[j] = -1;
        raw.push_back({c, Parity::even, i < j});
      }
    for (int i = 0; i <= n; ++i)
      for (int j = i; j <= n; ++j) {
        auto c = vec(dim); c[i] += 1; c[j] += 1;
        raw.push_back({c, Parity::odd, true});
        if (i < j) {
          auto d = vec(dim); d[i] = -1; d[j] = -1;
          raw.push_back({d, Parity::odd, false});
        }
      }
    for (int i = 0; i < n; ++i) {
      auto h = vec(sz);
      h[i] = 1; h[i + 1] = -1; h[n + 1 + i] = -1; h[n + 2 + i] = 1;
      cartan_diag.push_back(h);
    }
  } else { // D21A
    rd.msize_ = 0;
    rd.rank_ = 3;
    auto add = [&](long c1, long c2, long c3, Parity p) {
      raw.push_back({{c1, c2, c3}, p, true});
      raw.push_back({{-c1, -c2, -c3}, p, false});
    };
    add(1, 0, 0, Parity::odd);
    add(0, 1, 0, Parity::even);
    add(0, 0, 1, Parity::even);
    add(1, 1, 0, Parity::odd);
    add(1, 0, 1, Parity::odd);
    add(1, 1, 1, Parity::odd);
    add(2, 1, 1, Parity::even);
  }

  // hvals of a coordinate vector
  auto hvals_of = [&](const std::vector<long>& c) {
    std::vector<long> hv(rd.rank_, 0);
    if (f.tag == Family::Tag::D21A) {
      long a = f.a;
      // values on h_1, h_2, h_3 via the Cartan matrix rows
      long v1 = 0 * c[0] + 1 * c[1] + a * c[2];
      long v2 = -1 * c[0] + 2 * c[1] + 0 * c[2];
      long v3 = -1 * c[0] + 0 * c[1] + 2 * c[2];
      long numer = 2 * v1 - v2 - a * v3;
      if (numer % (1 + a) != 0) throw std::logic_error("D(2,1;a): non-integral weight");
      hv = {v1, numer / (1 + a), v3};
    } else {
      for (int k = 0; k < rd.rank_; ++k) {
        long v = 0;
        for (size_t t = 0; t < c.size(); ++t) v += c[t] * cartan_diag[k][wpos[t]];
        hv[k] = v;
      }
    }
    return hv;
  };

  // fixed total order: even-neg, even-pos, odd-neg, odd-pos, lex inside
  std::stable_sort(raw.begin(), raw.end(), [](const RawRoot& x, const RawRoot& y) {
    auto blk = [](const RawRoot& r) {
      return (r.parity == Parity::even ? 0 : 2) + (r.positive ? 1 : 0);
    };
    if (blk(x) != blk(y)) return blk(x) < blk(y);
    return x.coords < y.coords;
  });

  int na = 0, ng = 0;
  for (auto& r : raw) {
    Root root;
    root.coords = r.coords;
    root.parity = r.parity;
    root.positive = r.positive;
    root.hvals = hvals_of(r.coords);
    if (r.parity == Parity::even) { root.label = "a" + std::to_string(++na); ++rd.n_even_; }
    else root.label = "g" + std::to_string(++ng);
    rd.roots_.push_back(std::move(root));
  }
  for (size_t i = 0; i < rd.roots_.size(); ++i) {
    auto [it, fresh] = rd.by_hvals_.emplace(rd.roots_[i].hvals, int(i));
    if (!fresh) throw std::logic_error("duplicate root functional in " + f.str());
    rd.by_coords_.emplace(rd.roots_[i].coords, int(i));
  }

  // coroots
  rd.coroots_.assign(rd.roots_.size(), {});
  auto diag_to_hbasis = [&](const std::vector<long>& dg) {
    // solve dg = sum x_k * cartan_diag[k] over Q, assert integral
    std::vector<std::vector<Rational>> rows;
    for (auto& h : cartan_diag) {
      std::vector<Rational> r(h.begin(), h.end());
      rows.push_back(r);
    }
    std::vector<Rational> b(dg.begin(), dg.end());
    auto x = solve_left(rows, b);
    if (!x) throw std::logic_error("coroot outside Cartan span");
    std::vector<long> out;
    for (auto& v : *x) {
      if (!is_integer(v)) throw std::logic_error("non-integral coroot coordinates");
      out.push_back(long(to_int(v)));
    }
    return out;
  };

  for (size_t i = 0; i < rd.roots_.size(); ++i) {
    const Root& r = rd.roots_[i];
    // only roots alpha with -alpha also a root have coroots
    std::vector<long> neg(r.hvals.size());
    for (size_t k = 0; k < neg.size(); ++k) neg[k] = -r.hvals[k];
    if (!rd.by_hvals_.count(neg)) continue;

    if (f.tag == Family::Tag::SL) {
      int M = f.m;
      int a = -1, b = -1;
      for (size_t t = 0; t < r.coords.size(); ++t) {
        if (r.coords[t] == 1) a = int(t);
        if (r.coords[t] == -1) b = int(t);
      }
      std::vector<long> dg(rd.msize_, 0);
      bool odd = (a < M) != (b < M);
      if (!odd) { dg[a] = 1; dg[b] = -1; }
      else if (a < M) { dg[a] = 1; dg[b] = 1; }      // eps_a - delta_b
      else { dg[a] = -1; dg[b] = -1; }               // delta_a - eps_b -> -(e_bb + e_aa)
      rd.coroots_[i] = diag_to_hbasis(dg);
    } else if (f.tag == Family::Tag::OSP) {
      int M = f.m, q = f.n, m = M / 2;
      long se = (M == 2) ? 1 : -1, sd = -se; // (eps,eps) and (delta,delta)
      // nu(alpha) in the (E_i, D_j) basis, which is the Cartan basis
      std::vector<Rational> nu(rd.rank_);
      long norm = 0;
      for (int t = 0; t < m; ++t) { nu[t] = Rational(se * r.coords[t]); norm += se * r.coords[t] * r.coords[t]; }
      for (int t = 0; t < q; ++t) { nu[m + t] = Rational(sd * r.coords[m + t]); norm += sd * r.coords[m + t] * r.coords[m + t]; }
      std::vector<long> out(rd.rank_);
      for (int k = 0; k < rd.rank_; ++k) {
        Rational v = norm != 0 ? Rational(2) * nu[k] / Rational(norm) : nu[k];
        if (!is_integer(v)) throw std::logic_error("non-integral osp coroot");
        out[k] = long(to_int(v));
      }
      rd.coroots_[i] = out;
    } else if (f.tag == Family::Tag::P) {
      int n = f.n;
      // even eps_a - eps_b: sl coroot; odd +-(eps_a + eps_b): +-H_{alpha_ab}
      int a = -1, b = -1;
      bool odd = r.parity == Parity::odd;
      long sgn = 1;
      if (!odd) {
        for (size_t t = 0; t < r.coords.size(); ++t) {
          if (r.coords[t] == 1) a = int(t);
          if (r.coords[t] == -1) b = int(t);
        }
      } else {
        sgn = r.positive ? 1 : -1;
        std::vector<int> idx;
        for (size_t t = 0; t < r.coords.size(); ++t)
          if (r.coords[t] != 0) idx.push_back(int(t));
        if (idx.size() != 2) continue; // gamma_i = 2 eps_i has no opposite
        a = idx[0]; b = idx[1];
      }
      std::vector<long> dg(rd.msize_, 0);
      dg[a] += sgn; dg[b] -= sgn;
      dg[n + 1 + a] -= sgn; dg[n + 1 + b] += sgn;
      rd.coroots_[i] = diag_to_hbasis(dg);
    } else { // D21A
      long a = f.a;
      const std::vector<long>& c = r.coords;
      // coroot in (h1,h2,h3) coordinates
      std::vector<long> h(3, 0);
      auto set = [&](long x1, long x2, long x3) { h = {x1, x2, x3}; };
      std::vector<long> abs_c = {std::abs(c[0]), std::abs(c[1]), std::abs(c[2])};
      long sgn = 0;
      for (long v : c) if (v != 0) { sgn = v > 0 ? 1 : -1; break; }
      if (abs_c == std::vector<long>{1, 0, 0}) set(1, 0, 0);
      else if (abs_c == std::vector<long>{0, 1, 0}) set(0, 1, 0);
      else if (abs_c == std::vector<long>{0, 0, 1}) set(0, 0, 1);
      else if (abs_c == std::vector<long>{1, 1, 0}) set(1, -1, 0);
      else if (abs_c == std::vector<long>{1, 0, 1}) set(1, 0, -a);
      else if (abs_c == std::vector<long>{1, 1, 1}) set(1, -1, -a);
      else { // theta: coroot is the basis vector H_2 itself
        rd.coroots_[i] = {0, sgn, 0};
        continue;
      }
      // convert h1,h2,h3 -> basis (H1, H2, H3) with h2 = 2H1 - (1+a)H2 - aH3
      std::vector<long> out(3);
      out[0] = sgn * (h[0] + 2 * h[1]);
      out[1] = sgn * (-(1 + a) * h[1]);
      out[2] = sgn * (h[2] - a * h[1]);
      rd.coroots_[i] = out;
    }
  }

  // distinguished simple system
  auto find_coords = [&](const std::vector<long>& c) {
    int idx = rd.index_of_coords(c);
    if (idx < 0) throw std::logic_error("simple root not found");
    return idx;
  };
  if (f.tag == Family::Tag::SL) {
    int sz = f.m + f.n, dim = sz;
    for (int k = 0; k + 1 < sz; ++k) {
      std::vector<long> c(dim, 0);
      c[k] = 1; c[k + 1] = -1;
      rd.simple_.push_back(find_coords(c));
    }
  } else if (f.tag == Family::Tag::OSP) {
    int M = f.m, q = f.n, m = M / 2, dim = m + q;
    auto C = [&](std::initializer_list<std::pair<int, long>> xs) {
      std::vector<long> c(dim, 0);
      for (auto& [k, v] : xs) c[k] = v;
      return c;
    };
    if (M == 2) {
      rd.simple_.push_back(find_coords(C({{0, 1}, {m + 0, -1}})));
      for (int j = 0; j + 1 < q; ++j) rd.simple_.push_back(find_coords(C({{m + j, 1}, {m + j + 1, -1}})));
      rd.simple_.push_back(find_coords(C({{m + q - 1, 2}})));
    } else {
      for (int j = 0; j + 1 < q; ++j) rd.simple_.push_back(find_coords(C({{m + j, 1}, {m + j + 1, -1}})));
      if (m == 0) {
        rd.simple_.push_back(find_coords(C({{m + q - 1, 1}}))); // odd short root delta_n
      } else {
        rd.simple_.push_back(find_coords(C({{m + q - 1, 1}, {0, -1}})));
        for (int i = 0; i + 1 < m; ++i) rd.simple_.push_back(find_coords(C({{i, 1}, {i + 1, -1}})));
        if (M % 2 == 1) rd.simple_.push_back(find_coords(C({{m - 1, 1}})));
        else rd.simple_.push_back(find_coords(C({{m - 2, 1}, {m - 1, 1}})));
      }
    }
  } else if (f.tag == Family::Tag::P) {
    int n = f.n, dim = n + 1;
    for (int k = 0; k < n; ++k) {
      std::vector<long> c(dim, 0);
      c[k] = 1; c[k + 1] = -1;
      rd.simple_.push_back(find_coords(c));
    }
    std::vector<long> c(dim, 0);
    c[n] = 2;
    rd.simple_.push_back(find_coords(c));
  } else {
    rd.simple_.push_back(find_coords({1, 0, 0}));
    rd.simple_.push_back(find_coords({0, 1, 0}));
    rd.simple_.push_back(find_coords({0, 0, 1}));
  }
  return rd;
}

int RootDatum::index_of_hvals(const std::vector<long>& hvals) const {
  auto it = by_hvals_.find(hvals);
  return it == by_hvals_.end() ? -1 : it->second;
}

int RootDatum::index_of_coords(const std::vector<long>& coords) const {
  auto it = by_coords_.find(coords);
  return it == by_coords_.end() ? -1 : it->second;
}

int RootDatum::index_of_label(const std::string& label) const {
  for (size_t i = 0; i < roots_.size(); ++i)
    if (roots_[i].label == label) return int(i);
  return -1;
}

int RootDatum::negative_of(int idx) const {
  std::vector<long> neg(roots_[idx].coords.size());
  for (size_t k = 0; k < neg.size(); ++k) neg[k] = -roots_[idx].coords[k];
  return index_of_coords(neg);
}

int RootDatum::sum_index(int i, int j) const {
  std::vector<long> s(roots_[i].coords.size());
  for (size_t k = 0; k < s.size(); ++k) s[k] = roots_[i].coords[k] + roots_[j].coords[k];
  return index_of_coords(s);
}

bool RootDatum::sum_is_zero(int i, int j) const {
  for (size_t k = 0; k < roots_[i].coords.size(); ++k)
    if (roots_[i].coords[k] + roots_[j].coords[k] != 0) return false;
  return true;
}

const std::vector<long>& RootDatum::coroot(int idx) const {
  if (coroots_[idx].empty()) throw std::domain_error("root has no coroot: " + roots_[idx].label);
  return coroots_[idx];
}

BigInt RootDatum::eval(int root_idx, const std::vector<BigInt>& H) const {
  BigInt v = 0;
  for (int k = 0; k < rank_; ++k) v += roots_[root_idx].hvals[k] * H[k];
  return v;
}

std::pair<int, int> RootDatum::alpha_string(int alpha, int beta) const {
  // roots are combined formally, by coordinate vectors; this is the reading
  // under which P(2)'s accidental functional coincidences stay out of play
  const auto& ha = roots_[alpha].coords;
  const auto& hb = roots_[beta].coords;
  auto member = [&](int j) {
    std::vector<long> v(ha.size());
    bool zero = true;
    for (size_t k = 0; k < v.size(); ++k) {
      v[k] = hb[k] + j * ha[k];
      if (v[k] != 0) zero = false;
    }
    return zero || by_coords_.count(v) > 0;
  };
  int r = 0, q = 0;
  while (member(-(r + 1))) ++r;
  while (member(q + 1)) ++q;
  return {r, q};
}

long RootDatum::order_key_root(int root_idx) const {
  return root_idx < n_even_ ? root_idx : root_idx + rank_;
}
long RootDatum::order_key_cartan(int i) const { return n_even_ + i; }

} // namespace supchev
