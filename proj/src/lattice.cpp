#include "supchev/lattice.hpp"

namespace supchev {

namespace {

// generator matrices of the Kostant Z-form on the module, with labels
struct Gen {
  QMatrix m;
  std::string label;
};

std::vector<Gen> kostant_generators(const ModuleRep& mod, long nmax) {
  const ChevalleyBasis& cb = *mod.cb;
  const RootDatum& rd = cb.root_datum();
  std::vector<Gen> gens;
  Scalar one(1);
  for (int r = 0; r < int(rd.roots().size()); ++r) {
    const QMatrix& x = mod.of_root(r);
    if (rd.root(r).parity == Parity::odd) {
      gens.push_back({x, "X(" + rd.root(r).label + ")"});
      continue;
    }
    long nil = mod.nilpotency(r);
    QMatrix p = QMatrix::identity(mod.dimV, one);
    BigInt fact = 1;
    for (long n = 1; n < nil && (nmax == 0 || n <= nmax); ++n) {
      p = p * x;
      fact *= n;
      QMatrix dp = Scalar(Rational(BigInt(1), fact)) * p;
      gens.push_back({dp, "X(" + rd.root(r).label + ")^(" + std::to_string(n) + ")"});
    }
  }
  for (int i = 0; i < cb.rank(); ++i) {
    const QMatrix& h = mod.rho[i];
    for (long n = 1; n <= std::max<long>(nmax, 2); ++n) {
      QMatrix b(mod.dimV, mod.dimV);
      for (int k = 0; k < mod.dimV; ++k) {
        Rational mu = h(k, k).rat();
        b(k, k) = Scalar(Rational(binomial(to_int(mu), n)));
      }
      gens.push_back({b, "C(" + std::to_string(i + 1) + "," + std::to_string(n) + ")"});
    }
  }
  return gens;
}

long default_nmax(const ModuleRep& mod) {
  long nmax = 2;
  const RootDatum& rd = mod.cb->root_datum();
  for (int r = 0; r < int(rd.roots().size()); ++r)
    if (rd.root(r).parity == Parity::even) nmax = std::max(nmax, long(mod.nilpotency(r)));
  return nmax;
}

} // namespace

AdmissibleResult admissible_check(const ModuleRep& mod, const LatticeBasis& M, long nmax) {
  if (nmax == 0) nmax = default_nmax(mod);
  QMatrix inv;
  try {
    inv = M.inverse(Scalar(1));
  } catch (const std::exception&) {
    throw std::domain_error("admissible_check: singular lattice matrix");
  }
  for (auto& g : kostant_generators(mod, nmax)) {
    QMatrix conj = inv * (g.m * M);
    for (int i = 0; i < conj.rows(); ++i)
      for (int j = 0; j < conj.cols(); ++j)
        if (!conj(i, j).is_integer())
          return {false, g.label + " maps lattice vector " + std::to_string(j + 1) +
                             " outside the lattice"};
  }
  return {true, ""};
}

bool lattice_member(const LatticeBasis& M, const std::vector<Scalar>& x) {
  QMatrix inv = M.inverse(Scalar(1));
  for (int i = 0; i < inv.rows(); ++i) {
    Scalar acc;
    for (int j = 0; j < inv.cols(); ++j) acc += inv(i, j) * x[j];
    if (!acc.is_integer()) return false;
  }
  return true;
}

bool weight_split_check(const ModuleRep& mod, const LatticeBasis& M) {
  // group module coordinates by weight, project each lattice column
  std::map<std::vector<long>, std::vector<int>> spaces;
  for (int k = 0; k < mod.dimV; ++k) spaces[mod.weights[k]].push_back(k);
  for (int j = 0; j < M.cols(); ++j)
    for (auto& [w, idxs] : spaces) {
      std::vector<Scalar> proj(mod.dimV);
      for (int k : idxs) proj[k] = M(k, j);
      if (!lattice_member(M, proj)) return false;
    }
  return true;
}

CartanStabilizer stabilizer_cartan(const ModuleRep& mod) {
  if (mod.dimV == 0) throw std::domain_error("stabilizer_cartan: empty module");
  int l = mod.cb->rank();
  std::set<std::vector<long>> wset(mod.weights.begin(), mod.weights.end());
  IMatrix W;
  for (auto& w : wset) W.push_back(std::vector<BigInt>(w.begin(), w.end()));
  auto snf = smith_normal_form(W);
  // x with W x integral: x = right * y, y_i in (1/d_i) Z (d_i != 0), free else
  CartanStabilizer st;
  size_t rows = W.size();
  for (int i = 0; i < l; ++i) {
    BigInt d = (size_t(i) < snf.diag.size() && size_t(i) < rows) ? snf.diag[i] : BigInt(0);
    std::vector<Rational> col(l);
    for (int k = 0; k < l; ++k) {
      Rational v(snf.right[k][i]);
      if (d != 0) v /= Rational(d);
      col[k] = v;
    }
    if (d != 0) st.index_over_hz *= d;
    st.basis.push_back(col);
  }
  if (st.index_over_hz < 0) st.index_over_hz = -st.index_over_hz;
  return st;
}

bool in_cartan_stabilizer(const ModuleRep& mod, const std::vector<Rational>& H) {
  std::set<std::vector<long>> wset(mod.weights.begin(), mod.weights.end());
  for (auto& w : wset) {
    Rational v = 0;
    for (size_t k = 0; k < H.size(); ++k) v += Rational(w[k]) * H[k];
    if (!is_integer(v)) return false;
  }
  return true;
}

bool CartanStabilizer::contains(const std::vector<Rational>& x, const ModuleRep& mod) const {
  return in_cartan_stabilizer(mod, x);
}

LatticeBasis highest_weight_lattice(const ModuleRep& mod, const std::vector<Scalar>& v,
                                    long nmax) {
  if (nmax == 0) nmax = default_nmax(mod);
  auto gens = kostant_generators(mod, nmax);
  int d = mod.dimV;
  // vectors over Q(sqrt 2): split each coordinate into (rat, irr) parts and
  // saturate the Z-span by Hermite reduction on scaled integer rows
  std::vector<std::vector<Rational>> rows;
  auto push_vec = [&](const std::vector<Scalar>& x) {
    std::vector<Rational> r(2 * d);
    for (int k = 0; k < d; ++k) {
      r[k] = x[k].rat();
      r[d + k] = x[k].irr();
    }
    rows.push_back(std::move(r));
  };
  push_vec(v);
  auto reduce = [&]() {
    BigInt den = 1;
    for (auto& r : rows)
      for (auto& c : r) den = boost::multiprecision::lcm(den, supchev::den(c));
    IMatrix im;
    for (auto& r : rows) {
      std::vector<BigInt> ir(2 * d);
      for (int k = 0; k < 2 * d; ++k) ir[k] = to_int(r[k] * Rational(den));
      im.push_back(std::move(ir));
    }
    im = hermite_normal_form(im);
    rows.clear();
    for (auto& ir : im) {
      std::vector<Rational> r(2 * d);
      for (int k = 0; k < 2 * d; ++k) r[k] = Rational(ir[k]) / Rational(den);
      rows.push_back(std::move(r));
    }
  };
  reduce();
  for (int pass = 0; pass < 4 * d + 4; ++pass) {
    auto before = rows;
    std::vector<std::vector<Rational>> images;
    for (auto& r : rows) {
      std::vector<Scalar> x(d);
      for (int k = 0; k < d; ++k)
        x[k] = Scalar(r[k], r[d + k], r[d + k] == 0 ? 0 : 2);
      for (auto& g : gens) {
        std::vector<Scalar> y(d);
        bool nz = false;
        for (int i2 = 0; i2 < d; ++i2) {
          Scalar acc;
          for (int j2 = 0; j2 < d; ++j2) acc += g.m(i2, j2) * x[j2];
          y[i2] = acc;
          if (!acc.is_zero()) nz = true;
        }
        if (nz) {
          std::vector<Rational> yr(2 * d);
          for (int k = 0; k < d; ++k) {
            yr[k] = y[k].rat();
            yr[d + k] = y[k].irr();
          }
          images.push_back(std::move(yr));
        }
      }
    }
    for (auto& im : images) rows.push_back(im);
    reduce();
    if (rows == before) break;
  }
  if (int(rows.size()) != d)
    throw std::logic_error("highest-weight lattice did not reach full rank");
  LatticeBasis M(d, d);
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k)
      M(k, j) = Scalar(rows[j][k], rows[j][d + k], rows[j][d + k] == 0 ? 0 : 2);
  return M;
}

} // namespace supchev
