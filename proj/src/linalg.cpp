#include "supchev/linalg.hpp"

#include <algorithm>

namespace supchev {

IMatrix hermite_normal_form(IMatrix m) {
  if (m.empty()) return m;
  size_t rows = m.size(), cols = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    // gcd-reduce column c below row r via row operations
    while (true) {
      size_t piv = rows;
      for (size_t i = r; i < rows; ++i)
        if (m[i][c] != 0 && (piv == rows || abs(m[i][c]) < abs(m[piv][c]))) piv = i;
      if (piv == rows) break;
      std::swap(m[r], m[piv]);
      bool clean = true;
      for (size_t i = r + 1; i < rows; ++i) {
        if (m[i][c] == 0) continue;
        BigInt q = m[i][c] / m[r][c];
        for (size_t j = 0; j < cols; ++j) m[i][j] -= q * m[r][j];
        if (m[i][c] != 0) clean = false;
      }
      if (clean) break;
    }
    if (m[r][c] == 0) continue;
    if (m[r][c] < 0)
      for (size_t j = 0; j < cols; ++j) m[r][j] = -m[r][j];
    // reduce entries above the pivot
    for (size_t i = 0; i < r; ++i) {
      BigInt q = m[i][c] / m[r][c];
      if (m[i][c] < 0 && m[i][c] % m[r][c] != 0) q -= 1;
      if (q != 0)
        for (size_t j = 0; j < cols; ++j) m[i][j] -= q * m[r][j];
    }
    ++r;
  }
  m.resize(r);
  return m;
}

bool same_lattice(const IMatrix& a, const IMatrix& b) {
  return hermite_normal_form(a) == hermite_normal_form(b);
}

SmithResult smith_normal_form(IMatrix a) {
  size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  SmithResult res;
  res.left.assign(rows, std::vector<BigInt>(rows, 0));
  res.right.assign(cols, std::vector<BigInt>(cols, 0));
  for (size_t i = 0; i < rows; ++i) res.left[i][i] = 1;
  for (size_t j = 0; j < cols; ++j) res.right[j][j] = 1;

  auto row_sub = [&](size_t i, size_t k, const BigInt& q) {
    for (size_t j = 0; j < cols; ++j) a[i][j] -= q * a[k][j];
    for (size_t j = 0; j < rows; ++j) res.left[i][j] -= q * res.left[k][j];
  };
  auto col_sub = [&](size_t j, size_t k, const BigInt& q) {
    for (size_t i = 0; i < rows; ++i) a[i][j] -= q * a[i][k];
    for (size_t i = 0; i < cols; ++i) res.right[i][j] -= q * res.right[i][k];
  };
  auto row_swap = [&](size_t i, size_t k) { std::swap(a[i], a[k]); std::swap(res.left[i], res.left[k]); };
  auto col_swap = [&](size_t j, size_t k) {
    for (size_t i = 0; i < rows; ++i) std::swap(a[i][j], a[i][k]);
    std::swap(res.right[j], res.right[k]);
  };

  size_t t = 0;
  while (t < rows && t < cols) {
    size_t pi = rows, pj = cols;
    for (size_t i = t; i < rows; ++i)
      for (size_t j = t; j < cols; ++j)
        if (a[i][j] != 0 && (pi == rows || abs(a[i][j]) < abs(a[pi][pj]))) { pi = i; pj = j; }
    if (pi == rows) break;
    row_swap(t, pi); col_swap(t, pj);
    bool dirty = false;
    for (size_t i = t + 1; i < rows; ++i)
      if (a[i][t] != 0) { row_sub(i, t, a[i][t] / a[t][t]); if (a[i][t] != 0) dirty = true; }
    for (size_t j = t + 1; j < cols; ++j)
      if (a[t][j] != 0) { col_sub(j, t, a[t][j] / a[t][t]); if (a[t][j] != 0) dirty = true; }
    if (dirty) continue;
    if (a[t][t] < 0) {
      for (size_t j = 0; j < cols; ++j) a[t][j] = -a[t][j];
      for (size_t j = 0; j < rows; ++j) res.left[t][j] = -res.left[t][j];
    }
    ++t;
  }
  // divisibility chain is not needed by callers; diagonal suffices
  res.diag.resize(std::min(rows, cols));
  for (size_t i = 0; i < res.diag.size(); ++i) res.diag[i] = a[i][i];
  return res;
}

std::optional<std::vector<Rational>> solve_left(const std::vector<std::vector<Rational>>& rowsA,
                                                const std::vector<Rational>& b) {
  // Solve sum_i x_i * rowsA[i] = b by Gaussian elimination on the transpose.
  size_t n = rowsA.size();
  if (n == 0) return std::nullopt;
  size_t w = rowsA[0].size();
  // augmented system: columns are unknowns
  std::vector<std::vector<Rational>> m(w, std::vector<Rational>(n + 1));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < w; ++j) m[j][i] = rowsA[i][j];
  for (size_t j = 0; j < w; ++j) m[j][n] = b[j];

  std::vector<int> pivot_col(w, -1);
  size_t r = 0;
  for (size_t c = 0; c < n && r < w; ++c) {
    size_t piv = w;
    for (size_t i = r; i < w; ++i)
      if (m[i][c] != 0) { piv = i; break; }
    if (piv == w) continue;
    std::swap(m[r], m[piv]);
    Rational p = m[r][c];
    for (size_t j = 0; j <= n; ++j) m[r][j] /= p;
    for (size_t i = 0; i < w; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (size_t j = 0; j <= n; ++j) m[i][j] -= f * m[r][j];
    }
    pivot_col[r] = int(c);
    ++r;
  }
  for (size_t i = r; i < w; ++i)
    if (m[i][n] != 0) return std::nullopt;
  std::vector<Rational> x(n, 0);
  for (size_t i = 0; i < r; ++i) x[pivot_col[i]] = m[i][n];
  return x;
}

SpanSolver::SpanSolver(std::vector<std::vector<Scalar>> rows) : rr_(std::move(rows)) {
  size_t n = rr_.size();
  width_ = n ? rr_[0].size() : 0;
  ops_.assign(n, std::vector<Scalar>(n));
  for (size_t i = 0; i < n; ++i) ops_[i][i] = Scalar(1);
  size_t r = 0;
  for (size_t c = 0; c < width_ && r < n; ++c) {
    size_t piv = n;
    for (size_t i = r; i < n; ++i)
      if (!rr_[i][c].is_zero()) { piv = i; break; }
    if (piv == n) continue;
    std::swap(rr_[r], rr_[piv]);
    std::swap(ops_[r], ops_[piv]);
    Scalar p = rr_[r][c].inv();
    for (auto& x : rr_[r]) x *= p;
    for (auto& x : ops_[r]) x *= p;
    for (size_t i = 0; i < n; ++i) {
      if (i == r || rr_[i][c].is_zero()) continue;
      Scalar f = rr_[i][c];
      for (size_t j = 0; j < width_; ++j) rr_[i][j] -= f * rr_[r][j];
      for (size_t j = 0; j < n; ++j) ops_[i][j] -= f * ops_[r][j];
    }
    pivots_.push_back(int(c));
    ++r;
  }
  rr_.resize(r);
  ops_.resize(r);
}

std::vector<Scalar> SpanSolver::coords(const std::vector<Scalar>& v) const {
  if (v.size() != width_) throw std::domain_error("SpanSolver: width mismatch");
  std::vector<Scalar> residual = v;
  std::vector<Scalar> out(ops_.empty() ? 0 : ops_[0].size());
  for (size_t r = 0; r < rr_.size(); ++r) {
    Scalar f = residual[pivots_[r]];
    if (f.is_zero()) continue;
    for (size_t j = 0; j < width_; ++j) residual[j] -= f * rr_[r][j];
    for (size_t j = 0; j < out.size(); ++j) out[j] += f * ops_[r][j];
  }
  for (auto& x : residual)
    if (!x.is_zero()) throw std::domain_error("SpanSolver: vector outside span");
  return out;
}

} // namespace supchev
