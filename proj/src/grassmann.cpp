#include "supchev/grassmann.hpp"

#include <bit>
#include <sstream>

namespace supchev {

int blade_merge_sign(std::uint64_t a, std::uint64_t b) {
  if (a & b) return 0;
  // Count transpositions needed to interleave b's generators into a's
  // ascending list: for each bit of b, the number of bits of a above it.
  int swaps = 0;
  std::uint64_t bb = b;
  while (bb) {
    std::uint64_t low = bb & (~bb + 1);
    std::uint64_t above = a & ~(low - 1) & ~low;
    swaps += std::popcount(above);
    bb ^= low;
  }
  return (swaps & 1) ? -1 : 1;
}

GrassmannElem GrassmannElem::theta(GrRing r, int i) {
  if (i < 1 || i > r.n_gens) throw std::domain_error("theta: generator index out of range");
  GrassmannElem x(r);
  if (r.degree_cap() >= 1) x.terms_[std::uint64_t(1) << (i - 1)] = Scalar(1);
  return x;
}

int GrassmannElem::parity() const {
  if (terms_.empty()) return 0;
  int p = std::popcount(terms_.begin()->first) & 1;
  for (auto& [m, c] : terms_)
    if ((std::popcount(m) & 1) != p) return -1;
  return p;
}

bool GrassmannElem::is_even() const { return terms_.empty() || parity() == 0; }

GrassmannElem GrassmannElem::graded_part(int k) const {
  GrassmannElem r(ring_);
  for (auto& [m, c] : terms_)
    if (std::popcount(m) == k) r.terms_[m] = c;
  return r;
}

int GrassmannElem::max_degree() const {
  int d = 0;
  for (auto& [m, c] : terms_) d = std::max(d, std::popcount(m));
  return d;
}

GrRing GrassmannElem::join(const GrassmannElem& o) const {
  bool a = ring_.n_gens > 0, b = o.ring_.n_gens > 0;
  if (a && b) {
    if (!(ring_ == o.ring_)) throw std::domain_error("Grassmann: mismatched generator counts");
    return ring_;
  }
  return a ? ring_ : o.ring_;
}

void GrassmannElem::add_term(std::uint64_t mask, const Scalar& c) {
  auto it = terms_.find(mask);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_[mask] = c;
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

GrassmannElem GrassmannElem::operator-() const {
  GrassmannElem r(ring_);
  for (auto& [m, c] : terms_) r.terms_[m] = -c;
  return r;
}

GrassmannElem& GrassmannElem::operator+=(const GrassmannElem& o) {
  ring_ = join(o);
  for (auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

GrassmannElem& GrassmannElem::operator-=(const GrassmannElem& o) {
  ring_ = join(o);
  for (auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

GrassmannElem operator*(const GrassmannElem& x, const GrassmannElem& y) {
  GrRing ring = x.join(y);
  GrassmannElem r(ring);
  int cap = ring.degree_cap();
  for (auto& [ma, ca] : x.terms_)
    for (auto& [mb, cb] : y.terms_) {
      int s = blade_merge_sign(ma, mb);
      if (s == 0) continue;
      std::uint64_t m = ma | mb;
      if (std::popcount(m) > cap) continue;
      Scalar c = ca * cb;
      if (s < 0) c = -c;
      r.add_term(m, c);
    }
  return r;
}

GrassmannElem operator*(const Scalar& c, const GrassmannElem& x) {
  GrassmannElem r(x.ring_);
  if (c.is_zero()) return r;
  for (auto& [m, v] : x.terms_) r.terms_[m] = c * v;
  return r;
}

GrassmannElem GrassmannElem::inv_any() const {
  Scalar b = body();
  if (b.is_zero()) throw std::domain_error("Grassmann: not a unit (zero body)");
  Scalar binv = b.inv();
  GrassmannElem n = binv * soul(); // nilpotent
  GrassmannElem acc = one(ring_), pw = one(ring_);
  int cap = ring_.degree_cap();
  for (int k = 1; k <= cap; ++k) {
    pw = pw * n;
    if (pw.is_zero()) break;
    if (k & 1) acc -= pw; else acc += pw;
  }
  return binv * acc;
}

GrassmannElem GrassmannElem::inv() const {
  if (!is_even()) throw std::domain_error("Grassmann: inverse requires an even unit");
  return inv_any();
}

GrassmannElem GrassmannElem::pow(const BigInt& k) const {
  GrassmannElem base = *this;
  BigInt e = k;
  if (e < 0) { base = inv(); e = -e; }
  GrassmannElem r = one(base.ring_.n_gens > 0 ? base.ring_ : ring_);
  while (e > 0) {
    if ((e & 1) != 0) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

std::string GrassmannElem::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [m, c] : terms_) {
    std::string cs = c.str();
    bool neg = !cs.empty() && cs[0] == '-';
    if (first) { if (neg) { os << "-"; cs = cs.substr(1); } }
    else { os << (neg ? " - " : " + "); if (neg) cs = cs.substr(1); }
    first = false;
    if (m == 0) { os << cs; continue; }
    if (cs.find_first_of("+-") != std::string::npos && cs.find_first_of("+-", 1) != std::string::npos)
      os << "(" << cs << ")*";
    else os << cs << "*";
    for (int i = 0; i < 64; ++i)
      if (m & (std::uint64_t(1) << i)) os << "t" << (i + 1);
  }
  return os.str();
}

} // namespace supchev
