#include "supchev/textio.hpp"

#include <json.hpp>

#include <cctype>
#include <sstream>

namespace supchev {

using json = nlohmann::ordered_json;

namespace {

void skip_ws(const std::string& s, size_t& pos) {
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
}

bool peek_digit(const std::string& s, size_t pos) {
  return pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]));
}

long parse_long(const std::string& s, size_t& pos) {
  skip_ws(s, pos);
  size_t start = pos;
  if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
  if (!peek_digit(s, pos)) throw ParseError("expected integer", pos);
  while (peek_digit(s, pos)) ++pos;
  return std::stol(s.substr(start, pos - start));
}

void expect(const std::string& s, size_t& pos, char c) {
  skip_ws(s, pos);
  if (pos >= s.size() || s[pos] != c)
    throw ParseError(std::string("expected '") + c + "'", pos);
  ++pos;
}

} // namespace

Rational parse_rational(const std::string& s, size_t& pos) {
  long num = parse_long(s, pos);
  if (pos < s.size() && s[pos] == '/') {
    ++pos;
    long den = parse_long(s, pos);
    if (den == 0) throw ParseError("zero denominator", pos);
    return Rational(num) / Rational(den);
  }
  return Rational(num);
}

GrassmannElem parse_grassmann(const std::string& s, GrRing ring) {
  size_t pos = 0;
  GrassmannElem out(ring);
  skip_ws(s, pos);
  if (pos >= s.size()) throw ParseError("empty grassmann element", pos);
  bool first = true;
  while (true) {
    skip_ws(s, pos);
    if (pos >= s.size()) break;
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first) {
      throw ParseError("expected '+' or '-'", pos);
    }
    first = false;
    skip_ws(s, pos);
    // factors separated by '*': rational, s2, or a theta block like t1t3
    Scalar coef(sign);
    std::uint64_t mask = 0;
    bool any = false;
    while (true) {
      skip_ws(s, pos);
      if (pos < s.size() && (peek_digit(s, pos))) {
        coef *= Scalar(parse_rational(s, pos));
        any = true;
      } else if (pos + 1 < s.size() && s[pos] == 's' && s[pos + 1] == '2') {
        pos += 2;
        coef *= Scalar::sqrt2();
        any = true;
      } else if (pos < s.size() && s[pos] == 't' && peek_digit(s, pos + 1)) {
        while (pos < s.size() && s[pos] == 't' && peek_digit(s, pos + 1)) {
          ++pos;
          long idx = parse_long(s, pos);
          if (idx < 1 || idx > ring.n_gens)
            throw ParseError("generator index out of range", pos - 1);
          std::uint64_t bit = std::uint64_t(1) << (idx - 1);
          if (mask & bit) throw ParseError("repeated generator", pos - 1);
          // text form lists generators ascending; count sign of insertion
          std::uint64_t above = mask & ~(bit - 1);
          if (std::popcount(above) % 2) coef = -coef;
          mask |= bit;
        }
        any = true;
      } else {
        break;
      }
      skip_ws(s, pos);
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
        continue;
      }
      break;
    }
    if (!any) throw ParseError("expected term", pos);
    GrassmannElem term(ring, Scalar(1));
    if (mask) {
      term = GrassmannElem(ring);
      GrassmannElem blade = GrassmannElem::one(ring);
      for (int i = 0; i < 64; ++i)
        if (mask & (std::uint64_t(1) << i)) blade = blade * GrassmannElem::theta(ring, i + 1);
      term = blade;
    }
    out += coef * term;
  }
  return out;
}

std::string grassmann_str(const GrassmannElem& x) { return x.str(); }

KElement parse_kostant_expr(const std::string& s, const Kostant& K) {
  const RootDatum& rd = K.basis().root_datum();
  size_t pos = 0;
  KElement out;
  bool first = true;
  while (true) {
    skip_ws(s, pos);
    if (pos >= s.size()) {
      if (first) throw ParseError("empty expression", pos);
      break;
    }
    Rational coef(1);
    if (s[pos] == '+' || s[pos] == '-') {
      if (s[pos] == '-') coef = -1;
      ++pos;
      skip_ws(s, pos);
    } else if (!first) {
      throw ParseError("expected '+' or '-'", pos);
    }
    first = false;
    if (peek_digit(s, pos)) {
      coef *= parse_rational(s, pos);
      skip_ws(s, pos);
      if (pos < s.size() && s[pos] == '*') ++pos;
    }
    KMonomial m;
    while (true) {
      skip_ws(s, pos);
      if (pos >= s.size() || s[pos] == '+' || s[pos] == '-') break;
      char kind = s[pos];
      if (kind != 'X' && kind != 'Y' && kind != 'C')
        throw ParseError("expected factor X(..), C(..) or Y(..)", pos);
      ++pos;
      expect(s, pos, '(');
      if (kind == 'C') {
        long i = parse_long(s, pos);
        expect(s, pos, ',');
        long n = parse_long(s, pos);
        expect(s, pos, ')');
        if (i < 1 || i > rd.rank()) throw ParseError("Cartan index out of range", pos - 1);
        if (n < 1) throw ParseError("binomial degree must be >= 1", pos - 1);
        m.f.push_back(KFactor::cartan(int(i - 1), n));
      } else {
        skip_ws(s, pos);
        size_t start = pos;
        while (pos < s.size() && s[pos] != ')') ++pos;
        if (pos >= s.size()) throw ParseError("unterminated root label", pos);
        std::string label = s.substr(start, pos - start);
        ++pos; // ')'
        int root = rd.index_of_label(label);
        if (root < 0) throw ParseError("unknown root label '" + label + "'", start);
        if (kind == 'Y') {
          if (rd.root(root).parity != Parity::odd)
            throw ParseError("Y(..) needs an odd root", start);
          m.f.push_back(KFactor::odd(root));
        } else {
          if (rd.root(root).parity != Parity::even)
            throw ParseError("X(..) needs an even root", start);
          long n = 1;
          skip_ws(s, pos);
          if (pos < s.size() && s[pos] == '^') {
            ++pos;
            expect(s, pos, '(');
            skip_ws(s, pos);
            if (!peek_digit(s, pos)) throw ParseError("expected exponent", pos);
            n = parse_long(s, pos);
            expect(s, pos, ')');
            if (n < 1) throw ParseError("exponent must be >= 1", pos - 1);
          }
          m.f.push_back(KFactor::divpow(root, n));
        }
      }
    }
    out.add(m, coef);
  }
  return out;
}

GroupWord parse_word_file(const std::string& text, const ChevalleyBasis& cb, GrRing ring) {
  const RootDatum& rd = cb.root_datum();
  GroupWord w;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& msg) {
    throw std::runtime_error("word file line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    size_t h = line.find('#');
    if (h != std::string::npos) line = line.substr(0, h);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    auto get_kv = [&](const std::string& rest, const std::string& key) -> std::string {
      size_t p = rest.find(key + "=");
      if (p == std::string::npos) return "";
      size_t start = p + key.size() + 1;
      size_t end = rest.find(' ', start);
      while (end != std::string::npos && rest.find('=', end) == std::string::npos)
        end = rest.find(' ', end + 1);
      return rest.substr(start, end == std::string::npos ? std::string::npos : end - start);
    };
    std::string rest;
    std::getline(ls, rest);
    if (head == "x") {
      std::istringstream rs(rest);
      std::string spec;
      rs >> spec;
      size_t colon = spec.find(':');
      if (colon == std::string::npos) fail("expected even:<label> or odd:<label>");
      std::string mode = spec.substr(0, colon), label = spec.substr(colon + 1);
      int root = rd.index_of_label(label);
      if (root < 0) fail("unknown root label '" + label + "'");
      std::string tail;
      std::getline(rs, tail);
      if (mode == "even") {
        if (rd.root(root).parity != Parity::even) fail("root is not even");
        std::string t = get_kv(tail, "t");
        if (t.empty()) fail("missing t=");
        w.g.push_back(GroupGenerator::even(root, parse_grassmann(t, ring)));
      } else if (mode == "odd") {
        if (rd.root(root).parity != Parity::odd) fail("root is not odd");
        std::string th = get_kv(tail, "theta");
        if (th.empty()) fail("missing theta=");
        std::string t = get_kv(tail, "t");
        if (!t.empty()) {
          if (rd.sum_index(root, root) < 0) fail("t= needs 2*root to be a root");
          w.g.push_back(GroupGenerator::odd_square(root, parse_grassmann(t, ring),
                                                   parse_grassmann(th, ring)));
        } else {
          w.g.push_back(GroupGenerator::odd_free(root, parse_grassmann(th, ring)));
        }
      } else {
        fail("expected even: or odd:");
      }
    } else if (head == "h") {
      std::string hv = get_kv(rest, "H");
      std::string t = get_kv(rest, "t");
      if (hv.empty() || t.empty()) fail("need H=[..] and t=..");
      if (hv.front() != '[' || hv.back() != ']') fail("H must look like [1,0,-1]");
      std::vector<BigInt> H;
      std::string body = hv.substr(1, hv.size() - 2);
      std::istringstream bs(body);
      std::string item;
      while (std::getline(bs, item, ',')) H.push_back(BigInt(std::stol(item)));
      if (int(H.size()) != cb.rank()) fail("H has wrong length");
      w.g.push_back(GroupGenerator::torus(std::move(H), parse_grassmann(t, ring)));
    } else {
      fail("unknown generator kind '" + head + "'");
    }
  }
  return w;
}

namespace {

json root_obj(const RootDatum& rd, int i) {
  const Root& r = rd.root(i);
  json j;
  j["label"] = r.label;
  j["coords"] = r.coords;
  j["parity"] = r.parity == Parity::odd ? "odd" : "even";
  j["sign"] = r.positive ? "+" : "-";
  j["hvals"] = r.hvals;
  if (rd.has_coroot(i)) j["coroot"] = rd.coroot(i);
  return j;
}

json scalar_matrix_json(const QMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(row);
  }
  return rows;
}

} // namespace

std::string roots_json(const RootDatum& rd) {
  json j;
  j["family"] = rd.family().str();
  j["rank"] = rd.rank();
  json roots = json::array();
  for (int i = 0; i < int(rd.roots().size()); ++i) roots.push_back(root_obj(rd, i));
  j["roots"] = roots;
  json simple = json::array();
  for (int s : rd.simple_roots()) simple.push_back(rd.root(s).label);
  j["simple"] = simple;
  return j.dump(2);
}

std::string roots_text(const RootDatum& rd) {
  std::ostringstream os;
  os << "family " << rd.family().str() << ", rank " << rd.rank() << "\n";
  for (int i = 0; i < int(rd.roots().size()); ++i) {
    const Root& r = rd.root(i);
    os << r.label << (r.parity == Parity::odd ? " odd " : " even") << " sign "
       << (r.positive ? "+" : "-") << " coords (";
    for (size_t k = 0; k < r.coords.size(); ++k) os << (k ? "," : "") << r.coords[k];
    os << ")";
    if (rd.has_coroot(i)) {
      os << " coroot (";
      for (size_t k = 0; k < rd.coroot(i).size(); ++k) os << (k ? "," : "") << rd.coroot(i)[k];
      os << ")";
    }
    os << "\n";
  }
  os << "simple system:";
  for (int s : rd.simple_roots()) os << " " << rd.root(s).label;
  os << "\n";
  return os.str();
}

std::string basis_json(const ChevalleyBasis& cb) {
  const RootDatum& rd = cb.root_datum();
  json j;
  j["family"] = cb.family().str();
  json cartan = json::array();
  for (int i = 0; i < cb.rank(); ++i)
    cartan.push_back(cb.has_matrices() ? scalar_matrix_json(cb.basis_matrix(i)) : json());
  j["cartan"] = cartan;
  json roots = json::array();
  for (int r = 0; r < int(rd.roots().size()); ++r) {
    json jr = root_obj(rd, r);
    if (cb.has_matrices()) jr["matrix"] = scalar_matrix_json(cb.basis_matrix(cb.basis_of_root(r)));
    roots.push_back(jr);
  }
  j["roots"] = roots;
  json cons = json::array();
  for (auto& [a, b, c] : cb.structure_constants()) {
    json jc;
    jc["alpha"] = rd.root(a).label;
    jc["beta"] = rd.root(b).label;
    jc["c"] = c.str();
    cons.push_back(jc);
  }
  j["constants"] = cons;
  return j.dump(2);
}

std::string constants_json(const ChevalleyBasis& cb) {
  const RootDatum& rd = cb.root_datum();
  json cons = json::array();
  for (auto& [a, b, c] : cb.structure_constants()) {
    json jc;
    jc["alpha"] = rd.root(a).label;
    jc["beta"] = rd.root(b).label;
    jc["c"] = c.str();
    cons.push_back(jc);
  }
  json j;
  j["family"] = cb.family().str();
  j["constants"] = cons;
  return j.dump(2);
}

std::string verify_json(const ChevalleyBasis& cb, const VerificationReport& rep, bool full) {
  json j;
  j["family"] = cb.family().str();
  j["pass"] = rep.ok();
  j["n_pass"] = rep.n_pass;
  j["n_fail"] = rep.n_fail;
  json recs = json::array();
  for (auto& r : rep.records) {
    if (!full && r.pass && !r.exceptional) continue;
    json jr;
    jr["axiom"] = r.axiom;
    jr["subject"] = r.subject;
    jr["expected"] = r.expected;
    jr["actual"] = r.actual;
    jr["pass"] = r.pass;
    jr["exceptional"] = r.exceptional;
    recs.push_back(jr);
  }
  j["records"] = recs;
  return j.dump(2);
}

std::string verify_text(const VerificationReport& rep, bool full) {
  std::ostringstream os;
  for (auto& r : rep.records)
    if (full || !r.pass || r.exceptional)
      os << (r.pass ? "pass " : "FAIL ") << r.axiom << " " << r.subject << " expected "
         << r.expected << " got " << r.actual << (r.exceptional ? " [exception list]" : "")
         << "\n";
  os << rep.summary();
  return os.str();
}

std::string kostant_json(const Kostant& K, const KElement& e) {
  json terms = json::array();
  for (auto& [m, c] : e.t) {
    json jm;
    json fs = json::array();
    for (auto& f : m.f) fs.push_back(K.factor_str(f));
    jm["monomial"] = fs;
    jm["coeff"] = c.str();
    terms.push_back(jm);
  }
  json j;
  j["terms"] = terms;
  return j.dump(2);
}

std::string matrix_json(const GrMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(row);
  }
  return rows.dump(2);
}

std::string normal_form_json(const Supergroup& G, const NormalForm& nf) {
  const RootDatum& rd = G.basis().root_datum();
  json j;
  json g0 = json::array();
  for (int i = 0; i < nf.g0.rows(); ++i) {
    json row = json::array();
    for (int k = 0; k < nf.g0.cols(); ++k) row.push_back(nf.g0(i, k).str());
    g0.push_back(row);
  }
  j["g0"] = g0;
  json tm = json::object(), tp = json::object();
  for (auto& [r, th] : nf.theta_minus) tm[rd.root(r).label] = th.str();
  for (auto& [r, th] : nf.theta_plus) tp[rd.root(r).label] = th.str();
  j["theta_minus"] = tm;
  j["theta_plus"] = tp;
  return j.dump(2);
}

} // namespace supchev
