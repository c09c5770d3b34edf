#pragma once

#include "supchev/supergroup.hpp"

#include <string>

namespace supchev {

/// Parse failure with a 0-based input position (printed 1-based as column).
struct ParseError : std::runtime_error {
  size_t pos;
  ParseError(const std::string& msg, size_t pos_)
      : std::runtime_error(msg + " at column " + std::to_string(pos_ + 1)), pos(pos_) {}
};

Rational parse_rational(const std::string& s, size_t& pos);

/// Canonical text form, e.g. "3/2 + 1*t1t3 - 2*t1t2t3t4".
GrassmannElem parse_grassmann(const std::string& s, GrRing ring);
std::string grassmann_str(const GrassmannElem& x);

/// Kostant expression grammar: products of X(a1)^(2), C(1,1), Y(g1) by
/// juxtaposition; sums with +/- and integer/rational coefficients.
KElement parse_kostant_expr(const std::string& s, const Kostant& K);

/// Word file: one generator per line,
///   x even:<label> t=<grassmann>
///   x odd:<label> theta=<grassmann> [t=<grassmann>]
///   h H=[a1,...,al] t=<grassmann>
GroupWord parse_word_file(const std::string& text, const ChevalleyBasis& cb, GrRing ring);

// JSON emitters (all deterministic)
std::string roots_json(const RootDatum& rd);
std::string basis_json(const ChevalleyBasis& cb);
std::string constants_json(const ChevalleyBasis& cb);
std::string verify_json(const ChevalleyBasis& cb, const VerificationReport& rep, bool full);
std::string kostant_json(const Kostant& K, const KElement& e);
std::string normal_form_json(const Supergroup& G, const NormalForm& nf);
std::string matrix_json(const GrMatrix& m);

std::string roots_text(const RootDatum& rd);
std::string verify_text(const VerificationReport& rep, bool full);

} // namespace supchev
