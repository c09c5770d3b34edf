#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace supchev {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rational& r) { return den(r) == 1; }

inline BigInt to_int(const Rational& r) {
  if (!is_integer(r)) throw std::domain_error("to_int: not an integer: " + r.str());
  return num(r);
}

inline BigInt factorial(long n) {
  BigInt f = 1;
  for (long k = 2; k <= n; ++k) f *= k;
  return f;
}

// binomial(x, k) for any integer x (generalized, integer-valued)
inline BigInt binomial(const BigInt& x, long k) {
  if (k < 0) return 0;
  BigInt p = 1;
  for (long j = 0; j < k; ++j) p *= (x - j);
  return p / factorial(k);
}

// Stirling numbers of the second kind, S(n, k)
inline BigInt stirling2(long n, long k) {
  if (n == 0 && k == 0) return 1;
  if (k <= 0 || k > n) return 0;
  std::vector<std::vector<BigInt>> s(n + 1, std::vector<BigInt>(k + 1, 0));
  s[0][0] = 1;
  for (long i = 1; i <= n; ++i)
    for (long j = 1; j <= std::min<long>(i, k); ++j)
      s[i][j] = j * s[i - 1][j] + s[i - 1][j - 1];
  return s[n][k];
}

} // namespace supchev
