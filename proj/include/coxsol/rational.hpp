#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>

namespace coxsol {

using Rational = mpq_class;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

/// num/den in lowest terms (GMP leaves two-argument construction unreduced).
inline Rational make_rational(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Numerator and denominator as decimal strings.
inline std::pair<std::string, std::string> to_decimal_pair(const Rational& q) {
  return {q.get_num().get_str(), q.get_den().get_str()};
}

inline Rational from_decimal_pair(const std::string& num, const std::string& den) {
  Rational q{mpz_class(num), mpz_class(den)};
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace coxsol
