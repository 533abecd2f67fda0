#pragma once

#include <gmpxx.h>

#include <string>

namespace bosonic {

using BigInt = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const BigInt& num, const BigInt& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational make_rational(long num, long den = 1) {
  return make_rational(BigInt(num), BigInt(den));
}

inline double to_double(const Rational& q) { return q.get_d(); }

inline std::string to_string(const BigInt& z) { return z.get_str(); }

/// "num/den", or just "num" for integers.
inline std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Decimal rendering of an exact rational to `significant` digits.
std::string to_decimal(const Rational& q, int significant = 15);

/// Decimal rendering of a double to `significant` digits (%.*g).
std::string to_decimal(double x, int significant = 15);

/// Parses "a/b" or "a".
Rational parse_rational(const std::string& text);

}  // namespace bosonic
