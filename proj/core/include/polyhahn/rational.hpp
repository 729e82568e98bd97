#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace polyhahn {

/// Exact fraction in canonical form (gcd(num, den) = 1, den > 0).
using Rational = mpq_class;
/// Arbitrary-precision integer.
using Integer = mpz_class;

/// num/den reduced to canonical form. The two-argument mpq_class constructor
/// does not reduce, so build non-literal fractions through this.
Rational fraction(const Integer& num, const Integer& den);

/// "p/q", or "p" when q = 1; the sign sits on the numerator.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Parses "p", "p/q" or a finite decimal such as "-0.25". Throws Error on
/// malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Nearest double; for reporting only.
double to_double(const Rational& q);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// |q|
inline Rational abs(const Rational& q) {
  Rational r(q);
  if (sgn(r) < 0) r = -r;
  return r;
}

/// q^n for n >= 0.
Rational power(const Rational& q, unsigned long n);

/// Exact rational square root if q is the square of a rational.
bool exact_sqrt(const Rational& q, Rational& root);

}  // namespace polyhahn
