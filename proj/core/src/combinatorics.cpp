#include "polyhahn/combinatorics.hpp"

#include "polyhahn/errors.hpp"
#include "polyhahn/hypergeometric.hpp"

#include <algorithm>

namespace polyhahn {

Rational pochhammer(const Rational& a, long n) {
  if (n < 0) throw OutOfRange("pochhammer: negative length");
  Rational result = 1;
  Rational factor = a;
  for (long k = 0; k < n; ++k) {
    result *= factor;
    if (sgn(result) == 0) return result;
    factor += 1;
  }
  return result;
}

Integer factorial(long n) {
  if (n < 0) throw OutOfRange("factorial: negative argument");
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Integer binomial(long a, long k) {
  if (a < 0) throw OutOfRange("binomial: negative upper argument");
  if (k < 0) throw OutOfRange("binomial: negative lower argument");
  if (k > a) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(k));
  return r;
}

Rational hyp3f2_terminating(long n, const Rational& upper, long x, const Rational& lower,
                            const Rational& lower_m) {
  if (n < 0 || x < 0) throw OutOfRange("hyp3f2_terminating: n and x must be non-negative");
  const long kmax = std::min(n, x);
  Rational sum = 1;
  Rational term = 1;
  for (long k = 0; k < kmax; ++k) {
    // term_{k+1} / term_k
    Rational den = (lower + k) * (-lower_m + k) * (k + 1);
    if (sgn(den) == 0)
      throw DenominatorPole("3F2 denominator vanishes at k=" + std::to_string(k + 1));
    term *= Rational(-n + k) * (upper + k) * Rational(-x + k);
    term /= den;
    sum += term;
  }
  return sum;
}

Rational hyp2f1_terminating(long n, long x, const Rational& c, const Rational& z) {
  if (n < 0 || x < 0) throw OutOfRange("hyp2f1_terminating: n and x must be non-negative");
  const long kmax = std::min(n, x);
  Rational sum = 1;
  Rational term = 1;
  for (long k = 0; k < kmax; ++k) {
    Rational den = (c + k) * (k + 1);
    if (sgn(den) == 0)
      throw DenominatorPole("2F1 denominator vanishes at k=" + std::to_string(k + 1));
    term *= Rational(-n + k) * Rational(-x + k) * z;
    term /= den;
    sum += term;
  }
  return sum;
}

Rational hyp2f0_terminating(long n, const Rational& x, const Rational& z) {
  if (n < 0) throw OutOfRange("hyp2f0_terminating: n must be non-negative");
  Rational sum = 1;
  Rational term = 1;
  for (long k = 0; k < n; ++k) {
    term *= Rational(-n + k) * (-x + k) * z;
    if (sgn(term) == 0) break;
    term /= (k + 1);
    sum += term;
  }
  return sum;
}

}  // namespace polyhahn
