#pragma once

#include "polyhahn/rational.hpp"

namespace polyhahn {

/// Rising factorial (a)_n = a(a+1)...(a+n-1); (a)_0 = 1. Negative integer
/// arguments are allowed and may give 0.
Rational pochhammer(const Rational& a, long n);

/// n! for n >= 0.
Integer factorial(long n);

/// Binomial coefficient C(a, k) for a >= 0, k >= 0; 0 when k > a.
/// Throws OutOfRange for a negative upper argument.
Integer binomial(long a, long k);

}  // namespace polyhahn
