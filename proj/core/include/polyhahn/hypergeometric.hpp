#pragma once

#include "polyhahn/rational.hpp"

namespace polyhahn {

/// Terminating 3F2(-n, upper, -x; lower, -lower_m; 1), summed over
/// k = 0..min(n, x). Throws DenominatorPole when (lower)_k or (-lower_m)_k
/// vanishes inside that range.
Rational hyp3f2_terminating(long n, const Rational& upper, long x, const Rational& lower,
                            const Rational& lower_m);

/// Terminating 2F1(-n, -x; c; z), summed over k = 0..min(n, x).
Rational hyp2f1_terminating(long n, long x, const Rational& c, const Rational& z);

/// 2F0(-n, -x; ; z), terminating through -n; x may be any rational.
Rational hyp2f0_terminating(long n, const Rational& x, const Rational& z);

}  // namespace polyhahn
