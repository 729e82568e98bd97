#pragma once

#include "polyhahn/multi_index.hpp"
#include "polyhahn/polynomial.hpp"
#include "polyhahn/rational.hpp"

#include <string>
#include <vector>

namespace polyhahn {

/// Errors of a limit transition along a parameter ladder. Errors are exact
/// rationals; decimals appear only in the fitted orders.
struct LimitScan {
  std::string name;
  std::string parameter;  ///< ladder variable ("t", "N" or "a")
  std::vector<Rational> ladder;
  std::vector<std::string> probes;
  /// errors[probe][rung]
  std::vector<std::vector<Rational>> errors;
  /// Expected order in 1/parameter and the accepted deviation. These are
  /// engineering thresholds from a first-order expansion, not derived bounds.
  double expected_order = 1.0;
  double tolerance = 0.25;
  /// Slack factor for the monotonicity check.
  double slack = 1.05;

  /// Order fitted on the last two rungs; NaN for probes whose error vanishes there.
  std::vector<double> fitted_order;
  std::vector<bool> exact_zero;  ///< error is 0 at every rung
  std::vector<bool> monotone;
  std::vector<bool> order_ok;  ///< |fitted - expected| <= tolerance
  /// fitted order above expected + tolerance: converges faster than the
  /// threshold, which is not counted as a failure
  std::vector<bool> faster;
  std::string note;

  /// Fills fitted_order, exact_zero, monotone and order_ok from errors.
  void analyse();
  bool passed() const;
};

/// Defaults used by the CLI and the acceptance run.
std::vector<Rational> default_ladder(const std::string& scan);

struct HahnKrawtchoukProbe {
  MultiIndex nu;
  MultiIndex x;
};

/// Hahn with l_i = -p_i t - 1, l_{d+1} = -(1-|p|) t - 1 against
/// (-1)^{|nu|} prod_j (p_j / (1 - |p_j|))^{nu_j} K_nu(x; p, N).
LimitScan scan_hahn_to_krawtchouk(const std::vector<Rational>& p, long N,
                                  const std::vector<HahnKrawtchoukProbe>& probes,
                                  const std::vector<Rational>& t_ladder);

/// K_nu(x; a/N, N) against C_nu(x; a).
LimitScan scan_krawtchouk_to_charlier(const std::vector<Rational>& a,
                                      const std::vector<HahnKrawtchoukProbe>& probes,
                                      const std::vector<Rational>& N_ladder);

struct CharlierHermiteProbe {
  MultiIndex nu;
  std::vector<Rational> t;
};

/// prod_j (2a)^{nu_j/2} C_{nu_j}(sqrt(2a) t_j + a; a) against
/// (-1)^{|nu|} prod_j H_{nu_j}(t_j). Each rung needs 2a to be a rational square.
LimitScan scan_charlier_to_hermite(const std::vector<CharlierHermiteProbe>& probes,
                                   const std::vector<Rational>& a_ladder);

struct JacobiProbe {
  std::string id;
  Polynomial p;  ///< polynomial in y_1..y_d
};

/// sup over the points y of |(L p(./N))(N y) - (J p)(y)| where L is the full
/// operator with fixed l and J the continuum operator
/// sum y_k(1-y_k) d_k^2 - 2 sum_{k<j} y_k y_j d_k d_j + sum (|l| y_k - l_k) d_k.
LimitScan scan_operator_to_jacobi(const std::vector<Rational>& ell, const std::vector<JacobiProbe>& probes,
                                  const std::vector<std::vector<Rational>>& points,
                                  const std::vector<Rational>& N_ladder);

/// The continuum operator J above applied to p.
Polynomial jacobi_apply(const std::vector<Rational>& ell, const Polynomial& p);

}  // namespace polyhahn
