#pragma once

#include "polyhahn/domain.hpp"
#include "polyhahn/multi_index.hpp"
#include "polyhahn/rational.hpp"

#include <span>
#include <variant>
#include <vector>

namespace polyhahn {

// ---- one-variable Hahn ----

/// Q_n(x; a, b, M) = 3F2(-n, n+a+b+1, -x; a+1, -M; 1).
Rational hahn_1d(long n, const Rational& a, const Rational& b, long M, long x);

/// Checks, for x = 0..l, that Q_n(x; -l-1, b, M) = Q_n(x; -M-1, M-l+b, l), and
/// for x = M-l..M the reflection
/// Q_n(x; b, -l-1, M) = (-1)^n (-l)_n / (b+1)_n Q_n(M-x; -M-1, M-l+b, l).
/// Requires 0 <= n <= l <= M.
bool hahn_1d_negparam_identity_check(long n, long l, const Rational& b, long M);

/// The combined factor (-M)_{nu} * Q_nu(x; -l-1, a, M), evaluated as the
/// single sum  sum_k (-nu)_k (nu+a-l)_k (-x)_k (-M+k)_{nu-k} / ((-l)_k k!).
/// The prefactor is absorbed before summation so the result is a polynomial
/// in M and stays finite when 0 <= M < nu.
Rational hahn_factor(long nu, const Rational& l, const Rational& a, const Rational& M, long x);

/// a_j = -|l^{j+1}| + 2|nu^{j+1}| - 1, j = 1..d, for a parameter tuple of
/// length d+1.
Rational hahn_a(std::span<const Rational> ell, const MultiIndex& nu, std::size_t j);

/// Multivariate Hahn polynomial with arbitrary rational parameters l
/// (length d+1) on V_N^d. No membership checks; throws DenominatorPole when
/// a normalizing Pochhammer vanishes.
Rational hahn_multi_generic(std::span<const Rational> ell, long N, const MultiIndex& nu,
                            const MultiIndex& x);

/// Hahn polynomial on the polyhedron. Throws IndexOutsideH / PointOutsideDomain.
Rational hahn_multi(const DomainSpec& spec, const MultiIndex& nu, const MultiIndex& x);

/// The closed-form squared norm B_nu(l, N). Throws IndexOutsideH.
Rational norm_B(const DomainSpec& spec, const MultiIndex& nu);
/// B_nu for arbitrary rational l; no membership check.
Rational norm_B_generic(std::span<const Rational> ell, long N, const MultiIndex& nu);

/// Cyclic relabelling tau = (1, 2, ..., d+1) of homogeneous coordinates:
/// (tau o z)_i = z_{tau(i)}. shift = +1 gives tau, -1 gives tau^{-1}.
MultiIndex cyclic_permute(const MultiIndex& z, int shift);

/// Spec with l replaced by tau^{shift} o l.
DomainSpec permuted_spec(const DomainSpec& spec, int shift);

/// Q^{+} (shift = +1) or Q^{-} (shift = -1): Q_nu(tau o x; tau o l, N) with
/// nu taken from H of the permuted spec.
Rational hahn_permuted(const DomainSpec& spec, int shift, const MultiIndex& nu,
                       const MultiIndex& x);

// ---- limit families ----

struct KrawtchoukParams {
  std::vector<Rational> p;  ///< length d, 0 < p_i, |p| < 1
  long N = 0;
  void validate() const;
};

struct MeixnerParams {
  Rational s;               ///< s > 0
  std::vector<Rational> c;  ///< length d, 0 < c_i, |c| < 1
  void validate() const;
};

struct CharlierParams {
  std::vector<Rational> a;  ///< length d, a_i > 0
  void validate() const;
};

using FamilyParams = std::variant<KrawtchoukParams, MeixnerParams, CharlierParams>;

/// K_n(x; p, M) = 2F1(-n, -x; -M; 1/p).
Rational krawtchouk_1d(long n, const Rational& p, long M, long x);

/// (-M)_n K_n(x; p, M) as one sum; M may be any rational.
Rational krawtchouk_factor(long n, const Rational& p, const Rational& M, long x);

/// Product formula with arguments p_j / (1 - |p_{j-1}|) and
/// M_j = N - |x_{j-1}| - |nu^{j+1}|. N and p are formal here (no range check),
/// which also covers the Meixner substitution N = -s, p_j = -c_j/(1-|c|).
Rational krawtchouk_multi_formal(std::span<const Rational> p, const Rational& N,
                                 const MultiIndex& nu, const MultiIndex& x);

/// Validated form: |nu| <= N, x in V_N^d.
Rational krawtchouk_multi(const KrawtchoukParams& params, const MultiIndex& nu,
                          const MultiIndex& x);

/// M_n(x; s, c) = 2F1(-n, -x; s; 1 - 1/c).
Rational meixner_1d(long n, long x, const Rational& s, const Rational& c);

Rational meixner_multi(const MeixnerParams& params, const MultiIndex& nu, const MultiIndex& x);

/// C_n(t; s) = 2F0(-n, -t; ; -1/s); t may be any rational.
Rational charlier_1d(long n, const Rational& t, const Rational& s);

Rational charlier_multi(const CharlierParams& params, const MultiIndex& nu,
                        std::span<const Rational> x);

/// Physicists' Hermite polynomial, H_{n+1} = 2t H_n - 2n H_{n-1}.
Rational hermite_1d(long n, const Rational& t);

/// Multinomial weight N!/(x_1!...x_d!(N-|x|)!) p^x (1-|p|)^{N-|x|}.
Rational multinomial_weight(const KrawtchoukParams& params, const MultiIndex& x);

}  // namespace polyhahn
