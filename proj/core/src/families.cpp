#include "polyhahn/families.hpp"

#include "polyhahn/combinatorics.hpp"
#include "polyhahn/errors.hpp"
#include "polyhahn/hypergeometric.hpp"

#include <algorithm>
#include <numeric>

namespace polyhahn {

Rational hahn_1d(long n, const Rational& a, const Rational& b, long M, long x) {
  return hyp3f2_terminating(n, Rational(n) + a + b + 1, x, a + 1, Rational(M));
}

bool hahn_1d_negparam_identity_check(long n, long l, const Rational& b, long M) {
  if (n < 0 || n > l || l > M) throw OutOfRange("need 0 <= n <= l <= M");
  const Rational lq(l);
  for (long x = 0; x <= l; ++x) {
    const Rational lhs = hahn_1d(n, -lq - 1, b, M, x);
    const Rational rhs = hahn_1d(n, Rational(-M - 1), Rational(M) - lq + b, l, x);
    if (lhs != rhs) return false;
  }
  const Rational b1 = pochhammer(b + 1, n);
  if (sgn(b1) == 0) throw DenominatorPole("(b+1)_n vanishes");
  const Rational scale = ((n % 2) ? Rational(-1) : Rational(1)) * pochhammer(-lq, n) / b1;
  for (long x = M - l; x <= M; ++x) {
    const Rational lhs = hahn_1d(n, b, -lq - 1, M, x);
    const Rational rhs = scale * hahn_1d(n, Rational(-M - 1), Rational(M) - lq + b, l, M - x);
    if (lhs != rhs) return false;
  }
  return true;
}

Rational hahn_factor(long nu, const Rational& l, const Rational& a, const Rational& M, long x) {
  if (nu < 0 || x < 0) throw OutOfRange("hahn_factor: nu and x must be non-negative");
  const long kmax = std::min(nu, x);
  const Rational upper = Rational(nu) + a - l;
  Rational term = 1;  // (-nu)_k (nu+a-l)_k (-x)_k / ((-l)_k k!)
  Rational sum = pochhammer(-M, nu);
  for (long k = 0; k < kmax; ++k) {
    const Rational den = (-l + k) * (k + 1);
    if (sgn(den) == 0)
      throw DenominatorPole("hahn_factor: (-l)_k vanishes at k=" + std::to_string(k + 1));
    term *= Rational(-nu + k) * (upper + k) * Rational(-x + k);
    term /= den;
    if (sgn(term) == 0) break;
    sum += term * pochhammer(-M + (k + 1), nu - (k + 1));
  }
  return sum;
}

namespace {

Rational suffix_sum(std::span<const Rational> v, std::size_t j) {
  // 1-based suffix v_j + ... + v_n
  Rational s = 0;
  for (std::size_t i = j; i <= v.size(); ++i) s += v[i - 1];
  return s;
}

Rational sign_power(long n) { return (n % 2) ? Rational(-1) : Rational(1); }

std::vector<Rational> to_rational(const MultiIndex& m) {
  std::vector<Rational> r;
  r.reserve(m.dim());
  for (int v : m.entries()) r.emplace_back(v);
  return r;
}

}  // namespace

Rational hahn_a(std::span<const Rational> ell, const MultiIndex& nu, std::size_t j) {
  return -suffix_sum(ell, j + 1) + Rational(2 * nu.suffix(j + 1)) - 1;
}

Rational hahn_multi_generic(std::span<const Rational> ell, long N, const MultiIndex& nu,
                            const MultiIndex& x) {
  const std::size_t d = nu.dim();
  if (ell.size() != d + 1 || x.dim() != d) throw LengthMismatch("hahn_multi: dimension mismatch");
  const long total = nu.total();
  const Rational lead = pochhammer(Rational(-N), total);
  if (sgn(lead) == 0) throw DenominatorPole("(-N)_{|nu|} vanishes");
  Rational value = sign_power(total) / lead;
  for (std::size_t j = 1; j <= d; ++j) {
    const long nj = nu[j - 1];
    const Rational& lj = ell[j - 1];
    const Rational aj = hahn_a(ell, nu, j);
    const Rational den = pochhammer(aj + 1, nj);
    if (sgn(den) == 0)
      throw DenominatorPole("(a_j+1)_{nu_j} vanishes at j=" + std::to_string(j));
    value *= pochhammer(-lj, nj) / den;
    const Rational M = Rational(N - x.prefix(j - 1) - nu.suffix(j + 1));
    value *= hahn_factor(nj, lj, aj, M, x[j - 1]);
    if (sgn(value) == 0) break;
  }
  return value;
}

Rational hahn_multi(const DomainSpec& spec, const MultiIndex& nu, const MultiIndex& x) {
  if (!in_H(spec, nu)) throw IndexOutsideH("index " + nu.str() + " is not in H");
  if (!in_V(spec, x)) throw PointOutsideDomain("point " + x.str() + " is not in V");
  const auto ell = to_rational(spec.ell());
  return hahn_multi_generic(ell, spec.N(), nu, x);
}

Rational norm_B_generic(std::span<const Rational> ell, long N, const MultiIndex& nu) {
  const std::size_t d = nu.dim();
  if (ell.size() != d + 1) throw LengthMismatch("norm_B: dimension mismatch");
  const long total = nu.total();
  const Rational lt = suffix_sum(ell, 1);
  Rational den = pochhammer(Rational(-N), total) * pochhammer(-lt, N) * pochhammer(-lt, 2 * total);
  if (sgn(den) == 0) throw DenominatorPole("norm_B: leading denominator vanishes");
  Rational value = sign_power(total) * pochhammer(-lt, N + total) / den;
  for (std::size_t j = 1; j <= d; ++j) {
    const long nj = nu[j - 1];
    const Rational& lj = ell[j - 1];
    const Rational aj = hahn_a(ell, nu, j);
    const Rational dj = pochhammer(-lj + aj, nj) * pochhammer(aj + 1, nj);
    if (sgn(dj) == 0) throw DenominatorPole("norm_B: factor denominator vanishes");
    value *= pochhammer(-lj + aj, 2 * nj) * pochhammer(-lj, nj) * Rational(factorial(nj)) / dj;
  }
  return value;
}

Rational norm_B(const DomainSpec& spec, const MultiIndex& nu) {
  if (!in_H(spec, nu)) throw IndexOutsideH("index " + nu.str() + " is not in H");
  const auto ell = to_rational(spec.ell());
  return norm_B_generic(ell, spec.N(), nu);
}

MultiIndex cyclic_permute(const MultiIndex& z, int shift) {
  const std::size_t n = z.dim();
  std::vector<int> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const long src = (static_cast<long>(i) + shift % static_cast<long>(n) + static_cast<long>(n)) %
                     static_cast<long>(n);
    out[i] = z[static_cast<std::size_t>(src)];
  }
  return MultiIndex(std::move(out));
}

DomainSpec permuted_spec(const DomainSpec& spec, int shift) {
  return check_admissible(spec.d(), spec.N(), cyclic_permute(spec.ell(), shift));
}

Rational hahn_permuted(const DomainSpec& spec, int shift, const MultiIndex& nu,
                       const MultiIndex& x) {
  if (!in_V(spec, x)) throw PointOutsideDomain("point " + x.str() + " is not in V");
  const DomainSpec ps = permuted_spec(spec, shift);
  const MultiIndex xh = cyclic_permute(homogeneous(spec, x), shift);
  std::vector<int> xp(xh.vec().begin(), xh.vec().end() - 1);
  return hahn_multi(ps, nu, MultiIndex(std::move(xp)));
}

// ---- limit families ----

void KrawtchoukParams::validate() const {
  if (N < 0) throw ParameterOutOfRange("Krawtchouk: N must be non-negative");
  Rational total = 0;
  for (const auto& pi : p) {
    if (sgn(pi) <= 0 || pi >= 1) throw ParameterOutOfRange("Krawtchouk: need 0 < p_i < 1");
    total += pi;
  }
  if (total >= 1) throw ParameterOutOfRange("Krawtchouk: need |p| < 1");
}

void MeixnerParams::validate() const {
  if (sgn(s) <= 0) throw ParameterOutOfRange("Meixner: need s > 0");
  Rational total = 0;
  for (const auto& ci : c) {
    if (sgn(ci) <= 0 || ci >= 1) throw ParameterOutOfRange("Meixner: need 0 < c_i < 1");
    total += ci;
  }
  if (total >= 1) throw ParameterOutOfRange("Meixner: need |c| < 1");
}

void CharlierParams::validate() const {
  for (const auto& ai : a)
    if (sgn(ai) <= 0) throw ParameterOutOfRange("Charlier: need a_i > 0");
}

Rational krawtchouk_1d(long n, const Rational& p, long M, long x) {
  if (sgn(p) == 0) throw ParameterOutOfRange("Krawtchouk: p must be nonzero");
  return hyp2f1_terminating(n, x, Rational(-M), 1 / p);
}

Rational krawtchouk_factor(long n, const Rational& p, const Rational& M, long x) {
  if (sgn(p) == 0) throw ParameterOutOfRange("Krawtchouk: p must be nonzero");
  const long kmax = std::min(n, x);
  const Rational inv = 1 / p;
  Rational term = 1;  // (-n)_k (-x)_k p^{-k} / k!
  Rational sum = pochhammer(-M, n);
  for (long k = 0; k < kmax; ++k) {
    term *= Rational(-n + k) * Rational(-x + k) * inv;
    term /= (k + 1);
    if (sgn(term) == 0) break;
    sum += term * pochhammer(-M + (k + 1), n - (k + 1));
  }
  return sum;
}

Rational krawtchouk_multi_formal(std::span<const Rational> p, const Rational& N,
                                 const MultiIndex& nu, const MultiIndex& x) {
  const std::size_t d = nu.dim();
  if (p.size() != d || x.dim() != d) throw LengthMismatch("krawtchouk: dimension mismatch");
  const Rational lead = pochhammer(-N, nu.total());
  if (sgn(lead) == 0) throw DenominatorPole("(-N)_{|nu|} vanishes");
  Rational value = 1 / lead;
  Rational prefix_p = 0;
  for (std::size_t j = 1; j <= d; ++j) {
    const Rational rest = 1 - prefix_p;
    if (sgn(rest) == 0) throw DenominatorPole("1 - |p_{j-1}| vanishes");
    const Rational arg = p[j - 1] / rest;
    const Rational M = N - x.prefix(j - 1) - nu.suffix(j + 1);
    value *= krawtchouk_factor(nu[j - 1], arg, M, x[j - 1]);
    prefix_p += p[j - 1];
    if (sgn(value) == 0) break;
  }
  return value;
}

Rational krawtchouk_multi(const KrawtchoukParams& params, const MultiIndex& nu,
                          const MultiIndex& x) {
  params.validate();
  if (nu.dim() != params.p.size()) throw LengthMismatch("krawtchouk: nu has wrong length");
  if (nu.total() > params.N) throw IndexOutsideH("krawtchouk: |nu| exceeds N");
  if (x.dim() != params.p.size() || x.total() > params.N)
    throw PointOutsideDomain("krawtchouk: x is not in V_N^d");
  return krawtchouk_multi_formal(params.p, Rational(params.N), nu, x);
}

Rational meixner_1d(long n, long x, const Rational& s, const Rational& c) {
  if (sgn(c) == 0) throw ParameterOutOfRange("Meixner: c must be nonzero");
  return hyp2f1_terminating(n, x, s, 1 - 1 / c);
}

Rational meixner_multi(const MeixnerParams& params, const MultiIndex& nu, const MultiIndex& x) {
  params.validate();
  const std::size_t d = params.c.size();
  if (nu.dim() != d || x.dim() != d) throw LengthMismatch("meixner: dimension mismatch");
  Rational value = 1 / pochhammer(params.s, nu.total());
  for (std::size_t j = 1; j <= d; ++j) {
    Rational csuffix = 0;
    for (std::size_t i = j + 1; i <= d; ++i) csuffix += params.c[i - 1];
    const Rational sj = params.s + x.prefix(j - 1) + nu.suffix(j + 1);
    const Rational cj = params.c[j - 1] / (1 - csuffix);
    value *= pochhammer(sj, nu[j - 1]) * meixner_1d(nu[j - 1], x[j - 1], sj, cj);
  }
  return value;
}

Rational charlier_1d(long n, const Rational& t, const Rational& s) {
  if (sgn(s) == 0) throw ParameterOutOfRange("Charlier: parameter must be nonzero");
  return hyp2f0_terminating(n, t, -1 / s);
}

Rational charlier_multi(const CharlierParams& params, const MultiIndex& nu,
                        std::span<const Rational> x) {
  params.validate();
  if (nu.dim() != params.a.size() || x.size() != params.a.size())
    throw LengthMismatch("charlier: dimension mismatch");
  Rational value = 1;
  for (std::size_t i = 0; i < nu.dim(); ++i) value *= charlier_1d(nu[i], x[i], params.a[i]);
  return value;
}

Rational hermite_1d(long n, const Rational& t) {
  if (n < 0) throw OutOfRange("hermite: negative degree");
  Rational prev = 1;
  if (n == 0) return prev;
  Rational cur = 2 * t;
  for (long k = 1; k < n; ++k) {
    Rational next = 2 * t * cur - Rational(2 * k) * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Rational multinomial_weight(const KrawtchoukParams& params, const MultiIndex& x) {
  params.validate();
  const long rest = params.N - x.total();
  if (rest < 0) throw PointOutsideDomain("multinomial_weight: |x| exceeds N");
  Rational w = Rational(factorial(params.N)) / Rational(factorial(rest));
  Rational ptotal = 0;
  for (std::size_t i = 0; i < x.dim(); ++i) {
    w *= power(params.p[i], static_cast<unsigned long>(x[i])) / Rational(factorial(x[i]));
    ptotal += params.p[i];
  }
  w *= power(1 - ptotal, static_cast<unsigned long>(rest));
  return w;
}

}  // namespace polyhahn
