#include "polyhahn/combinatorics.hpp"
#include "polyhahn/domain.hpp"
#include "polyhahn/errors.hpp"
#include "polyhahn/families.hpp"
#include "polyhahn/spectra.hpp"

#include <doctest.h>

#include <random>

using namespace polyhahn;

namespace {

DomainSpec spec(int d, int N, std::vector<int> ell) { return check_admissible(d, N, MultiIndex(std::move(ell))); }

Rational rnd(std::mt19937_64& rng, int lo, int hi, int den_hi) {
  std::uniform_int_distribution<int> n(lo, hi), d(1, den_hi);
  const int top = n(rng);
  return fraction(top, d(rng));
}

// Gram matrix assembled directly from hahn_multi and weight
std::vector<std::vector<Rational>> gram_oracle(const DomainSpec& s) {
  const LatticeDomain v(s);
  const IndexSet h(s);
  std::vector<std::vector<Rational>> q(h.size());
  for (std::size_t a = 0; a < h.size(); ++a)
    for (const auto& x : v.points()) q[a].push_back(hahn_multi(s, h[a], x));
  std::vector<Rational> w;
  for (const auto& x : v.points()) w.push_back(weight(s, x));
  std::vector<std::vector<Rational>> g(h.size(), std::vector<Rational>(h.size()));
  for (std::size_t a = 0; a < h.size(); ++a)
    for (std::size_t b = a; b < h.size(); ++b) {
      Rational sum = 0;
      for (std::size_t i = 0; i < v.size(); ++i) sum += q[a][i] * q[b][i] * w[i];
      g[a][b] = g[b][a] = sum;
    }
  return g;
}

}  // namespace

TEST_CASE("univariate Hahn") {
  const Rational a(2, 3), b(5, 4);
  const long M = 6;
  for (long x = 0; x <= M; ++x) {
    CHECK(hahn_1d(0, a, b, M, x) == 1);
    CHECK(hahn_1d(1, a, b, M, x) == 1 - (a + b + 2) * x / ((a + 1) * M));
  }
  for (long n = 0; n <= M; ++n) CHECK(hahn_1d(n, a, b, M, 0) == 1);
}

TEST_CASE("negative-parameter Hahn identities") {
  CHECK(hahn_1d_negparam_identity_check(2, 3, Rational(1, 2), 5));
  CHECK(hahn_1d_negparam_identity_check(0, 3, Rational(7, 3), 5));
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    std::uniform_int_distribution<long> pm(1, 8);
    const long M = pm(rng);
    const long l = std::uniform_int_distribution<long>(0, M)(rng);
    const long n = std::uniform_int_distribution<long>(0, l)(rng);
    Rational b = rnd(rng, 1, 30, 7);
    CHECK(hahn_1d_negparam_identity_check(n, l, b, M));
  }
}

TEST_CASE("fused Hahn factor") {
  const Rational l(4), a(-9);
  CHECK(hahn_factor(0, l, a, Rational(3), 2) == 1);
  for (long nu = 0; nu <= 4; ++nu) CHECK(hahn_factor(nu, l, a, Rational(2), 0) == pochhammer(Rational(-2), nu));
  // prefactor times Q wherever the separate form is defined
  std::mt19937_64 rng(3);
  int compared = 0;
  while (compared < 100) {
    const long nu = std::uniform_int_distribution<long>(0, 4)(rng);
    const long lj = std::uniform_int_distribution<long>(nu, nu + 4)(rng);
    const long M = std::uniform_int_distribution<long>(nu, 10)(rng);
    const long x = std::uniform_int_distribution<long>(0, M)(rng);
    const Rational aj = rnd(rng, -20, 20, 5);
    const Rational fused = hahn_factor(nu, Rational(lj), aj, Rational(M), x);
    const Rational separate = pochhammer(Rational(-M), nu) * hahn_1d(nu, Rational(-lj - 1), aj, M, x);
    CHECK(fused == separate);
    ++compared;
  }
}

TEST_CASE("multivariate Hahn basics and errors") {
  const auto s = spec(2, 3, {2, 2, 2});
  for (const auto& x : LatticeDomain(s).points()) CHECK(hahn_multi(s, MultiIndex{0, 0}, x) == 1);
  CHECK_THROWS_AS(hahn_multi(s, MultiIndex{3, 0}, MultiIndex{1, 1}), IndexOutsideH);
  CHECK_THROWS_AS(hahn_multi(s, MultiIndex{1, 0}, MultiIndex{0, 0}), PointOutsideDomain);
  CHECK(norm_B(s, MultiIndex{0, 0}) == 1);
  CHECK(norm_B(s, MultiIndex{1, 0}) == Rational(1, 10));
  CHECK_THROWS_AS(norm_B(s, MultiIndex{0, 3}), IndexOutsideH);
  const auto g = gram_oracle(s);
  const IndexSet h(s);
  int offdiag = 0;
  for (std::size_t a = 0; a < h.size(); ++a)
    for (std::size_t b = a + 1; b < h.size(); ++b) {
      CHECK(sgn(g[a][b]) == 0);
      ++offdiag;
    }
  CHECK(offdiag == 21);
  CHECK(g[*h.index_of(MultiIndex{1, 0})][*h.index_of(MultiIndex{1, 0})] == Rational(1, 10));
}

TEST_CASE("orthogonality with closed-form norms over a sweep") {
  for (int d = 1; d <= 3; ++d)
    for (int N = 1; N <= (d == 3 ? 4 : 6); ++N)
      for (const auto& s : admissible_specs(d, N)) {
        const auto g = gram_oracle(s);
        const IndexSet h(s);
        for (std::size_t a = 0; a < h.size(); ++a) {
          CHECK(g[a][a] == norm_B(s, h[a]));
          CHECK(sgn(g[a][a]) > 0);
          for (std::size_t b = a + 1; b < h.size(); ++b) CHECK(sgn(g[a][b]) == 0);
        }
      }
}

TEST_CASE("generic parameters reproduce simplex Hahn orthogonality") {
  std::mt19937_64 rng(17);
  for (long N = 1; N <= 4; ++N) {
    std::vector<Rational> kappa{rnd(rng, 0, 9, 4), rnd(rng, 0, 9, 3), rnd(rng, 0, 9, 5)};
    std::vector<Rational> ell;
    Rational ltot = 0;
    for (const auto& k : kappa) {
      ell.push_back(-k - 1);
      ltot += ell.back();
    }
    const auto pts = simplex_points(2, static_cast<int>(N));
    const auto idx = simplex_points(2, static_cast<int>(N));
    std::vector<Rational> w;
    for (const auto& x : pts) {
      Rational v = Rational(factorial(N)) / pochhammer(-ltot, N);
      v *= pochhammer(-ell[0], x[0]) / Rational(factorial(x[0]));
      v *= pochhammer(-ell[1], x[1]) / Rational(factorial(x[1]));
      const long last = N - x.total();
      v *= pochhammer(-ell[2], last) / Rational(factorial(last));
      w.push_back(v);
    }
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = a; b < idx.size(); ++b) {
        Rational sum = 0;
        for (std::size_t i = 0; i < pts.size(); ++i)
          sum += w[i] * hahn_multi_generic(ell, N, idx[a], pts[i]) * hahn_multi_generic(ell, N, idx[b], pts[i]);
        if (a == b) CHECK(sum == norm_B_generic(ell, N, idx[a]));
        else CHECK(sgn(sum) == 0);
      }
  }
}

TEST_CASE("cyclic relabelling") {
  CHECK(cyclic_permute(MultiIndex{1, 2, 3}, 1) == MultiIndex{2, 3, 1});
  CHECK(cyclic_permute(MultiIndex{1, 2, 3}, -1) == MultiIndex{3, 1, 2});
  const auto s = spec(2, 6, {4, 4, 2});
  CHECK(permuted_spec(s, 1).ell() == MultiIndex{4, 2, 4});
}

TEST_CASE("Krawtchouk") {
  const Rational p(2, 7);
  const long M = 5;
  for (long x = 0; x <= M; ++x) {
    CHECK(krawtchouk_1d(0, p, M, x) == 1);
    CHECK(krawtchouk_1d(1, p, M, x) == 1 - Rational(x) / (p * M));
  }
  const KrawtchoukParams kp{{Rational(1, 3), Rational(1, 3)}, 4};
  const auto pts = simplex_points(2, 4);
  for (const auto& x : pts) CHECK(krawtchouk_multi(kp, MultiIndex{0, 0}, x) == 1);
  Rational total = 0;
  for (const auto& x : pts) total += multinomial_weight(kp, x);
  CHECK(total == 1);
  for (std::size_t a = 0; a < pts.size(); ++a)
    for (std::size_t b = a + 1; b < pts.size(); ++b) {
      Rational sum = 0;
      for (const auto& x : pts)
        sum += multinomial_weight(kp, x) * krawtchouk_multi(kp, pts[a], x) * krawtchouk_multi(kp, pts[b], x);
      CHECK(sgn(sum) == 0);
    }
  CHECK_THROWS_AS((KrawtchoukParams{{Rational(1, 2), Rational(1, 2)}, 3}.validate()), ParameterOutOfRange);
  CHECK_THROWS_AS(krawtchouk_multi(kp, MultiIndex{3, 2}, MultiIndex{0, 0}), Error);
}

TEST_CASE("Meixner equals the formally substituted Krawtchouk polynomial") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    const Rational s = rnd(rng, 1, 12, 4);
    const Rational c1 = Rational(std::uniform_int_distribution<int>(1, 4)(rng), 13);
    const Rational c2 = Rational(std::uniform_int_distribution<int>(1, 4)(rng), 11);
    const MeixnerParams mp{s, {c1, c2}};
    mp.validate();
    const MultiIndex nu{std::uniform_int_distribution<int>(0, 3)(rng), std::uniform_int_distribution<int>(0, 3)(rng)};
    const MultiIndex x{std::uniform_int_distribution<int>(0, 6)(rng), std::uniform_int_distribution<int>(0, 6)(rng)};
    const Rational csum = c1 + c2;
    std::vector<Rational> p{-c1 / (1 - csum), -c2 / (1 - csum)};
    CHECK(meixner_multi(mp, nu, x) == krawtchouk_multi_formal(p, -s, nu, x));
  }
  const MeixnerParams mp{Rational(2), {Rational(1, 3), Rational(1, 4)}};
  CHECK(meixner_multi(mp, MultiIndex{0, 0}, MultiIndex{3, 4}) == 1);
  CHECK(meixner_1d(3, 0, Rational(2), Rational(1, 3)) == 1);
  CHECK_THROWS_AS((MeixnerParams{Rational(-1), {Rational(1, 3)}}.validate()), ParameterOutOfRange);
}

TEST_CASE("Charlier and Hermite") {
  const Rational s(5, 2);
  for (int t = -3; t <= 6; ++t) {
    CHECK(charlier_1d(0, Rational(t), s) == 1);
    CHECK(charlier_1d(1, Rational(t), s) == 1 - Rational(t) / s);
  }
  for (int k = -4; k <= 4; ++k) {
    const Rational t = fraction(k, 3);
    CHECK(hermite_1d(0, t) == 1);
    CHECK(hermite_1d(1, t) == 2 * t);
    CHECK(hermite_1d(2, t) == 4 * t * t - 2);
    CHECK(hermite_1d(3, t) == 8 * t * t * t - 12 * t);
  }
  const CharlierParams cp{{Rational(1), Rational(3)}};
  const std::vector<Rational> x{Rational(2), Rational(5)};
  CHECK(charlier_multi(cp, MultiIndex{2, 1}, x) == charlier_1d(2, x[0], cp.a[0]) * charlier_1d(1, x[1], cp.a[1]));
  CHECK_THROWS_AS((CharlierParams{{Rational(0)}}.validate()), ParameterOutOfRange);
}

TEST_CASE("truncated orthogonality on the infinite lattices") {
  const auto ch = truncated_orthogonality(CharlierParams{{Rational(2), Rational(1, 3)}}, 4);
  CHECK(ch.holds);
  CHECK(ch.tail_estimate < 1e-14);
  const auto mx = truncated_orthogonality(MeixnerParams{Rational(3, 2), {Rational(1, 5), Rational(1, 4)}}, 4);
  CHECK(mx.holds);
  CHECK(mx.max_relative_offdiagonal <= 1e-10);
}
