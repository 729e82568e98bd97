#include "polyhahn/combinatorics.hpp"
#include "polyhahn/errors.hpp"
#include "polyhahn/hypergeometric.hpp"
#include "polyhahn/multi_index.hpp"
#include "polyhahn/rational.hpp"

#include <doctest.h>

#include <functional>
#include <random>

using namespace polyhahn;

namespace {

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-40, 40), den(1, 12);
  const int n = num(rng);
  return fraction(n, den(rng));
}

// plain loop, independent of the library's implementation
Rational product_oracle(const Rational& a, long n) {
  Rational r = 1;
  for (long k = 0; k < n; ++k) r *= a + k;
  return r;
}

}  // namespace

TEST_CASE("rationals are canonical and print as p/q") {
  CHECK(to_string(fraction(6, -4)) == "-3/2");
  CHECK(to_string(fraction(8, 4)) == "2");
  CHECK(to_string(fraction(0, 5)) == "0");
  CHECK_THROWS_AS(fraction(1, 0), Error);
  CHECK(parse_rational("-10/4") == Rational(-5, 2));
  CHECK(parse_rational("7") == Rational(7));
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("abc"));
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(is_integer(fraction(9, 3)));
  Rational root;
  CHECK(exact_sqrt(Rational(9, 4), root));
  CHECK(root == Rational(3, 2));
  CHECK_FALSE(exact_sqrt(Rational(2), root));
}

TEST_CASE("pochhammer examples") {
  CHECK(pochhammer(Rational(7, 3), 0) == 1);
  CHECK(pochhammer(Rational(-2), 3) == 0);
  CHECK(pochhammer(Rational(-3), 2) == 6);
}

TEST_CASE("pochhammer splits over consecutive ranges") {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<long> len(0, 20);
  for (int trial = 0; trial < 200; ++trial) {
    const Rational a = random_rational(rng);
    const long m = len(rng), n = len(rng);
    CHECK(pochhammer(a, m + n) == pochhammer(a, m) * pochhammer(a + m, n));
    CHECK(pochhammer(a, n) == product_oracle(a, n));
  }
}

TEST_CASE("binomial examples and errors") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(17, 0) == 1);
  CHECK(binomial(2, 3) == 0);
  CHECK_THROWS_AS(binomial(-1, 2), OutOfRange);
}

TEST_CASE("binomial satisfies Pascal's rule against a built triangle") {
  std::vector<std::vector<Integer>> tri(61);
  for (int a = 0; a <= 60; ++a) {
    tri[a].assign(a + 1, 1);
    for (int k = 1; k < a; ++k) tri[a][k] = tri[a - 1][k - 1] + tri[a - 1][k];
  }
  for (long a = 1; a <= 60; ++a)
    for (long k = 0; k < a; ++k) {
      CHECK(binomial(a, k) == tri[a][k]);
      CHECK(binomial(a, k + 1) == binomial(a - 1, k) + binomial(a - 1, k + 1));
    }
}

TEST_CASE("binomial summation over compositions, brute force") {
  // sum_{b in N_0^k, |b| <= M} C(M - |b| + j, j + 1) = C(M + j + k, j + k + 1)
  for (long M = 0; M <= 8; ++M)
    for (long j = 0; j <= 4; ++j)
      for (long k = 0; k <= 4; ++k) {
        Integer lhs = 0;
        std::vector<long> b(static_cast<std::size_t>(k), 0);
        std::function<void(std::size_t, long)> rec = [&](std::size_t pos, long used) {
          if (pos == b.size()) {
            lhs += binomial(M - used + j, j + 1);
            return;
          }
          for (long v = 0; used + v <= M; ++v) rec(pos + 1, used + v);
        };
        rec(0, 0);
        CHECK(lhs == binomial(M + j + k, j + k + 1));
      }
}

TEST_CASE("terminating 3F2") {
  const Rational a(3, 2), b(1, 3);
  const long N = 7;
  CHECK(hyp3f2_terminating(0, a + b + 1, 5, a + 1, N) == 1);
  CHECK(hyp3f2_terminating(4, a + b + 5, 0, a + 1, N) == 1);
  for (long x = 0; x <= N; ++x) {
    const Rational expect = 1 - (a + b + 2) * x / ((a + 1) * N);
    CHECK(hyp3f2_terminating(1, a + b + 2, x, a + 1, N) == expect);
  }
  // lower parameter -1 vanishes at k = 2
  CHECK_THROWS_AS(hyp3f2_terminating(3, Rational(1), 3, Rational(-1), 10), DenominatorPole);
  // truncation at min(n, x) skips the pole beyond the range
  CHECK_NOTHROW(hyp3f2_terminating(3, Rational(1), 1, Rational(-1), 10));
}

TEST_CASE("multi-index sums") {
  MultiIndex x{3, 1, 4};
  CHECK(x.total() == 8);
  CHECK(x.prefix(2) == 4);
  CHECK(x.suffix(2) == 5);
  CHECK(x.prefix(0) == 0);
  CHECK_THROWS(MultiIndex{1, -1});
}
