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

// M_k f evaluated pointwise from the defining formula of L_ab
std::vector<Rational> gaudin_pointwise(const DomainSpec& s, const LatticeDomain& v, int k,
                                       const std::vector<Rational>& f) {
  const int d = s.d();
  std::vector<Rational> out(v.size(), Rational(0));
  for (std::size_t r = 0; r < v.size(); ++r) {
    const MultiIndex xh = homogeneous(s, v[r]);
    for (int a = k; a <= d + 1; ++a)
      for (int b = a + 1; b <= d + 1; ++b)
        for (auto [i, j] : {std::pair{a, b}, std::pair{b, a}}) {
          const Rational coef = Rational(xh[j - 1]) * Rational(xh[i - 1] - s.ell(i));
          if (sgn(coef) == 0) continue;
          std::vector<int> y(v[r].vec());
          if (i <= d) ++y[i - 1];
          if (j <= d) --y[j - 1];
          const auto idx = v.index_of(MultiIndex(y));
          REQUIRE(idx.has_value());
          out[r] += coef * (f[*idx] - f[r]);
        }
  }
  return out;
}

// rank by plain Gaussian elimination over the rationals
long rank_oracle(std::vector<std::vector<Rational>> m) {
  long rank = 0;
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < static_cast<long>(rows); ++c) {
    std::size_t p = static_cast<std::size_t>(rank);
    while (p < rows && sgn(m[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[static_cast<std::size_t>(rank)]);
    const auto& piv = m[static_cast<std::size_t>(rank)];
    for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < rows; ++r) {
      const Rational factor = m[r][c] / piv[c];
      for (std::size_t cc = c; cc < cols; ++cc) m[r][cc] -= factor * piv[cc];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

TEST_CASE("inner products") {
  const auto s = spec(2, 3, {2, 2, 2});
  const LatticeDomain v(s);
  const std::vector<Rational> ones(v.size(), Rational(1));
  CHECK(inner_product(v, ones, ones) == 1);
  const auto q10 = hahn_vector(v, MultiIndex{1, 0});
  const auto q01 = hahn_vector(v, MultiIndex{0, 1});
  CHECK(inner_product(v, q10, q01) == 0);
  CHECK(inner_product(v, q10, q10) == Rational(1, 10));
  CHECK_THROWS_AS(inner_product(v, ones, std::vector<Rational>(3)), LengthMismatch);
}

TEST_CASE("Gram matrices") {
  const auto g = gram(spec(2, 3, {2, 2, 2}));
  CHECK(g.is_diagonal());
  CHECK(g.basis.front() == MultiIndex{0, 0});
  CHECK(g.entries[0][0] == 1);
  const auto g3 = gram(spec(3, 4, {3, 3, 3, 3}));
  CHECK(g3.basis.size() == 31);
  CHECK(g3.is_diagonal());
  for (int shift : {1, -1}) {
    const auto gp = gram(spec(2, 6, {4, 4, 2}), shift);
    CHECK(gp.is_diagonal());
    for (std::size_t i = 0; i < gp.basis.size(); ++i)
      CHECK(gp.entries[i][i] == norm_B(permuted_spec(spec(2, 6, {4, 4, 2}), shift), gp.basis[i]));
  }
  for (const auto& s : {spec(2, 3, {2, 2, 2}), spec(2, 9, {7, 6, 7}), spec(2, 6, {4, 4, 2}), spec(3, 4, {3, 3, 3, 3})})
    CHECK(verify_orthogonality(s).all_hold());
}

TEST_CASE("spectral tower") {
  const auto s = spec(2, 3, {2, 2, 2});
  const auto r = verify_spectra(s);
  CHECK(r.all_exact);
  CHECK(r.permuted_exact);
  bool seen = false;
  for (const auto& rec : r.records) {
    if (rec.nu == MultiIndex{0, 0}) {
      for (const auto& l : rec.lambda) CHECK(l == 0);
    }
    if (rec.nu == MultiIndex{1, 1}) {
      seen = true;
      CHECK(rec.lambda == std::vector<Rational>{Rational(10), Rational(4)});
    }
  }
  CHECK(seen);
  CHECK(gaudin_eigenvalue(s.ell(), MultiIndex{1, 1}, 1) == 10);
  CHECK(gaudin_eigenvalue(s.ell(), MultiIndex{1, 1}, 2) == 4);

  // independent check through the pointwise operator
  const LatticeDomain v(s);
  for (const auto& nu : IndexSet(s).indices()) {
    const auto q = hahn_vector(v, nu);
    for (int k = 1; k <= s.d(); ++k) {
      const auto lhs = gaudin_pointwise(s, v, k, q);
      const Rational lam = gaudin_eigenvalue(s.ell(), nu, k);
      for (std::size_t i = 0; i < v.size(); ++i) CHECK(lhs[i] == lam * q[i]);
    }
  }
}

TEST_CASE("spectral sweep") {
  for (int d = 1; d <= 3; ++d)
    for (int N = 1; N <= (d == 3 ? 4 : 6); ++N)
      for (const auto& s : admissible_specs(d, N)) {
        const auto r = verify_spectra(s);
        CHECK(r.all_exact);
        CHECK(r.permuted_exact);
      }
}

TEST_CASE("fraction-free rank agrees with rational elimination") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 60; ++trial) {
    const int rows = std::uniform_int_distribution<int>(1, 8)(rng);
    const int cols = std::uniform_int_distribution<int>(1, 8)(rng);
    const int true_rank = std::uniform_int_distribution<int>(0, std::min(rows, cols))(rng);
    // product of random rows x r and r x cols factors, so the rank is at most r
    std::uniform_int_distribution<int> e(-4, 4);
    std::vector<std::vector<int>> A(rows, std::vector<int>(true_rank)), B(true_rank, std::vector<int>(cols));
    for (auto& r : A)
      for (auto& x : r) x = e(rng);
    for (auto& r : B)
      for (auto& x : r) x = e(rng);
    std::vector<std::vector<Integer>> m(rows, std::vector<Integer>(cols, 0));
    std::vector<std::vector<Rational>> mq(rows, std::vector<Rational>(cols, 0));
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) {
        long acc = 0;
        for (int k = 0; k < true_rank; ++k) acc += static_cast<long>(A[i][k]) * B[k][j];
        m[i][j] = acc;
        mq[i][j] = Rational(acc);
      }
    CHECK(matrix_rank(m) == rank_oracle(mq));
  }
}

TEST_CASE("interpolation rank equals |V|") {
  CHECK(interpolation_rank(spec(2, 3, {2, 2, 2})) == 7);
  const auto s = spec(2, 9, {7, 6, 7});
  CHECK(LatticeDomain(s).size() == 43);
  CHECK(interpolation_rank(s) == 43);
  for (int N = 1; N <= 5; ++N)
    CHECK(Integer(interpolation_rank(simplex_spec(2, N))) == binomial(N + 2, 2));
  CHECK_THROWS_AS(interpolation_rank(simplex_spec(3, 13)), TooLarge);
}
