#include "polyhahn/combinatorics.hpp"
#include "polyhahn/domain.hpp"
#include "polyhahn/errors.hpp"

#include <doctest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

using namespace polyhahn;

namespace {

DomainSpec spec(int d, int N, std::vector<int> ell) { return check_admissible(d, N, MultiIndex(std::move(ell))); }

// every point of the grid prod [0, bound_i], filtered
std::vector<MultiIndex> grid_filter(const std::vector<int>& bound, const std::function<bool(const MultiIndex&)>& keep) {
  std::vector<MultiIndex> out;
  MultiIndex x(bound.size());
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == bound.size()) {
      if (keep(x)) out.push_back(x);
      return;
    }
    for (int v = 0; v <= bound[pos]; ++v) {
      x[pos] = v;
      rec(pos + 1);
    }
  };
  rec(0);
  return out;
}

std::vector<MultiIndex> brute_V(const DomainSpec& s) {
  const int d = s.d();
  std::vector<int> bound(s.ell().vec().begin(), s.ell().vec().begin() + d);
  return grid_filter(bound, [&](const MultiIndex& x) {
    const long t = x.total();
    return t <= s.N() && t >= s.N() - s.ell(d + 1);
  });
}

// inequalities straight from the definition of H
std::vector<MultiIndex> brute_H(const DomainSpec& s) {
  const int d = s.d();
  return grid_filter(std::vector<int>(d, s.N()), [&](const MultiIndex& nu) {
    for (int j = 1; j <= d; ++j) {
      if (nu[j - 1] > s.ell(j)) return false;
      long tail_nu = 0, tail_l = 0;
      for (int i = j + 1; i <= d; ++i) tail_nu += nu[i - 1];
      for (int i = j + 1; i <= d + 1; ++i) tail_l += s.ell(i);
      if (nu[j - 1] + 2 * tail_nu > tail_l) return false;
    }
    return nu.total() <= s.ell_total() - s.N() && nu.total() <= s.N();
  });
}

Rational weight_oracle(const DomainSpec& s, const MultiIndex& x) {
  const int d = s.d(), N = s.N();
  Rational w = Rational(factorial(N)) / pochhammer(Rational(-s.ell_total()), N);
  for (int i = 1; i <= d; ++i) w *= pochhammer(Rational(-s.ell(i)), x[i - 1]) / Rational(factorial(x[i - 1]));
  const long last = N - x.total();
  w *= pochhammer(Rational(-s.ell(d + 1)), last) / Rational(factorial(last));
  return w;
}

std::vector<DomainSpec> small_sweep() {
  std::vector<DomainSpec> out;
  for (int d = 1; d <= 3; ++d)
    for (int N = 1; N <= (d == 3 ? 5 : 7); ++N)
      for (auto& s : admissible_specs(d, N)) out.push_back(s);
  return out;
}

}  // namespace

TEST_CASE("admissibility") {
  const auto a = spec(2, 3, {2, 2, 2});
  CHECK(a.degenerate_pairs().empty());
  try {
    (void)check_admissible(2, 6, MultiIndex{3, 5, 2});
    FAIL("expected Inadmissible");
  } catch (const Inadmissible& e) {
    CHECK(e.first() == 1);
    CHECK(e.second() == 3);
  }
  const auto q = spec(2, 6, {4, 4, 2});
  CHECK(q.degenerate_pairs() == std::vector<std::pair<int, int>>{{1, 3}, {2, 3}});
  CHECK_THROWS_AS(check_admissible(2, 3, MultiIndex{0, 3, 3}), OutOfRange);
  CHECK_THROWS_AS(check_admissible(2, 3, MultiIndex{4, 3, 3}), OutOfRange);
  CHECK_THROWS_AS(check_admissible(2, 3, MultiIndex{3, 3}), OutOfRange);
  CHECK_FALSE(is_admissible(2, 6, MultiIndex{3, 5, 2}));
  CHECK(is_admissible(2, 3, MultiIndex{2, 2, 2}));
}

TEST_CASE("enumeration examples") {
  const auto s = spec(2, 3, {2, 2, 2});
  const LatticeDomain v(s);
  const std::vector<MultiIndex> expect_v{{0, 1}, {0, 2}, {1, 0}, {1, 1}, {1, 2}, {2, 0}, {2, 1}};
  std::vector<MultiIndex> got(v.points());
  std::sort(got.begin(), got.end());
  CHECK(got == expect_v);
  const IndexSet h(s);
  const std::vector<MultiIndex> expect_h{{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {2, 0}, {2, 1}};
  std::vector<MultiIndex> goth(h.indices());
  std::sort(goth.begin(), goth.end());
  CHECK(goth == expect_h);
  CHECK(count_V_formula(s) == 7);

  const auto big = spec(3, 10, {6, 7, 5, 8});
  CHECK(LatticeDomain(big).size() == 217);
  CHECK(IndexSet(big).size() == 217);
  CHECK(count_V_formula(big) == 217);
  CHECK(count_V_formula(big) == binomial(13, 3) - binomial(6, 3) - binomial(5, 3) - binomial(7, 3) - binomial(4, 3));

  for (int d = 1; d <= 4; ++d)
    for (int N = 1; N <= 5; ++N) {
      const auto full = simplex_spec(d, N);
      CHECK(Integer(static_cast<unsigned long>(LatticeDomain(full).size())) == binomial(N + d, d));
      CHECK(count_V_formula(full) == binomial(N + d, d));
    }
}

TEST_CASE("points are in graded lexicographic order without duplicates") {
  const LatticeDomain v(spec(3, 6, {4, 5, 3, 6}));
  for (std::size_t i = 1; i < v.size(); ++i) {
    const auto& a = v[i - 1];
    const auto& b = v[i];
    CHECK((a.total() < b.total() || (a.total() == b.total() && a < b)));
  }
  for (std::size_t i = 0; i < v.size(); ++i) CHECK(v.index_of(v[i]) == i);
  CHECK_FALSE(v.index_of(MultiIndex{5, 0, 0}).has_value());
}

TEST_CASE("enumeration agrees with brute-force grid scans") {
  for (const auto& s : small_sweep()) {
    auto bv = brute_V(s), bh = brute_H(s);
    std::vector<MultiIndex> v(LatticeDomain(s).points()), h(IndexSet(s).indices());
    std::sort(v.begin(), v.end());
    std::sort(h.begin(), h.end());
    CHECK(v == bv);
    CHECK(h == bh);
    CHECK(Integer(static_cast<unsigned long>(v.size())) == count_V_formula(s));
    CHECK(h.size() == v.size());
    CHECK(count_H_raw(s.d(), s.N(), s.ell()) == static_cast<long>(h.size()));
    for (const auto& x : bv) CHECK(in_V(s, x));
    for (const auto& nu : bh) CHECK(in_H(s, nu));
  }
}

TEST_CASE("randomized counts for d = 4") {
  for (const auto& s : sample_admissible_specs(4, 1, 7, 25, 99)) {
    const auto v = LatticeDomain(s).size();
    CHECK(Integer(static_cast<unsigned long>(v)) == count_V_formula(s));
    CHECK(IndexSet(s).size() == v);
  }
}

TEST_CASE("weight examples, normalization and positivity") {
  const auto s = spec(2, 3, {2, 2, 2});
  CHECK(weight(s, MultiIndex{1, 1}) == Rational(2, 5));
  CHECK(weight(s, MultiIndex{1, 0}) == Rational(1, 10));
  CHECK_THROWS_AS(weight(s, MultiIndex{0, 0}), PointOutsideDomain);
  for (const auto& sp : small_sweep()) {
    Rational total = 0;
    for (const auto& x : LatticeDomain(sp).points()) {
      const Rational w = weight(sp, x);
      CHECK(w == weight_oracle(sp, x));
      CHECK(sgn(w) > 0);
      total += w;
    }
    CHECK(total == 1);
  }
}

TEST_CASE("weight is symmetric under permutations of homogeneous coordinates") {
  std::mt19937_64 rng(5);
  for (const auto& s : small_sweep()) {
    std::vector<int> perm(static_cast<std::size_t>(s.d()) + 1);
    std::iota(perm.begin(), perm.end(), 0);
    for (int trial = 0; trial < 3; ++trial) {
      std::shuffle(perm.begin(), perm.end(), rng);
      MultiIndex pl(perm.size());
      for (std::size_t i = 0; i < perm.size(); ++i) pl[i] = s.ell()[perm[i]];
      for (const auto& x : LatticeDomain(s).points()) {
        const MultiIndex xh = homogeneous(s, x);
        MultiIndex px(perm.size());
        for (std::size_t i = 0; i < perm.size(); ++i) px[i] = xh[perm[i]];
        CHECK(weight_homogeneous(s.N(), pl, px) == weight(s, x));
      }
    }
  }
}

TEST_CASE("height functions and the d = 2 shuffle") {
  const auto s = spec(2, 9, {7, 6, 7});
  // column counts on x_1 = 0..7
  CHECK(heights_V(s) == std::vector<int>{5, 6, 7, 7, 6, 5, 4, 3});
  CHECK(heights_H(s) == std::vector<int>{7, 7, 6, 6, 5, 5, 4, 3});
  CHECK(heights_H_counted(s) == heights_H(s));
  const auto r = verify_shuffle(s);
  CHECK(r.holds);
  CHECK(r.partition_v);
  CHECK(r.partition_h);
  for (std::size_t i = 0; i < r.tau.size(); ++i) CHECK(r.heights_v[r.tau[i]] == r.heights_h[i]);
  CHECK(verify_shuffle(spec(2, 3, {2, 2, 2})).holds);
  CHECK(verify_shuffle(spec(2, 6, {4, 4, 2})).holds);
  CHECK_THROWS_AS(heights_V(spec(3, 4, {3, 3, 3, 3})), WrongDimension);
}

TEST_CASE("d = 3 projected heights run as an experiment") {
  const auto r = projection_shuffle_d3(spec(3, 10, {6, 7, 5, 8}));
  CHECK(!r.heights_v.empty());
  CHECK(!r.heights_h.empty());
}

TEST_CASE("counting lemma instances") {
  auto r = verify_counting_lemmas(3, 5, MultiIndex{3, 3, 4});
  REQUIRE(!r.instances.empty());
  const auto& diff = r.instances.front();
  CHECK(diff.kind == CountingInstance::Kind::Difference);
  CHECK(diff.k == 2);
  CHECK(diff.lhs == 3);
  CHECK(diff.rhs == binomial(3, 2));
  CHECK(diff.lhs == count_H_raw(3, 5, MultiIndex{5, 4, 3, 4}) - count_H_raw(3, 5, MultiIndex{5, 3, 3, 4}));
  CHECK(r.all_ok());
  // l_k = N: the difference statement is vacuous
  auto vac = verify_counting_lemmas(3, 5, MultiIndex{5, 3, 4});
  for (const auto& inst : vac.instances) CHECK(inst.kind != CountingInstance::Kind::Difference);
  for (int l3 = 1; l3 <= 5; ++l3)
    for (int l4 = 5 - l3; l4 <= 5; ++l4) {
      if (l4 < 1) continue;
      auto base = verify_counting_lemmas(3, 5, MultiIndex{l3, l4});
      for (const auto& inst : base.instances)
        if (inst.kind == CountingInstance::Kind::BaseCase) CHECK(inst.ok);
    }
  CHECK(verify_counting_lemmas_exhaustive(3, 5).all_ok());
  CHECK_THROWS_AS(verify_counting_lemmas(2, 5, MultiIndex{3, 3}), NeedsDimension);
}

TEST_CASE("ideal generators vanish on V") {
  for (int d = 1; d <= 3; ++d)
    for (int N = 1; N <= (d == 3 ? 6 : 8); ++N)
      for (const auto& s : admissible_specs(d, N)) CHECK(ideal_generators_vanish(s));
}

TEST_CASE("spec sweeps") {
  const auto all = admissible_specs(2, 4);
  for (const auto& s : all) CHECK(is_admissible(2, 4, s.ell()));
  long brute = 0;
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 4; ++b)
      for (int c = 1; c <= 4; ++c) brute += (a + b >= 4 && a + c >= 4 && b + c >= 4);
  CHECK(static_cast<long>(all.size()) == brute);
  const auto s1 = sample_admissible_specs(5, 2, 9, 20, 7);
  const auto s2 = sample_admissible_specs(5, 2, 9, 20, 7);
  CHECK(s1 == s2);
  for (const auto& s : s1) CHECK((s.N() >= 2 && s.N() <= 9));
}
