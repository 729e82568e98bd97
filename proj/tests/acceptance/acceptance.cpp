// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include "polyhahn/combinatorics.hpp"
#include "polyhahn/domain.hpp"
#include "polyhahn/errors.hpp"
#include "polyhahn/limits.hpp"
#include "polyhahn/operators.hpp"
#include "polyhahn/spectra.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace polyhahn;

namespace {

// fixed tolerances and budgets
constexpr double kOrderTolerance = 0.25;
constexpr double kHermiteOrder = 0.5;
constexpr double kHermiteTolerance = 0.15;
constexpr std::uint64_t kSeed = 20240601;

struct Outcome {
  bool ok = true;
  std::size_t checks = 0;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

DomainSpec spec(int d, int N, std::vector<int> ell) { return check_admissible(d, N, MultiIndex(std::move(ell))); }

std::string describe(const DomainSpec& s) {
  return "d=" + std::to_string(s.d()) + " N=" + std::to_string(s.N()) + " l=" + s.ell().str();
}

std::vector<DomainSpec> sweep_specs() {
  std::vector<DomainSpec> out;
  for (int N = 1; N <= 10; ++N)
    for (auto& s : admissible_specs(2, N)) out.push_back(std::move(s));
  for (int N = 1; N <= 7; ++N)
    for (auto& s : admissible_specs(3, N)) out.push_back(std::move(s));
  for (int d : {4, 5})
    for (auto& s : sample_admissible_specs(d, 1, 9, 200, kSeed + static_cast<std::uint64_t>(d)))
      out.push_back(std::move(s));
  return out;
}

const std::vector<DomainSpec>& sweep() {
  static const std::vector<DomainSpec> specs = sweep_specs();
  return specs;
}

std::vector<DomainSpec> criterion3_specs() {
  return {spec(2, 3, {2, 2, 2}), spec(2, 9, {7, 6, 7}), spec(2, 6, {4, 4, 2}), spec(3, 4, {3, 3, 3, 3})};
}

void require(Outcome& o, const IdentityReport& r, const std::string& what) {
  o.checks += r.checks.size();
  if (!r.all_hold()) {
    const auto* f = r.first_failure();
    o.fail(what + ": " + (f ? f->name + " " + f->witness : std::string("failed")));
  }
}

Outcome counting_theorem() {
  Outcome o;
  for (const auto& s : sweep()) {
    const auto nv = static_cast<long>(enumerate_V(s).size());
    const auto nh = static_cast<long>(enumerate_H(s).size());
    if (nv != nh || Integer(nv) != count_V_formula(s)) {
      o.fail("mismatch at " + describe(s));
      break;
    }
  }
  o.detail = o.ok ? std::to_string(sweep().size()) + " specs" : o.detail;
  return o;
}

Outcome figure_instance() {
  Outcome o;
  const auto s = spec(3, 10, {6, 7, 5, 8});
  const auto nv = enumerate_V(s).size(), nh = enumerate_H(s).size();
  if (nv != 217 || nh != 217 || count_V_formula(s) != 217)
    o.fail("|V|=" + std::to_string(nv) + " |H|=" + std::to_string(nh));
  o.detail = o.ok ? "|V| = |H| = 217" : o.detail;
  return o;
}

Outcome orthogonality() {
  Outcome o;
  for (const auto& s : criterion3_specs()) {
    const auto g = gram(s);
    if (!g.is_diagonal()) o.fail("off-diagonal entry at " + describe(s));
    for (std::size_t i = 0; i < g.basis.size(); ++i)
      if (g.entries[i][i] != norm_B(s, g.basis[i])) o.fail("norm mismatch at " + describe(s));
  }
  return o;
}

Outcome spectral_tower() {
  Outcome o;
  for (const auto& s : criterion3_specs()) {
    const auto r = verify_spectra(s);
    if (!r.all_exact) o.fail("eigenvalue mismatch at " + describe(s));
  }
  const auto s = spec(2, 3, {2, 2, 2});
  if (gaudin_eigenvalue(s.ell(), MultiIndex{1, 1}, 1) != 10 || gaudin_eigenvalue(s.ell(), MultiIndex{1, 1}, 2) != 4)
    o.fail("worked eigenvalues differ from (10, 4)");
  for (const auto& rec : verify_spectra(s).records)
    if (rec.nu == MultiIndex{1, 1} && rec.lambda != std::vector<Rational>{Rational(10), Rational(4)})
      o.fail("measured eigenvalues at nu=(1,1) differ from (10, 4)");
  return o;
}

Outcome symmetry_algebra() {
  Outcome o;
  for (const auto& s : {spec(3, 4, {3, 3, 3, 3}), spec(4, 5, {4, 4, 4, 4, 4})}) {
    const OperatorFamily f = HahnFamily{s};
    require(o, verify_kohno_drinfeld(f), "commutation " + describe(s));
    require(o, verify_self_adjoint(f), "self-adjointness " + describe(s));
    require(o, verify_generator_relations(f), "four-index relation " + describe(s));
    require(o, verify_generating_sets(f), "reconstructions " + describe(s));
  }
  if (o.ok) o.detail = std::to_string(o.checks) + " identities";
  return o;
}

Outcome limit_family_algebra() {
  Outcome o;
  const OperatorFamily k2 = KrawtchoukFamily{{{Rational(1, 3), Rational(1, 4)}, 4}};
  require(o, verify_kohno_drinfeld(k2), "Krawtchouk d=2 commutation");
  require(o, verify_self_adjoint(k2), "Krawtchouk d=2 self-adjointness");
  const OperatorFamily k3 = KrawtchoukFamily{{{Rational(1, 5), Rational(1, 4), Rational(1, 3)}, 4}};
  require(o, verify_kohno_drinfeld(k3), "Krawtchouk d=3 commutation");
  require(o, verify_self_adjoint(k3), "Krawtchouk d=3 self-adjointness");
  require(o, verify_generator_relations(k3), "Krawtchouk d=3 relation");

  const OperatorFamily ch = CharlierFamily{{{Rational(1), Rational(2), Rational(3)}}};
  const auto kd = verify_kohno_drinfeld(ch, 6);
  require(o, kd, "Charlier commutation");
  bool witness = false;
  for (const auto& c : kd.checks) witness = witness || (!c.expect_zero && c.holds);
  if (!witness) o.fail("Charlier non-commutation witness missing");
  require(o, verify_generator_relations(ch, 6), "Charlier relation");
  require(o, verify_charlier_rescaled(3, Rational(2), 6), "Charlier rescaled forms");

  for (const OperatorFamily& f : {OperatorFamily{OscillatorFamily{3}}, OperatorFamily{GaugedOscillatorFamily{3}}}) {
    const std::string name = family_name(f);
    require(o, verify_kohno_drinfeld(f, 6), name + " commutation");
    require(o, verify_generator_relations(f, 6), name + " relation");
    require(o, verify_oscillator_symmetries(f, 6), name + " first-order symmetries");
    require(o, verify_degree_bounds(f, 6), name + " degree bounds");
  }
  if (o.ok) o.detail = std::to_string(o.checks) + " identities";
  return o;
}

std::string join(const std::vector<int>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + ")";
}

Outcome shuffle_d2() {
  Outcome o;
  std::size_t n = 0;
  for (int N = 1; N <= 15; ++N)
    for (const auto& s : admissible_specs(2, N)) {
      ++n;
      auto v = heights_V(s), h = heights_H(s);
      std::sort(v.begin(), v.end());
      std::sort(h.begin(), h.end());
      if (v != h) o.fail("multisets differ at " + describe(s));
    }
  const auto s = spec(2, 9, {7, 6, 7});
  if (!verify_shuffle(s).holds) o.fail("shuffle check fails at (7,6,7)");
  const std::vector<int> want_v{7, 7, 6, 6, 5, 5, 4, 3}, want_h{5, 6, 7, 7, 6, 5, 4, 3};
  const auto v = heights_V(s), h = heights_H(s);
  if (v != want_v || h != want_h) {
    std::string why = "instance (7,6,7), N=9: v=" + join(v) + " h=" + join(h) + ", expected v=" + join(want_v) +
                      " h=" + join(want_h);
    if (v == want_h && h == want_v) why += " (the expected lists are exchanged; multisets agree)";
    o.fail(why);
  }
  if (o.ok) o.detail = std::to_string(n) + " specs";
  return o;
}

Outcome counting_lemmas() {
  Outcome o;
  std::size_t n = 0;
  for (int d : {3, 4})
    for (int N = 1; N <= 7; ++N) {
      const auto r = verify_counting_lemmas_exhaustive(d, N);
      n += r.instances.size();
      if (!r.all_ok()) o.fail("failure at d=" + std::to_string(d) + " N=" + std::to_string(N));
    }
  if (o.ok) o.detail = std::to_string(n) + " instances";
  return o;
}

Outcome weights() {
  Outcome o;
  std::mt19937_64 rng(kSeed);
  for (const auto& s : sweep()) {
    const LatticeDomain v(s);
    Rational total(0);
    for (const auto& x : v.points()) {
      const Rational w = weight(s, x);
      if (sgn(w) <= 0) o.fail("non-positive weight at " + describe(s));
      total += w;
    }
    if (total != 1) o.fail("weights do not sum to 1 at " + describe(s));
    if (s.d() > 3) continue;
    const std::size_t n = static_cast<std::size_t>(s.d()) + 1;
    for (int t = 0; t < 20; ++t) {
      std::vector<std::size_t> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      std::vector<int> ell(n);
      for (std::size_t i = 0; i < n; ++i) ell[i] = s.ell(perm[i] + 1);
      for (const auto& x : v.points()) {
        const MultiIndex xh = homogeneous(s, x);
        std::vector<int> yh(n);
        for (std::size_t i = 0; i < n; ++i) yh[i] = xh[perm[i]];
        if (weight_homogeneous(s.N(), MultiIndex(ell), MultiIndex(yh)) != weight(s, x))
          o.fail("weight not permutation invariant at " + describe(s));
      }
    }
  }
  return o;
}

void check_order(Outcome& o, const LimitScan& s, std::size_t probe, double expected, double tol) {
  const double f = s.fitted_order[probe];
  char buf[160];
  std::snprintf(buf, sizeof buf, "%s %s order %.3f", s.name.c_str(), s.probes[probe].c_str(), f);
  if (!(std::abs(f - expected) <= tol) || !s.monotone[probe]) o.fail(std::string(buf) + " outside window");
  if (!o.detail.empty()) o.detail += "; ";
  if (o.ok) o.detail += buf;
}

void check_zero(Outcome& o, const LimitScan& s, std::size_t probe) {
  if (!s.exact_zero[probe]) o.fail(s.name + " " + s.probes[probe] + " not exactly zero");
}

Outcome limit_scans() {
  Outcome o;
  const auto hk = scan_hahn_to_krawtchouk({Rational(1, 3), Rational(1, 3)}, 4,
                                          {{MultiIndex{1, 1}, MultiIndex{1, 1}}, {MultiIndex{1, 0}, MultiIndex{1, 1}}},
                                          default_ladder("hahn-krawtchouk"));
  check_order(o, hk, 0, 1.0, kOrderTolerance);
  check_zero(o, hk, 1);

  const auto kc = scan_krawtchouk_to_charlier({Rational(1), Rational(2)}, {{MultiIndex{1, 1}, MultiIndex{2, 1}}},
                                              default_ladder("krawtchouk-charlier"));
  check_order(o, kc, 0, 1.0, kOrderTolerance);

  const auto chh = scan_charlier_to_hermite({{MultiIndex{2}, {Rational(1)}}, {MultiIndex{1}, {Rational(1, 2)}}},
                                            default_ladder("charlier-hermite"));
  check_order(o, chh, 0, kHermiteOrder, kHermiteTolerance);
  check_zero(o, chh, 1);

  const auto y1 = Polynomial::variable(2, 0), y2 = Polynomial::variable(2, 1);
  const auto jac = scan_operator_to_jacobi({Rational(2), Rational(3), Rational(1)},
                                           {{"1", Polynomial::constant(2, 1)}, {"y1", y1}, {"y1y2", y1 * y2}},
                                           {{Rational(1, 4), Rational(1, 4)}, {Rational(1, 2), Rational(1, 4)}},
                                           default_ladder("jacobi"));
  check_zero(o, jac, 0);
  check_zero(o, jac, 1);
  check_order(o, jac, 2, 1.0, kOrderTolerance);
  if (o.ok) o.detail += " (thresholds are implementer-derived)";
  return o;
}

Outcome interpolation() {
  Outcome o;
  std::size_t n = 0;
  for (int N = 1; N <= 8; ++N)
    for (const auto& s : admissible_specs(2, N)) {
      ++n;
      if (interpolation_rank(s) != static_cast<long>(enumerate_V(s).size())) o.fail("rank deficit at " + describe(s));
    }
  if (o.ok) o.detail = std::to_string(n) + " specs";
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<Outcome()> run;
};

}  // namespace

// --expect-fail LIST: criteria known to fail; the exit status is 0 when the
// failing set equals LIST exactly. The FAIL lines are printed regardless.
int main(int argc, char** argv) {
  std::set<int> expected_failures;
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--expect-fail") {
      std::stringstream ss(argv[i + 1]);
      std::string item;
      while (std::getline(ss, item, ',')) expected_failures.insert(std::stoi(item));
    }

  const std::vector<Criterion> criteria{
      {1, "counting theorem sweep", 60, counting_theorem},
      {2, "d=3 instance (6,7,5,8), N=10", 1, figure_instance},
      {3, "orthogonality", 30, orthogonality},
      {4, "spectral tower", 30, spectral_tower},
      {5, "symmetry algebra", 120, symmetry_algebra},
      {6, "limit-family algebra", 60, limit_family_algebra},
      {7, "d=2 height shuffle", 10, shuffle_d2},
      {8, "counting lemmas", 30, counting_lemmas},
      {9, "weight normalization, positivity, invariance", 60, weights},
      {10, "limit scans", 60, limit_scans},
      {11, "interpolation rank", 60, interpolation},
  };
  std::set<int> failed;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.ok && secs > c.budget_seconds) o.fail("over time budget");
    if (!o.ok) failed.insert(c.id);
    std::printf("%s %2d %s [%.2fs / %.0fs] %s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, secs, c.budget_seconds,
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu of %zu criteria passed\n", criteria.size() - failed.size(), criteria.size());
  if (!expected_failures.empty() && failed == expected_failures) {
    std::printf("failing set matches --expect-fail\n");
    return 0;
  }
  return failed.empty() ? 0 : 1;
}
