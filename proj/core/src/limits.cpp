#include "polyhahn/limits.hpp"

#include "polyhahn/errors.hpp"
#include "polyhahn/families.hpp"
#include "polyhahn/operators.hpp"
#include "polyhahn/parallel.hpp"

#include <cmath>
#include <limits>

namespace polyhahn {

void LimitScan::analyse() {
  const std::size_t rungs = ladder.size();
  fitted_order.assign(probes.size(), std::numeric_limits<double>::quiet_NaN());
  exact_zero.assign(probes.size(), false);
  monotone.assign(probes.size(), true);
  order_ok.assign(probes.size(), true);
  faster.assign(probes.size(), false);
  for (std::size_t p = 0; p < probes.size(); ++p) {
    const auto& e = errors[p];
    bool zero = true;
    for (const auto& v : e) zero = zero && sgn(v) == 0;
    exact_zero[p] = zero;
    if (zero) continue;
    // the first rung is exempt; later rungs may grow by at most the slack factor
    for (std::size_t r = 1; r + 1 < rungs; ++r)
      if (to_double(e[r + 1]) > slack * to_double(e[r])) monotone[p] = false;
    if (rungs < 2) {
      order_ok[p] = false;
      continue;
    }
    const Rational& e0 = e[rungs - 2];
    const Rational& e1 = e[rungs - 1];
    if (sgn(e0) == 0 || sgn(e1) == 0) {
      order_ok[p] = false;
      continue;
    }
    const double ratio = to_double(Rational(e0 / e1));
    const double step = to_double(Rational(ladder[rungs - 1] / ladder[rungs - 2]));
    fitted_order[p] = std::log(ratio) / std::log(step);
    order_ok[p] = std::abs(fitted_order[p] - expected_order) <= tolerance;
    faster[p] = fitted_order[p] > expected_order + tolerance;
  }
}

bool LimitScan::passed() const {
  for (std::size_t p = 0; p < probes.size(); ++p)
    if (!exact_zero[p] && (!monotone[p] || !(order_ok[p] || faster[p]))) return false;
  return true;
}

std::vector<Rational> default_ladder(const std::string& scan) {
  if (scan == "hahn-krawtchouk") return {64, 128, 256, 512};
  if (scan == "krawtchouk-charlier") return {16, 32, 64, 128};
  if (scan == "charlier-hermite") return {128, 512, 2048, 8192};
  if (scan == "jacobi") return {16, 32, 64, 128};
  throw OutOfRange("unknown limit scan '" + scan + "'");
}

namespace {

LimitScan start(std::string name, std::string parameter, const std::vector<Rational>& ladder, double order,
                double tol) {
  if (ladder.empty()) throw OutOfRange("empty ladder");
  for (std::size_t i = 0; i < ladder.size(); ++i) {
    if (sgn(ladder[i]) <= 0) throw OutOfRange("ladder values must be positive");
    if (i > 0 && ladder[i] <= ladder[i - 1]) throw OutOfRange("ladder must be increasing");
  }
  LimitScan s;
  s.name = std::move(name);
  s.parameter = std::move(parameter);
  s.ladder = ladder;
  s.expected_order = order;
  s.tolerance = tol;
  s.note = "expected orders are implementer-derived thresholds, not stated rates";
  return s;
}

std::string probe_id(const MultiIndex& nu, const MultiIndex& x) { return "nu=" + nu.str() + " x=" + x.str(); }

Rational sign_power(long n) { return (n % 2) ? Rational(-1) : Rational(1); }

}  // namespace

LimitScan scan_hahn_to_krawtchouk(const std::vector<Rational>& p, long N,
                                  const std::vector<HahnKrawtchoukProbe>& probes,
                                  const std::vector<Rational>& t_ladder) {
  KrawtchoukParams kp{p, N};
  kp.validate();
  const std::size_t d = p.size();
  LimitScan s = start("hahn-krawtchouk", "t", t_ladder, 1.0, 0.25);
  for (const auto& pr : probes) {
    if (pr.nu.dim() != d || pr.x.dim() != d) throw LengthMismatch("probe has the wrong dimension");
    s.probes.push_back(probe_id(pr.nu, pr.x));
  }
  Rational psum = 0;
  for (const auto& v : p) psum += v;

  // t-independent target
  std::vector<Rational> target;
  for (const auto& pr : probes) {
    Rational c = sign_power(pr.nu.total());
    Rational prefix = 0;
    for (std::size_t j = 0; j < d; ++j) {
      prefix += p[j];
      c *= power(p[j] / (1 - prefix), static_cast<unsigned long>(pr.nu[j]));
    }
    target.push_back(c * krawtchouk_multi(kp, pr.nu, pr.x));
  }

  s.errors.assign(probes.size(), std::vector<Rational>(t_ladder.size()));
  parallel_for(t_ladder.size(), [&](std::size_t r) {
    const Rational& t = t_ladder[r];
    std::vector<Rational> ell;
    for (const auto& v : p) ell.push_back(-v * t - 1);
    ell.push_back(-(1 - psum) * t - 1);
    for (std::size_t k = 0; k < probes.size(); ++k)
      s.errors[k][r] = abs(hahn_multi_generic(ell, N, probes[k].nu, probes[k].x) - target[k]);
  });
  s.analyse();
  return s;
}

LimitScan scan_krawtchouk_to_charlier(const std::vector<Rational>& a,
                                      const std::vector<HahnKrawtchoukProbe>& probes,
                                      const std::vector<Rational>& N_ladder) {
  CharlierParams cp{a};
  cp.validate();
  const std::size_t d = a.size();
  LimitScan s = start("krawtchouk-charlier", "N", N_ladder, 1.0, 0.25);
  Rational asum = 0;
  for (const auto& v : a) asum += v;
  for (const auto& N : N_ladder) {
    if (!is_integer(N)) throw OutOfRange("N ladder must be integral");
    if (N <= asum) throw OutOfRange("N ladder must exceed |a| so that |a|/N < 1");
  }
  std::vector<Rational> target;
  for (const auto& pr : probes) {
    if (pr.nu.dim() != d || pr.x.dim() != d) throw LengthMismatch("probe has the wrong dimension");
    s.probes.push_back(probe_id(pr.nu, pr.x));
    std::vector<Rational> xr(pr.x.entries().begin(), pr.x.entries().end());
    target.push_back(charlier_multi(cp, pr.nu, xr));
  }
  s.errors.assign(probes.size(), std::vector<Rational>(N_ladder.size()));
  parallel_for(N_ladder.size(), [&](std::size_t r) {
    const Rational& N = N_ladder[r];
    std::vector<Rational> p;
    for (const auto& v : a) p.push_back(v / N);
    KrawtchoukParams kp{p, N.get_num().get_si()};
    for (std::size_t k = 0; k < probes.size(); ++k)
      s.errors[k][r] = abs(krawtchouk_multi(kp, probes[k].nu, probes[k].x) - target[k]);
  });
  s.analyse();
  return s;
}

LimitScan scan_charlier_to_hermite(const std::vector<CharlierHermiteProbe>& probes,
                                   const std::vector<Rational>& a_ladder) {
  LimitScan s = start("charlier-hermite", "a", a_ladder, 0.5, 0.15);
  std::vector<Rational> roots;
  for (const auto& a : a_ladder) {
    Rational r;
    if (!exact_sqrt(2 * a, r)) throw OutOfRange("ladder value a = " + to_string(a) + " has irrational sqrt(2a)");
    roots.push_back(r);
  }
  std::vector<Rational> target;
  for (const auto& pr : probes) {
    if (pr.nu.dim() != pr.t.size()) throw LengthMismatch("probe has the wrong dimension");
    std::string id = "nu=" + pr.nu.str() + " t=(";
    for (std::size_t j = 0; j < pr.t.size(); ++j) id += (j ? "," : "") + to_string(pr.t[j]);
    s.probes.push_back(id + ")");
    Rational h = sign_power(pr.nu.total());
    for (std::size_t j = 0; j < pr.t.size(); ++j) h *= hermite_1d(pr.nu[j], pr.t[j]);
    target.push_back(h);
  }
  s.errors.assign(probes.size(), std::vector<Rational>(a_ladder.size()));
  for (std::size_t r = 0; r < a_ladder.size(); ++r) {
    const Rational& a = a_ladder[r];
    const Rational& root = roots[r];
    for (std::size_t k = 0; k < probes.size(); ++k) {
      Rational v = 1;
      for (std::size_t j = 0; j < probes[k].t.size(); ++j) {
        const long n = probes[k].nu[j];
        v *= power(root, static_cast<unsigned long>(n)) * charlier_1d(n, root * probes[k].t[j] + a, a);
      }
      s.errors[k][r] = abs(v - target[k]);
    }
  }
  s.analyse();
  return s;
}

Polynomial jacobi_apply(const std::vector<Rational>& ell, const Polynomial& p) {
  const std::size_t d = p.nvars();
  if (ell.size() != d + 1) throw LengthMismatch("l must have length d+1");
  Rational total = 0;
  for (const auto& v : ell) total += v;
  Polynomial out(d);
  auto y = [&](std::size_t k) { return Polynomial::variable(d, k); };
  const Polynomial one = Polynomial::constant(d, 1);
  for (std::size_t k = 0; k < d; ++k) {
    std::vector<int> o(d, 0);
    o[k] = 2;
    out += y(k) * (one - y(k)) * p.derivative(o);
    o[k] = 1;
    out += (total * y(k) - Polynomial::constant(d, ell[k])) * p.derivative(o);
    for (std::size_t j = k + 1; j < d; ++j) {
      std::vector<int> m(d, 0);
      m[k] = 1;
      m[j] = 1;
      out -= Rational(2) * (y(k) * y(j) * p.derivative(m));
    }
  }
  return out;
}

LimitScan scan_operator_to_jacobi(const std::vector<Rational>& ell, const std::vector<JacobiProbe>& probes,
                                  const std::vector<std::vector<Rational>>& points,
                                  const std::vector<Rational>& N_ladder) {
  const std::size_t d = ell.size() - 1;
  if (ell.size() < 2) throw LengthMismatch("l must have length d+1 >= 2");
  LimitScan s = start("jacobi", "N", N_ladder, 1.0, 0.25);
  s.note += "; drift coefficient read as |l| y_k - l_k";
  for (const auto& pt : points)
    if (pt.size() != d) throw LengthMismatch("probe point has the wrong dimension");
  std::vector<Polynomial> cont;
  for (const auto& pr : probes) {
    if (pr.p.nvars() != d) throw LengthMismatch("probe polynomial has the wrong number of variables");
    s.probes.push_back(pr.id);
    cont.push_back(jacobi_apply(ell, pr.p));
  }
  s.errors.assign(probes.size(), std::vector<Rational>(N_ladder.size()));
  parallel_for(N_ladder.size(), [&](std::size_t r) {
    const Rational& N = N_ladder[r];
    PolyOperator L(d);
    for (int i = 1; i <= static_cast<int>(d) + 1; ++i)
      for (int j = i + 1; j <= static_cast<int>(d) + 1; ++j) L += hahn_Lij(ell, N, i, j);
    const std::vector<Rational> scale(d, 1 / N), offset(d, Rational(0));
    for (std::size_t k = 0; k < probes.size(); ++k) {
      const Polynomial disc = L.apply(probes[k].p.affine(scale, offset));
      Rational worst = 0;
      for (const auto& y : points) {
        std::vector<Rational> x;
        for (const auto& v : y) x.push_back(N * v);
        const Rational err = abs(disc.evaluate(x) - cont[k].evaluate(y));
        if (err > worst) worst = err;
      }
      s.errors[k][r] = worst;
    }
  });
  s.analyse();
  return s;
}

}  // namespace polyhahn
