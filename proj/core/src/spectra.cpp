#include "polyhahn/spectra.hpp"

#include "polyhahn/errors.hpp"
#include "polyhahn/families.hpp"
#include "polyhahn/operators.hpp"
#include "polyhahn/parallel.hpp"
#include "polyhahn/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>

namespace polyhahn {

std::vector<Rational> weight_vector(const LatticeDomain& domain) {
  std::vector<Rational> w;
  w.reserve(domain.size());
  for (const auto& x : domain.points()) w.push_back(weight(domain.spec(), x));
  return w;
}

Rational inner_product(const LatticeDomain& domain, const std::vector<Rational>& f,
                       const std::vector<Rational>& g) {
  if (f.size() != domain.size() || g.size() != domain.size())
    throw LengthMismatch("vectors must have one entry per point of V");
  Rational s = 0;
  for (std::size_t i = 0; i < f.size(); ++i) s += f[i] * g[i] * weight(domain.spec(), domain[i]);
  return s;
}

std::vector<Rational> hahn_vector(const LatticeDomain& domain, const MultiIndex& nu, int shift) {
  std::vector<Rational> v;
  v.reserve(domain.size());
  for (const auto& x : domain.points())
    v.push_back(shift == 0 ? hahn_multi(domain.spec(), nu, x) : hahn_permuted(domain.spec(), shift, nu, x));
  return v;
}

bool GramMatrix::is_diagonal() const { return !first_offdiagonal().has_value(); }

std::vector<Rational> GramMatrix::diagonal() const {
  std::vector<Rational> d;
  for (std::size_t i = 0; i < entries.size(); ++i) d.push_back(entries[i][i]);
  return d;
}

std::optional<std::pair<std::size_t, std::size_t>> GramMatrix::first_offdiagonal() const {
  for (std::size_t i = 0; i < entries.size(); ++i)
    for (std::size_t j = 0; j < entries[i].size(); ++j)
      if (i != j && sgn(entries[i][j]) != 0) return std::make_pair(i, j);
  return std::nullopt;
}

GramMatrix gram(const DomainSpec& spec, int shift) {
  const LatticeDomain domain(spec);
  const IndexSet H(shift == 0 ? spec : permuted_spec(spec, shift));
  const std::vector<Rational> w = weight_vector(domain);
  const std::size_t n = H.size();

  std::vector<std::vector<Rational>> q(n), wq(n);
  parallel_for(n, [&](std::size_t a) {
    q[a] = hahn_vector(domain, H[a], shift);
    wq[a] = q[a];
    for (std::size_t x = 0; x < w.size(); ++x) wq[a][x] *= w[x];
  });

  GramMatrix g{spec, shift, H.indices(), std::vector<std::vector<Rational>>(n, std::vector<Rational>(n))};
  parallel_for(n, [&](std::size_t a) {
    for (std::size_t b = a; b < n; ++b) {
      Rational s = 0;
      for (std::size_t x = 0; x < w.size(); ++x) s += wq[a][x] * q[b][x];
      g.entries[a][b] = s;
    }
  });
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < a; ++b) g.entries[a][b] = g.entries[b][a];
  return g;
}

OrthogonalityReport verify_orthogonality(const DomainSpec& spec) {
  OrthogonalityReport rep;
  auto check = [&](int shift, bool& diag, bool& norms) {
    const GramMatrix g = gram(spec, shift);
    const DomainSpec ps = shift == 0 ? spec : permuted_spec(spec, shift);
    diag = g.is_diagonal();
    if (!diag && rep.witness.empty()) {
      auto [a, b] = *g.first_offdiagonal();
      rep.witness = "shift " + std::to_string(shift) + ": <Q" + g.basis[a].str() + ", Q" + g.basis[b].str() +
                    "> = " + to_string(g.entries[a][b]);
    }
    norms = true;
    for (std::size_t a = 0; a < g.basis.size(); ++a) {
      const Rational B = norm_B(ps, g.basis[a]);
      if (shift == 0) rep.norms.push_back(B);
      if (B != g.entries[a][a]) {
        norms = false;
        if (rep.witness.empty())
          rep.witness = "shift " + std::to_string(shift) + ": <Q" + g.basis[a].str() + ", Q" + g.basis[a].str() +
                        "> = " + to_string(g.entries[a][a]) + " but B = " + to_string(B);
      }
    }
  };
  check(0, rep.diagonal, rep.norms_match);
  bool dp = false, np = false, dm = false, nm = false;
  check(1, dp, np);
  check(-1, dm, nm);
  rep.permuted_diagonal = dp && dm;
  rep.permuted_norms_match = np && nm;
  return rep;
}

Rational gaudin_eigenvalue(const MultiIndex& ell, const MultiIndex& nu, int k) {
  const long nk = nu.suffix(static_cast<std::size_t>(k));
  const long lk = ell.suffix(static_cast<std::size_t>(k));
  return Rational(nk * (lk - nk + 1));
}

SpectraReport verify_spectra(const DomainSpec& spec) {
  SpectraReport rep;
  const int d = spec.d();
  const LatticeFamily lf(HahnFamily{spec});
  const LatticeDomain& domain = lf.domain();
  const IndexSet H(spec);

  std::vector<SparseMatrix> M;
  for (int k = 1; k <= d; ++k) M.push_back(lf.M(k));

  rep.records.resize(H.size());
  parallel_for(H.size(), [&](std::size_t a) {
    const MultiIndex& nu = H[a];
    const std::vector<Rational> q = hahn_vector(domain, nu);
    EigenRecord rec{nu, {}, true};
    for (int k = 1; k <= d; ++k) {
      const Rational lambda = gaudin_eigenvalue(spec.ell(), nu, k);
      rec.lambda.push_back(lambda);
      const std::vector<Rational> mq = M[static_cast<std::size_t>(k - 1)].apply(q);
      for (std::size_t x = 0; x < q.size(); ++x)
        if (mq[x] != lambda * q[x]) {
          rec.exact = false;
          break;
        }
    }
    rep.records[a] = std::move(rec);
  });
  rep.all_exact = true;
  for (const auto& r : rep.records)
    if (!r.exact) {
      rep.all_exact = false;
      if (rep.witness.empty()) rep.witness = "Q" + r.nu.str() + " is not an eigenvector";
    }

  // relabelled Gaudin sums on relabelled polynomials
  rep.permuted_exact = true;
  for (int shift : {1, -1}) {
    const DomainSpec ps = permuted_spec(spec, shift);
    const IndexSet Hp(ps);
    for (int k = 1; k <= d; ++k) {
      const SparseMatrix Mp = lf.M_permuted(k, shift);
      for (const auto& nu : Hp.indices()) {
        const std::vector<Rational> q = hahn_vector(domain, nu, shift);
        const Rational lambda = gaudin_eigenvalue(ps.ell(), nu, k);
        const std::vector<Rational> mq = Mp.apply(q);
        for (std::size_t x = 0; x < q.size(); ++x)
          if (mq[x] != lambda * q[x]) {
            rep.permuted_exact = false;
            if (rep.witness.empty())
              rep.witness = "relabelled (shift " + std::to_string(shift) + ") Q" + nu.str() + ", k=" +
                            std::to_string(k);
            break;
          }
      }
    }
  }

  std::map<std::vector<Rational>, MultiIndex> seen;
  for (const auto& r : rep.records) {
    auto [it, inserted] = seen.emplace(r.lambda, r.nu);
    if (!inserted) rep.collisions.emplace_back(it->second, r.nu);
  }
  rep.separated = rep.collisions.empty();
  return rep;
}

namespace {

// points of N_0^d with |x| = total
void shell(std::size_t d, int total, std::vector<MultiIndex>& out) {
  MultiIndex x(d);
  std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int left) {
    if (pos + 1 == d) {
      x[pos] = left;
      out.push_back(x);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      x[pos] = v;
      rec(pos + 1, left - v);
    }
  };
  rec(0, total);
}

template <class Eval, class LogWeight>
TruncatedGramReport truncated_gram(std::size_t d, int max_degree, Eval eval, LogWeight log_weight) {
  constexpr double kTail = 1e-14;
  constexpr int kMaxRadius = 4000;
  TruncatedGramReport r;
  r.basis = simplex_points(d, max_degree);
  const std::size_t n = r.basis.size();
  std::vector<std::vector<double>> g(n, std::vector<double>(n, 0.0));
  std::vector<double> vals(n);
  double previous = std::numeric_limits<double>::infinity();
  int R = 0;
  for (;; ++R) {
    if (R > kMaxRadius) throw TooLarge("truncated Gram did not converge within the radius cap");
    std::vector<MultiIndex> pts;
    shell(d, R, pts);
    double contribution = 0;
    for (const auto& x : pts) {
      const double w = std::exp(log_weight(x));
      double biggest = 0;
      for (std::size_t k = 0; k < n; ++k) {
        vals[k] = to_double(eval(r.basis[k], x));
        biggest = std::max(biggest, vals[k] * vals[k]);
      }
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) g[i][j] += w * vals[i] * vals[j];
      contribution += w * biggest;
    }
    double smallest_diag = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) smallest_diag = std::min(smallest_diag, g[i][i]);
    // shells are past their peak and the latest one is negligible
    if (R > 2 * max_degree && contribution < previous && contribution < kTail * smallest_diag) {
      r.tail_estimate = contribution / smallest_diag;
      break;
    }
    previous = contribution;
  }
  r.radius = static_cast<std::size_t>(R);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      r.max_relative_offdiagonal =
          std::max(r.max_relative_offdiagonal, std::abs(g[i][j]) / std::sqrt(g[i][i] * g[j][j]));
  r.holds = r.max_relative_offdiagonal <= r.tolerance;
  return r;
}

}  // namespace

TruncatedGramReport truncated_orthogonality(const CharlierParams& params, int max_degree) {
  params.validate();
  std::vector<double> a;
  for (const auto& v : params.a) a.push_back(to_double(v));
  return truncated_gram(
      a.size(), max_degree,
      [&](const MultiIndex& nu, const MultiIndex& x) {
        std::vector<Rational> xr(x.vec().begin(), x.vec().end());
        return charlier_multi(params, nu, xr);
      },
      [&](const MultiIndex& x) {
        double lw = 0;
        for (std::size_t i = 0; i < a.size(); ++i) lw += -a[i] + x[i] * std::log(a[i]) - std::lgamma(x[i] + 1.0);
        return lw;
      });
}

TruncatedGramReport truncated_orthogonality(const MeixnerParams& params, int max_degree) {
  params.validate();
  const double s = to_double(params.s);
  std::vector<double> c;
  double csum = 0;
  for (const auto& v : params.c) {
    c.push_back(to_double(v));
    csum += c.back();
  }
  return truncated_gram(
      c.size(), max_degree, [&](const MultiIndex& nu, const MultiIndex& x) { return meixner_multi(params, nu, x); },
      [&](const MultiIndex& x) {
        double lw = std::lgamma(s + static_cast<double>(x.total())) - std::lgamma(s) + s * std::log1p(-csum);
        for (std::size_t i = 0; i < c.size(); ++i) lw += x[i] * std::log(c[i]) - std::lgamma(x[i] + 1.0);
        return lw;
      });
}

long matrix_rank(std::vector<std::vector<Integer>> a) {
  const std::size_t m = a.size();
  if (m == 0) return 0;
  const std::size_t n = a[0].size();
  std::size_t rank = 0;
  Integer prev = 1;
  for (std::size_t col = 0; col < n && rank < m; ++col) {
    std::size_t piv = rank;
    while (piv < m && sgn(a[piv][col]) == 0) ++piv;
    if (piv == m) continue;
    std::swap(a[piv], a[rank]);
    const Integer p = a[rank][col];
    for (std::size_t i = rank + 1; i < m; ++i) {
      const Integer f = a[i][col];
      for (std::size_t j = col + 1; j < n; ++j) {
        Integer v = a[i][j] * p - f * a[rank][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = std::move(v);
      }
      a[i][col] = 0;
    }
    prev = p;
    ++rank;
  }
  return static_cast<long>(rank);
}

long interpolation_rank(const DomainSpec& spec) {
  const LatticeDomain domain(spec);
  if (domain.size() > 500)
    throw TooLarge("interpolation rank is limited to |V| <= 500, got " + std::to_string(domain.size()));
  const auto exps = exponents_up_to(static_cast<std::size_t>(spec.d()), spec.N());
  std::vector<std::vector<Integer>> rows;
  rows.reserve(domain.size());
  for (const auto& x : domain.points()) {
    std::vector<Integer> row;
    row.reserve(exps.size());
    for (const auto& e : exps) {
      Integer v = 1;
      for (std::size_t i = 0; i < e.size(); ++i) {
        Integer t;
        mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(x[i]), static_cast<unsigned long>(e[i]));
        v *= t;
      }
      row.push_back(std::move(v));
    }
    rows.push_back(std::move(row));
  }
  return matrix_rank(std::move(rows));
}

}  // namespace polyhahn
