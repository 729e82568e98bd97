#include "polyhahn/errors.hpp"
#include "polyhahn/operators.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace polyhahn {

namespace {

// Matrix algebra on a finite lattice.
struct LatticeAlg {
  using Op = SparseMatrix;
  const LatticeFamily& fam;

  const Op& L(int i, int j) const { return fam.L(i, j); }
  Op zero() const { return SparseMatrix(fam.domain().size()); }
  Op full() const { return fam.full(); }

  std::string witness(const Op& r) const {
    auto nz = r.first_nonzero();
    if (!nz) return {};
    const auto& dom = fam.domain();
    return "entry (" + dom[nz->first].str() + ", " + dom[nz->second].str() +
           ") = " + to_string(r.at(nz->first, nz->second));
  }
};

// Operator algebra acting on polynomials; equality means equal action on
// every monomial of degree <= degree.
struct PolyAlg {
  using Op = PolyOperator;
  OperatorFamily fam;
  int degree;
  int d;
  std::map<std::pair<int, int>, PolyOperator> cache;
  std::map<std::pair<int, int>, PolyOperator> dcache;

  PolyAlg(OperatorFamily f, int deg) : fam(std::move(f)), degree(deg), d(family_dim(fam)) {
    for (int i = 1; i <= d + 1; ++i)
      for (int j = i + 1; j <= d + 1; ++j) cache.emplace(std::make_pair(i, j), build_Lij(fam, i, j));
  }

  const Op& L(int i, int j) const { return cache.at({std::min(i, j), std::max(i, j)}); }
  const Op& D(int i, int j) {
    auto key = std::make_pair(std::min(i, j), std::max(i, j));
    auto it = dcache.find(key);
    if (it == dcache.end()) it = dcache.emplace(key, build_D(fam, key.first, key.second)).first;
    return it->second;
  }
  Op zero() const { return PolyOperator(static_cast<std::size_t>(d)); }
  Op full() const { return expanded_operator(fam); }

  std::string witness(const Op& r) const {
    if (r.empty()) return {};
    auto e = first_nonzero_monomial(r, degree);
    if (!e) return {};
    Polynomial image = r.apply(Polynomial::monomial(*e));
    return "monomial " + Polynomial::monomial(*e).str() + " -> " + image.str();
  }
};

template <class Op>
Op comm(const Op& a, const Op& b) {
  return a * b - b * a;
}

template <class Op>
Op anti(const Op& a, const Op& b) {
  return a * b + b * a;
}

template <class Alg>
void record(IdentityReport& rep, const Alg& alg, std::string name, std::vector<int> idx,
            const typename Alg::Op& residual, bool expect_zero = true) {
  IdentityCheck c;
  c.name = std::move(name);
  c.indices = std::move(idx);
  c.expect_zero = expect_zero;
  c.witness = alg.witness(residual);
  c.holds = expect_zero ? c.witness.empty() : !c.witness.empty();
  rep.checks.push_back(std::move(c));
}

std::string representation_label(const OperatorFamily& f, int degree) {
  if (has_lattice(f)) return "lattice";
  return "polynomial (degree <= " + std::to_string(degree) + ")";
}

IdentityReport make_report(const OperatorFamily& f, int degree) {
  IdentityReport rep;
  rep.family = family_name(f);
  rep.representation = representation_label(f, degree);
  return rep;
}

// Kohno-Drinfeld relations over the index set 1..n.
template <class Alg>
void kd_relations(IdentityReport& rep, const Alg& alg, int n) {
  using Op = typename Alg::Op;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = i + 1; k <= n; ++k)
        for (int m = k + 1; m <= n; ++m) {
          if (k == j || m == j) continue;
          record(rep, alg, "disjoint pairs commute", {i, j, k, m}, comm(alg.L(i, j), alg.L(k, m)));
        }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        if (k == i || k == j) continue;
        Op s = alg.L(i, k) + alg.L(j, k);
        record(rep, alg, "[L_ij, L_ik + L_jk] = 0", {i, j, k}, comm(alg.L(i, j), s));
      }
}

template <class Alg>
void hamiltonian_commutes(IdentityReport& rep, const Alg& alg, int d) {
  const auto H = alg.full();
  for (int i = 1; i <= d + 1; ++i)
    for (int j = i + 1; j <= d + 1; ++j) record(rep, alg, "[L, L_ij] = 0", {i, j}, comm(H, alg.L(i, j)));
}

Rational R(const Rational& q) { return q; }

// The Hahn four-index relation; returns lhs - rhs.
template <class Alg>
typename Alg::Op hahn_four_residual(const Alg& A, const std::vector<Rational>& l, int i, int j, int k,
                                    int m, typename Alg::Op* rhs_out = nullptr) {
  using Op = typename Alg::Op;
  const Op& Lik = A.L(i, k);
  const Op& Lim = A.L(i, m);
  const Op& Ljk = A.L(j, k);
  const Op& Ljm = A.L(j, m);
  const Op& Lkm = A.L(k, m);
  const Rational li = l[i - 1], lj = l[j - 1], lk = l[k - 1], lm = l[m - 1];
  const Op c_jk_km = comm(Ljk, Lkm);
  Op rhs = anti(c_jk_km, comm(Lik, Lkm));
  rhs -= anti(Lkm, comm(Lik, c_jk_km));
  rhs -= R(2) * anti(Lkm, Op(Lik * Ljm));
  rhs += R(lk * lm) * comm(Lik, comm(Lkm, Ljm));
  rhs += R(lj * lm) * anti(Lik, Lkm);
  rhs -= R(lm * (lm + 2)) * anti(Lik, Ljk);
  rhs -= R(lk * (lk + 2)) * anti(Lim, Ljm);
  rhs += R(li * lk) * anti(Ljm, Lkm);
  rhs -= R(4) * (Ljk * Lim);
  rhs += R(2 * (lk * lm - 2)) * (Lik * Ljm);
  rhs += R(2 * lj * (1 + lk) * lm) * Lik;
  rhs += R(lj * lk * (2 + 2 * lm + lk * lm)) * Lim;
  rhs += R(li * lm * (2 + 2 * lk + lk * lm)) * Ljk;
  rhs += R(2 * li * lk * (1 + lm)) * Ljm;
  rhs -= R(li * lj * lk * lm) * Lkm;
  if (rhs_out) *rhs_out = rhs;
  return R(lk * (2 + lk) * lm * (2 + lm)) * A.L(i, j) - rhs;
}

template <class Alg>
typename Alg::Op kr_rhs(const Alg& A, const std::vector<Rational>& p, int i, int j, int k, int m,
                        bool second_form) {
  using Op = typename Alg::Op;
  const Op inner = second_form ? comm(A.L(j, k), A.L(k, m)) : comm(A.L(k, m), A.L(j, m));
  Op rhs = comm(A.L(i, k), inner);
  rhs += R(p[j - 1] * p[k - 1]) * A.L(i, m);
  rhs += R(p[i - 1] * p[m - 1]) * A.L(j, k);
  rhs -= R(p[i - 1] * p[j - 1]) * A.L(k, m);
  return rhs;
}

template <class Alg>
typename Alg::Op kr_residual(const Alg& A, const std::vector<Rational>& p, int i, int j, int k, int m,
                             bool second_form) {
  return R(p[k - 1] * p[m - 1]) * A.L(i, j) - kr_rhs(A, p, i, j, k, m, second_form);
}

std::vector<Rational> hahn_ell(const OperatorFamily& f) {
  std::vector<Rational> l;
  for (int v : std::get<HahnFamily>(f).spec.ell().entries()) l.emplace_back(v);
  return l;
}

void need_indices(const OperatorFamily& f, int have, int need) {
  if (have < need)
    throw NeedsDimension(family_name(f) + " relation needs at least " + std::to_string(need) +
                         " indices, have " + std::to_string(have));
}

bool distinct(std::initializer_list<int> v) {
  std::vector<int> s(v);
  std::sort(s.begin(), s.end());
  return std::adjacent_find(s.begin(), s.end()) == s.end();
}

void check_range(std::initializer_list<int> v, int hi) {
  for (int x : v)
    if (x < 1 || x > hi) throw UnsupportedPair("index " + std::to_string(x) + " outside 1.." + std::to_string(hi));
  if (!distinct(v)) throw UnsupportedPair("relation indices must be distinct");
}

template <class Alg>
void four_index(IdentityReport& rep, const Alg& alg, const OperatorFamily& f, int i, int j, int k, int m) {
  const std::vector<int> idx{i, j, k, m};
  if (std::holds_alternative<HahnFamily>(f)) {
    record(rep, alg, "four-index anticommutator relation", idx, hahn_four_residual(alg, hahn_ell(f), i, j, k, m));
    return;
  }
  auto [p, N] = krawtchouk_form_parameters(f);
  record(rep, alg, "four-index commutator relation", idx, kr_residual(alg, p, i, j, k, m, false));
  record(rep, alg, "four-index commutator relation (second form)", idx, kr_residual(alg, p, i, j, k, m, true));
}

// Charlier and oscillator three-index relations (m = d+1 implicit).
void three_index(IdentityReport& rep, PolyAlg& alg, int i, int j, int k) {
  const OperatorFamily& f = alg.fam;
  const int e = alg.d + 1;
  const std::vector<int> idx{i, j, k};
  if (const auto* c = std::get_if<CharlierFamily>(&f)) {
    const auto& a = c->params.a;
    const Rational ai = a[static_cast<std::size_t>(i - 1)], aj = a[static_cast<std::size_t>(j - 1)],
                   ak = a[static_cast<std::size_t>(k - 1)];
    PolyOperator rhs = comm(alg.L(i, k), comm(alg.L(j, k), alg.L(k, e)));
    rhs += R(aj * ak) * alg.L(i, e);
    rhs += ai * alg.L(j, k);
    rhs -= R(ai * aj) * alg.L(k, e);
    record(rep, alg, "three-index relation", idx, ak * alg.L(i, j) - rhs);
    return;
  }
  PolyOperator rhs = comm(alg.L(i, k), comm(alg.L(j, k), alg.L(k, e)));
  rhs += alg.L(i, e) + alg.L(j, k) - alg.L(k, e);
  record(rep, alg, "three-index relation", idx, alg.L(i, j) - rhs);
  const PolyOperator Dij = alg.D(i, j), Dik = alg.D(i, k), Djk = alg.D(j, k);
  record(rep, alg, "three-index relation for D", idx, Dij - comm(Dik, comm(Djk, alg.L(k, e))));
}

bool is_oscillator(const OperatorFamily& f) {
  return std::holds_alternative<OscillatorFamily>(f) || std::holds_alternative<GaugedOscillatorFamily>(f);
}

}  // namespace

bool IdentityReport::all_hold() const {
  return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.holds; });
}

const IdentityCheck* IdentityReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.holds) return &c;
  return nullptr;
}

void IdentityReport::append(const IdentityReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

IdentityReport verify_kohno_drinfeld(const OperatorFamily& f, int degree) {
  IdentityReport rep = make_report(f, degree);
  const int d = family_dim(f);
  if (has_lattice(f)) {
    LatticeFamily lf(f);
    LatticeAlg alg{lf};
    kd_relations(rep, alg, d + 1);
    hamiltonian_commutes(rep, alg, d);
    return rep;
  }
  PolyAlg alg(f, degree);
  if (std::holds_alternative<MeixnerFamily>(f)) {
    kd_relations(rep, alg, d + 1);
    hamiltonian_commutes(rep, alg, d);
    return rep;
  }
  if (std::holds_alternative<CharlierFamily>(f)) {
    const int e = d + 1;
    kd_relations(rep, alg, d);
    for (int i = 1; i <= d; ++i)
      for (int j = i + 1; j <= d; ++j) {
        record(rep, alg, "[L_i,d+1, L_j,d+1] = 0", {i, j}, comm(alg.L(i, e), alg.L(j, e)));
        record(rep, alg, "[L_ij, L_i,d+1 + L_j,d+1] = 0", {i, j},
               comm(alg.L(i, j), PolyOperator(alg.L(i, e) + alg.L(j, e))));
        for (int k = 1; k <= d; ++k)
          if (k != i && k != j)
            record(rep, alg, "[L_ij, L_k,d+1] = 0", {i, j, k}, comm(alg.L(i, j), alg.L(k, e)));
      }
    for (int i = 1; i <= d; ++i)
      for (int j = 1; j <= d; ++j) {
        if (i == j) continue;
        record(rep, alg, "[L_i,d+1, L_ij + L_j,d+1] != 0", {i, j},
               comm(alg.L(i, e), PolyOperator(alg.L(i, j) + alg.L(j, e))), false);
      }
    hamiltonian_commutes(rep, alg, d);
    return rep;
  }
  hamiltonian_commutes(rep, alg, d);
  return rep;
}

IdentityReport verify_generator_relation(const OperatorFamily& f, int i, int j, int k, int m, int degree) {
  IdentityReport rep = make_report(f, degree);
  const int d = family_dim(f);
  if (std::holds_alternative<CharlierFamily>(f) || is_oscillator(f)) {
    need_indices(f, d, 3);
    check_range({i, j, k}, d);
    PolyAlg alg(f, degree);
    three_index(rep, alg, i, j, k);
    return rep;
  }
  need_indices(f, d + 1, 4);
  check_range({i, j, k, m}, d + 1);
  if (has_lattice(f)) {
    LatticeFamily lf(f);
    four_index(rep, LatticeAlg{lf}, f, i, j, k, m);
  } else {
    four_index(rep, PolyAlg(f, degree), f, i, j, k, m);
  }
  return rep;
}

IdentityReport verify_generator_relations(const OperatorFamily& f, int degree) {
  IdentityReport rep = make_report(f, degree);
  const int d = family_dim(f);
  if (std::holds_alternative<CharlierFamily>(f) || is_oscillator(f)) {
    need_indices(f, d, 3);
    PolyAlg alg(f, degree);
    for (int i = 1; i <= d; ++i)
      for (int j = 1; j <= d; ++j)
        for (int k = 1; k <= d; ++k)
          if (distinct({i, j, k})) three_index(rep, alg, i, j, k);
    return rep;
  }
  need_indices(f, d + 1, 4);
  const int n = d + 1;
  auto run = [&](const auto& alg) {
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k)
          for (int m = 1; m <= n; ++m)
            if (distinct({i, j, k, m})) four_index(rep, alg, f, i, j, k, m);
  };
  if (has_lattice(f)) {
    LatticeFamily lf(f);
    run(LatticeAlg{lf});
  } else {
    run(PolyAlg(f, degree));
  }
  return rep;
}

IdentityReport verify_generating_sets(const OperatorFamily& f) {
  if (!has_lattice(f)) throw UnsupportedPair("generating-set reconstruction needs a lattice family");
  const int d = family_dim(f);
  if (d < 3) throw NeedsDimension("generating-set reconstruction needs d >= 3");
  IdentityReport rep = make_report(f, 0);
  LatticeFamily lf(f);
  LatticeAlg alg{lf};
  const int e = d + 1;

  // (a) L_ij from {L_1i, L_1j, L_i,d+1, L_j,d+1, L_1,d+1}
  for (int i = 2; i < e; ++i)
    for (int j = i + 1; j < e; ++j) {
      SparseMatrix rebuilt;
      Rational scale;
      if (std::holds_alternative<HahnFamily>(f)) {
        const auto l = hahn_ell(f);
        hahn_four_residual(alg, l, i, j, 1, e, &rebuilt);
        scale = l[0] * (2 + l[0]) * l[e - 1] * (2 + l[e - 1]);
      } else {
        auto [p, N] = krawtchouk_form_parameters(f);
        rebuilt = kr_rhs(alg, p, i, j, 1, e, false);
        scale = p[0] * p[e - 1];
      }
      rebuilt *= 1 / scale;
      record(rep, alg, "L_ij rebuilt from the generating set", {i, j}, rebuilt - alg.L(i, j));
    }

  // (b) Gaudin sums and their cyclic relabellings
  auto M = [&](int k) { return k > d ? alg.zero() : lf.M(k); };
  auto Mp = [&](int k, int s) { return k > d ? alg.zero() : lf.M_permuted(k, s); };
  for (int j = 1; j <= d; ++j) {
    SparseMatrix tail = M(j + 1);
    for (int k = j + 1; k <= e; ++k) tail += alg.L(1, k);
    record(rep, alg, "M+_j = M_{j+1} + sum_k L_1k", {j}, Mp(j, 1) - tail);
  }
  for (int j = 2; j <= e; ++j) {
    SparseMatrix r = (Mp(j - 1, 1) - M(j)) - (Mp(j, 1) - M(j + 1));
    record(rep, alg, "L_1j from M and M+", {1, j}, r - alg.L(1, j));
  }
  for (int i = 1; i <= d; ++i) {
    SparseMatrix r = (M(i) - Mp(i + 1, -1)) - (M(i + 1) - Mp(i + 2, -1));
    record(rep, alg, "L_i,d+1 from M and M-", {i, e}, r - alg.L(i, e));
  }
  return rep;
}

IdentityReport verify_decomposition(const OperatorFamily& f, int degree) {
  IdentityReport rep = make_report(f, degree);
  const int d = family_dim(f);
  if (has_lattice(f)) {
    LatticeFamily lf(f);
    LatticeAlg alg{lf};
    record(rep, alg, "expanded operator = sum of L_ij", {}, lf.expanded() - lf.full());
    record(rep, alg, "M_d = L_d,d+1", {d}, lf.M(d) - lf.L(d, d + 1));
    IdentityCheck exits;
    exits.name = "shifts leaving the lattice carry zero coefficients";
    exits.holds = true;  // assembly throws otherwise
    exits.note = std::to_string(lf.exits_checked()) + " exiting shifts checked";
    rep.checks.push_back(exits);
    return rep;
  }
  PolyAlg alg(f, degree);
  PolyOperator sum = alg.zero();
  if (std::holds_alternative<CharlierFamily>(f) || is_oscillator(f)) {
    for (int i = 1; i <= d; ++i) sum += alg.L(i, d + 1);
  } else {
    sum = build_M(f, 1);
  }
  record(rep, alg, "expanded operator = sum of L_ij", {}, expanded_operator(f) - sum);
  return rep;
}

IdentityReport verify_self_adjoint(const OperatorFamily& f) {
  if (!has_lattice(f)) throw RepresentationMismatch("self-adjointness is checked on lattice families");
  IdentityReport rep = make_report(f, 0);
  LatticeFamily lf(f);
  LatticeAlg alg{lf};
  const SparseMatrix W = SparseMatrix::diagonal(lf.weights());
  const int d = lf.d();
  for (int i = 1; i <= d + 1; ++i)
    for (int j = i + 1; j <= d + 1; ++j) {
      const SparseMatrix& L = lf.L(i, j);
      record(rep, alg, "W L_ij = L_ij^T W", {i, j}, W * L - L.transpose() * W);
    }
  for (int k = 1; k <= d; ++k) {
    const SparseMatrix M = lf.M(k);
    record(rep, alg, "W M_k = M_k^T W", {k}, W * M - M.transpose() * W);
  }
  return rep;
}

IdentityReport verify_meixner_decomposition(const MeixnerParams& params, int degree) {
  params.validate();
  const OperatorFamily f = MeixnerFamily{params};
  IdentityReport rep = make_report(f, degree);
  PolyAlg alg(f, degree);
  const int d = alg.d;
  record(rep, alg, "expanded operator = sum of substituted L_ij", {}, expanded_operator(f) - build_M(f, 1));
  for (int i = 1; i <= d + 1; ++i)
    for (int j = i + 1; j <= d + 1; ++j) {
      IdentityCheck c;
      c.name = "L_ij preserves degree";
      c.indices = {i, j};
      c.holds = preserves_degree(alg.L(i, j), degree, 0);
      if (!c.holds) c.witness = "degree raised";
      rep.checks.push_back(c);
      Polynomial one = Polynomial::constant(static_cast<std::size_t>(d), 1);
      IdentityCheck k;
      k.name = "L_ij annihilates constants";
      k.indices = {i, j};
      Polynomial img = alg.L(i, j).apply(one);
      k.holds = img.is_zero();
      if (!k.holds) k.witness = "1 -> " + img.str();
      rep.checks.push_back(k);
    }
  return rep;
}

IdentityReport verify_degree_bounds(const OperatorFamily& f, int degree) {
  IdentityReport rep = make_report(f, degree);
  const int d = family_dim(f);
  const bool gauged = std::holds_alternative<GaugedOscillatorFamily>(f);
  const Polynomial one = Polynomial::constant(static_cast<std::size_t>(d), 1);
  for (int i = 1; i <= d + 1; ++i)
    for (int j = i + 1; j <= d + 1; ++j) {
      const PolyOperator L = build_Lij(f, i, j);
      IdentityCheck c;
      c.name = gauged ? "L_ij raises degree by at most 2" : "L_ij preserves degree";
      c.indices = {i, j};
      c.holds = preserves_degree(L, degree, gauged ? 2 : 0);
      if (!c.holds) c.witness = "degree bound violated";
      rep.checks.push_back(c);
      if (gauged) continue;
      IdentityCheck k;
      k.name = "L_ij annihilates constants";
      k.indices = {i, j};
      Polynomial img = L.apply(one);
      k.holds = img.is_zero();
      if (!k.holds) k.witness = "1 -> " + img.str();
      rep.checks.push_back(k);
    }
  return rep;
}

IdentityReport verify_oscillator_symmetries(const OperatorFamily& f, int degree) {
  if (!is_oscillator(f)) throw UnsupportedPair("first-order symmetries are defined for the oscillator families");
  IdentityReport rep = make_report(f, degree);
  PolyAlg alg(f, degree);
  const int d = alg.d;
  const auto dd = static_cast<std::size_t>(d);
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j) {
      if (i == j) continue;
      const auto ii = static_cast<std::size_t>(i - 1), jj = static_cast<std::size_t>(j - 1);
      const PolyOperator rot =
          PolyOperator::multiply(Polynomial::variable(dd, ii)) * PolyOperator::partial(dd, jj) -
          PolyOperator::multiply(Polynomial::variable(dd, jj)) * PolyOperator::partial(dd, ii);
      const PolyOperator& Le = alg.L(i, d + 1);
      record(rep, alg, "[L_ij, L_i,d+1] = z_i d_j - z_j d_i", {i, j}, comm(alg.L(i, j), Le) - rot);
      record(rep, alg, "[D_ij, L_i,d+1] = z_i d_j - z_j d_i", {i, j}, comm(alg.D(i, j), Le) - rot);
      if (i < j)
        record(rep, alg, "D_ij = L_ij - L_i,d+1 - L_j,d+1", {i, j},
               alg.D(i, j) - (alg.L(i, j) - alg.L(i, d + 1) - alg.L(j, d + 1)));
    }
  return rep;
}

IdentityReport verify_charlier_rescaled(int d, const Rational& a, int degree) {
  if (d < 1) throw OutOfRange("d must be positive");
  Rational r;
  if (sgn(a) <= 0 || !exact_sqrt(2 * a, r))
    throw ParameterOutOfRange("2a must be the square of a positive rational, got a = " + to_string(a));
  const OperatorFamily f = CharlierFamily{CharlierParams{std::vector<Rational>(static_cast<std::size_t>(d), a)}};
  IdentityReport rep = make_report(f, degree);
  PolyAlg alg(f, degree);
  const auto dd = static_cast<std::size_t>(d);
  auto z = [&](int i) {
    // z_i = (x_i - a) / sqrt(2a)
    Polynomial p = Polynomial::variable(dd, static_cast<std::size_t>(i - 1)) - Polynomial::constant(dd, a);
    return p * (1 / r);
  };
  auto D = [&](int i) { return PolyOperator::delta(dd, static_cast<std::size_t>(i - 1)); };
  auto B = [&](int i) { return PolyOperator::nabla(dd, static_cast<std::size_t>(i - 1)); };
  auto mul = [](const Polynomial& p) { return PolyOperator::multiply(p); };
  const Polynomial one = Polynomial::constant(dd, 1);

  for (int i = 1; i <= d; ++i) {
    // 1/2 (1 + sqrt2 z_i / sqrt a)(sqrt(2a) D_i)(sqrt(2a) B_i) - z_i sqrt(2a) D_i
    const Polynomial c = Rational(1, 2) * (one + R(2 / r) * z(i));
    PolyOperator rhs = mul(c) * (R(r) * D(i)) * (R(r) * B(i)) - mul(z(i)) * (R(r) * D(i));
    record(rep, alg, "rescaled L_i,d+1", {i, d + 1}, alg.L(i, d + 1) - rhs);
  }
  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j) {
      PolyOperator rhs = R(a) * (R(-1) * (D(i) * B(j)) - D(j) * B(i) + D(i) * B(i) + D(j) * B(j));
      rhs -= R(r) * (mul(z(j)) * (D(i) * B(j)) + mul(z(i)) * (D(j) * B(i)));
      rhs += R(r) * (mul(z(j)) * (D(i) - B(j)));
      rhs += R(r) * (mul(z(i)) * (D(j) - B(i)));
      record(rep, alg, "rescaled L_ij / a", {i, j}, R(1 / a) * alg.L(i, j) - rhs);
    }
  return rep;
}

}  // namespace polyhahn
