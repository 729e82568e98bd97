#include "polyhahn/operators.hpp"

#include "polyhahn/errors.hpp"

#include <string>

namespace polyhahn {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void check_pair(int d, int i, int j) {
  if (i < 1 || j < 1 || i > d + 1 || j > d + 1 || i == j)
    throw UnsupportedPair("index pair (" + std::to_string(i) + "," + std::to_string(j) +
                          ") is not in 1.." + std::to_string(d + 1));
}

std::vector<Rational> to_rationals(const MultiIndex& m) {
  std::vector<Rational> r;
  for (int v : m.entries()) r.emplace_back(v);
  return r;
}

// x_i as a polynomial in d variables; x_{d+1} = N - |x|.
Polynomial coord(std::size_t d, int i, const Rational& N) {
  if (static_cast<std::size_t>(i) <= d) return Polynomial::variable(d, static_cast<std::size_t>(i - 1));
  Polynomial p = Polynomial::constant(d, N);
  for (std::size_t k = 0; k < d; ++k) p -= Polynomial::variable(d, k);
  return p;
}

Polynomial cst(std::size_t d, const Rational& c) { return Polynomial::constant(d, c); }

// Shift e_i - e_j in the first d coordinates (e_{d+1} = 0).
std::vector<int> hop(std::size_t d, int i, int j) {
  std::vector<int> v(d, 0);
  if (static_cast<std::size_t>(i) <= d) v[static_cast<std::size_t>(i - 1)] += 1;
  if (static_cast<std::size_t>(j) <= d) v[static_cast<std::size_t>(j - 1)] -= 1;
  return v;
}

// c1 (E_i E_j^{-1} - 1) + c2 (E_j E_i^{-1} - 1)
PolyOperator pair_operator(std::size_t d, int i, int j, const Polynomial& c1, const Polynomial& c2) {
  PolyOperator op(d);
  op.add_term(Action{Action::Kind::Shift, hop(d, i, j)}, c1);
  op.add_term(Action{Action::Kind::Shift, hop(d, j, i)}, c2);
  op.add_term(Action{Action::Kind::Shift, std::vector<int>(d, 0)}, -(c1 + c2));
  return op;
}

PolyOperator mul(const Polynomial& f) { return PolyOperator::multiply(f); }

PolyOperator d2(std::size_t d, int i, int j) {
  return PolyOperator::partial(d, static_cast<std::size_t>(i - 1)) *
         PolyOperator::partial(d, static_cast<std::size_t>(j - 1));
}

PolyOperator oscillator_edge(std::size_t d, int i) {
  // 1/2 d_i^2 - z_i d_i
  return Rational(1, 2) * d2(d, i, i) -
         mul(Polynomial::variable(d, static_cast<std::size_t>(i - 1))) *
             PolyOperator::partial(d, static_cast<std::size_t>(i - 1));
}

PolyOperator oscillator_pair(std::size_t d, int i, int j) {
  // 1/2 (d_i - d_j)^2 - (z_i - z_j)(d_i - d_j)
  PolyOperator diff = PolyOperator::partial(d, static_cast<std::size_t>(i - 1)) -
                      PolyOperator::partial(d, static_cast<std::size_t>(j - 1));
  Polynomial zij = Polynomial::variable(d, static_cast<std::size_t>(i - 1)) -
                   Polynomial::variable(d, static_cast<std::size_t>(j - 1));
  return Rational(1, 2) * (diff * diff) - mul(zij) * diff;
}

PolyOperator oscillator_D(std::size_t d, int i, int j) {
  // -d_i d_j + z_i d_j + z_j d_i
  const auto ii = static_cast<std::size_t>(i - 1), jj = static_cast<std::size_t>(j - 1);
  return -d2(d, i, j) + mul(Polynomial::variable(d, ii)) * PolyOperator::partial(d, jj) +
         mul(Polynomial::variable(d, jj)) * PolyOperator::partial(d, ii);
}

PolyOperator gauged_edge(std::size_t d, int i) {
  // 1/2 d_i^2 - z_i^2/2 + 1/2
  const auto ii = static_cast<std::size_t>(i - 1);
  Polynomial z = Polynomial::variable(d, ii);
  return Rational(1, 2) * d2(d, i, i) + mul(Rational(-1, 2) * (z * z) + cst(d, Rational(1, 2)));
}

PolyOperator gauged_D(std::size_t d, int i, int j) {
  // -d_i d_j + z_i z_j
  return -d2(d, i, j) + mul(Polynomial::variable(d, static_cast<std::size_t>(i - 1)) *
                            Polynomial::variable(d, static_cast<std::size_t>(j - 1)));
}

}  // namespace

int family_dim(const OperatorFamily& f) {
  return std::visit(overloaded{
                        [](const HahnFamily& h) { return h.spec.d(); },
                        [](const KrawtchoukFamily& k) { return static_cast<int>(k.params.p.size()); },
                        [](const MeixnerFamily& m) { return static_cast<int>(m.params.c.size()); },
                        [](const CharlierFamily& c) { return static_cast<int>(c.params.a.size()); },
                        [](const OscillatorFamily& o) { return o.d; },
                        [](const GaugedOscillatorFamily& g) { return g.d; },
                    },
                    f);
}

std::string family_name(const OperatorFamily& f) {
  return std::visit(overloaded{
                        [](const HahnFamily&) { return std::string("hahn"); },
                        [](const KrawtchoukFamily&) { return std::string("krawtchouk"); },
                        [](const MeixnerFamily&) { return std::string("meixner"); },
                        [](const CharlierFamily&) { return std::string("charlier"); },
                        [](const OscillatorFamily&) { return std::string("oscillator"); },
                        [](const GaugedOscillatorFamily&) { return std::string("gauged-oscillator"); },
                    },
                    f);
}

bool has_lattice(const OperatorFamily& f) {
  return std::holds_alternative<HahnFamily>(f) || std::holds_alternative<KrawtchoukFamily>(f);
}

int cyclic_index(int k, int d, int shift) {
  const int n = d + 1;
  return ((k - 1 + shift) % n + n) % n + 1;
}

PolyOperator hahn_Lij(std::span<const Rational> ell, const Rational& N, int i, int j) {
  const std::size_t d = ell.size() - 1;
  check_pair(static_cast<int>(d), i, j);
  const Polynomial xi = coord(d, i, N), xj = coord(d, j, N);
  const Polynomial c1 = xj * (xi - cst(d, ell[static_cast<std::size_t>(i - 1)]));
  const Polynomial c2 = xi * (xj - cst(d, ell[static_cast<std::size_t>(j - 1)]));
  return pair_operator(d, i, j, c1, c2);
}

PolyOperator krawtchouk_Lij(std::span<const Rational> p, const Rational& N, int i, int j) {
  const std::size_t d = p.size() - 1;
  check_pair(static_cast<int>(d), i, j);
  const Polynomial xi = coord(d, i, N), xj = coord(d, j, N);
  return pair_operator(d, i, j, p[static_cast<std::size_t>(i - 1)] * xj,
                       p[static_cast<std::size_t>(j - 1)] * xi);
}

std::pair<std::vector<Rational>, Rational> krawtchouk_form_parameters(const OperatorFamily& f) {
  if (const auto* k = std::get_if<KrawtchoukFamily>(&f)) {
    k->params.validate();
    std::vector<Rational> p = k->params.p;
    Rational rest = 1;
    for (const auto& v : p) rest -= v;
    p.push_back(rest);
    return {p, Rational(k->params.N)};
  }
  if (const auto* m = std::get_if<MeixnerFamily>(&f)) {
    m->params.validate();
    Rational csum = 0;
    for (const auto& v : m->params.c) csum += v;
    const Rational scale = 1 / (1 - csum);
    std::vector<Rational> p;
    for (const auto& v : m->params.c) p.push_back(-v * scale);
    p.push_back(scale);
    return {p, -m->params.s};
  }
  throw UnsupportedPair("family " + family_name(f) + " has no Krawtchouk-type form");
}

PolyOperator build_Lij(const OperatorFamily& f, int i, int j) {
  const int d = family_dim(f);
  check_pair(d, i, j);
  const auto dd = static_cast<std::size_t>(d);
  if (i > j) std::swap(i, j);
  return std::visit(
      overloaded{
          [&](const HahnFamily& h) {
            return hahn_Lij(to_rationals(h.spec.ell()), Rational(h.spec.N()), i, j);
          },
          [&](const KrawtchoukFamily&) {
            auto [p, N] = krawtchouk_form_parameters(f);
            return krawtchouk_Lij(p, N, i, j);
          },
          [&](const MeixnerFamily&) {
            auto [p, N] = krawtchouk_form_parameters(f);
            return krawtchouk_Lij(p, N, i, j);
          },
          [&](const CharlierFamily& c) {
            c.params.validate();
            const Rational& ai = c.params.a[static_cast<std::size_t>(i - 1)];
            const Polynomial xi = Polynomial::variable(dd, static_cast<std::size_t>(i - 1));
            if (j == d + 1) {
              // a_i (E_i - 1) + x_i (E_i^{-1} - 1)
              return pair_operator(dd, i, j, cst(dd, ai), xi);
            }
            const Rational& aj = c.params.a[static_cast<std::size_t>(j - 1)];
            const Polynomial xj = Polynomial::variable(dd, static_cast<std::size_t>(j - 1));
            return pair_operator(dd, i, j, ai * xj, aj * xi);
          },
          [&](const OscillatorFamily&) {
            return j == d + 1 ? oscillator_edge(dd, i) : oscillator_pair(dd, i, j);
          },
          [&](const GaugedOscillatorFamily&) {
            if (j == d + 1) return gauged_edge(dd, i);
            return gauged_D(dd, i, j) + gauged_edge(dd, i) + gauged_edge(dd, j);
          },
      },
      f);
}

PolyOperator build_D(const OperatorFamily& f, int i, int j) {
  const int d = family_dim(f);
  if (i < 1 || j < 1 || i > d || j > d || i == j)
    throw UnsupportedPair("D_{i,j} needs i != j in 1..d");
  if (std::holds_alternative<OscillatorFamily>(f)) return oscillator_D(static_cast<std::size_t>(d), i, j);
  if (std::holds_alternative<GaugedOscillatorFamily>(f)) return gauged_D(static_cast<std::size_t>(d), i, j);
  throw UnsupportedPair("D_{i,j} is only defined for the oscillator families");
}

PolyOperator build_M(const OperatorFamily& f, int k) {
  const int d = family_dim(f);
  PolyOperator m(static_cast<std::size_t>(d));
  for (int a = std::max(k, 1); a <= d + 1; ++a)
    for (int b = a + 1; b <= d + 1; ++b) m += build_Lij(f, a, b);
  return m;
}

PolyOperator expanded_operator(const OperatorFamily& f) {
  const int d = family_dim(f);
  const auto dd = static_cast<std::size_t>(d);
  PolyOperator op(dd);
  auto x = [&](int i) { return Polynomial::variable(dd, static_cast<std::size_t>(i - 1)); };
  auto D = [&](int i) { return PolyOperator::delta(dd, static_cast<std::size_t>(i - 1)); };
  auto B = [&](int i) { return PolyOperator::nabla(dd, static_cast<std::size_t>(i - 1)); };

  if (const auto* h = std::get_if<HahnFamily>(&f)) {
    const Rational N = h->spec.N();
    const Polynomial rest = coord(dd, d + 1, N);
    const Rational l_last = h->spec.ell(static_cast<std::size_t>(d + 1));
    for (int i = 1; i <= d; ++i) {
      const Rational li = h->spec.ell(static_cast<std::size_t>(i));
      for (int j = 1; j <= d; ++j) {
        if (i == j) continue;
        const Polynomial alpha = x(j) * (x(i) - cst(dd, li));
        op += mul(alpha) * (PolyOperator::shift(hop(dd, i, j)) - PolyOperator::identity(dd));
      }
      const Polynomial beta = (x(i) - cst(dd, li)) * rest;
      const Polynomial gamma = x(i) * (rest - cst(dd, l_last));
      op += mul(beta) * D(i);
      op += mul(gamma) * (PolyOperator::shift1(dd, static_cast<std::size_t>(i - 1), -1) -
                          PolyOperator::identity(dd));
    }
    return op;
  }
  if (std::holds_alternative<KrawtchoukFamily>(f) || std::holds_alternative<MeixnerFamily>(f)) {
    // sum (delta_ij - p_i) x_j D_i B_j + sum (p_i N - x_i) D_i, written with the
    // family's own parameters
    std::vector<Rational> coef;  // multiplies x_j D_i B_j for i != j
    std::vector<Rational> drift;
    if (const auto* k = std::get_if<KrawtchoukFamily>(&f)) {
      k->params.validate();
      for (const auto& p : k->params.p) {
        coef.push_back(-p);
        drift.push_back(p * k->params.N);
      }
    } else {
      const auto& m = std::get<MeixnerFamily>(f).params;
      m.validate();
      Rational csum = 0;
      for (const auto& c : m.c) csum += c;
      for (const auto& c : m.c) {
        coef.push_back(c / (1 - csum));
        drift.push_back(c / (1 - csum) * m.s);
      }
    }
    for (int i = 1; i <= d; ++i) {
      const Rational& ci = coef[static_cast<std::size_t>(i - 1)];
      for (int j = 1; j <= d; ++j) {
        const Rational c = (i == j ? Rational(1) : Rational(0)) + ci;
        op += mul(c * x(j)) * (D(i) * B(j));
      }
      op += mul(cst(dd, drift[static_cast<std::size_t>(i - 1)]) - x(i)) * D(i);
    }
    return op;
  }
  if (const auto* c = std::get_if<CharlierFamily>(&f)) {
    c->params.validate();
    for (int j = 1; j <= d; ++j) {
      op += mul(x(j)) * (D(j) * B(j));
      op += mul(cst(dd, c->params.a[static_cast<std::size_t>(j - 1)]) - x(j)) * D(j);
    }
    return op;
  }
  if (std::holds_alternative<OscillatorFamily>(f)) {
    for (int i = 1; i <= d; ++i)
      op += Rational(1, 2) * d2(dd, i, i) - mul(x(i)) * PolyOperator::partial(dd, static_cast<std::size_t>(i - 1));
    return op;
  }
  // gauged: 1/2 sum d_i^2 - |z|^2/2 + d/2
  Polynomial pot = cst(dd, fraction(d, 2));
  for (int i = 1; i <= d; ++i) {
    op += Rational(1, 2) * d2(dd, i, i);
    pot -= Rational(1, 2) * (x(i) * x(i));
  }
  op += mul(pot);
  return op;
}

// ---- lattice ----

SparseMatrix to_lattice(const PolyOperator& op, const LatticeDomain& domain, std::size_t* exits) {
  if (auto k = op.kind(); k && *k != Action::Kind::Shift)
    throw RepresentationMismatch("only shift operators have a lattice representation");
  const std::size_t n = domain.size();
  SparseMatrix m(n);
  std::size_t exit_count = 0;
  std::vector<Rational> xr;
  for (std::size_t r = 0; r < n; ++r) {
    const MultiIndex& x = domain[r];
    xr.assign(x.entries().begin(), x.entries().end());
    SparseMatrix::Row row;
    for (const auto& [act, f] : op.terms()) {
      std::vector<int> y = x.vec();
      bool negative = false;
      for (std::size_t i = 0; i < y.size(); ++i) {
        y[i] += act.v[i];
        negative = negative || y[i] < 0;
      }
      std::optional<std::size_t> col;
      if (!negative) col = domain.index_of(MultiIndex(y));
      Rational v = f.evaluate(std::span<const Rational>(xr));
      if (!col) {
        ++exit_count;
        if (sgn(v) != 0)
          throw ConsistencyError("nonzero coefficient " + to_string(v) + " on a shift leaving the domain at " +
                                 x.str());
        continue;
      }
      if (sgn(v) != 0) row.emplace_back(*col, std::move(v));
    }
    m.set_row(r, std::move(row));
  }
  if (exits) *exits = exit_count;
  return m;
}

namespace {

LatticeDomain lattice_for(const OperatorFamily& f) {
  if (const auto* h = std::get_if<HahnFamily>(&f)) return LatticeDomain(h->spec);
  if (const auto* k = std::get_if<KrawtchoukFamily>(&f)) {
    k->params.validate();
    if (k->params.N < 1) throw ParameterOutOfRange("Krawtchouk lattice needs N >= 1");
    return LatticeDomain(simplex_spec(static_cast<int>(k->params.p.size()), static_cast<int>(k->params.N)));
  }
  throw RepresentationMismatch("family " + family_name(f) + " has no finite lattice");
}

}  // namespace

LatticeFamily::LatticeFamily(const OperatorFamily& f)
    : family_(f), domain_(lattice_for(f)), d_(family_dim(f)) {
  for (int i = 1; i <= d_ + 1; ++i) {
    for (int j = i + 1; j <= d_ + 1; ++j) {
      std::size_t ex = 0;
      pairs_.emplace(std::make_pair(i, j), to_lattice(build_Lij(f, i, j), domain_, &ex));
      exits_ += ex;
    }
  }
}

const SparseMatrix& LatticeFamily::L(int i, int j) const {
  check_pair(d_, i, j);
  if (i > j) std::swap(i, j);
  return pairs_.at({i, j});
}

SparseMatrix LatticeFamily::M(int k) const {
  SparseMatrix m(domain_.size());
  for (int a = std::max(k, 1); a <= d_ + 1; ++a)
    for (int b = a + 1; b <= d_ + 1; ++b) m += L(a, b);
  return m;
}

SparseMatrix LatticeFamily::M_permuted(int k, int shift) const {
  SparseMatrix m(domain_.size());
  for (int a = std::max(k, 1); a <= d_ + 1; ++a)
    for (int b = a + 1; b <= d_ + 1; ++b) m += L(cyclic_index(a, d_, shift), cyclic_index(b, d_, shift));
  return m;
}

SparseMatrix LatticeFamily::expanded() const { return to_lattice(expanded_operator(family_), domain_); }

std::vector<Rational> LatticeFamily::weights() const {
  std::vector<Rational> w;
  w.reserve(domain_.size());
  if (const auto* h = std::get_if<HahnFamily>(&family_)) {
    for (const auto& x : domain_.points()) w.push_back(weight(h->spec, x));
  } else {
    const auto& k = std::get<KrawtchoukFamily>(family_);
    for (const auto& x : domain_.points()) w.push_back(multinomial_weight(k.params, x));
  }
  return w;
}

}  // namespace polyhahn
