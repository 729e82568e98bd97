#include "polyhahn/poly_operator.hpp"

#include "polyhahn/combinatorics.hpp"
#include "polyhahn/errors.hpp"
#include "polyhahn/multi_index.hpp"

#include <numeric>
#include <sstream>

namespace polyhahn {

namespace {

bool is_identity(const Action& a) {
  for (int v : a.v)
    if (v != 0) return false;
  return true;
}

Action identity_action(std::size_t nvars) { return Action{Action::Kind::Shift, std::vector<int>(nvars, 0)}; }

}  // namespace

PolyOperator PolyOperator::identity(std::size_t nvars) {
  return multiply(Polynomial::constant(nvars, 1));
}

PolyOperator PolyOperator::multiply(const Polynomial& f) {
  PolyOperator op(f.nvars());
  op.add_term(identity_action(f.nvars()), f);
  return op;
}

PolyOperator PolyOperator::shift(std::vector<int> v) {
  const std::size_t n = v.size();
  PolyOperator op(n);
  op.add_term(Action{Action::Kind::Shift, std::move(v)}, Polynomial::constant(n, 1));
  return op;
}

PolyOperator PolyOperator::shift1(std::size_t nvars, std::size_t i, int sign) {
  std::vector<int> v(nvars, 0);
  v.at(i) = sign;
  return shift(std::move(v));
}

PolyOperator PolyOperator::delta(std::size_t nvars, std::size_t i) {
  return shift1(nvars, i, 1) - identity(nvars);
}

PolyOperator PolyOperator::nabla(std::size_t nvars, std::size_t i) {
  return identity(nvars) - shift1(nvars, i, -1);
}

PolyOperator PolyOperator::partial(std::size_t nvars, std::size_t i) {
  std::vector<int> v(nvars, 0);
  v.at(i) = 1;
  PolyOperator op(nvars);
  op.add_term(Action{Action::Kind::Derivative, std::move(v)}, Polynomial::constant(nvars, 1));
  return op;
}

std::optional<Action::Kind> PolyOperator::kind() const {
  for (const auto& [a, f] : terms_)
    if (!is_identity(a)) return a.kind;
  return std::nullopt;
}

void PolyOperator::add_term(const Action& a, const Polynomial& f) {
  if (a.v.size() != nvars_ || f.nvars() != nvars_)
    throw LengthMismatch("operator term has the wrong number of variables");
  if (f.is_zero()) return;
  // the identity is stored once, as the zero shift
  Action key = is_identity(a) ? identity_action(nvars_) : a;
  if (!is_identity(key)) {
    if (auto k = kind(); k && *k != key.kind)
      throw RepresentationMismatch("cannot mix shift and derivative actions");
  }
  auto [it, inserted] = terms_.try_emplace(key, f);
  if (!inserted) {
    it->second += f;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PolyOperator& PolyOperator::operator+=(const PolyOperator& o) {
  if (nvars_ != o.nvars_) throw LengthMismatch("operators act on different variable counts");
  for (const auto& [a, f] : o.terms_) add_term(a, f);
  return *this;
}

PolyOperator& PolyOperator::operator-=(const PolyOperator& o) {
  if (nvars_ != o.nvars_) throw LengthMismatch("operators act on different variable counts");
  for (const auto& [a, f] : o.terms_) add_term(a, -f);
  return *this;
}

PolyOperator& PolyOperator::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [a, f] : terms_) f *= c;
  return *this;
}

PolyOperator PolyOperator::operator-() const {
  PolyOperator r(*this);
  r *= Rational(-1);
  return r;
}

PolyOperator operator*(const PolyOperator& a, const PolyOperator& b) {
  if (a.nvars_ != b.nvars_) throw LengthMismatch("operators act on different variable counts");
  const std::size_t n = a.nvars_;
  auto ka = a.kind();
  auto kb = b.kind();
  if (ka && kb && *ka != *kb) throw RepresentationMismatch("cannot compose shift and derivative operators");
  const bool derivative = (ka && *ka == Action::Kind::Derivative) || (kb && *kb == Action::Kind::Derivative);

  PolyOperator out(n);
  for (const auto& [aa, f] : a.terms_) {
    for (const auto& [ab, g] : b.terms_) {
      if (!derivative || is_identity(aa)) {
        // (f E^u)(g E^w) = f g(x+u) E^{u+w}; also covers the identity on the left
        Action act{derivative ? Action::Kind::Derivative : Action::Kind::Shift, ab.v};
        Polynomial gg = g;
        if (!derivative) {
          gg = g.shifted(aa.v);
          for (std::size_t i = 0; i < n; ++i) act.v[i] += aa.v[i];
        } else {
          act.kind = ab.kind;
        }
        out.add_term(act, f * gg);
        continue;
      }
      // Leibniz: d^alpha (g .) = sum_beta C(alpha, beta) (d^beta g) d^{alpha-beta}
      const std::vector<int>& alpha = aa.v;
      for (const auto& beta : simplex_points(n, std::accumulate(alpha.begin(), alpha.end(), 0))) {
        bool inside = true;
        Rational coef = 1;
        for (std::size_t i = 0; i < n; ++i) {
          if (beta[i] > alpha[i]) {
            inside = false;
            break;
          }
          coef *= Rational(binomial(alpha[i], beta[i]));
        }
        if (!inside) continue;
        Polynomial dg = g.derivative(beta.entries());
        if (dg.is_zero()) continue;
        Action act{Action::Kind::Derivative, std::vector<int>(n)};
        for (std::size_t i = 0; i < n; ++i) act.v[i] = alpha[i] - beta[i] + ab.v[i];
        out.add_term(act, coef * (f * dg));
      }
    }
  }
  return out;
}

Polynomial PolyOperator::apply(const Polynomial& p) const {
  if (p.nvars() != nvars_) throw LengthMismatch("polynomial has the wrong number of variables");
  Polynomial out(nvars_);
  for (const auto& [a, f] : terms_) {
    Polynomial q = is_identity(a) ? p
                   : a.kind == Action::Kind::Shift ? p.shifted(a.v)
                                                    : p.derivative(a.v);
    if (!q.is_zero()) out += f * q;
  }
  return out;
}

std::string PolyOperator::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [a, f] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << f.str() << ")";
    if (is_identity(a)) continue;
    os << (a.kind == Action::Kind::Shift ? "*E[" : "*D[");
    for (std::size_t i = 0; i < a.v.size(); ++i) os << (i ? "," : "") << a.v[i];
    os << "]";
  }
  return os.str();
}

std::optional<Exponent> first_nonzero_monomial(const PolyOperator& op, int max_degree) {
  for (const auto& e : exponents_up_to(op.nvars(), max_degree))
    if (!op.apply(Polynomial::monomial(e)).is_zero()) return e;
  return std::nullopt;
}

bool preserves_degree(const PolyOperator& op, int max_degree, int raise) {
  for (const auto& e : exponents_up_to(op.nvars(), max_degree)) {
    const int n = std::accumulate(e.begin(), e.end(), 0);
    if (op.apply(Polynomial::monomial(e)).degree() > n + raise) return false;
  }
  return true;
}

}  // namespace polyhahn
