#include "polyhahn/polynomial.hpp"

#include "polyhahn/combinatorics.hpp"
#include "polyhahn/errors.hpp"
#include "polyhahn/multi_index.hpp"

#include <numeric>
#include <sstream>

namespace polyhahn {

namespace {

void check_same(std::size_t a, std::size_t b) {
  if (a != b) throw LengthMismatch("polynomials live in different numbers of variables");
}

// Powers (c*x + b)^k for k = 0..n, as univariate coefficient lists.
std::vector<std::vector<Rational>> affine_powers(const Rational& c, const Rational& b, int n) {
  std::vector<std::vector<Rational>> out(static_cast<std::size_t>(n) + 1);
  out[0] = {Rational(1)};
  for (int k = 1; k <= n; ++k) {
    const auto& prev = out[static_cast<std::size_t>(k - 1)];
    std::vector<Rational> cur(prev.size() + 1, Rational(0));
    for (std::size_t m = 0; m < prev.size(); ++m) {
      cur[m] += prev[m] * b;
      cur[m + 1] += prev[m] * c;
    }
    out[static_cast<std::size_t>(k)] = std::move(cur);
  }
  return out;
}

}  // namespace

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t i) {
  if (i >= nvars) throw OutOfRange("variable index out of range");
  Exponent e(nvars, 0);
  e[i] = 1;
  return monomial(e);
}

Polynomial Polynomial::monomial(const Exponent& e, const Rational& c) {
  Polynomial p(e.size());
  p.add_term(e, c);
  return p;
}

int Polynomial::degree() const {
  int deg = -1;
  for (const auto& [e, c] : terms_) deg = std::max(deg, std::accumulate(e.begin(), e.end(), 0));
  return deg;
}

Rational Polynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Exponent& e, const Rational& c) {
  check_same(e.size(), nvars_);
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_same(nvars_, o.nvars_);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_same(nvars_, o.nvars_);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& [e, v] : r.terms_) v = -v;
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  check_same(a.nvars_, b.nvars_);
  Polynomial r(a.nvars_);
  Exponent e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

Polynomial Polynomial::shifted(std::span<const int> shift) const {
  check_same(shift.size(), nvars_);
  std::vector<Rational> scale(nvars_, Rational(1));
  std::vector<Rational> offset;
  offset.reserve(nvars_);
  for (int s : shift) offset.emplace_back(s);
  return affine(scale, offset);
}

Polynomial Polynomial::affine(std::span<const Rational> scale,
                              std::span<const Rational> offset) const {
  check_same(scale.size(), nvars_);
  check_same(offset.size(), nvars_);
  if (terms_.empty()) return *this;
  const int deg = degree();
  std::vector<std::vector<std::vector<Rational>>> powers;
  powers.reserve(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) powers.push_back(affine_powers(scale[i], offset[i], deg));

  Polynomial out(nvars_);
  for (const auto& [e, c] : terms_) {
    // expand prod_i (scale_i x_i + offset_i)^{e_i} one variable at a time
    std::map<Exponent, Rational> acc{{Exponent(nvars_, 0), c}};
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] == 0 && sgn(offset[i]) == 0 && scale[i] == 1) continue;
      const auto& pw = powers[i][static_cast<std::size_t>(e[i])];
      std::map<Exponent, Rational> next;
      for (const auto& [ex, v] : acc) {
        for (std::size_t m = 0; m < pw.size(); ++m) {
          if (sgn(pw[m]) == 0) continue;
          Exponent ne = ex;
          ne[i] = static_cast<int>(m);
          next[ne] += v * pw[m];
        }
      }
      acc = std::move(next);
    }
    for (const auto& [ex, v] : acc) out.add_term(ex, v);
  }
  return out;
}

Polynomial Polynomial::derivative(std::span<const int> order) const {
  check_same(order.size(), nvars_);
  Polynomial out(nvars_);
  for (const auto& [e, c] : terms_) {
    Exponent ne = e;
    Rational v = c;
    bool vanish = false;
    for (std::size_t i = 0; i < nvars_ && !vanish; ++i) {
      if (order[i] < 0) throw OutOfRange("negative derivative order");
      if (order[i] > e[i]) {
        vanish = true;
        break;
      }
      // falling factorial e_i (e_i - 1) ... (e_i - order_i + 1)
      for (int k = 0; k < order[i]; ++k) v *= (e[i] - k);
      ne[i] = e[i] - order[i];
    }
    if (!vanish) out.add_term(ne, v);
  }
  return out;
}

Rational Polynomial::evaluate(std::span<const Rational> x) const {
  check_same(x.size(), nvars_);
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < nvars_; ++i)
      if (e[i] > 0) t *= power(x[i], static_cast<unsigned long>(e[i]));
    sum += t;
  }
  return sum;
}

Rational Polynomial::evaluate(std::span<const int> x) const {
  std::vector<Rational> xr;
  xr.reserve(x.size());
  for (int v : x) xr.emplace_back(v);
  return evaluate(xr);
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // highest degree first reads more naturally
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool constant = true;
    for (int v : e) constant = constant && v == 0;
    bool need_star = false;
    if (constant || mag != 1) {
      os << to_string(mag);
      need_star = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (need_star) os << "*";
      os << "x" << (i + 1);
      if (e[i] > 1) os << "^" << e[i];
      need_star = true;
    }
  }
  return os.str();
}

std::vector<Exponent> exponents_up_to(std::size_t nvars, int max_degree) {
  std::vector<Exponent> out;
  for (const auto& m : simplex_points(nvars, max_degree)) out.push_back(m.vec());
  return out;
}

}  // namespace polyhahn
