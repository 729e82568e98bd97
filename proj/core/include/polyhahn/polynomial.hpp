#pragma once

#include "polyhahn/rational.hpp"

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace polyhahn {

using Exponent = std::vector<int>;

/// Sparse multivariate polynomial with exact rational coefficients in a fixed
/// number of variables. Zero coefficients are never stored.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Rational& c);
  /// x_i, 0-based.
  static Polynomial variable(std::size_t nvars, std::size_t i);
  static Polynomial monomial(const Exponent& e, const Rational& c = 1);

  std::size_t nvars() const noexcept { return nvars_; }
  const std::map<Exponent, Rational>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  Rational coefficient(const Exponent& e) const;

  void add_term(const Exponent& e, const Rational& c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  /// p(x + shift) for an integer shift vector.
  Polynomial shifted(std::span<const int> shift) const;
  /// p(scale .* x + offset), variable by variable.
  Polynomial affine(std::span<const Rational> scale, std::span<const Rational> offset) const;
  /// d^{order_i}/dx_i^{order_i} applied for every i.
  Polynomial derivative(std::span<const int> order) const;

  Rational evaluate(std::span<const Rational> x) const;
  Rational evaluate(std::span<const int> x) const;

  /// Human-readable form, e.g. "3/2*x1^2*x2 - x3 + 1".
  std::string str() const;

 private:
  std::size_t nvars_ = 0;
  std::map<Exponent, Rational> terms_;
};

/// All exponents in `nvars` variables with total degree <= max_degree,
/// in graded lexicographic order.
std::vector<Exponent> exponents_up_to(std::size_t nvars, int max_degree);

}  // namespace polyhahn
