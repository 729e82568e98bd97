#pragma once

#include "polyhahn/polynomial.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace polyhahn {

/// Either a shift x -> x + v (integer vector) or a partial derivative of
/// multi-order v.
struct Action {
  enum class Kind { Shift, Derivative };
  Kind kind = Kind::Shift;
  std::vector<int> v;

  friend auto operator<=>(const Action&, const Action&) = default;
  friend bool operator==(const Action&, const Action&) = default;
};

/// Operator sum_a f_a(x) * A_a on the polynomial ring, kept in normal form
/// (coefficients on the left, one entry per distinct action). Shift and
/// derivative actions cannot be mixed in one operator.
class PolyOperator {
 public:
  PolyOperator() = default;
  explicit PolyOperator(std::size_t nvars) : nvars_(nvars) {}

  static PolyOperator identity(std::size_t nvars);
  /// Multiplication by the polynomial f.
  static PolyOperator multiply(const Polynomial& f);
  /// E^v
  static PolyOperator shift(std::vector<int> v);
  /// E_i (sign = +1) or E_i^{-1} (sign = -1), 0-based i.
  static PolyOperator shift1(std::size_t nvars, std::size_t i, int sign);
  /// forward difference E_i - 1
  static PolyOperator delta(std::size_t nvars, std::size_t i);
  /// backward difference 1 - E_i^{-1}
  static PolyOperator nabla(std::size_t nvars, std::size_t i);
  /// d/dx_i
  static PolyOperator partial(std::size_t nvars, std::size_t i);

  std::size_t nvars() const noexcept { return nvars_; }
  const std::map<Action, Polynomial>& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }
  /// Kind of the non-identity actions, if any.
  std::optional<Action::Kind> kind() const;

  void add_term(const Action& a, const Polynomial& f);

  PolyOperator& operator+=(const PolyOperator& o);
  PolyOperator& operator-=(const PolyOperator& o);
  PolyOperator& operator*=(const Rational& c);

  friend PolyOperator operator+(PolyOperator a, const PolyOperator& b) { return a += b; }
  friend PolyOperator operator-(PolyOperator a, const PolyOperator& b) { return a -= b; }
  friend PolyOperator operator*(PolyOperator a, const Rational& c) { return a *= c; }
  friend PolyOperator operator*(const Rational& c, PolyOperator a) { return a *= c; }
  /// Composition (a * b)(p) = a(b(p)).
  friend PolyOperator operator*(const PolyOperator& a, const PolyOperator& b);
  PolyOperator operator-() const;

  friend bool operator==(const PolyOperator& a, const PolyOperator& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  Polynomial apply(const Polynomial& p) const;

  std::string str() const;

 private:
  std::size_t nvars_ = 0;
  std::map<Action, Polynomial> terms_;
};

/// First monomial of total degree <= max_degree on which op acts nonzero.
std::optional<Exponent> first_nonzero_monomial(const PolyOperator& op, int max_degree);

/// True iff op maps every monomial of degree n <= max_degree into degree
/// <= n + raise.
bool preserves_degree(const PolyOperator& op, int max_degree, int raise = 0);

}  // namespace polyhahn
