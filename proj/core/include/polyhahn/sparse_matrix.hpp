#pragma once

#include "polyhahn/rational.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace polyhahn {

/// Square sparse matrix over the rationals, stored as sorted rows.
class SparseMatrix {
 public:
  using Entry = std::pair<std::size_t, Rational>;
  using Row = std::vector<Entry>;

  SparseMatrix() = default;
  explicit SparseMatrix(std::size_t n) : rows_(n) {}

  static SparseMatrix identity(std::size_t n);
  static SparseMatrix diagonal(const std::vector<Rational>& d);

  std::size_t size() const noexcept { return rows_.size(); }
  const Row& row(std::size_t i) const { return rows_[i]; }
  std::size_t nonzeros() const;

  Rational at(std::size_t i, std::size_t j) const;
  /// Adds v to entry (i, j); keeps rows sorted and drops exact zeros.
  void add(std::size_t i, std::size_t j, const Rational& v);
  /// Replaces row i by entries given in any order (duplicates summed).
  void set_row(std::size_t i, Row entries);

  bool is_zero() const;
  /// First nonzero entry in row-major order.
  std::optional<std::pair<std::size_t, std::size_t>> first_nonzero() const;

  SparseMatrix transpose() const;
  std::vector<Rational> apply(const std::vector<Rational>& v) const;

  SparseMatrix& operator+=(const SparseMatrix& o);
  SparseMatrix& operator-=(const SparseMatrix& o);
  SparseMatrix& operator*=(const Rational& c);

  friend SparseMatrix operator+(SparseMatrix a, const SparseMatrix& b) { return a += b; }
  friend SparseMatrix operator-(SparseMatrix a, const SparseMatrix& b) { return a -= b; }
  friend SparseMatrix operator*(SparseMatrix a, const Rational& c) { return a *= c; }
  friend SparseMatrix operator*(const Rational& c, SparseMatrix a) { return a *= c; }
  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
  SparseMatrix operator-() const;

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) { return a.rows_ == b.rows_; }

 private:
  std::vector<Row> rows_;
};

}  // namespace polyhahn
