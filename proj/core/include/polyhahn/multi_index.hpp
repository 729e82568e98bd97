#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace polyhahn {

/// A tuple of non-negative integers (a lattice point x, a polynomial index nu,
/// or a parameter tuple l). Components are addressed 1-based through
/// prefix()/suffix() to mirror the usual |y_j| and |y^j| notation, and
/// 0-based through operator[].
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::size_t dim) : entries_(dim, 0) {}
  MultiIndex(std::initializer_list<int> values);
  explicit MultiIndex(std::vector<int> values);

  std::size_t dim() const noexcept { return entries_.size(); }
  int operator[](std::size_t i) const { return entries_[i]; }
  int& operator[](std::size_t i) { return entries_[i]; }

  std::span<const int> entries() const noexcept { return entries_; }
  const std::vector<int>& vec() const& noexcept { return entries_; }
  std::vector<int> vec() && { return std::move(entries_); }

  /// |y| = y_1 + ... + y_dim
  long total() const noexcept;
  /// |y_j| = y_1 + ... + y_j, with |y_0| = 0.
  long prefix(std::size_t j) const;
  /// |y^j| = y_j + ... + y_dim, with |y^{dim+1}| = 0.
  long suffix(std::size_t j) const;

  std::string str() const;

  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;
  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::vector<int> entries_;
};

/// Graded lexicographic order: by |x|, then lexicographically.
struct GradedLexLess {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const;
};

struct MultiIndexHash {
  std::size_t operator()(const MultiIndex& m) const noexcept;
};

/// All multi-indices of length `dim` with total at most `max_total`,
/// in graded lexicographic order.
std::vector<MultiIndex> simplex_points(std::size_t dim, int max_total);

}  // namespace polyhahn
