#pragma once

#include "polyhahn/multi_index.hpp"
#include "polyhahn/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

namespace polyhahn {

/// Validated (d, N, l) triple: 1 <= l_i <= N and l_i + l_j >= N for i < j.
class DomainSpec {
 public:
  int d() const noexcept { return d_; }
  int N() const noexcept { return N_; }
  /// l as a tuple of length d+1.
  const MultiIndex& ell() const noexcept { return ell_; }
  /// l_i, 1-based, i = 1..d+1.
  int ell(std::size_t i) const { return ell_[i - 1]; }
  /// |l|
  long ell_total() const noexcept { return ell_.total(); }
  /// |l^j| = l_j + ... + l_{d+1}
  long ell_suffix(std::size_t j) const { return ell_.suffix(j); }
  /// Pairs (i, j), 1-based and i < j, with l_i + l_j = N (degenerate faces).
  const std::vector<std::pair<int, int>>& degenerate_pairs() const noexcept {
    return degenerate_;
  }

  friend bool operator==(const DomainSpec& a, const DomainSpec& b) {
    return a.d_ == b.d_ && a.N_ == b.N_ && a.ell_ == b.ell_;
  }

  friend DomainSpec check_admissible(int d, int N, const MultiIndex& ell);

 private:
  DomainSpec(int d, int N, MultiIndex ell) : d_(d), N_(N), ell_(std::move(ell)) {}

  int d_ = 0;
  int N_ = 0;
  MultiIndex ell_;
  std::vector<std::pair<int, int>> degenerate_;
};

/// Validates the triple. Throws OutOfRange (bad d, N, length or some l_i
/// outside [1, N]) or Inadmissible naming the first pair with l_i + l_j < N.
DomainSpec check_admissible(int d, int N, const MultiIndex& ell);

/// True iff check_admissible would succeed.
bool is_admissible(int d, int N, const MultiIndex& ell);

/// The full discrete simplex V_N^d, i.e. every l_i = N.
DomainSpec simplex_spec(int d, int N);

/// Every admissible spec for fixed (d, N), l in lexicographic order.
std::vector<DomainSpec> admissible_specs(int d, int N);

/// `count` specs drawn uniformly from the admissible set with d fixed and
/// N_min <= N <= N_max, by rejection from the box [1, N_max]^{d+2}. The seed
/// fully determines the result.
std::vector<DomainSpec> sample_admissible_specs(int d, int N_min, int N_max, std::size_t count,
                                                std::uint64_t seed);

/// The lattice polyhedron V with a point -> ordinal index.
class LatticeDomain {
 public:
  explicit LatticeDomain(DomainSpec spec);

  const DomainSpec& spec() const noexcept { return spec_; }
  const std::vector<MultiIndex>& points() const& noexcept { return points_; }
  // by value on temporaries, so `for (x : LatticeDomain(s).points())` is safe
  std::vector<MultiIndex> points() && { return std::move(points_); }
  std::size_t size() const noexcept { return points_.size(); }
  const MultiIndex& operator[](std::size_t i) const { return points_[i]; }

  std::optional<std::size_t> index_of(const MultiIndex& x) const;
  bool contains(const MultiIndex& x) const { return index_of(x).has_value(); }

 private:
  DomainSpec spec_;
  std::vector<MultiIndex> points_;
  std::unordered_map<MultiIndex, std::size_t, MultiIndexHash> index_;
};

/// The index polytope H of admissible polynomial indices.
class IndexSet {
 public:
  explicit IndexSet(DomainSpec spec);

  const DomainSpec& spec() const noexcept { return spec_; }
  const std::vector<MultiIndex>& indices() const& noexcept { return indices_; }
  std::vector<MultiIndex> indices() && { return std::move(indices_); }
  std::size_t size() const noexcept { return indices_.size(); }
  const MultiIndex& operator[](std::size_t i) const { return indices_[i]; }

  std::optional<std::size_t> index_of(const MultiIndex& nu) const;
  bool contains(const MultiIndex& nu) const { return index_of(nu).has_value(); }

 private:
  DomainSpec spec_;
  std::vector<MultiIndex> indices_;
  std::unordered_map<MultiIndex, std::size_t, MultiIndexHash> index_;
};

/// Membership tests straight from the defining inequalities.
bool in_V(const DomainSpec& spec, const MultiIndex& x);
bool in_H(const DomainSpec& spec, const MultiIndex& nu);

LatticeDomain enumerate_V(const DomainSpec& spec);
IndexSet enumerate_H(const DomainSpec& spec);

/// C(N+d, d) - sum_i C(N - l_i + d - 1, d)
Integer count_V_formula(const DomainSpec& spec);

/// Number of nu in N_0^d satisfying the index inequalities for arbitrary
/// (l, N); used by the counting lemmas, where l may leave the admissible set.
long count_H_raw(int d, int N, const MultiIndex& ell);

/// The normalized Dirichlet-multinomial analogue H_{l,N}(x). Throws
/// PointOutsideDomain if x is not in V.
Rational weight(const DomainSpec& spec, const MultiIndex& x);

/// The same weight written in homogeneous coordinates
/// (x_1, ..., x_{d+1}) with |x| = N; symmetric under simultaneous
/// permutation of x and l. No domain check beyond length.
Rational weight_homogeneous(int N, const MultiIndex& ell, const MultiIndex& xh);

/// (x_1, ..., x_d, N - |x|)
MultiIndex homogeneous(const DomainSpec& spec, const MultiIndex& x);

/// Evaluates the generators of the vanishing ideal at every point of V and
/// returns true iff all vanish.
bool ideal_generators_vanish(const DomainSpec& spec);

// ---- height functions (d = 2) ----

/// Column counts of V on the lines x_1 = 0..l_1. Throws WrongDimension if d != 2.
std::vector<int> heights_V(const DomainSpec& spec);
/// Closed-form height function h_{l,N}(nu_1), nu_1 = 0..l_1.
std::vector<int> heights_H(const DomainSpec& spec);
/// Column counts of the enumerated H on nu_1 = 0..l_1.
std::vector<int> heights_H_counted(const DomainSpec& spec);

/// Result of the d = 2 height shuffle check.
struct ShuffleReport {
  bool holds = false;
  std::vector<int> heights_v;
  std::vector<int> heights_h;
  /// v[tau[i]] == h[i] for every i when holds is true.
  std::vector<int> tau;
  /// Three-part partition structure for each height list.
  bool partition_v = false;
  bool partition_h = false;
  /// Closed-form h equals counted h.
  bool h_closed_form_matches = false;
};

ShuffleReport verify_shuffle(const DomainSpec& spec);

/// Checks that a height list splits into the three blocks S1, S2, S3
/// (constant top block, paired descending block, single descending block).
bool height_partition_holds(const DomainSpec& spec, const std::vector<int>& heights);

/// d = 3 experiment: heights over the projection to x_3 = 0 for V and H,
/// compared as multisets. Report only; never asserted.
struct ProjectionShuffleReport {
  bool multisets_equal = false;
  std::vector<int> heights_v;
  std::vector<int> heights_h;
};
ProjectionShuffleReport projection_shuffle_d3(const DomainSpec& spec);

// ---- counting lemmas (d >= 3) ----

struct CountingInstance {
  enum class Kind { Difference, BaseCase };
  Kind kind = Kind::Difference;
  int k = 0;  ///< stepped index (Difference only)
  MultiIndex ell;
  long lhs = 0;
  Integer rhs;
  bool ok = false;
};

struct CountingReport {
  int d = 0;
  int N = 0;
  std::vector<CountingInstance> instances;
  bool all_ok() const;
};

/// For l = (N, ..., N, l_k, ..., l_{d+1}) with ell_tail = (l_k, ..., l_{d+1}),
/// checks the one-step difference identity for the stepped index k (when
/// l_k < N) and, if the tail has length 2, the base case. Throws
/// NeedsDimension for d < 3.
CountingReport verify_counting_lemmas(int d, int N, const MultiIndex& ell_tail);

/// Runs verify_counting_lemmas over every admissible tail for every k.
CountingReport verify_counting_lemmas_exhaustive(int d, int N);

}  // namespace polyhahn
