#pragma once

#include "polyhahn/domain.hpp"
#include "polyhahn/families.hpp"
#include "polyhahn/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace polyhahn {

/// Weight values H_{l,N}(x) in the domain's point order.
std::vector<Rational> weight_vector(const LatticeDomain& domain);

/// sum_x f(x) g(x) H_{l,N}(x). Throws LengthMismatch.
Rational inner_product(const LatticeDomain& domain, const std::vector<Rational>& f,
                       const std::vector<Rational>& g);

/// Q_nu on the points of the domain; shift = +1 / -1 gives the cyclically
/// relabelled polynomials (nu then ranges over H of the relabelled spec).
std::vector<Rational> hahn_vector(const LatticeDomain& domain, const MultiIndex& nu, int shift = 0);

struct GramMatrix {
  DomainSpec spec;
  int shift = 0;
  std::vector<MultiIndex> basis;
  std::vector<std::vector<Rational>> entries;

  bool is_diagonal() const;
  std::vector<Rational> diagonal() const;
  /// First off-diagonal nonzero entry (row, col).
  std::optional<std::pair<std::size_t, std::size_t>> first_offdiagonal() const;
};

/// Gram matrix of {Q_nu : nu in H} (or of the relabelled family).
GramMatrix gram(const DomainSpec& spec, int shift = 0);

struct OrthogonalityReport {
  bool diagonal = false;
  bool norms_match = false;  ///< diagonal equals the closed-form norms
  bool permuted_diagonal = false;
  bool permuted_norms_match = false;
  std::vector<Rational> norms;
  std::string witness;  ///< first failing entry, empty when everything holds
  bool all_hold() const { return diagonal && norms_match && permuted_diagonal && permuted_norms_match; }
};

OrthogonalityReport verify_orthogonality(const DomainSpec& spec);

/// |nu^k| (|l^k| - |nu^k| + 1)
Rational gaudin_eigenvalue(const MultiIndex& ell, const MultiIndex& nu, int k);

struct EigenRecord {
  MultiIndex nu;
  std::vector<Rational> lambda;
  bool exact = false;
};

struct SpectraReport {
  std::vector<EigenRecord> records;
  bool all_exact = false;
  /// relabelled Gaudin sums acting on the relabelled polynomials
  bool permuted_exact = false;
  /// distinct nu have distinct eigenvalue tuples (diagnostic)
  bool separated = false;
  std::vector<std::pair<MultiIndex, MultiIndex>> collisions;
  std::string witness;
};

SpectraReport verify_spectra(const DomainSpec& spec);

/// Floating-point Gram check for the infinite-lattice families, summed over
/// |x| <= radius. The radius grows until the weighted tail estimate drops below
/// 1e-14; off-diagonal entries are compared relative to the diagonal.
struct TruncatedGramReport {
  std::vector<MultiIndex> basis;  ///< all nu with |nu| <= max_degree
  std::size_t radius = 0;
  double tail_estimate = 0;
  double max_relative_offdiagonal = 0;
  double tolerance = 1e-10;
  bool holds = false;
};

/// Weight prod_i e^{-a_i} a_i^{x_i} / x_i!.
TruncatedGramReport truncated_orthogonality(const CharlierParams& params, int max_degree);
/// Weight (s)_{|x|} (1-|c|)^s prod_i c_i^{x_i} / x_i!.
TruncatedGramReport truncated_orthogonality(const MeixnerParams& params, int max_degree);

/// Rank of an integer matrix by fraction-free elimination.
long matrix_rank(std::vector<std::vector<Integer>> rows);

/// Rank of the evaluation matrix of all monomials of degree <= N at the points
/// of V. Throws TooLarge when |V| > 500.
long interpolation_rank(const DomainSpec& spec);

}  // namespace polyhahn
