#pragma once

#include "polyhahn/domain.hpp"
#include "polyhahn/families.hpp"
#include "polyhahn/poly_operator.hpp"
#include "polyhahn/sparse_matrix.hpp"

#include <map>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace polyhahn {

struct HahnFamily {
  DomainSpec spec;
};
struct KrawtchoukFamily {
  KrawtchoukParams params;
};
struct MeixnerFamily {
  MeixnerParams params;
};
struct CharlierFamily {
  CharlierParams params;
};
struct OscillatorFamily {
  int d = 0;
};
/// The oscillator conjugated by exp(|z|^2 / 2).
struct GaugedOscillatorFamily {
  int d = 0;
};

using OperatorFamily = std::variant<HahnFamily, KrawtchoukFamily, MeixnerFamily, CharlierFamily,
                                    OscillatorFamily, GaugedOscillatorFamily>;

int family_dim(const OperatorFamily& f);
std::string family_name(const OperatorFamily& f);
/// Hahn and Krawtchouk live on finite lattices and get matrix representations.
bool has_lattice(const OperatorFamily& f);

// ---- building blocks (indices 1-based, i != j in 1..d+1) ----

/// x_j (x_i - l_i)(E_i E_j^{-1} - 1) + x_i (x_j - l_j)(E_j E_i^{-1} - 1) with
/// x_{d+1} = N - |x| and arbitrary rational l (length d+1) and N.
PolyOperator hahn_Lij(std::span<const Rational> ell, const Rational& N, int i, int j);

/// p_i x_j (E_i E_j^{-1} - 1) + p_j x_i (E_j E_i^{-1} - 1) with x_{d+1} = N - |x|;
/// p has length d+1 and is used as given (no range check).
PolyOperator krawtchouk_Lij(std::span<const Rational> p, const Rational& N, int i, int j);

/// Any family's L_{i,j} in the polynomial representation. Throws
/// UnsupportedPair for out-of-range or equal indices.
PolyOperator build_Lij(const OperatorFamily& f, int i, int j);

/// D_{i,j} for the oscillator families, i != j in 1..d. Throws UnsupportedPair
/// for other families.
PolyOperator build_D(const OperatorFamily& f, int i, int j);

/// M_k = sum_{k <= a < b <= d+1} L_{a,b}; zero for k > d.
PolyOperator build_M(const OperatorFamily& f, int k);

/// The family's full operator written in its expanded (single-operator) form.
PolyOperator expanded_operator(const OperatorFamily& f);

/// Full parameter vector of the Krawtchouk-type form: (p_1..p_d, 1-|p|) and
/// N; for Meixner the substituted values p_j = -c_j/(1-|c|), N = -s.
std::pair<std::vector<Rational>, Rational> krawtchouk_form_parameters(const OperatorFamily& f);

/// Cyclic relabelling of an index in 1..d+1: tau(k) = k+1, tau(d+1) = 1
/// (shift = +1) or its inverse (shift = -1).
int cyclic_index(int k, int d, int shift);

// ---- lattice representation ----

/// Evaluates a shift operator on the points of `domain`. A nonzero
/// coefficient on a shift that leaves the domain raises ConsistencyError.
/// `exits` (optional) receives the number of exiting shifts met, all of
/// which carried a zero coefficient.
SparseMatrix to_lattice(const PolyOperator& op, const LatticeDomain& domain,
                        std::size_t* exits = nullptr);

/// Matrices of every L_{i,j} on the family's lattice (V for Hahn, V_N^d for
/// Krawtchouk).
class LatticeFamily {
 public:
  explicit LatticeFamily(const OperatorFamily& f);

  const OperatorFamily& family() const noexcept { return family_; }
  const LatticeDomain& domain() const noexcept { return domain_; }
  int d() const noexcept { return d_; }
  const SparseMatrix& L(int i, int j) const;
  SparseMatrix M(int k) const;
  /// tau^{shift} o M_k = sum_{k <= a < b <= d+1} L_{tau(a), tau(b)}.
  SparseMatrix M_permuted(int k, int shift) const;
  SparseMatrix full() const { return M(1); }
  SparseMatrix expanded() const;
  std::vector<Rational> weights() const;
  /// Number of exiting shifts seen while assembling, all with zero coefficient.
  std::size_t exits_checked() const noexcept { return exits_; }

 private:
  OperatorFamily family_;
  LatticeDomain domain_;
  int d_ = 0;
  std::map<std::pair<int, int>, SparseMatrix> pairs_;
  std::size_t exits_ = 0;
};

// ---- identity reports ----

struct IdentityCheck {
  std::string name;
  std::vector<int> indices;
  /// false for the stated non-relations, which hold iff a nonzero witness exists
  bool expect_zero = true;
  bool holds = false;
  /// first nonzero matrix entry or monomial image of the residual
  std::string witness;
  std::string note;
};

struct IdentityReport {
  std::string family;
  std::string representation;  ///< "lattice" or "polynomial (degree <= D)"
  std::vector<IdentityCheck> checks;

  bool all_hold() const;
  const IdentityCheck* first_failure() const;
  void append(const IdentityReport& other);
};

/// Pairwise commutation of disjoint pairs, [L_ij, L_ik + L_jk] = 0, and
/// [L, L_ij] = 0. Charlier records its partial relations and the stated
/// non-relation; oscillators record commutation with the Hamiltonian.
IdentityReport verify_kohno_drinfeld(const OperatorFamily& f, int degree = 6);

/// The four-index relation of the family for one ordered tuple (Hahn,
/// Krawtchouk, Meixner: i,j,k,m distinct in 1..d+1; Charlier and oscillators:
/// i,j,k distinct in 1..d, m ignored). Throws NeedsDimension when the family
/// has too few indices.
IdentityReport verify_generator_relation(const OperatorFamily& f, int i, int j, int k, int m,
                                         int degree = 6);

/// The family's four-index relations for every ordering of every index subset.
IdentityReport verify_generator_relations(const OperatorFamily& f, int degree = 6);

/// Hahn, d >= 3: every L_{i,j} with 1 < i < j < d+1 rebuilt from
/// L_{1,i}, L_{1,j}, L_{i,d+1}, L_{j,d+1}, L_{1,d+1}; and L_{1,j}, L_{i,d+1}
/// rebuilt from the Gaudin sums M_k and their cyclic relabellings.
IdentityReport verify_generating_sets(const OperatorFamily& f);

/// Expanded form equals the sum of the L_{i,j}.
IdentityReport verify_decomposition(const OperatorFamily& f, int degree = 6);

/// W L_{i,j} = L_{i,j}^T W on the lattice (Hahn and Krawtchouk).
IdentityReport verify_self_adjoint(const OperatorFamily& f);

/// Sum of the parameter-substituted Krawtchouk-form L_{i,j} equals the
/// expanded Meixner operator on monomials of degree <= D; each L_{i,j}
/// preserves degree and kills constants.
IdentityReport verify_meixner_decomposition(const MeixnerParams& params, int degree = 6);

/// Each L_{i,j} maps degree n into degree <= n (+2 for the gauged oscillator)
/// and annihilates constants (except the gauged forms).
IdentityReport verify_degree_bounds(const OperatorFamily& f, int degree = 6);

/// Oscillator families: z_i d_j - z_j d_i = [L_ij, L_{i,d+1}] = [D_ij, L_{i,d+1}],
/// D_ij = L_ij - L_{i,d+1} - L_{j,d+1}.
IdentityReport verify_oscillator_symmetries(const OperatorFamily& f, int degree = 6);

/// Charlier with all a_i = a and x = a + sqrt(2a) z: the rewritten operators
/// agree with the originals. Requires 2a to be the square of a rational.
IdentityReport verify_charlier_rescaled(int d, const Rational& a, int degree = 6);

}  // namespace polyhahn
