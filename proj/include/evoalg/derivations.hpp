// The derivation Lie algebra Der(E): a generic Leibniz nullspace solver
// that works for any evolution algebra, the closed form for the
// maximal-nilindex class, brackets, and reconstruction of an algebra
// from a prescribed derivation algebra.
#pragma once

#include <set>
#include <utility>
#include <vector>

#include "evoalg/algebra.hpp"

namespace evoalg {

/// A linear space of n x n matrices given by independent generators,
/// canonicalized by echelon form on the flattened generators so that
/// equality is decidable structural equality.
class MatrixSpace {
 public:
  MatrixSpace(int n, const std::vector<MatrixQ>& generators);

  int n() const { return n_; }
  int dim() const { return static_cast<int>(generators_.size()); }
  const std::vector<MatrixQ>& generators() const { return generators_; }

  bool contains(const MatrixQ& m) const;

  bool operator==(const MatrixSpace& other) const;
  bool operator!=(const MatrixSpace& other) const {
    return !(*this == other);
  }

 private:
  int n_;
  std::vector<MatrixQ> generators_;
  Subspace flat_;  // echelon span of flattened generators
};

using IndexPair = std::pair<int, int>;

/// I_A = {(i,j) : i+1 < j < n, a_ij != 0}, 1-based pairs.
std::set<IndexPair> index_set(const EvolutionAlgebra& E);

/// Independent oracle: nullspace of the Leibniz system
/// d(e_i e_j) = d(e_i) e_j + e_i d(e_j) in the n^2 unknowns d_ij,
/// row convention d(e_i) = sum_j d_ij e_j.
MatrixSpace derivations_solver(const EvolutionAlgebra& E);

/// Closed form for maximal-nilindex algebras: span{E_1n} when I_A is
/// nonempty, otherwise span of E_1n and the diagonal generator
/// diag(1,2,...,2^{n-1}) with column-n entries
/// (2^{i-1}-2^{n-1}) a_{i-1,n} / a_{i-1,i} at rows 2..n-1.
MatrixSpace derivations_closed_form(const EvolutionAlgebra& E);

/// Commutator d1 d2 - d2 d1 of two matrices of equal dimension.
MatrixQ lie_bracket(const MatrixQ& d1, const MatrixQ& d2);

/// The fixed numbers d_1..d_{n-2} appearing in the column-n slots of a
/// prescribed two-dimensional derivation algebra.
struct DerivationSpec {
  std::vector<Rational> d;
  int n() const { return static_cast<int>(d.size()) + 2; }
};

/// Builds the algebra whose derivation algebra realizes `spec`:
/// a_{i,i+1} = subdiag_i, a_{in} = a_{i,i+1} d_i / (2^i - 2^{n-1}) for
/// i <= n-2, everything else zero.
EvolutionAlgebra reconstruct_algebra(const DerivationSpec& spec,
                                     const std::vector<Rational>& subdiag);

/// Reads the d_i back off a closed-form derivation space: column-n
/// entries of the diagonal generator at rows 2..n-1.
std::vector<Rational> derivation_spec_of(const MatrixSpace& der);

}  // namespace evoalg
