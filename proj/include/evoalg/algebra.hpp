// Evolution algebras: construction, multiplication, the power chain
// E^k, nilindex, recognition of the maximal-nilindex form, and the
// canonical basis change onto the standard chain.
#pragma once

#include <vector>

#include "evoalg/linalg.hpp"

namespace evoalg {

/// Thrown when an operation's structural precondition is violated.
class precondition_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Finite-dimensional evolution algebra: e_i e_j = 0 for i != j,
/// e_i^2 = sum_k a_ik e_k. Immutable after construction.
struct EvolutionAlgebra {
  int n;
  MatrixQ A;  // n x n structural constants, row i holds e_i^2

  EvolutionAlgebra(int n_, MatrixQ A_);
};

/// The standard chain: e_i^2 = e_{i+1}, e_n^2 = 0.
EvolutionAlgebra chain_algebra(int n);

/// Product of u and v, coordinates over the natural basis:
/// (uv)_k = sum_i u_i v_i a_ik.
VectorQ multiply(const EvolutionAlgebra& E, const VectorQ& u,
                 const VectorQ& v);

struct PowerChain {
  std::vector<Subspace> chain;  // chain[k-1] = E^k
  bool nilpotent;
  long index;  // nilindex when nilpotent, otherwise the cap reached
  long cap;
};

/// Iterates E^k = sum_{i<=k/2} E^i E^{k-i}, where the product of two
/// subspaces is the span of pairwise products of basis vectors. Stops
/// at the first zero subspace or at `cap`.
PowerChain power_chain(const EvolutionAlgebra& E, long cap);

/// power_chain with the sound cap 2^{n-1}+1; a "cap reached" result is
/// reported as not nilpotent with the whole chain attached.
PowerChain nilindex(const EvolutionAlgebra& E);

/// True iff A is strictly upper triangular with a_{i,i+1} != 0 for all
/// i < n (the canonical maximal-nilindex form, in the given basis).
bool is_max_nilindex_form(const EvolutionAlgebra& E);

void require_max_nilindex_form(const EvolutionAlgebra& E,
                               const char* operation);

/// True iff every row i < n-1 is supported only on columns i+1 and n
/// (and row n-1 on column n, row n zero) with nonzero subdiagonal: the
/// shape accepted by the canonical isomorphism.
bool is_two_entry_row_form(const EvolutionAlgebra& E);

/// Basis change onto the standard chain: f_1 = e_1, f_2 = e_1^2,
/// f_{i+1} = (prod_{k<i} a_{k,k+1}^{2^{i-k}}) e_i^2. Row i of the
/// returned matrix holds the coordinates of f_i. The result is an
/// isomorphism from chain_algebra(n) onto E.
MatrixQ canonical_isomorphism(const EvolutionAlgebra& E);

/// True iff psi (row convention) satisfies psi(e_i e_j) =
/// psi(e_i) psi(e_j) for all basis pairs, products on the left in E1
/// and on the right in E2. Sufficient by bilinearity and commutativity.
bool verify_homomorphism(const EvolutionAlgebra& E1,
                         const EvolutionAlgebra& E2, const MatrixQ& psi);

}  // namespace evoalg
