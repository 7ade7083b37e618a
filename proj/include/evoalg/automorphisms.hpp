// Aut(E) for maximal-nilindex algebras: the invariant eta, the
// parametrized automorphism family with its last-column recurrence,
// and an exact isomorphism test between two algebras of the class.
#pragma once

#include <optional>

#include "evoalg/derivations.hpp"

namespace evoalg {

/// gcd of 2^{j-1} - 2^i over (i,j) in I_A; always even. Throws on an
/// empty set.
Integer eta(const std::set<IndexPair>& ia);

/// The parametrized description of Aut(E): diagonal alpha^{2^{i-1}},
/// free beta at (1,n), last column from the recurrence. When I_A is
/// nonempty the diagonal parameter is constrained by alpha^eta = 1,
/// which over the rationals (eta even) means alpha in {1,-1}.
struct AutomorphismFamily {
  EvolutionAlgebra algebra;
  bool alpha_constrained;
  Integer eta_value;                     // meaningful when constrained
  std::vector<Rational> alpha_solutions; // exhaustive when constrained
};

AutomorphismFamily automorphism_family(const EvolutionAlgebra& E);

/// phi_{in} for i = 2..n-1 by the triangular recurrence
/// a_{i,i+1} phi_{i+1,n} = a_{in}(alpha^{2^i} - alpha^{2^{n-1}})
///                         - sum_{j=i+2}^{n-1} a_{ij} phi_{jn}.
std::vector<Rational> last_column_recurrence(const EvolutionAlgebra& E,
                                             const Rational& alpha);

/// Closed form valid when I_A is empty:
/// phi_{in} = a_{i-1,n}(alpha^{2^{i-1}} - alpha^{2^{n-1}}) / a_{i-1,i}.
std::vector<Rational> last_column_closed(const EvolutionAlgebra& E,
                                         const Rational& alpha);

/// Full n x n matrix of the family member; throws when alpha = 0 or
/// the alpha-constraint is violated (the message names eta).
MatrixQ build_automorphism(const AutomorphismFamily& family,
                           const Rational& alpha, const Rational& beta);

/// True iff phi is an invertible self-homomorphism of E.
bool is_automorphism(const EvolutionAlgebra& E, const MatrixQ& phi);

/// Searches for an isomorphism E1 -> E2 of the forced triangular shape
/// (diagonal determined from t = xi_11, interior constraints solved by
/// exact radical extraction, last column by recurrence). Every
/// candidate is final-verified; the smallest passing t wins. Empty
/// result means no isomorphism exists.
std::optional<MatrixQ> isomorphism_test(const EvolutionAlgebra& E1,
                                        const EvolutionAlgebra& E2);

}  // namespace evoalg
