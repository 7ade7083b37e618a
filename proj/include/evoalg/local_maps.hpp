// Local and 2-local derivations and local automorphisms. The
// definitional checkers are ground truth: the pointwise condition
// "Delta u lies in {d u : d in Der(E)}" is decided exactly by
// stratifying over u_1 = 0 / u_1 != 0 and comparing polynomial
// coefficients; theorem shortcuts are cross-checks, and every
// rejection carries a re-verifiable witness.
#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "evoalg/automorphisms.hpp"

namespace evoalg {

enum class CheckMethod { theorem, definitional };

struct LocalVerdict {
  bool accepted;
  CheckMethod method;
  std::optional<VectorQ> witness;                        // rejected point
  std::optional<std::pair<VectorQ, VectorQ>> witness_pair;  // 2-local
};

/// Exact pointwise test: is w in span{d^T u : d in Der(E)}?
bool point_in_derivation_orbit(const EvolutionAlgebra& E, const VectorQ& u,
                               const VectorQ& w);

/// Exact pointwise test: is w = phi^T u for some automorphism phi?
bool point_in_automorphism_orbit(const EvolutionAlgebra& E, const VectorQ& u,
                                 const VectorQ& w);

/// Definitional local-derivation check, exact, with a randomized
/// falsifier (seeded) as a secondary guard.
LocalVerdict is_local_derivation(const EvolutionAlgebra& E,
                                 const MatrixQ& delta, uint64_t seed = 0);

struct LocalDerivationReport {
  int n;
  bool equals_der;        // n > 2: the set is exactly Der(E)
  MatrixSpace der;
  // n = 2 only: the definitional characterization and its comparison
  // with the family printed in the literature.
  std::string definitional_description;
  bool published_family_contained;
  bool discrepancy;  // definitional set strictly larger than the family
};

LocalDerivationReport local_derivation_set_description(
    const EvolutionAlgebra& E);

/// Pairwise 2-local feasibility over a finite sample list: accepted iff
/// every pair of (point, value) samples is matched by a single
/// derivation. A single sample is paired with itself.
LocalVerdict two_local_pairwise_feasible(
    const EvolutionAlgebra& E,
    const std::vector<std::pair<VectorQ, VectorQ>>& samples);

/// For a linear candidate: accepted iff delta is a derivation (the
/// 2-local theorem route), cross-checked by pairwise feasibility on the
/// canonical probe set {e_i} U {e_i + e_j} U {sum e_k}.
LocalVerdict is_two_local_derivation_linear(const EvolutionAlgebra& E,
                                            const MatrixQ& delta);

/// Local-automorphism check. n > 2: accepted iff psi is an
/// automorphism. n = 2: accepted iff psi = [[a, b], [0, c]] with a != 0
/// and c a nonzero rational square. Throws on singular psi.
LocalVerdict is_local_automorphism(const EvolutionAlgebra& E,
                                   const MatrixQ& psi, uint64_t seed = 0);

}  // namespace evoalg
