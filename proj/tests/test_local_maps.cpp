#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"

using namespace evoalg;
using testutil::random_max_form;
using testutil::unit;

namespace {

EvolutionAlgebra example_53_e1() {
  MatrixQ A = MatrixQ::Zero(5, 5);
  A(0, 1) = A(0, 2) = A(0, 3) = 1;
  A(1, 2) = A(2, 3) = A(3, 4) = 1;
  return EvolutionAlgebra(5, A);
}

MatrixQ e_unit(int n, int i, int j) {
  MatrixQ m = MatrixQ::Zero(n, n);
  m(i, j) = 1;
  return m;
}

// A random map outside Der(E): perturb a derivation at a disallowed slot.
MatrixQ random_non_derivation(const EvolutionAlgebra& E,
                              std::mt19937_64& rng) {
  const MatrixSpace der = derivations_closed_form(E);
  for (;;) {
    MatrixQ m = testutil::random_matrix(E.n, E.n, rng);
    if (!der.contains(m)) return m;
  }
}

MatrixQ random_der_member(const EvolutionAlgebra& E, std::mt19937_64& rng) {
  MatrixQ m = MatrixQ::Zero(E.n, E.n);
  const MatrixSpace der = derivations_closed_form(E);
  for (const MatrixQ& g : der.generators())
    m += testutil::rnd_entry(rng) * g;
  return m;
}

}  // namespace

TEST_CASE("derivations are local derivations") {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const EvolutionAlgebra E = random_max_form(n, rng);
    const LocalVerdict v = is_local_derivation(E, random_der_member(E, rng));
    CHECK(v.accepted);
    CHECK(v.method == CheckMethod::definitional);
  }
}

TEST_CASE("n=2 local derivation verdicts match the strata analysis") {
  const EvolutionAlgebra E = chain_algebra(2);
  for (int beta = -2; beta <= 2; ++beta) {
    MatrixQ m(2, 2);
    m << 1, Rational(beta), 0, 0;
    CHECK(is_local_derivation(E, m).accepted);
  }
  MatrixQ bad(2, 2);
  bad << 0, 0, 1, 0;
  const LocalVerdict v = is_local_derivation(E, bad);
  CHECK(!v.accepted);
  REQUIRE(v.witness.has_value());
  CHECK(!point_in_derivation_orbit(E, *v.witness, apply_map(bad, *v.witness)));
  // e2 itself certifies: bad(e2) = e1 is not a multiple of e2's orbit.
  CHECK(!point_in_derivation_orbit(E, unit(2, 1), apply_map(bad, unit(2, 1))));
}

TEST_CASE("rejection witnesses re-fail the orbit condition") {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 4);  // 3..6
    const EvolutionAlgebra E = random_max_form(n, rng);
    const MatrixQ m = random_non_derivation(E, rng);
    const LocalVerdict v = is_local_derivation(E, m, 7);
    CHECK(!v.accepted);
    REQUIRE(v.witness.has_value());
    CHECK(!point_in_derivation_orbit(E, *v.witness, apply_map(m, *v.witness)));
  }
}

TEST_CASE("for n>2 the definitional local-derivation set equals Der") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 6; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 4);
    const EvolutionAlgebra E = random_max_form(n, rng);
    const MatrixSpace der = derivations_closed_form(E);
    for (int s = 0; s < 10; ++s) {
      const MatrixQ inside = random_der_member(E, rng);
      CHECK(is_local_derivation(E, inside, 7).accepted);
      const MatrixQ outside = random_non_derivation(E, rng);
      CHECK(!is_local_derivation(E, outside, 7).accepted);
      CHECK(!der.contains(outside));
    }
  }
}

TEST_CASE("local_derivation_set_description") {
  const auto big = local_derivation_set_description(chain_algebra(4));
  CHECK(big.equals_der);
  CHECK(big.der.dim() == 2);
  CHECK(!big.discrepancy);

  const auto small = local_derivation_set_description(chain_algebra(2));
  CHECK(!small.equals_der);
  CHECK(small.published_family_contained);
  CHECK(small.discrepancy);  // e.g. diag(1,3) passes but is in neither branch

  // The definitional n=2 set is exactly the upper-triangular maps.
  std::mt19937_64 rng(54);
  const EvolutionAlgebra E2 = chain_algebra(2);
  for (int trial = 0; trial < 30; ++trial) {
    MatrixQ m = testutil::random_matrix(2, 2, rng);
    CHECK(is_local_derivation(E2, m).accepted == (m(1, 0) == 0));
  }
}

TEST_CASE("two_local_pairwise_feasible") {
  const EvolutionAlgebra E = chain_algebra(4);
  std::mt19937_64 rng(55);
  const MatrixQ d = random_der_member(E, rng);
  std::vector<std::pair<VectorQ, VectorQ>> good;
  for (int i = 0; i < 4; ++i)
    good.emplace_back(unit(4, i), apply_map(d, unit(4, i)));
  CHECK(two_local_pairwise_feasible(E, good).accepted);

  std::vector<std::pair<VectorQ, VectorQ>> bad;
  for (int i = 0; i < 4; ++i) bad.emplace_back(unit(4, i), unit(4, i));
  const LocalVerdict v = two_local_pairwise_feasible(E, bad);
  CHECK(!v.accepted);
  CHECK(v.witness_pair.has_value());

  std::vector<std::pair<VectorQ, VectorQ>> single = {good[0]};
  CHECK(two_local_pairwise_feasible(E, single).accepted);
}

TEST_CASE("is_two_local_derivation_linear") {
  const EvolutionAlgebra E1 = example_53_e1();
  CHECK(is_two_local_derivation_linear(E1, e_unit(5, 0, 4)).accepted);

  std::mt19937_64 rng(56);
  for (int n : {3, 4, 5}) {
    const EvolutionAlgebra E = random_max_form(n, rng);
    CHECK(is_two_local_derivation_linear(E, random_der_member(E, rng))
              .accepted);
    const LocalVerdict v =
        is_two_local_derivation_linear(E, e_unit(n, 1, 0));
    CHECK(!v.accepted);
    REQUIRE(v.witness_pair.has_value());
    // The witness pair re-fails as a 2-sample feasibility problem.
    const MatrixQ delta = e_unit(n, 1, 0);
    std::vector<std::pair<VectorQ, VectorQ>> pair = {
        {v.witness_pair->first, apply_map(delta, v.witness_pair->first)},
        {v.witness_pair->second, apply_map(delta, v.witness_pair->second)}};
    CHECK(!two_local_pairwise_feasible(E, pair).accepted);
  }
}

TEST_CASE("is_local_automorphism for n>2 matches is_automorphism") {
  std::mt19937_64 rng(57);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 4);
    const EvolutionAlgebra E = random_max_form(n, rng);
    const AutomorphismFamily fam = automorphism_family(E);
    const Rational alpha = fam.alpha_constrained
                               ? fam.alpha_solutions[rng() % 2]
                               : testutil::rnd_nonzero(rng);
    const MatrixQ phi =
        build_automorphism(fam, alpha, testutil::rnd_entry(rng));
    CHECK(is_local_automorphism(E, phi).accepted);

    MatrixQ off = MatrixQ::Identity(n, n);
    off(n - 1, 0) = 1;  // invertible but not an automorphism
    const LocalVerdict v = is_local_automorphism(E, off, 7);
    CHECK(!v.accepted);
    REQUIRE(v.witness.has_value());
    CHECK(!point_in_automorphism_orbit(E, *v.witness,
                                       apply_map(off, *v.witness)));
  }
}

TEST_CASE("n=2 local automorphisms are the rational-square family") {
  const EvolutionAlgebra E = chain_algebra(2);
  MatrixQ ok(2, 2);
  ok << 1, 0, 0, 4;
  CHECK(is_local_automorphism(E, ok).accepted);

  MatrixQ with_beta(2, 2);
  with_beta << Rational(-3), Rational(5), 0, Rational(9, 4);
  CHECK(is_local_automorphism(E, with_beta).accepted);

  MatrixQ not_square(2, 2);
  not_square << 1, 0, 0, 3;
  const LocalVerdict v = is_local_automorphism(E, not_square);
  CHECK(!v.accepted);
  REQUIRE(v.witness.has_value());
  CHECK(!point_in_automorphism_orbit(E, *v.witness,
                                     apply_map(not_square, *v.witness)));

  CHECK_THROWS_AS(is_local_automorphism(E, MatrixQ::Zero(2, 2)),
                  precondition_error);
}

TEST_CASE("preconditions are enforced") {
  const EvolutionAlgebra bad(3, MatrixQ::Zero(3, 3));
  CHECK_THROWS_AS(is_local_derivation(bad, MatrixQ::Zero(3, 3)),
                  precondition_error);
  CHECK_THROWS_AS(is_two_local_derivation_linear(bad, MatrixQ::Zero(3, 3)),
                  precondition_error);
  CHECK_THROWS_AS(is_local_automorphism(bad, MatrixQ::Identity(3, 3)),
                  precondition_error);
}
