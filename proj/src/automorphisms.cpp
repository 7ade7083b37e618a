#include "evoalg/automorphisms.hpp"

#include <algorithm>

namespace evoalg {

namespace {

Rational alpha_pow(const Rational& alpha, int k) {
  // alpha^{2^k}
  return pow_rational(alpha, pow2(static_cast<unsigned long>(k)));
}

}  // namespace

Integer eta(const std::set<IndexPair>& ia) {
  if (ia.empty()) throw std::invalid_argument("eta of an empty index set");
  Integer g(0);
  for (const auto& [i, j] : ia) {
    const Integer term = pow2(static_cast<unsigned long>(j - 1)) -
                         pow2(static_cast<unsigned long>(i));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), term.get_mpz_t());
  }
  return g;
}

AutomorphismFamily automorphism_family(const EvolutionAlgebra& E) {
  require_max_nilindex_form(E, "automorphism_family");
  const auto ia = index_set(E);
  if (ia.empty()) return {E, false, Integer(0), {}};
  const Integer e = eta(ia);
  // eta is even (j-1 >= i+1 >= 2 makes every term even), so the only
  // rational roots of alpha^eta = 1 are +-1.
  return {E, true, e, {Rational(1), Rational(-1)}};
}

std::vector<Rational> last_column_recurrence(const EvolutionAlgebra& E,
                                             const Rational& alpha) {
  const int n = E.n;
  std::vector<Rational> phi_col(static_cast<size_t>(n) + 1, Rational(0));
  const Rational top = alpha_pow(alpha, n - 1);  // phi_nn
  for (int i = n - 2; i >= 1; --i) {
    Rational rhs = E.A(i - 1, n - 1) * (alpha_pow(alpha, i) - top);
    for (int j = i + 2; j <= n - 1; ++j)
      rhs -= E.A(i - 1, j - 1) * phi_col[static_cast<size_t>(j)];
    phi_col[static_cast<size_t>(i + 1)] = rhs / E.A(i - 1, i);
  }
  return {phi_col.begin() + 2, phi_col.begin() + n};  // phi_{2n}..phi_{n-1,n}
}

std::vector<Rational> last_column_closed(const EvolutionAlgebra& E,
                                         const Rational& alpha) {
  const int n = E.n;
  const Rational top = alpha_pow(alpha, n - 1);
  std::vector<Rational> col;
  for (int i = 2; i <= n - 1; ++i)
    col.push_back(E.A(i - 2, n - 1) * (alpha_pow(alpha, i - 1) - top) /
                  E.A(i - 2, i - 1));
  return col;
}

MatrixQ build_automorphism(const AutomorphismFamily& family,
                           const Rational& alpha, const Rational& beta) {
  if (alpha == 0)
    throw precondition_error("build_automorphism: alpha must be nonzero");
  if (family.alpha_constrained && alpha != 1 && alpha != -1)
    throw precondition_error(
        "build_automorphism: alpha^eta = 1 violated (eta = " +
        family.eta_value.get_str() +
        "; the only rational solutions are 1 and -1)");
  const EvolutionAlgebra& E = family.algebra;
  const int n = E.n;
  MatrixQ phi = MatrixQ::Zero(n, n);
  for (int i = 1; i <= n; ++i) phi(i - 1, i - 1) = alpha_pow(alpha, i - 1);
  phi(0, n - 1) = beta;
  const auto col = last_column_recurrence(E, alpha);
  for (int i = 2; i <= n - 1; ++i)
    phi(i - 1, n - 1) = col[static_cast<size_t>(i - 2)];
  return phi;
}

bool is_automorphism(const EvolutionAlgebra& E, const MatrixQ& phi) {
  if (phi.rows() != E.n || phi.cols() != E.n)
    throw std::invalid_argument("dimension mismatch");
  return is_invertible(phi) && verify_homomorphism(E, E, phi);
}

namespace {

struct RationalLess {
  bool operator()(const Rational& a, const Rational& b) const {
    return a < b;
  }
};

// Candidate values of t solving t^m = r, exact over Q.
std::vector<Rational> rational_power_roots(const Rational& r,
                                           unsigned long m) {
  std::vector<Rational> roots;
  const auto principal = nth_root(r, m);
  if (!principal) return roots;
  roots.push_back(*principal);
  if (m % 2 == 0 && *principal != 0) roots.push_back(-*principal);
  return roots;
}

}  // namespace

std::optional<MatrixQ> isomorphism_test(const EvolutionAlgebra& E1,
                                        const EvolutionAlgebra& E2) {
  require_max_nilindex_form(E1, "isomorphism_test");
  require_max_nilindex_form(E2, "isomorphism_test");
  if (E1.n != E2.n)
    throw precondition_error("isomorphism_test: dimensions differ");
  const int n = E1.n;
  const MatrixQ& A = E1.A;
  const MatrixQ& B = E2.A;

  // Diagonal law: xi_ii = c_i t^{2^{i-1}} with c_1 = 1 and
  // c_{i+1} = (b_{i,i+1}/a_{i,i+1}) c_i^2, forced by the f_{i+1}
  // coefficient of xi(e_i^2) = xi(e_i)^2.
  std::vector<Rational> c(static_cast<size_t>(n) + 1);
  c[1] = 1;
  for (int i = 1; i <= n - 1; ++i)
    c[static_cast<size_t>(i + 1)] =
        B(i - 1, i) / A(i - 1, i) * c[static_cast<size_t>(i)] * c[static_cast<size_t>(i)];

  // Interior constraints a_il xi_ll = b_il xi_ii^2 pin t down to a
  // finite candidate set; with no binding constraint any t works.
  bool constrained = false;
  std::vector<Rational> candidates;
  for (int i = 1; i <= n; ++i) {
    for (int l = i + 2; l <= n - 1; ++l) {
      const Rational lhs_coeff = A(i - 1, l - 1) * c[static_cast<size_t>(l)];
      const Rational rhs_coeff =
          B(i - 1, l - 1) * c[static_cast<size_t>(i)] * c[static_cast<size_t>(i)];
      if (lhs_coeff == 0 && rhs_coeff == 0) continue;
      if (lhs_coeff == 0 || rhs_coeff == 0) return std::nullopt;
      const Integer m = pow2(static_cast<unsigned long>(l - 1)) -
                        pow2(static_cast<unsigned long>(i));
      const auto roots =
          rational_power_roots(rhs_coeff / lhs_coeff, m.get_ui());
      if (!constrained) {
        candidates = roots;
        constrained = true;
      } else {
        std::vector<Rational> kept;
        for (const auto& t : candidates)
          if (std::find(roots.begin(), roots.end(), t) != roots.end())
            kept.push_back(t);
        candidates = kept;
      }
      if (candidates.empty()) return std::nullopt;
    }
  }
  if (!constrained) candidates = {Rational(1)};
  std::sort(candidates.begin(), candidates.end(), RationalLess{});

  for (const auto& t : candidates) {
    if (t == 0) continue;
    MatrixQ xi = MatrixQ::Zero(n, n);
    for (int i = 1; i <= n; ++i)
      xi(i - 1, i - 1) =
          c[static_cast<size_t>(i)] *
          pow_rational(t, pow2(static_cast<unsigned long>(i - 1)));
    // beta slot is free in every isomorphism; fix it to zero.
    // Last column by the triangular recurrence on the f_n coefficient:
    // a_{i,i+1} xi_{i+1,n} = b_in xi_ii^2 - a_in xi_nn
    //                        - sum_{j=i+2}^{n-1} a_ij xi_jn.
    for (int i = n - 2; i >= 1; --i) {
      Rational rhs = B(i - 1, n - 1) * xi(i - 1, i - 1) * xi(i - 1, i - 1) -
                     A(i - 1, n - 1) * xi(n - 1, n - 1);
      for (int j = i + 2; j <= n - 1; ++j)
        rhs -= A(i - 1, j - 1) * xi(j - 1, n - 1);
      xi(i, n - 1) = rhs / A(i - 1, i);
    }
    if (is_invertible(xi) && verify_homomorphism(E1, E2, xi)) return xi;
  }
  return std::nullopt;
}

}  // namespace evoalg
