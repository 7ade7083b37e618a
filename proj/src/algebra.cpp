#include "evoalg/algebra.hpp"

#include <string>

namespace evoalg {

EvolutionAlgebra::EvolutionAlgebra(int n_, MatrixQ A_)
    : n(n_), A(std::move(A_)) {
  if (n < 1) throw std::invalid_argument("dimension must be positive");
  if (A.rows() != n || A.cols() != n)
    throw std::invalid_argument("structural matrix must be n x n");
}

EvolutionAlgebra chain_algebra(int n) {
  MatrixQ A = MatrixQ::Zero(n, n);
  for (int i = 0; i + 1 < n; ++i) A(i, i + 1) = 1;
  return {n, std::move(A)};
}

VectorQ multiply(const EvolutionAlgebra& E, const VectorQ& u,
                 const VectorQ& v) {
  if (u.size() != E.n || v.size() != E.n)
    throw std::invalid_argument("dimension mismatch");
  VectorQ w = VectorQ::Zero(E.n);
  for (int i = 0; i < E.n; ++i) {
    const Rational c = u(i) * v(i);
    if (c == 0) continue;
    for (int k = 0; k < E.n; ++k) w(k) += c * E.A(i, k);
  }
  return w;
}

namespace {

Subspace subspace_product(const EvolutionAlgebra& E, const Subspace& a,
                          const Subspace& b) {
  if (a.is_zero() || b.is_zero()) return Subspace::zero(E.n);
  MatrixQ products(a.dim() * b.dim(), E.n);
  Eigen::Index row = 0;
  for (int i = 0; i < a.dim(); ++i) {
    const VectorQ u = a.basis().row(i).transpose();
    for (int j = 0; j < b.dim(); ++j) {
      const VectorQ v = b.basis().row(j).transpose();
      products.row(row++) = multiply(E, u, v).transpose();
    }
  }
  return Subspace::span_of_rows(products);
}

}  // namespace

PowerChain power_chain(const EvolutionAlgebra& E, long cap) {
  if (cap < 2) throw std::invalid_argument("cap must be at least 2");
  PowerChain result;
  result.cap = cap;
  result.nilpotent = false;
  result.index = cap;
  result.chain.push_back(Subspace::full(E.n));
  for (long k = 2; k <= cap; ++k) {
    Subspace ek = Subspace::zero(E.n);
    for (long i = 1; i <= k / 2; ++i) {
      ek = subspace_sum(ek, subspace_product(E, result.chain[i - 1],
                                             result.chain[k - i - 1]));
    }
    result.chain.push_back(ek);
    if (ek.is_zero()) {
      result.nilpotent = true;
      result.index = k;
      break;
    }
  }
  return result;
}

PowerChain nilindex(const EvolutionAlgebra& E) {
  if (E.n > 40) throw std::overflow_error("nilindex cap overflows for n > 40");
  const long cap = (1L << (E.n - 1)) + 1;
  return power_chain(E, cap < 2 ? 2 : cap);
}

bool is_max_nilindex_form(const EvolutionAlgebra& E) {
  if (E.n < 2) return false;
  for (int i = 0; i < E.n; ++i)
    for (int j = 0; j <= i; ++j)
      if (E.A(i, j) != 0) return false;
  for (int i = 0; i + 1 < E.n; ++i)
    if (E.A(i, i + 1) == 0) return false;
  // Row n is zero by triangularity; checked above anyway.
  return true;
}

void require_max_nilindex_form(const EvolutionAlgebra& E,
                               const char* operation) {
  if (!is_max_nilindex_form(E))
    throw precondition_error(
        std::string(operation) +
        ": structural matrix is not in maximal-nilindex form (strictly "
        "upper triangular with nonzero superdiagonal)");
}

bool is_two_entry_row_form(const EvolutionAlgebra& E) {
  if (E.n < 2) return false;
  for (int i = 0; i + 1 < E.n; ++i)
    if (E.A(i, i + 1) == 0) return false;
  for (int i = 0; i < E.n; ++i)
    for (int j = 0; j < E.n; ++j)
      if (E.A(i, j) != 0 && !(i < E.n - 1 && (j == i + 1 || j == E.n - 1)))
        return false;
  return true;
}

MatrixQ canonical_isomorphism(const EvolutionAlgebra& E) {
  if (!is_two_entry_row_form(E))
    throw precondition_error(
        "canonical_isomorphism: rows must carry only columns i+1 and n, "
        "with nonzero subdiagonal");
  const int n = E.n;
  MatrixQ phi = MatrixQ::Zero(n, n);
  phi(0, 0) = 1;  // f_1 = e_1
  if (n >= 2) phi.row(1) = E.A.row(0);  // f_2 = e_1^2
  for (int i = 2; i < n; ++i) {
    // f_{i+1} = prod_{k=1}^{i-1} a_{k,k+1}^{2^{i-k}} * e_i^2
    Rational scale(1);
    for (int k = 1; k <= i - 1; ++k)
      scale *= pow_rational(E.A(k - 1, k), pow2(static_cast<unsigned long>(
                                               i - k)).get_ui());
    phi.row(i) = scale * E.A.row(i - 1);
  }
  return phi;
}

bool verify_homomorphism(const EvolutionAlgebra& E1,
                         const EvolutionAlgebra& E2, const MatrixQ& psi) {
  if (E1.n != E2.n || psi.rows() != E1.n || psi.cols() != E1.n)
    throw std::invalid_argument("dimension mismatch");
  for (int i = 0; i < E1.n; ++i) {
    const VectorQ pi = psi.row(i).transpose();
    for (int j = i; j < E1.n; ++j) {
      VectorQ lhs_e(E1.n);
      if (i == j) {
        lhs_e = E1.A.row(i).transpose();  // e_i^2
      } else {
        lhs_e = VectorQ::Zero(E1.n);  // distinct basis vectors annihilate
      }
      const VectorQ lhs = apply_map(psi, lhs_e);
      const VectorQ rhs = multiply(E2, pi, psi.row(j).transpose());
      for (int k = 0; k < E1.n; ++k)
        if (lhs(k) != rhs(k)) return false;
    }
  }
  return true;
}

}  // namespace evoalg
