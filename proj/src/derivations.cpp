#include "evoalg/derivations.hpp"

namespace evoalg {

namespace {

VectorQ flatten(const MatrixQ& m) {
  const int n = static_cast<int>(m.rows());
  VectorQ v(static_cast<Eigen::Index>(n) * m.cols());
  Eigen::Index k = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m.cols(); ++j) v(k++) = m(i, j);
  return v;
}

MatrixQ unflatten(const VectorQ& v, int n) {
  MatrixQ m(n, n);
  Eigen::Index k = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = v(k++);
  return m;
}

}  // namespace

MatrixSpace::MatrixSpace(int n, const std::vector<MatrixQ>& generators)
    : n_(n), flat_(n * n) {
  MatrixQ rows(static_cast<Eigen::Index>(generators.size()), n * n);
  for (size_t g = 0; g < generators.size(); ++g) {
    if (generators[g].rows() != n || generators[g].cols() != n)
      throw std::invalid_argument("generator dimension mismatch");
    rows.row(static_cast<Eigen::Index>(g)) = flatten(generators[g]).transpose();
  }
  flat_ = Subspace::span_of_rows(rows);
  generators_.reserve(static_cast<size_t>(flat_.dim()));
  for (int i = 0; i < flat_.dim(); ++i)
    generators_.push_back(unflatten(flat_.basis().row(i).transpose(), n));
}

bool MatrixSpace::contains(const MatrixQ& m) const {
  if (m.rows() != n_ || m.cols() != n_) return false;
  return flat_.contains(flatten(m));
}

bool MatrixSpace::operator==(const MatrixSpace& other) const {
  return n_ == other.n_ && flat_ == other.flat_;
}

std::set<IndexPair> index_set(const EvolutionAlgebra& E) {
  std::set<IndexPair> result;
  for (int i = 1; i <= E.n; ++i)
    for (int j = i + 2; j <= E.n - 1; ++j)
      if (E.A(i - 1, j - 1) != 0) result.insert({i, j});
  return result;
}

MatrixSpace derivations_solver(const EvolutionAlgebra& E) {
  const int n = E.n;
  // Unknown vector: d_ij at index i*n + j (0-based).
  // i < j pairs: d_ij a_jl + d_ji a_il = 0 for each l.
  // i = j: sum_k a_ik d_kl - 2 a_il d_ii = 0 for each l.
  std::vector<VectorQ> rows;
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      for (int l = 0; l < n; ++l) {
        VectorQ row = VectorQ::Zero(static_cast<Eigen::Index>(n) * n);
        if (i == j) {
          for (int k = 0; k < n; ++k) row(k * n + l) += E.A(i, k);
          row(i * n + i) -= 2 * E.A(i, l);
        } else {
          row(i * n + j) += E.A(j, l);
          row(j * n + i) += E.A(i, l);
        }
        rows.push_back(std::move(row));
      }
    }
  }
  MatrixQ system(static_cast<Eigen::Index>(rows.size()),
                 static_cast<Eigen::Index>(n) * n);
  for (size_t r = 0; r < rows.size(); ++r)
    system.row(static_cast<Eigen::Index>(r)) = rows[r].transpose();
  const Subspace null = nullspace(system);
  std::vector<MatrixQ> gens;
  for (int i = 0; i < null.dim(); ++i)
    gens.push_back(unflatten(null.basis().row(i).transpose(), n));
  return {n, gens};
}

MatrixSpace derivations_closed_form(const EvolutionAlgebra& E) {
  require_max_nilindex_form(E, "derivations_closed_form");
  const int n = E.n;
  MatrixQ beta_gen = MatrixQ::Zero(n, n);
  beta_gen(0, n - 1) = 1;
  if (!index_set(E).empty()) return {n, {beta_gen}};
  MatrixQ alpha_gen = MatrixQ::Zero(n, n);
  for (int i = 1; i <= n; ++i)
    alpha_gen(i - 1, i - 1) = Rational(pow2(static_cast<unsigned long>(i - 1)));
  // Column-n entries: the Leibniz relations force
  // d_{i+1,n} = (2^i - 2^{n-1}) a_{in} / a_{i,i+1} per unit of d_11.
  for (int i = 1; i <= n - 2; ++i) {
    const Rational coeff(pow2(static_cast<unsigned long>(i)) -
                         pow2(static_cast<unsigned long>(n - 1)));
    alpha_gen(i, n - 1) = coeff * E.A(i - 1, n - 1) / E.A(i - 1, i);
  }
  return {n, {alpha_gen, beta_gen}};
}

MatrixQ lie_bracket(const MatrixQ& d1, const MatrixQ& d2) {
  if (d1.rows() != d2.rows() || d1.cols() != d2.cols() ||
      d1.rows() != d1.cols())
    throw std::invalid_argument("dimension mismatch");
  return d1 * d2 - d2 * d1;
}

EvolutionAlgebra reconstruct_algebra(const DerivationSpec& spec,
                                     const std::vector<Rational>& subdiag) {
  const int n = spec.n();
  if (n < 3) throw std::invalid_argument("spec requires n >= 3");
  if (static_cast<int>(subdiag.size()) != n - 1)
    throw std::invalid_argument("subdiagonal must have n-1 entries");
  for (const auto& s : subdiag)
    if (s == 0) throw precondition_error("zero subdiagonal entry");
  MatrixQ A = MatrixQ::Zero(n, n);
  for (int i = 1; i <= n - 1; ++i) A(i - 1, i) = subdiag[static_cast<size_t>(i - 1)];
  for (int i = 1; i <= n - 2; ++i) {
    const Rational denom(pow2(static_cast<unsigned long>(i)) -
                         pow2(static_cast<unsigned long>(n - 1)));
    A(i - 1, n - 1) =
        subdiag[static_cast<size_t>(i - 1)] * spec.d[static_cast<size_t>(i - 1)] / denom;
  }
  return {n, std::move(A)};
}

std::vector<Rational> derivation_spec_of(const MatrixSpace& der) {
  if (der.dim() != 2)
    throw std::invalid_argument("expected a two-dimensional derivation space");
  const int n = der.n();
  // Recover the member with d_11 = 1 and zero beta slot: on the span
  // the coordinates (m(1,1), m(1,n)) are exactly (alpha, beta).
  const MatrixQ& g0 = der.generators()[0];
  const MatrixQ& g1 = der.generators()[1];
  MatrixQ coeffs(2, 3);
  coeffs << g0(0, 0), g1(0, 0), Rational(1),
            g0(0, n - 1), g1(0, n - 1), Rational(0);
  auto [r, rank] = rref(coeffs);
  if (rank != 2) throw std::invalid_argument("degenerate derivation space");
  const MatrixQ diag_gen = r(0, 2) * g0 + r(1, 2) * g1;
  std::vector<Rational> d;
  for (int i = 2; i <= n - 1; ++i) d.push_back(diag_gen(i - 1, n - 1));
  return d;
}

}  // namespace evoalg
