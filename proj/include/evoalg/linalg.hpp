// Dense exact matrices and echelon-form subspace arithmetic. Eigen
// supplies the containers and expressions; elimination is done here so
// every result is deterministic and exact.
#pragma once

#include <utility>
#include <vector>

#include "evoalg/rational.hpp"

namespace evoalg {

using MatrixQ = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using VectorQ = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

bool mat_equal(const MatrixQ& a, const MatrixQ& b);

/// Reduced row-echelon form and rank, exact Gauss-Jordan.
std::pair<MatrixQ, int> rref(const MatrixQ& m);

int rank_of(const MatrixQ& m);

bool is_invertible(const MatrixQ& m);

Rational determinant(const MatrixQ& m);

/// A linear subspace of Q^n held as a reduced-echelon row basis.
/// Equality of subspaces is structural equality of the bases.
class Subspace {
 public:
  explicit Subspace(int ambient_dim);  // the zero subspace

  static Subspace zero(int ambient_dim);
  static Subspace full(int ambient_dim);
  /// Span of the rows of `rows` (need not be independent).
  static Subspace span_of_rows(const MatrixQ& rows);

  int ambient_dim() const { return ambient_dim_; }
  int dim() const { return static_cast<int>(basis_.rows()); }
  bool is_zero() const { return dim() == 0; }
  /// Echelon basis, one vector per row.
  const MatrixQ& basis() const { return basis_; }

  bool contains(const VectorQ& v) const;
  bool contains(const Subspace& other) const;

  bool operator==(const Subspace& other) const;
  bool operator!=(const Subspace& other) const { return !(*this == other); }

 private:
  int ambient_dim_;
  MatrixQ basis_;
};

/// Echelon basis of span(a ∪ b). Throws on ambient mismatch.
Subspace subspace_sum(const Subspace& a, const Subspace& b);

/// Basis of {x : m x = 0}, echelon-normalized.
Subspace nullspace(const MatrixQ& m);

/// Action of a map stored in row convention: row i of m holds the image
/// of the i-th basis vector, so coordinates transform by m^T.
VectorQ apply_map(const MatrixQ& m, const VectorQ& v);

}  // namespace evoalg
