#include "evoalg/linalg.hpp"

#include <stdexcept>

namespace evoalg {

bool mat_equal(const MatrixQ& a, const MatrixQ& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

std::pair<MatrixQ, int> rref(const MatrixQ& m) {
  MatrixQ r = m;
  const Eigen::Index rows = r.rows(), cols = r.cols();
  Eigen::Index pivot_row = 0;
  for (Eigen::Index col = 0; col < cols && pivot_row < rows; ++col) {
    Eigen::Index sel = -1;
    for (Eigen::Index i = pivot_row; i < rows; ++i) {
      if (r(i, col) != 0) {
        sel = i;
        break;
      }
    }
    if (sel < 0) continue;
    if (sel != pivot_row) r.row(sel).swap(r.row(pivot_row));
    const Rational inv = 1 / r(pivot_row, col);
    for (Eigen::Index j = col; j < cols; ++j) r(pivot_row, j) *= inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == pivot_row || r(i, col) == 0) continue;
      const Rational f = r(i, col);
      for (Eigen::Index j = col; j < cols; ++j)
        r(i, j) -= f * r(pivot_row, j);
    }
    ++pivot_row;
  }
  return {std::move(r), static_cast<int>(pivot_row)};
}

int rank_of(const MatrixQ& m) { return rref(m).second; }

bool is_invertible(const MatrixQ& m) {
  return m.rows() == m.cols() && rank_of(m) == m.rows();
}

Rational determinant(const MatrixQ& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("non-square matrix");
  MatrixQ a = m;
  const Eigen::Index n = a.rows();
  Rational det(1);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index sel = -1;
    for (Eigen::Index i = col; i < n; ++i) {
      if (a(i, col) != 0) {
        sel = i;
        break;
      }
    }
    if (sel < 0) return Rational(0);
    if (sel != col) {
      a.row(sel).swap(a.row(col));
      det = -det;
    }
    det *= a(col, col);
    const Rational inv = 1 / a(col, col);
    for (Eigen::Index i = col + 1; i < n; ++i) {
      if (a(i, col) == 0) continue;
      const Rational f = a(i, col) * inv;
      for (Eigen::Index j = col; j < n; ++j) a(i, j) -= f * a(col, j);
    }
  }
  return det;
}

Subspace::Subspace(int ambient_dim)
    : ambient_dim_(ambient_dim), basis_(0, ambient_dim) {
  if (ambient_dim < 1) throw std::invalid_argument("ambient_dim < 1");
}

Subspace Subspace::zero(int ambient_dim) { return Subspace(ambient_dim); }

Subspace Subspace::full(int ambient_dim) {
  Subspace s(ambient_dim);
  s.basis_ = MatrixQ::Identity(ambient_dim, ambient_dim);
  return s;
}

Subspace Subspace::span_of_rows(const MatrixQ& rows) {
  Subspace s(static_cast<int>(rows.cols()));
  auto [r, rank] = rref(rows);
  s.basis_ = r.topRows(rank);
  return s;
}

bool Subspace::contains(const VectorQ& v) const {
  if (v.size() != ambient_dim_)
    throw std::invalid_argument("ambient dimension mismatch");
  VectorQ rem = v;
  for (Eigen::Index i = 0; i < basis_.rows(); ++i) {
    // Locate the pivot of basis row i.
    Eigen::Index p = 0;
    while (p < ambient_dim_ && basis_(i, p) == 0) ++p;
    if (p == ambient_dim_) continue;
    if (rem(p) != 0) rem -= rem(p) * basis_.row(i).transpose();
  }
  for (Eigen::Index j = 0; j < rem.size(); ++j)
    if (rem(j) != 0) return false;
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_dim_ != ambient_dim_)
    throw std::invalid_argument("ambient dimension mismatch");
  for (Eigen::Index i = 0; i < other.basis_.rows(); ++i)
    if (!contains(VectorQ(other.basis_.row(i).transpose()))) return false;
  return true;
}

bool Subspace::operator==(const Subspace& other) const {
  return ambient_dim_ == other.ambient_dim_ &&
         mat_equal(basis_, other.basis_);
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("ambient dimension mismatch");
  MatrixQ stacked(a.dim() + b.dim(), a.ambient_dim());
  stacked << a.basis(), b.basis();
  return Subspace::span_of_rows(stacked);
}

Subspace nullspace(const MatrixQ& m) {
  const Eigen::Index cols = m.cols();
  auto [r, rank] = rref(m);
  std::vector<Eigen::Index> pivot_col;
  std::vector<bool> is_pivot(cols, false);
  for (int i = 0; i < rank; ++i) {
    Eigen::Index p = 0;
    while (p < cols && r(i, p) == 0) ++p;
    pivot_col.push_back(p);
    is_pivot[static_cast<size_t>(p)] = true;
  }
  MatrixQ basis(cols - rank, cols);
  basis.setZero();
  Eigen::Index row = 0;
  for (Eigen::Index free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[static_cast<size_t>(free_col)]) continue;
    basis(row, free_col) = 1;
    for (int i = 0; i < rank; ++i)
      basis(row, pivot_col[static_cast<size_t>(i)]) = -r(i, free_col);
    ++row;
  }
  return Subspace::span_of_rows(basis);
}

VectorQ apply_map(const MatrixQ& m, const VectorQ& v) {
  if (m.rows() != v.size())
    throw std::invalid_argument("dimension mismatch");
  return m.transpose() * v;
}

}  // namespace evoalg
