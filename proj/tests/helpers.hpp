// Shared random generators for the test corpus. Everything is seeded
// explicitly so failures reproduce.
#pragma once

#include <random>
#include <vector>

#include "evoalg/local_maps.hpp"

namespace testutil {

using namespace evoalg;

inline Rational rnd_entry(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-9, 9);
  return Rational(d(rng));
}

inline Rational rnd_nonzero(std::mt19937_64& rng) {
  for (;;) {
    Rational r = rnd_entry(rng);
    if (r != 0) return r;
  }
}

// Strictly upper triangular, nonzero superdiagonal: the maximal-nilindex
// canonical shape.
inline EvolutionAlgebra random_max_form(int n, std::mt19937_64& rng) {
  MatrixQ A = MatrixQ::Zero(n, n);
  for (int i = 0; i + 1 < n; ++i) A(i, i + 1) = rnd_nonzero(rng);
  for (int i = 0; i < n; ++i)
    for (int j = i + 2; j < n; ++j) A(i, j) = rnd_entry(rng);
  return EvolutionAlgebra(n, A);
}

// Rows carry only columns i+1 and n (a_{i,i+1} all nonzero).
inline EvolutionAlgebra random_two_entry_row(int n, std::mt19937_64& rng) {
  MatrixQ A = MatrixQ::Zero(n, n);
  for (int i = 0; i + 1 < n; ++i) A(i, i + 1) = rnd_nonzero(rng);
  for (int i = 0; i + 2 < n; ++i) A(i, n - 1) = rnd_entry(rng);
  return EvolutionAlgebra(n, A);
}

// Two-entry-row shape with at least one vanishing subdiagonal entry.
inline EvolutionAlgebra random_degenerate_two_entry_row(int n,
                                                        std::mt19937_64& rng) {
  MatrixQ A = MatrixQ::Zero(n, n);
  std::uniform_int_distribution<int> pick(0, n - 2);
  const int zero_at = pick(rng);
  for (int i = 0; i + 1 < n; ++i)
    A(i, i + 1) = (i == zero_at) ? Rational(0) : rnd_nonzero(rng);
  for (int i = 0; i + 2 < n; ++i) A(i, n - 1) = rnd_entry(rng);
  return EvolutionAlgebra(n, A);
}

inline MatrixQ random_matrix(int rows, int cols, std::mt19937_64& rng) {
  MatrixQ m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = rnd_entry(rng);
  return m;
}

inline VectorQ random_vector(int n, std::mt19937_64& rng) {
  VectorQ v(n);
  for (int i = 0; i < n; ++i) v(i) = rnd_entry(rng);
  return v;
}

inline VectorQ unit(int n, int i) {
  VectorQ e = VectorQ::Zero(n);
  e(i) = 1;
  return e;
}

}  // namespace testutil
