#pragma once

// Scalar-generic entry points: integer matrices go through the Hermite form,
// field matrices through reduced echelon form. Integer rank is the rank over
// the rationals; integer solving asks for an integral solution.

#include <cstddef>
#include <optional>
#include <vector>

#include "zeroab/exactla/field.hpp"
#include "zeroab/exactla/hermite.hpp"
#include "zeroab/exactla/matrix.hpp"
#include "zeroab/exactla/smith.hpp"

namespace zeroab {

template <ExactScalar T> std::size_t rank(const Matrix<T> &a) {
  if constexpr (FieldScalar<T>)
    return field_rank(a);
  else
    return int_rank(a);
}

template <ExactScalar T>
std::optional<std::vector<T>> solve(const Matrix<T> &a, const std::vector<T> &b) {
  if constexpr (FieldScalar<T>)
    return field_solve(a, b);
  else
    return int_solve(a, b);
}

// Columns form a basis of the kernel (a lattice basis over the integers).
template <ExactScalar T> Matrix<T> kernel_basis(const Matrix<T> &a, const T &one) {
  if constexpr (FieldScalar<T>)
    return field_kernel(a, one);
  else
    return int_kernel(a);
}

template <ExactScalar T> std::size_t nullity(const Matrix<T> &a) { return a.cols() - rank(a); }

// Solve A X = B column by column.
template <ExactScalar T>
std::optional<Matrix<T>> solve_columns(const Matrix<T> &a, const Matrix<T> &b) {
  require(a.rows() == b.rows(), ErrorKind::DimensionMismatch, "solve_columns: row mismatch");
  Matrix<T> x(a.cols(), b.cols());
  for (std::size_t j = 0; j < b.cols(); ++j) {
    auto col = solve(a, b.column(j));
    if (!col) return std::nullopt;
    x.set_column(j, *col);
  }
  return x;
}

} // namespace zeroab
