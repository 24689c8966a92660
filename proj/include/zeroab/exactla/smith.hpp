#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "zeroab/exactla/matrix.hpp"

namespace zeroab {

// L * A * R == D with L, R unimodular, D diagonal and the nonzero diagonal
// entries positive with each dividing the next.
struct SmithForm {
  Matrix<Integer> D;
  Matrix<Integer> L;
  Matrix<Integer> R;
  std::vector<Integer> invariant_factors;
};

inline SmithForm smith(const Matrix<Integer> &a) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  Matrix<Integer> d = a;
  Matrix<Integer> l = Matrix<Integer>::identity(rows, Integer(1));
  Matrix<Integer> r = Matrix<Integer>::identity(cols, Integer(1));

  auto row_axpy = [&](std::size_t target, std::size_t src, const Integer &k) {
    for (std::size_t j = 0; j < cols; ++j) d(target, j) += k * d(src, j);
    for (std::size_t j = 0; j < rows; ++j) l(target, j) += k * l(src, j);
  };
  auto col_axpy = [&](std::size_t target, std::size_t src, const Integer &k) {
    for (std::size_t i = 0; i < rows; ++i) d(i, target) += k * d(i, src);
    for (std::size_t i = 0; i < cols; ++i) r(i, target) += k * r(i, src);
  };

  const std::size_t steps = std::min(rows, cols);
  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      std::optional<std::pair<std::size_t, std::size_t>> best;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (d(i, j) != 0 && (!best || abs(d(i, j)) < abs(d(best->first, best->second))))
            best = std::pair{i, j};
      if (!best) break;
      d.swap_rows(t, best->first);
      l.swap_rows(t, best->first);
      d.swap_columns(t, best->second);
      r.swap_columns(t, best->second);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (d(i, t) == 0) continue;
        const Integer q = d(i, t) / d(t, t);
        row_axpy(i, t, -q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (d(t, j) == 0) continue;
        const Integer q = d(t, j) / d(t, t);
        col_axpy(j, t, -q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      std::optional<std::size_t> offending;
      for (std::size_t i = t + 1; i < rows && !offending; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            offending = i;
            break;
          }
      if (!offending) break;
      row_axpy(t, *offending, Integer(1));
    }
    if (d(t, t) < 0) {
      for (std::size_t j = 0; j < cols; ++j) d(t, j) = -d(t, j);
      for (std::size_t j = 0; j < rows; ++j) l(t, j) = -l(t, j);
    }
  }

  SmithForm out{std::move(d), std::move(l), std::move(r), {}};
  for (std::size_t t = 0; t < steps; ++t)
    if (out.D(t, t) != 0) out.invariant_factors.push_back(out.D(t, t));
  return out;
}

} // namespace zeroab
