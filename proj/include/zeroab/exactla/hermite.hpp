#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "zeroab/exactla/matrix.hpp"

namespace zeroab {

// Column-style Hermite normal form of the column lattice of A.
//
// Conventions: the first `rank` columns of H are nonzero and the rest are
// zero. Nonzero column j has its last nonzero entry (the pivot) in row
// pivot_rows[j], pivot rows strictly increase, pivots are positive, and in
// every pivot row the entries of later columns lie in [0, pivot).
// A * U == H and U * U_inverse == identity.
struct HermiteForm {
  Matrix<Integer> H;
  Matrix<Integer> U;
  Matrix<Integer> U_inverse;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_rows;
};

namespace detail {

// Records column operations on H and U together with the inverse row
// operations on U_inverse.
class ColumnReducer {
public:
  explicit ColumnReducer(const Matrix<Integer> &a)
      : H(a), U(Matrix<Integer>::identity(a.cols(), Integer(1))),
        Uinv(Matrix<Integer>::identity(a.cols(), Integer(1))) {}

  // col b += k * col a
  void add_column(std::size_t b, std::size_t a, const Integer &k) {
    if (k == 0) return;
    for (std::size_t i = 0; i < H.rows(); ++i) H(i, b) += k * H(i, a);
    for (std::size_t i = 0; i < U.rows(); ++i) U(i, b) += k * U(i, a);
    for (std::size_t j = 0; j < Uinv.cols(); ++j) Uinv(a, j) -= k * Uinv(b, j);
  }

  void negate_column(std::size_t a) {
    for (std::size_t i = 0; i < H.rows(); ++i) H(i, a) = -H(i, a);
    for (std::size_t i = 0; i < U.rows(); ++i) U(i, a) = -U(i, a);
    for (std::size_t j = 0; j < Uinv.cols(); ++j) Uinv(a, j) = -Uinv(a, j);
  }

  // Unimodular 2x2 transform clearing H(row, b) into H(row, a).
  void combine(std::size_t row, std::size_t a, std::size_t b) {
    const Integer x = H(row, a);
    const Integer y = H(row, b);
    Integer g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    const Integer xg = x / g;
    const Integer yg = y / g;
    for (std::size_t i = 0; i < H.rows(); ++i) {
      const Integer ha = H(i, a), hb = H(i, b);
      H(i, a) = s * ha + t * hb;
      H(i, b) = xg * hb - yg * ha;
    }
    for (std::size_t i = 0; i < U.rows(); ++i) {
      const Integer ua = U(i, a), ub = U(i, b);
      U(i, a) = s * ua + t * ub;
      U(i, b) = xg * ub - yg * ua;
    }
    for (std::size_t j = 0; j < Uinv.cols(); ++j) {
      const Integer va = Uinv(a, j), vb = Uinv(b, j);
      Uinv(a, j) = xg * va + yg * vb;
      Uinv(b, j) = s * vb - t * va;
    }
  }

  void permute(const std::vector<std::size_t> &order) {
    Matrix<Integer> h(H.rows(), H.cols()), u(U.rows(), U.cols()), v(Uinv.rows(), Uinv.cols());
    for (std::size_t k = 0; k < order.size(); ++k) {
      for (std::size_t i = 0; i < H.rows(); ++i) h(i, k) = H(i, order[k]);
      for (std::size_t i = 0; i < U.rows(); ++i) u(i, k) = U(i, order[k]);
      for (std::size_t j = 0; j < Uinv.cols(); ++j) v(k, j) = Uinv(order[k], j);
    }
    H = std::move(h);
    U = std::move(u);
    Uinv = std::move(v);
  }

  Matrix<Integer> H, U, Uinv;
};

inline Integer floor_div(const Integer &a, const Integer &b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

} // namespace detail

inline HermiteForm hermite(const Matrix<Integer> &a) {
  detail::ColumnReducer red(a);
  const std::size_t n = a.rows();
  const std::size_t c = a.cols();
  std::vector<bool> active(c, true);
  std::vector<std::pair<std::size_t, std::size_t>> pivots; // (row, column)

  for (std::size_t ii = n; ii-- > 0;) {
    std::vector<std::size_t> nz;
    for (std::size_t j = 0; j < c; ++j)
      if (active[j] && red.H(ii, j) != 0) nz.push_back(j);
    if (nz.empty()) continue;
    const std::size_t p = nz.front();
    for (std::size_t k = 1; k < nz.size(); ++k) red.combine(ii, p, nz[k]);
    if (red.H(ii, p) < 0) red.negate_column(p);
    active[p] = false;
    pivots.emplace_back(ii, p);
  }

  std::reverse(pivots.begin(), pivots.end());
  std::vector<std::size_t> order;
  HermiteForm out;
  for (auto [row, col] : pivots) {
    order.push_back(col);
    out.pivot_rows.push_back(row);
  }
  for (std::size_t j = 0; j < c; ++j)
    if (active[j]) order.push_back(j);
  red.permute(order);
  out.rank = pivots.size();

  for (std::size_t jj = 1; jj < out.rank; ++jj)
    for (std::size_t j = jj; j-- > 0;) {
      const std::size_t row = out.pivot_rows[j];
      const Integer q = detail::floor_div(red.H(row, jj), red.H(row, j));
      red.add_column(jj, j, -q);
    }

  out.H = std::move(red.H);
  out.U = std::move(red.U);
  out.U_inverse = std::move(red.Uinv);
  return out;
}

inline std::size_t int_rank(const Matrix<Integer> &a) { return hermite(a).rank; }

// One integer solution x of A x = b, or nullopt when none exists.
inline std::optional<std::vector<Integer>> int_solve(const Matrix<Integer> &a,
                                                     const std::vector<Integer> &b) {
  require(b.size() == a.rows(), ErrorKind::DimensionMismatch, "int_solve: rhs length mismatch");
  const HermiteForm hf = hermite(a);
  std::vector<Integer> residual = b;
  std::vector<Integer> y(hf.rank);
  for (std::size_t j = hf.rank; j-- > 0;) {
    const std::size_t row = hf.pivot_rows[j];
    const Integer &piv = hf.H(row, j);
    if (!mpz_divisible_p(residual[row].get_mpz_t(), piv.get_mpz_t())) return std::nullopt;
    y[j] = residual[row] / piv;
    for (std::size_t i = 0; i <= row; ++i) residual[i] -= y[j] * hf.H(i, j);
  }
  for (const auto &r : residual)
    if (r != 0) return std::nullopt;
  std::vector<Integer> x(a.cols());
  for (std::size_t i = 0; i < a.cols(); ++i)
    for (std::size_t j = 0; j < hf.rank; ++j) x[i] += hf.U(i, j) * y[j];
  return x;
}

// Columns form a basis of the integer kernel lattice {x : A x = 0}.
inline Matrix<Integer> int_kernel(const Matrix<Integer> &a) {
  const HermiteForm hf = hermite(a);
  Matrix<Integer> k(a.cols(), a.cols() - hf.rank);
  for (std::size_t i = 0; i < a.cols(); ++i)
    for (std::size_t j = hf.rank; j < a.cols(); ++j) k(i, j - hf.rank) = hf.U(i, j);
  return k;
}

// Determinant by fraction-free (Bareiss) elimination.
inline Integer determinant(Matrix<Integer> a) {
  require(a.rows() == a.cols(), ErrorKind::DimensionMismatch, "determinant of non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return Integer(1);
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t s = k + 1;
      while (s < n && a(s, k) == 0) ++s;
      if (s == n) return Integer(0);
      a.swap_rows(k, s);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = v;
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

} // namespace zeroab
