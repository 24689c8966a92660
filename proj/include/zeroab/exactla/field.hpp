#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "zeroab/exactla/matrix.hpp"

namespace zeroab {

template <FieldScalar T> struct Echelon {
  Matrix<T> R;                      // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

// Gauss-Jordan elimination scanning columns left to right; the first row with
// a nonzero entry in the current column becomes the pivot row.
template <FieldScalar T> Echelon<T> rref(Matrix<T> a) {
  Echelon<T> out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && is_zero(a(p, c))) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(r, p);
    const T inv = inverse(a(r, c));
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) = a(r, j) * inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || is_zero(a(i, c))) continue;
      const T factor = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= factor * a(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.R = std::move(a);
  return out;
}

template <FieldScalar T> std::size_t field_rank(const Matrix<T> &a) {
  return rref(a).pivots.size();
}

// Kernel basis as columns: one vector per free column, with a one in that
// free position and zeros in the other free positions.
template <FieldScalar T> Matrix<T> field_kernel(const Matrix<T> &a, const T &one) {
  const Echelon<T> e = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::vector<T>> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<T> v(a.cols());
    v[f] = one;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.R(i, f);
    basis.push_back(std::move(v));
  }
  return from_columns(a.cols(), basis);
}

template <FieldScalar T>
std::optional<std::vector<T>> field_solve(const Matrix<T> &a, const std::vector<T> &b) {
  require(b.size() == a.rows(), ErrorKind::DimensionMismatch, "field_solve: rhs length mismatch");
  Matrix<T> aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const Echelon<T> e = rref(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
  std::vector<T> x(a.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = e.R(i, a.cols());
  return x;
}

template <FieldScalar T> std::optional<Matrix<T>> field_inverse(const Matrix<T> &a, const T &one) {
  require(a.rows() == a.cols(), ErrorKind::DimensionMismatch, "inverse of non-square matrix");
  const std::size_t n = a.rows();
  const Echelon<T> e = rref(hstack(a, Matrix<T>::identity(n, one)));
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1)) return std::nullopt;
  Matrix<T> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.R(i, n + j);
  return inv;
}

// The quotient V / W of V = T^n by the span W of some generators. Coset
// representatives are spanned by the standard basis vectors at the non-pivot
// coordinates of W's reduced echelon basis (leftmost pivots), which makes
// the chosen complement canonical.
template <FieldScalar T> class QuotientSpace {
public:
  QuotientSpace() = default;
  // generators: columns span W
  QuotientSpace(std::size_t ambient, const Matrix<T> &generators) : ambient_(ambient) {
    require(generators.rows() == ambient, ErrorKind::DimensionMismatch,
            "quotient generators have wrong length");
    Echelon<T> e = rref(generators.transpose());
    basis_ = e.R.first_rows(e.pivots.size());
    pivots_ = std::move(e.pivots);
    std::vector<bool> is_pivot(ambient, false);
    for (auto p : pivots_) is_pivot[p] = true;
    for (std::size_t i = 0; i < ambient; ++i)
      if (!is_pivot[i]) free_.push_back(i);
  }

  [[nodiscard]] std::size_t ambient_dimension() const noexcept { return ambient_; }
  [[nodiscard]] std::size_t dimension() const noexcept { return free_.size(); }
  [[nodiscard]] std::size_t subspace_dimension() const noexcept { return pivots_.size(); }
  [[nodiscard]] const std::vector<std::size_t> &free_coordinates() const noexcept { return free_; }

  // Canonical representative of v + W.
  [[nodiscard]] std::vector<T> normal_form(std::vector<T> v) const {
    require(v.size() == ambient_, ErrorKind::DimensionMismatch, "quotient: vector length mismatch");
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
      const T c = v[pivots_[i]];
      if (is_zero(c)) continue;
      for (std::size_t j = 0; j < ambient_; ++j) v[j] -= c * basis_(i, j);
    }
    return v;
  }

  // Coordinates of v + W in the basis of coset representatives.
  [[nodiscard]] std::vector<T> coordinates(const std::vector<T> &v) const {
    const std::vector<T> nf = normal_form(v);
    std::vector<T> out(free_.size());
    for (std::size_t k = 0; k < free_.size(); ++k) out[k] = nf[free_[k]];
    return out;
  }

  [[nodiscard]] bool contains(const std::vector<T> &v) const {
    const std::vector<T> nf = normal_form(v);
    for (const auto &x : nf)
      if (!is_zero(x)) return false;
    return true;
  }

  // k-th coset representative as an ambient vector.
  [[nodiscard]] std::vector<T> representative(std::size_t k, const T &one) const {
    std::vector<T> v(ambient_);
    v[free_.at(k)] = one;
    return v;
  }

private:
  std::size_t ambient_ = 0;
  Matrix<T> basis_;
  std::vector<std::size_t> pivots_;
  std::vector<std::size_t> free_;
};

} // namespace zeroab
