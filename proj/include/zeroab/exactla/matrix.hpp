#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <vector>

#include "zeroab/error.hpp"
#include "zeroab/exactla/scalar.hpp"

namespace zeroab {

// Dense row-major matrix over an exact scalar type. Zero-sized dimensions are
// legal: a 0 x n matrix is the unique map out of (or into) the zero object.
template <class T> class Matrix {
public:
  using value_type = T;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    require(data_.size() == rows_ * cols_, ErrorKind::DimensionMismatch,
            "matrix entry count does not match shape");
  }
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto &row : rows) {
      require(row.size() == cols_, ErrorKind::DimensionMismatch, "ragged matrix literal");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n, const T &one) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] bool empty() const noexcept { return data_.empty(); }

  T &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T &operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  [[nodiscard]] std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  [[nodiscard]] std::span<const T> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  [[nodiscard]] std::vector<T> column(std::size_t j) const {
    std::vector<T> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }
  void set_column(std::size_t j, std::span<const T> values) {
    require(values.size() == rows_, ErrorKind::DimensionMismatch, "column length mismatch");
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = values[i];
  }

  [[nodiscard]] const std::vector<T> &data() const noexcept { return data_; }

  [[nodiscard]] bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const T &x) { return zeroab::is_zero(x); });
  }

  [[nodiscard]] Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  // Submatrix on the given row and column index lists, in the given order.
  [[nodiscard]] Matrix select(std::span<const std::size_t> rows,
                              std::span<const std::size_t> cols) const {
    Matrix s(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = (*this)(rows[i], cols[j]);
    return s;
  }

  [[nodiscard]] Matrix first_columns(std::size_t k) const {
    Matrix s(rows_, k);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < k; ++j) s(i, j) = (*this)(i, j);
    return s;
  }
  [[nodiscard]] Matrix first_rows(std::size_t k) const {
    Matrix s(k, cols_);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < cols_; ++j) s(i, j) = (*this)(i, j);
    return s;
  }

  friend Matrix operator*(const Matrix &a, const Matrix &b) {
    require(a.cols_ == b.rows_, ErrorKind::DimensionMismatch, "matrix product shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T &aik = a(i, k);
        if (zeroab::is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }
  friend Matrix operator+(Matrix a, const Matrix &b) {
    require(a.rows_ == b.rows_ && a.cols_ == b.cols_, ErrorKind::DimensionMismatch,
            "matrix sum shape mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix &b) {
    require(a.rows_ == b.rows_ && a.cols_ == b.cols_, ErrorKind::DimensionMismatch,
            "matrix difference shape mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }
  friend Matrix operator-(Matrix a) {
    for (auto &x : a.data_) x = -x;
    return a;
  }
  friend Matrix operator*(const T &s, Matrix a) {
    for (auto &x : a.data_) x = s * x;
    return a;
  }

  [[nodiscard]] std::vector<T> apply(std::span<const T> v) const {
    require(v.size() == cols_, ErrorKind::DimensionMismatch, "matrix-vector shape mismatch");
    std::vector<T> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (!zeroab::is_zero(v[j])) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  friend bool operator==(const Matrix &a, const Matrix &b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_columns(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

  friend std::ostream &operator<<(std::ostream &os, const Matrix &m) {
    os << '[';
    for (std::size_t i = 0; i < m.rows_; ++i) {
      os << (i ? ", [" : "[");
      for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? ", " : "") << m(i, j);
      os << ']';
    }
    return os << ']';
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

// Block matrices used when assembling direct sums.
template <class T> Matrix<T> hstack(const Matrix<T> &a, const Matrix<T> &b) {
  require(a.rows() == b.rows(), ErrorKind::DimensionMismatch, "hstack row mismatch");
  Matrix<T> c(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) c(i, a.cols() + j) = b(i, j);
  }
  return c;
}

template <class T> Matrix<T> vstack(const Matrix<T> &a, const Matrix<T> &b) {
  require(a.cols() == b.cols(), ErrorKind::DimensionMismatch, "vstack column mismatch");
  Matrix<T> c(a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) c(a.rows() + i, j) = b(i, j);
  return c;
}

template <class T> Matrix<T> from_columns(std::size_t rows, const std::vector<std::vector<T>> &cols) {
  Matrix<T> m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) m.set_column(j, cols[j]);
  return m;
}

template <class T, class U, class Fn> Matrix<U> map_entries(const Matrix<T> &m, Fn &&fn) {
  Matrix<U> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = fn(m(i, j));
  return out;
}

} // namespace zeroab
