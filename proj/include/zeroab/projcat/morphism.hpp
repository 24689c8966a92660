#pragma once

#include <cstddef>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

#include "zeroab/exactla/matrix.hpp"
#include "zeroab/projcat/object.hpp"

namespace zeroab {

// Hom(P_i, P_j) is one-dimensional when j >= i and zero otherwise, so the
// entry in row r (a summand P_j of the target) and column c (a summand P_i
// of the source) may be nonzero only when label(r) >= label(c). Over the
// integers every label is 1 and this is no constraint.
template <ExactScalar T> class Morphism {
public:
  Morphism() = default;
  Morphism(Object source, Object target, Matrix<T> matrix)
      : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
    require(source_.m() == target_.m(), ErrorKind::DimensionMismatch,
            "source and target belong to different categories");
    require(matrix_.rows() == target_.size() && matrix_.cols() == source_.size(),
            ErrorKind::DimensionMismatch, "matrix shape does not match source/target");
    const auto rl = target_.labels();
    const auto cl = source_.labels();
    for (std::size_t r = 0; r < rl.size(); ++r)
      for (std::size_t c = 0; c < cl.size(); ++c)
        if (rl[r] < cl[c] && !zeroab::is_zero(matrix_(r, c)))
          fail(ErrorKind::Validation, "entry violates the support condition Hom(P_i,P_j)=0 for j<i");
  }

  [[nodiscard]] const Object &source() const noexcept { return source_; }
  [[nodiscard]] const Object &target() const noexcept { return target_; }
  [[nodiscard]] const Matrix<T> &matrix() const noexcept { return matrix_; }
  [[nodiscard]] bool is_zero() const { return matrix_.is_zero(); }

  friend Morphism operator*(const Morphism &g, const Morphism &f) {
    require(f.target_ == g.source_, ErrorKind::DimensionMismatch,
            "composition: target of f differs from source of g");
    return Morphism(f.source_, g.target_, g.matrix_ * f.matrix_, unchecked{});
  }
  friend Morphism operator+(const Morphism &a, const Morphism &b) {
    a.require_parallel(b);
    return Morphism(a.source_, a.target_, a.matrix_ + b.matrix_, unchecked{});
  }
  friend Morphism operator-(const Morphism &a, const Morphism &b) {
    a.require_parallel(b);
    return Morphism(a.source_, a.target_, a.matrix_ - b.matrix_, unchecked{});
  }
  friend Morphism operator-(const Morphism &a) {
    return Morphism(a.source_, a.target_, -a.matrix_, unchecked{});
  }
  friend Morphism operator*(const T &s, const Morphism &a) {
    return Morphism(a.source_, a.target_, s * a.matrix_, unchecked{});
  }
  friend bool operator==(const Morphism &a, const Morphism &b) {
    return a.source_ == b.source_ && a.target_ == b.target_ && a.matrix_ == b.matrix_;
  }
  friend std::ostream &operator<<(std::ostream &os, const Morphism &f) {
    return os << f.source_ << " -> " << f.target_ << ' ' << f.matrix_;
  }

private:
  struct unchecked {};
  Morphism(Object s, Object t, Matrix<T> m, unchecked)
      : source_(std::move(s)), target_(std::move(t)), matrix_(std::move(m)) {}

  void require_parallel(const Morphism &b) const {
    require(source_ == b.source_ && target_ == b.target_, ErrorKind::DimensionMismatch,
            "morphisms are not parallel");
  }

  Object source_;
  Object target_;
  Matrix<T> matrix_;
};

template <ExactScalar T> Morphism<T> compose(const Morphism<T> &g, const Morphism<T> &f) {
  return g * f;
}

// Hom(X, Y) as a coordinate space: one coordinate per admissible matrix
// position, in row-major order.
class HomSpace {
public:
  HomSpace(Object x, Object y) : x_(std::move(x)), y_(std::move(y)) {
    const auto rl = y_.labels();
    const auto cl = x_.labels();
    for (std::size_t r = 0; r < rl.size(); ++r)
      for (std::size_t c = 0; c < cl.size(); ++c)
        if (rl[r] >= cl[c]) positions_.emplace_back(r, c);
  }

  [[nodiscard]] const Object &source() const noexcept { return x_; }
  [[nodiscard]] const Object &target() const noexcept { return y_; }
  [[nodiscard]] std::size_t dimension() const noexcept { return positions_.size(); }
  [[nodiscard]] const std::vector<std::pair<std::size_t, std::size_t>> &positions() const noexcept {
    return positions_;
  }

  template <ExactScalar T> [[nodiscard]] std::vector<T> coordinates(const Morphism<T> &f) const {
    require(f.source() == x_ && f.target() == y_, ErrorKind::DimensionMismatch,
            "morphism does not belong to this hom space");
    std::vector<T> v(positions_.size());
    for (std::size_t k = 0; k < positions_.size(); ++k)
      v[k] = f.matrix()(positions_[k].first, positions_[k].second);
    return v;
  }

  template <ExactScalar T> [[nodiscard]] Morphism<T> element(std::span<const T> coords) const {
    require(coords.size() == positions_.size(), ErrorKind::DimensionMismatch,
            "coordinate vector has wrong length");
    Matrix<T> m(y_.size(), x_.size());
    for (std::size_t k = 0; k < positions_.size(); ++k)
      m(positions_[k].first, positions_[k].second) = coords[k];
    return Morphism<T>(x_, y_, std::move(m));
  }

  template <ExactScalar T> [[nodiscard]] Morphism<T> basis_element(std::size_t k, const T &one) const {
    std::vector<T> v(positions_.size());
    v.at(k) = one;
    return element<T>(v);
  }

  // Matrix (columns = images of the basis) of a linear map Hom(X,Y) -> target.
  template <ExactScalar T, class Fn>
  [[nodiscard]] Matrix<T> matrix_of(const HomSpace &target, const T &one, Fn &&fn) const {
    Matrix<T> out(target.dimension(), dimension());
    for (std::size_t k = 0; k < dimension(); ++k)
      out.set_column(k, target.coordinates(fn(basis_element(k, one))));
    return out;
  }

private:
  Object x_;
  Object y_;
  std::vector<std::pair<std::size_t, std::size_t>> positions_;
};

} // namespace zeroab
