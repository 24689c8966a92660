#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "zeroab/exactla/linalg.hpp"
#include "zeroab/projcat/category.hpp"

namespace zeroab {

// Linear equations whose unknowns are morphisms, e.g. "find r with
// r f = x and g r = y". Each equation is sum_t L_t u_{k_t} R_t = rhs; the
// system is flattened to a matrix over the hom-space coordinates of the
// unknowns and solved exactly (integrally over Z).
template <ExactScalar T> class MorphismSystem {
public:
  struct Term {
    std::size_t unknown;
    std::optional<Morphism<T>> left;  // applied after the unknown
    std::optional<Morphism<T>> right; // applied before the unknown
  };

  explicit MorphismSystem(const Category<T> &C) : C_(&C) {}

  std::size_t add_unknown(const Object &x, const Object &y) {
    spaces_.push_back(C_->hom(x, y));
    offsets_.push_back(columns_);
    columns_ += spaces_.back().dimension();
    return spaces_.size() - 1;
  }

  void add_equation(const std::vector<Term> &terms, const Morphism<T> &rhs) {
    const std::size_t rows = rhs.target().size(), cols = rhs.source().size();
    std::vector<std::vector<T>> block(rows * cols, std::vector<T>(columns_));
    for (const auto &term : terms) {
      const HomSpace &h = spaces_.at(term.unknown);
      const Morphism<T> L = term.left ? *term.left : C_->identity(h.target());
      const Morphism<T> R = term.right ? *term.right : C_->identity(h.source());
      require(L.source() == h.target() && R.target() == h.source() && L.target() == rhs.target() &&
                  R.source() == rhs.source(),
              ErrorKind::DimensionMismatch, "equation term does not match the unknown or rhs");
      const auto &lm = L.matrix();
      const auto &rm = R.matrix();
      for (std::size_t k = 0; k < h.dimension(); ++k) {
        const auto [r, c] = h.positions()[k];
        for (std::size_t i = 0; i < rows; ++i) {
          if (is_zero(lm(i, r))) continue;
          for (std::size_t j = 0; j < cols; ++j)
            if (!is_zero(rm(c, j))) block[i * cols + j][offsets_[term.unknown] + k] += lm(i, r) * rm(c, j);
        }
      }
    }
    for (std::size_t e = 0; e < rows * cols; ++e) {
      rows_.push_back(std::move(block[e]));
      rhs_.push_back(rhs.matrix()(e / cols, e % cols));
    }
  }

  [[nodiscard]] Matrix<T> matrix() const {
    Matrix<T> a(rows_.size(), columns_);
    for (std::size_t i = 0; i < rows_.size(); ++i)
      for (std::size_t j = 0; j < rows_[i].size(); ++j) a(i, j) = rows_[i][j];
    return a;
  }

  [[nodiscard]] std::optional<std::vector<Morphism<T>>> solve() const {
    auto x = zeroab::solve(matrix(), rhs_);
    if (!x) return std::nullopt;
    return unpack(*x);
  }

  // Dimension (rank over the fraction field) of the homogeneous solution
  // space; zero means any solution is unique.
  [[nodiscard]] std::size_t nullity() const { return columns_ - rank(matrix()); }

  [[nodiscard]] std::vector<std::vector<Morphism<T>>> homogeneous_basis() const {
    const Matrix<T> k = kernel_basis(matrix(), C_->one());
    std::vector<std::vector<Morphism<T>>> out;
    for (std::size_t j = 0; j < k.cols(); ++j) out.push_back(unpack(k.column(j)));
    return out;
  }

  [[nodiscard]] std::vector<Morphism<T>> unpack(const std::vector<T> &x) const {
    std::vector<Morphism<T>> out;
    for (std::size_t u = 0; u < spaces_.size(); ++u) {
      std::vector<T> coords(x.begin() + offsets_[u], x.begin() + offsets_[u] + spaces_[u].dimension());
      out.push_back(spaces_[u].template element<T>(coords));
    }
    return out;
  }

  [[nodiscard]] std::size_t unknown_count() const { return spaces_.size(); }
  [[nodiscard]] const HomSpace &space(std::size_t u) const { return spaces_.at(u); }
  [[nodiscard]] std::size_t offset(std::size_t u) const { return offsets_.at(u); }
  [[nodiscard]] std::size_t columns() const { return columns_; }

private:
  const Category<T> *C_;
  std::vector<HomSpace> spaces_;
  std::vector<std::size_t> offsets_;
  std::size_t columns_ = 0;
  std::vector<std::vector<T>> rows_;
  std::vector<T> rhs_;
};

// Solve L u R = rhs for a single unknown u : X -> Y.
template <ExactScalar T>
std::optional<Morphism<T>> solve_for(const Category<T> &C, const Object &x, const Object &y,
                                     const std::optional<Morphism<T>> &left,
                                     const std::optional<Morphism<T>> &right, const Morphism<T> &rhs) {
  MorphismSystem<T> sys(C);
  const auto u = sys.add_unknown(x, y);
  sys.add_equation({{u, left, right}}, rhs);
  auto sol = sys.solve();
  if (!sol) return std::nullopt;
  return sol->front();
}

} // namespace zeroab
