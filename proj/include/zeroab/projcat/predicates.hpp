#pragma once

#include <optional>

#include "zeroab/projcat/equations.hpp"

namespace zeroab {

// Injectivity of the underlying module map: at every vertex k the columns
// and rows of summands with label >= k form a matrix of full column rank.
// Over the integers this is full column rank of the whole matrix.
template <ExactScalar T> bool is_mono(const Morphism<T> &f) {
  const std::size_t m = f.source().m();
  for (std::size_t k = 1; k <= m; ++k) {
    const auto rows = f.target().positions_at_least(k);
    const auto cols = f.source().positions_at_least(k);
    if (rank(f.matrix().select(rows, cols)) != cols.size()) return false;
  }
  return true;
}

template <ExactScalar T> bool is_epi(const Morphism<T> &f) { return is_mono(dual(f)); }

template <ExactScalar T> bool is_bimorphism(const Morphism<T> &f) { return is_mono(f) && is_epi(f); }

// r with r f = 1
template <ExactScalar T>
std::optional<Morphism<T>> retraction(const Category<T> &C, const Morphism<T> &f) {
  return solve_for<T>(C, f.target(), f.source(), std::nullopt, f, C.identity(f.source()));
}

// s with f s = 1
template <ExactScalar T>
std::optional<Morphism<T>> section(const Category<T> &C, const Morphism<T> &f) {
  return solve_for<T>(C, f.target(), f.source(), f, std::nullopt, C.identity(f.target()));
}

template <ExactScalar T> bool is_split_mono(const Category<T> &C, const Morphism<T> &f) {
  return retraction(C, f).has_value();
}
template <ExactScalar T> bool is_split_epi(const Category<T> &C, const Morphism<T> &f) {
  return section(C, f).has_value();
}
template <ExactScalar T> bool is_iso(const Category<T> &C, const Morphism<T> &f) {
  return f.source().size() == f.target().size() && is_split_mono(C, f) && is_split_epi(C, f);
}
// A split bimorphism is the same thing as an isomorphism.
template <ExactScalar T> bool is_split_bimorphism(const Category<T> &C, const Morphism<T> &f) {
  return is_iso(C, f);
}

// Two-sided inverse, if any.
template <ExactScalar T>
std::optional<Morphism<T>> inverse(const Category<T> &C, const Morphism<T> &f) {
  if (f.source().size() != f.target().size()) return std::nullopt;
  auto r = retraction(C, f);
  if (!r || !(f * *r == C.identity(f.target()))) return std::nullopt;
  return r;
}

} // namespace zeroab
