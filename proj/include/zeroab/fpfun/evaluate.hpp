#pragma once

#include <algorithm>
#include <vector>

#include "zeroab/exactla/linalg.hpp"

#include "zeroab/fpfun/functor.hpp"

namespace zeroab {

// Value of F = mr(f) at an indecomposable: over Z, coker f; over the
// triangular algebra, at P_k it is coker of f restricted to the summands of
// label >= k (the spaces Hom(P_k, -)).
template <ExactScalar T> ModuleDescriptor evaluate_indecomposable(const FpFunctor<T> &F, std::size_t k) {
  const auto &f = F.presentation;
  const auto rows = f.target().positions_at_least(k);
  const auto cols = f.source().positions_at_least(k);
  const Matrix<T> fk = f.matrix().select(rows, cols);
  ModuleDescriptor out;
  if constexpr (FieldScalar<T>) {
    out.free_rank = rows.size() - field_rank(fk);
  } else {
    const SmithForm sf = smith(fk);
    out.free_rank = rows.size() - sf.invariant_factors.size();
    for (const auto &d : sf.invariant_factors)
      if (d != 1) out.torsion.push_back(d);
  }
  return out;
}

// F(X) for X = sum of P_k^{n_k}.
template <ExactScalar T>
ModuleDescriptor evaluate(const Category<T> &C, const FpFunctor<T> &F, const Object &x) {
  C.check(x);
  ModuleDescriptor out;
  for (std::size_t k = 1; k <= C.m(); ++k) {
    const ModuleDescriptor v = evaluate_indecomposable(F, k);
    for (std::size_t c = 0; c < x.multiplicity(k); ++c) out = direct_sum(out, v);
  }
  return out;
}

// Dimensions of F at P_1, ..., P_m (field case).
template <FieldScalar T> std::vector<std::size_t> vertex_dimensions(const Category<T> &C, const FpFunctor<T> &F) {
  std::vector<std::size_t> out;
  for (std::size_t k = 1; k <= C.m(); ++k) out.push_back(evaluate_indecomposable(F, k).free_rank);
  return out;
}

// F(P_k) as a quotient of Hom(P_k, P0).
template <FieldScalar T> QuotientSpace<T> evaluation_space(const FpFunctor<T> &F, std::size_t k) {
  const auto &f = F.presentation;
  const auto rows = f.target().positions_at_least(k);
  const auto cols = f.source().positions_at_least(k);
  return QuotientSpace<T>(rows.size(), f.matrix().select(rows, cols));
}

// The linear map alpha_{P_k} : F(P_k) -> G(P_k) in the bases of coset
// representatives of the two evaluation spaces.
template <FieldScalar T>
Matrix<T> evaluate_map(const Category<T> &C, const FpMorphism<T> &alpha, std::size_t k) {
  const QuotientSpace<T> src = evaluation_space(alpha.source, k);
  const QuotientSpace<T> tgt = evaluation_space(alpha.target, k);
  const Matrix<T> bk = alpha.b.matrix().select(alpha.target.generators().positions_at_least(k),
                                               alpha.source.generators().positions_at_least(k));
  Matrix<T> out(tgt.dimension(), src.dimension());
  for (std::size_t i = 0; i < src.dimension(); ++i) {
    const std::vector<T> v = src.representative(i, C.one());
    out.set_column(i, tgt.coordinates(bk.apply(v)));
  }
  return out;
}

// alpha at the generator P_1 + ... + P_m: block diagonal of the vertex maps.
template <FieldScalar T> Matrix<T> evaluate_map_at_generator(const Category<T> &C, const FpMorphism<T> &alpha) {
  std::vector<Matrix<T>> blocks;
  std::size_t rows = 0, cols = 0;
  for (std::size_t k = 1; k <= C.m(); ++k) {
    blocks.push_back(evaluate_map(C, alpha, k));
    rows += blocks.back().rows();
    cols += blocks.back().cols();
  }
  Matrix<T> out(rows, cols);
  std::size_t r0 = 0, c0 = 0;
  for (const auto &b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) out(r0 + i, c0 + j) = b(i, j);
    r0 += b.rows();
    c0 += b.cols();
  }
  return out;
}

// Exactness of 0 -> F_0 -> F_1 -> ... -> F_n -> 0 at the vertex P_k, by
// rank counting: at each F_i the incoming and outgoing ranks add up to
// dim F_i(P_k) and the composite through F_i vanishes.
struct ExactnessPoint {
  std::size_t vertex = 0;
  std::vector<std::size_t> dims;  // dim F_i(P_k)
  std::vector<std::size_t> ranks; // rank of each map of the chain
  bool exact = true;
};

template <FieldScalar T>
ExactnessPoint exactness_at(const Category<T> &C, const std::vector<FpMorphism<T>> &chain, std::size_t k) {
  require(!chain.empty(), ErrorKind::Validation, "exactness: empty chain");
  ExactnessPoint out;
  out.vertex = k;
  std::vector<Matrix<T>> maps;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (i > 0)
      require(chain[i - 1].target == chain[i].source, ErrorKind::DimensionMismatch, "exactness: chain not composable");
    maps.push_back(evaluate_map(C, chain[i], k));
    out.ranks.push_back(rank(maps.back()));
  }
  out.dims.push_back(maps.front().cols());
  for (const auto &m : maps) out.dims.push_back(m.rows());
  for (std::size_t i = 0; i < out.dims.size(); ++i) {
    const std::size_t in = i == 0 ? 0 : out.ranks[i - 1];
    const std::size_t outgoing = i == maps.size() ? 0 : out.ranks[i];
    if (in + outgoing != out.dims[i]) out.exact = false;
    if (i > 0 && i < maps.size() && !(maps[i] * maps[i - 1]).is_zero()) out.exact = false;
  }
  return out;
}

template <FieldScalar T>
std::vector<ExactnessPoint> exactness(const Category<T> &C, const std::vector<FpMorphism<T>> &chain) {
  std::vector<ExactnessPoint> out;
  for (std::size_t k = 1; k <= C.m(); ++k) out.push_back(exactness_at(C, chain, k));
  return out;
}

inline bool all_exact(const std::vector<ExactnessPoint> &points) {
  return std::all_of(points.begin(), points.end(), [](const ExactnessPoint &p) { return p.exact; });
}

} // namespace zeroab
