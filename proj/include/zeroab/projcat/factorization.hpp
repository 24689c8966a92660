#pragma once

#include <algorithm>
#include <optional>
#include <variant>
#include <vector>

#include "zeroab/projcat/predicates.hpp"

namespace zeroab {

// f = g h with h : X -> Z split epi (h h_section = 1) and g : Z -> Y mono.
template <ExactScalar T> struct ZeroKernel {
  Morphism<T> h;
  Morphism<T> h_section;
  Morphism<T> g;
};

// f = r s with s : X -> Z epi and r : Z -> Y split mono (r_retraction r = 1).
template <ExactScalar T> struct ZeroCokernel {
  Morphism<T> s;
  Morphism<T> r;
  Morphism<T> r_retraction;
};

template <ExactScalar T> using FactorizationWitness = std::variant<ZeroKernel<T>, ZeroCokernel<T>>;

namespace detail {

// Over Z the image lattice of a map between free groups is free; the first
// rank columns of the Hermite form are its canonical basis.
inline ZeroKernel<Integer> zero_kernel_integral(const Category<Integer> &C, const Morphism<Integer> &f) {
  const HermiteForm hf = hermite(f.matrix());
  const std::size_t r = hf.rank;
  const Object z = Object::free(r);
  Matrix<Integer> g = hf.H.first_columns(r);
  Matrix<Integer> h = hf.U_inverse.first_rows(r);
  Matrix<Integer> hs = hf.U.first_columns(r);
  return {C.morphism(f.source(), z, std::move(h)), C.morphism(z, f.source(), std::move(hs)),
          C.morphism(z, f.target(), std::move(g))};
}

// Over the triangular algebra the image of f is spanned by the columns of f,
// where a column belonging to a summand P_i spans a copy of P_i. Scanning
// columns from label m down to label 1 and keeping those independent of the
// ones already kept yields a basis adapted to the vertex filtration: the
// number of kept P_i columns is dim W_i - dim W_{i+1} for the image W.
template <FieldScalar T>
ZeroKernel<T> zero_kernel_triangular(const Category<T> &C, const Morphism<T> &f) {
  const auto labels = f.source().labels();
  std::vector<std::size_t> order(labels.size());
  for (std::size_t j = 0; j < order.size(); ++j) order[j] = j;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return labels[a] > labels[b]; });

  std::vector<std::size_t> kept;
  std::vector<std::size_t> all_rows(f.target().size());
  for (std::size_t i = 0; i < all_rows.size(); ++i) all_rows[i] = i;
  for (std::size_t j : order) {
    kept.push_back(j);
    if (field_rank(f.matrix().select(all_rows, kept)) < kept.size()) kept.pop_back();
  }
  std::sort(kept.begin(), kept.end()); // canonical order already ascends by label

  std::vector<std::size_t> kept_labels;
  for (std::size_t j : kept) kept_labels.push_back(labels[j]);
  const Object z = object_from_labels(C.m(), kept_labels);
  Matrix<T> g = f.matrix().select(all_rows, kept);
  auto h = solve_columns(g, f.matrix());
  require(h.has_value(), ErrorKind::Precondition, "internal: image basis does not span");
  Matrix<T> hs(f.source().size(), kept.size());
  for (std::size_t k = 0; k < kept.size(); ++k) hs(kept[k], k) = C.one();
  return {C.morphism(f.source(), z, std::move(*h)), C.morphism(z, f.source(), std::move(hs)),
          C.morphism(z, f.target(), std::move(g))};
}

} // namespace detail

template <ExactScalar T> ZeroKernel<T> zero_kernel(const Category<T> &C, const Morphism<T> &f) {
  C.check(f.source());
  if constexpr (Category<T>::integral)
    return detail::zero_kernel_integral(C, f);
  else
    return detail::zero_kernel_triangular(C, f);
}

template <ExactScalar T> ZeroCokernel<T> zero_cokernel(const Category<T> &C, const Morphism<T> &f) {
  const ZeroKernel<T> k = zero_kernel(C, dual(f));
  return {dual(k.g), dual(k.h), dual(k.h_section)};
}

template <ExactScalar T> struct SplitMono {
  Morphism<T> map;        // a : K -> X
  Morphism<T> retraction; // b with b a = 1
};

template <ExactScalar T> struct SplitEpi {
  Morphism<T> map;     // c : Y -> Q
  Morphism<T> section; // d with c d = 1
};

// Kernel from a 0-kernel: with f = g h and h h' = 1, the idempotent
// 1 - h'h factors as a b through its own 0-kernel, and a is a kernel of f.
template <ExactScalar T> SplitMono<T> kernel(const Category<T> &C, const Morphism<T> &f) {
  const ZeroKernel<T> fk = zero_kernel(C, f);
  const Morphism<T> e = C.identity(f.source()) - fk.h_section * fk.h;
  const ZeroKernel<T> ek = zero_kernel(C, e);
  return {ek.g, ek.h};
}

template <ExactScalar T> SplitEpi<T> cokernel(const Category<T> &C, const Morphism<T> &f) {
  const SplitMono<T> k = kernel(C, dual(f));
  return {dual(k.map), dual(k.retraction)};
}

// e = g h with h g = 1.
template <ExactScalar T> struct IdempotentSplitting {
  Morphism<T> g;
  Morphism<T> h;
};

template <ExactScalar T>
IdempotentSplitting<T> split_idempotent(const Category<T> &C, const Morphism<T> &e) {
  require(e.source() == e.target() && e * e == e, ErrorKind::Precondition,
          "split_idempotent: input is not an idempotent endomorphism");
  const ZeroKernel<T> k = zero_kernel(C, e);
  return {k.g, k.h};
}

template <ExactScalar T> struct Fill {
  std::optional<Morphism<T>> r;
  bool unique = false;
};

// Diagonal r : B -> C' of the square y f = g x (f : A -> B, g : C' -> D,
// x : A -> C', y : B -> D) with r f = x and g r = y.
template <ExactScalar T>
Fill<T> orthogonal_fill(const Category<T> &C, const Morphism<T> &f, const Morphism<T> &g,
                        const Morphism<T> &x, const Morphism<T> &y) {
  require(x.source() == f.source() && y.source() == f.target() && x.target() == g.source() &&
              y.target() == g.target(),
          ErrorKind::DimensionMismatch, "orthogonal_fill: square shapes do not match");
  require(y * f == g * x, ErrorKind::Precondition, "orthogonal_fill: square does not commute");
  MorphismSystem<T> sys(C);
  const auto u = sys.add_unknown(f.target(), g.source());
  sys.add_equation({{u, std::nullopt, f}}, x);
  sys.add_equation({{u, g, std::nullopt}}, y);
  auto sol = sys.solve();
  if (!sol) return {};
  return {sol->front(), sys.nullity() == 0};
}

struct UniversalReport {
  std::size_t probes = 0;
  std::size_t factoring = 0; // probes that factor through f
  std::size_t missing = 0;   // factoring probes with no mediating morphism
  std::size_t non_unique = 0;
  [[nodiscard]] bool passed() const { return missing == 0 && non_unique == 0; }
};

// For a 0-kernel witness: every probe w : W -> Y factoring through f must
// factor uniquely through g. For a 0-cokernel witness, dually, every probe
// w : X -> W factoring through f must factor uniquely through s.
template <ExactScalar T>
UniversalReport universal_property_check(const Category<T> &C, const FactorizationWitness<T> &witness,
                                         const Morphism<T> &f, const std::vector<Morphism<T>> &probes) {
  UniversalReport rep;
  for (const auto &w : probes) {
    ++rep.probes;
    if (const auto *zk = std::get_if<ZeroKernel<T>>(&witness)) {
      require(w.target() == f.target(), ErrorKind::DimensionMismatch, "probe must end at the target of f");
      if (!solve_for<T>(C, w.source(), f.source(), f, std::nullopt, w)) continue;
      ++rep.factoring;
      MorphismSystem<T> sys(C);
      const auto u = sys.add_unknown(w.source(), zk->g.source());
      sys.add_equation({{u, zk->g, std::nullopt}}, w);
      if (!sys.solve()) ++rep.missing;
      else if (sys.nullity() != 0) ++rep.non_unique;
    } else {
      const auto &zc = std::get<ZeroCokernel<T>>(witness);
      require(w.source() == f.source(), ErrorKind::DimensionMismatch, "probe must start at the source of f");
      if (!solve_for<T>(C, f.target(), w.target(), std::nullopt, f, w)) continue;
      ++rep.factoring;
      MorphismSystem<T> sys(C);
      const auto u = sys.add_unknown(zc.s.target(), w.target());
      sys.add_equation({{u, std::nullopt, zc.s}}, w);
      if (!sys.solve()) ++rep.missing;
      else if (sys.nullity() != 0) ++rep.non_unique;
    }
  }
  return rep;
}

// Checks the defining equations of a witness exactly.
template <ExactScalar T>
bool verify(const Category<T> &C, const ZeroKernel<T> &w, const Morphism<T> &f) {
  return w.g * w.h == f && w.h * w.h_section == C.identity(w.h.target()) && is_mono(w.g);
}
template <ExactScalar T>
bool verify(const Category<T> &C, const ZeroCokernel<T> &w, const Morphism<T> &f) {
  return w.r * w.s == f && w.r_retraction * w.r == C.identity(w.r.source()) && is_epi(w.s);
}

} // namespace zeroab
