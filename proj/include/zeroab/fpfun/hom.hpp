#pragma once

#include <vector>

#include "zeroab/fpfun/functor.hpp"

namespace zeroab {

// Hom(F, G) for F = mr(f : P1 -> P0), G = mr(g : Q1 -> Q0). A transformation
// is determined by b : P0 -> Q0 with b f in the image of C(P1, g); it is
// zero when b = g t. So Hom(F, G) = B / T with
//   B = { b : b f = g a for some a },  T = { g t : t : P0 -> Q1 },
// both computed in the coordinates of Hom(P0, Q0).
template <ExactScalar T> struct FunctorHom {
  FpFunctor<T> source, target;
  ModuleDescriptor group;
  // Over a field: a basis of B/T. Over Z: generators of B (a lattice basis).
  std::vector<FpMorphism<T>> basis;
  // Columns: the b-coordinates of the basis, followed by generators of T.
  Matrix<T> span;

  [[nodiscard]] std::size_t dimension() const { return group.free_rank; }

  // Coordinates of a transformation in the basis (field case).
  [[nodiscard]] std::vector<T> coordinates(const FpMorphism<T> &alpha) const
    requires FieldScalar<T>
  {
    const HomSpace h(source.generators(), target.generators());
    const auto x = field_solve(span, h.coordinates(alpha.b));
    require(x.has_value(), ErrorKind::Precondition, "transformation not in the computed hom space");
    return std::vector<T>(x->begin(), x->begin() + static_cast<std::ptrdiff_t>(basis.size()));
  }
};

template <ExactScalar T>
FunctorHom<T> hom_functors(const Category<T> &C, const FpFunctor<T> &F, const FpFunctor<T> &G) {
  const auto &f = F.presentation;
  const auto &g = G.presentation;
  const HomSpace hb = C.hom(F.generators(), G.generators());

  MorphismSystem<T> sys(C);
  const auto a = sys.add_unknown(F.relations(), G.relations());
  const auto b = sys.add_unknown(F.generators(), G.generators());
  sys.add_equation({{b, std::nullopt, f}, {a, -g, std::nullopt}}, C.zero(F.relations(), G.generators()));
  const auto solutions = sys.homogeneous_basis();

  std::vector<std::vector<T>> tgens;
  const HomSpace ht = C.hom(F.generators(), G.relations());
  for (std::size_t k = 0; k < ht.dimension(); ++k)
    tgens.push_back(hb.coordinates(g * ht.template basis_element<T>(k, C.one())));

  FunctorHom<T> out{F, G, {}, {}, {}};
  if constexpr (FieldScalar<T>) {
    Matrix<T> current = from_columns(hb.dimension(), tgens);
    std::size_t r = field_rank(current);
    std::vector<std::vector<T>> chosen;
    for (const auto &sol : solutions) {
      auto cb = hb.coordinates(sol[b]);
      Matrix<T> trial = hstack(current, from_columns<T>(hb.dimension(), std::vector<std::vector<T>>{cb}));
      const std::size_t r2 = field_rank(trial);
      if (r2 == r) continue;
      r = r2;
      current = std::move(trial);
      chosen.push_back(std::move(cb));
      out.basis.emplace_back(F, G, sol[a], sol[b]);
    }
    out.group.free_rank = chosen.size();
    chosen.insert(chosen.end(), tgens.begin(), tgens.end());
    out.span = from_columns(hb.dimension(), chosen);
  } else {
    // lattice B: Hermite basis of the projected solution lattice
    std::vector<std::vector<Integer>> bgens;
    for (const auto &sol : solutions) bgens.push_back(hb.coordinates(sol[b]));
    const HermiteForm hf = hermite(from_columns(hb.dimension(), bgens));
    const Matrix<Integer> basis = hf.H.first_columns(hf.rank);
    Matrix<Integer> rel(hf.rank, tgens.size());
    for (std::size_t j = 0; j < tgens.size(); ++j) {
      const auto x = int_solve(basis, tgens[j]);
      require(x.has_value(), ErrorKind::Precondition, "internal: homotopies outside the square lattice");
      rel.set_column(j, *x);
    }
    const SmithForm sf = smith(rel);
    out.group.free_rank = hf.rank - sf.invariant_factors.size();
    for (const auto &d : sf.invariant_factors)
      if (d != 1) out.group.torsion.push_back(d);
    for (std::size_t j = 0; j < hf.rank; ++j) {
      const Morphism<Integer> bj = hb.template element<Integer>(basis.column(j));
      const auto aj = solve_for<Integer>(C, F.relations(), G.relations(), g, std::nullopt, bj * f);
      require(aj.has_value(), ErrorKind::Precondition, "internal: lattice vector without a square");
      out.basis.emplace_back(F, G, *aj, bj);
    }
    out.span = hstack(basis, from_columns(hb.dimension(), tgens));
  }
  return out;
}

} // namespace zeroab
