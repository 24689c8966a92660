#pragma once

#include <vector>

#include "zeroab/exactla/field.hpp"
#include "zeroab/fpfun/functor.hpp"

// The E-side operations need enough injectives, so they are written for the
// triangular algebra (field scalars) only. Over Z the reflectors themselves
// raise NoEnoughInjectives.

namespace zeroab {

// A quotient Hom(X, Y) / U with U spanned by the given morphisms, with a
// basis of coset representatives chosen by leftmost-pivot echelon reduction.
template <FieldScalar T> struct HomQuotient {
  HomSpace hom;
  QuotientSpace<T> space;

  [[nodiscard]] std::size_t dimension() const { return space.dimension(); }
  [[nodiscard]] std::size_t subspace_dimension() const { return space.subspace_dimension(); }
  [[nodiscard]] Morphism<T> representative(std::size_t k, const T &one) const {
    return hom.template element<T>(space.representative(k, one));
  }
  [[nodiscard]] std::vector<Morphism<T>> representatives(const T &one) const {
    std::vector<Morphism<T>> out;
    for (std::size_t k = 0; k < dimension(); ++k) out.push_back(representative(k, one));
    return out;
  }
  [[nodiscard]] std::vector<T> coordinates(const Morphism<T> &f) const { return space.coordinates(hom.coordinates(f)); }
  [[nodiscard]] bool is_zero_class(const Morphism<T> &f) const { return space.contains(hom.coordinates(f)); }
};

template <FieldScalar T>
HomQuotient<T> hom_quotient(const Category<T> &C, const Object &x, const Object &y,
                            const std::vector<Morphism<T>> &generators) {
  const HomSpace h = C.hom(x, y);
  std::vector<std::vector<T>> cols;
  for (const auto &g : generators) cols.push_back(h.coordinates(g));
  return {h, QuotientSpace<T>(h.dimension(), from_columns<T>(h.dimension(), cols))};
}

// Images of a basis of Hom(a, b) under u |-> l u r.
template <FieldScalar T>
std::vector<Morphism<T>> image_generators(const Category<T> &C, const Object &a, const Object &b,
                                          const std::optional<Morphism<T>> &l,
                                          const std::optional<Morphism<T>> &r) {
  const HomSpace h = C.hom(a, b);
  std::vector<Morphism<T>> out;
  for (std::size_t k = 0; k < h.dimension(); ++k) {
    Morphism<T> u = h.template basis_element<T>(k, C.one());
    if (l) u = *l * u;
    if (r) u = u * *r;
    out.push_back(std::move(u));
  }
  return out;
}

// E(X, Y) = coker C(X, eta_Y), as a quotient of Hom(X, Y_Inj).
template <FieldScalar T> struct EValue {
  Object x, y;
  HomQuotient<T> group;
  FpFunctor<T> presentation; // E(-, Y) = mr(eta_Y)

  [[nodiscard]] std::size_t dimension() const { return group.dimension(); }
};

template <FieldScalar T> EValue<T> e_group(const Category<T> &C, const Object &x, const Object &y) {
  C.check(x);
  C.check(y);
  const Morphism<T> ey = eta(C, y);
  return {x, y, hom_quotient(C, x, ey.target(), image_generators<T>(C, x, y, ey, std::nullopt)),
          effaceable_e(C, y)};
}

// A linear map between two E groups in their representative bases.
template <FieldScalar T> struct EMap {
  EValue<T> source, target;
  Matrix<T> matrix;
};

// E(X, f) : E(X, Y) -> E(X, Y'), u |-> f_Inj u.
template <FieldScalar T> EMap<T> e_map_cov(const Category<T> &C, const Object &x, const Morphism<T> &f) {
  EValue<T> src = e_group(C, x, f.source());
  EValue<T> tgt = e_group(C, x, f.target());
  const Morphism<T> fi = injective_map(C, f);
  Matrix<T> m(tgt.dimension(), src.dimension());
  for (std::size_t k = 0; k < src.dimension(); ++k)
    m.set_column(k, tgt.group.coordinates(fi * src.group.representative(k, C.one())));
  return {std::move(src), std::move(tgt), std::move(m)};
}

// E(f, Y) : E(X', Y) -> E(X, Y), u |-> u f.
template <FieldScalar T> EMap<T> e_map_contra(const Category<T> &C, const Morphism<T> &f, const Object &y) {
  EValue<T> src = e_group(C, f.target(), y);
  EValue<T> tgt = e_group(C, f.source(), y);
  Matrix<T> m(tgt.dimension(), src.dimension());
  for (std::size_t k = 0; k < src.dimension(); ++k)
    m.set_column(k, tgt.group.coordinates(src.group.representative(k, C.one()) * f));
  return {std::move(src), std::move(tgt), std::move(m)};
}

// E(-, f) as a natural transformation mr(eta_X) -> mr(eta_Y).
template <FieldScalar T> FpMorphism<T> e_functor_map(const Category<T> &C, const Morphism<T> &f) {
  return {effaceable_e(C, f.source()), effaceable_e(C, f.target()), f, injective_map(C, f)};
}

// E'(X, Y) = coker C(eps_X, Y), a quotient of Hom(X_Proj, Y), compared with
// E(X, Y) through phi(v) = w where w eps_X = eta_Y v.
template <FieldScalar T> struct Balance {
  EValue<T> e;
  HomQuotient<T> e_prime;
  Matrix<T> delta; // E' -> E
  bool bijective = false;
};

template <FieldScalar T> Balance<T> balance_check(const Category<T> &C, const Object &x, const Object &y) {
  EValue<T> e = e_group(C, x, y);
  const Morphism<T> ex = epsilon(C, x);
  const Morphism<T> ey = eta(C, y);
  HomQuotient<T> ep = hom_quotient(C, ex.source(), y, image_generators<T>(C, x, y, std::nullopt, ex));
  Matrix<T> delta(e.dimension(), ep.dimension());
  for (std::size_t k = 0; k < ep.dimension(); ++k) {
    const auto w = solve_for<T>(C, x, ey.target(), std::nullopt, ex, ey * ep.representative(k, C.one()));
    require(w.has_value(), ErrorKind::Precondition, "internal: C(eps_X, Y_Inj) not surjective");
    delta.set_column(k, e.group.coordinates(*w));
  }
  const bool bij = e.dimension() == ep.dimension() && rank(delta) == e.dimension();
  return {std::move(e), std::move(ep), std::move(delta), bij};
}

// E(X, Y_Inj) = 0.
template <FieldScalar T> bool e_vanishes_into_hull(const Category<T> &C, const Object &x, const Object &y) {
  return e_group(C, x, injective_hull(C, y)).dimension() == 0;
}

} // namespace zeroab
