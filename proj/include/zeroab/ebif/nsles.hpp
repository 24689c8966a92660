#pragma once

#include <vector>

#include "zeroab/ebif/extension.hpp"
#include "zeroab/fpfun/evaluate.hpp"

namespace zeroab {

// 0 -> C(-, X) -> C(-, Y) -> E(-, X) -> E(-, Y) -> 0 for a bimorphism
// f : X -> Y, with connecting map C(-, f_Inj^{-1} eta_Y) followed by the
// projection onto E(-, X).
template <FieldScalar T> struct NSLES {
  Morphism<T> f;
  Morphism<T> f_inj_inverse;
  FpFunctor<T> cx, cy, ex, ey;
  FpMorphism<T> c_f, connecting, e_f;
  std::vector<ExactnessPoint> points;

  [[nodiscard]] bool exact() const { return all_exact(points); }

  // dimensions of the four terms at the generator
  [[nodiscard]] std::vector<std::size_t> dimensions_at_generator() const {
    std::vector<std::size_t> out(4, 0);
    for (const auto &p : points)
      for (std::size_t i = 0; i < 4; ++i) out[i] += p.dims[i];
    return out;
  }
};

template <FieldScalar T> NSLES<T> nsles(const Category<T> &C, const Morphism<T> &f) {
  require(is_bimorphism(f), ErrorKind::Precondition, "nsles: morphism is not a bimorphism");
  const Object &x = f.source();
  const Object &y = f.target();
  const auto inv = inverse(C, injective_map(C, f));
  require(inv.has_value(), ErrorKind::Precondition, "internal: f_Inj of a bimorphism is not invertible");
  FpFunctor<T> cx = representable(C, x), cy = representable(C, y);
  FpFunctor<T> ex = effaceable_e(C, x), ey = effaceable_e(C, y);
  FpMorphism<T> cf(cx, cy, C.zero(C.zero_object(), C.zero_object()), f);
  FpMorphism<T> d(cy, ex, C.zero(C.zero_object(), x), *inv * eta(C, y));
  FpMorphism<T> ef = e_functor_map(C, f);
  auto pts = exactness(C, {cf, d, ef});
  return {f, *inv, std::move(cx), std::move(cy), std::move(ex), std::move(ey),
          std::move(cf), std::move(d), std::move(ef), std::move(pts)};
}

} // namespace zeroab
