#pragma once

#include <string_view>
#include <vector>

#include "zeroab/ebif/extension.hpp"
#include "zeroab/fpfun/hom.hpp"

namespace zeroab {

enum class StableFlavor { InjectivelyStable, ProjectivelyStable };

inline std::string_view to_string(StableFlavor f) {
  return f == StableFlavor::InjectivelyStable ? "inj" : "proj";
}

// C(X, Y) modulo the maps factoring through an injective (g eta_X) or a
// projective (eps_Y g). Over Z both ideals vanish and this is the plain hom
// group, free of rank n_X n_Y.
template <ExactScalar T> struct StableHom {
  Object x, y;
  StableFlavor flavor = StableFlavor::InjectivelyStable;
  std::size_t dimension = 0;
  std::size_t ideal_dimension = 0;
  std::vector<Morphism<T>> representatives;
};

template <FieldScalar T>
HomQuotient<T> stable_quotient(const Category<T> &C, const Object &x, const Object &y, StableFlavor flavor) {
  if (flavor == StableFlavor::InjectivelyStable) {
    const Morphism<T> ex = eta(C, x);
    return hom_quotient(C, x, y, image_generators<T>(C, ex.target(), y, std::nullopt, ex));
  }
  const Morphism<T> ey = epsilon(C, y);
  return hom_quotient(C, x, y, image_generators<T>(C, x, ey.source(), ey, std::nullopt));
}

template <ExactScalar T>
StableHom<T> stable_hom(const Category<T> &C, const Object &x, const Object &y, StableFlavor flavor) {
  C.check(x);
  C.check(y);
  StableHom<T> out{x, y, flavor, 0, 0, {}};
  if constexpr (FieldScalar<T>) {
    const HomQuotient<T> q = stable_quotient(C, x, y, flavor);
    out.dimension = q.dimension();
    out.ideal_dimension = q.subspace_dimension();
    out.representatives = q.representatives(C.one());
  } else {
    const HomSpace h = C.hom(x, y);
    out.dimension = h.dimension();
    for (std::size_t k = 0; k < h.dimension(); ++k)
      out.representatives.push_back(h.template basis_element<T>(k, C.one()));
  }
  return out;
}

// The classes of C(X, Y) modulo injectives against Hom(E(-, X), E(-, Y)),
// compared through f |-> E(-, f).
template <FieldScalar T> struct HiltonRees {
  std::size_t stable_dimension = 0;
  std::size_t functor_dimension = 0;
  Matrix<T> matrix; // columns: coordinates of E(-, f) for the stable representatives
  bool bijective = false;

  [[nodiscard]] bool passed() const { return stable_dimension == functor_dimension && bijective; }
};

template <FieldScalar T> HiltonRees<T> hilton_rees_check(const Category<T> &C, const Object &x, const Object &y) {
  const HomQuotient<T> st = stable_quotient(C, x, y, StableFlavor::InjectivelyStable);
  const FunctorHom<T> h = hom_functors(C, effaceable_e(C, x), effaceable_e(C, y));
  HiltonRees<T> out;
  out.stable_dimension = st.dimension();
  out.functor_dimension = h.dimension();
  out.matrix = Matrix<T>(h.dimension(), st.dimension());
  for (std::size_t k = 0; k < st.dimension(); ++k)
    out.matrix.set_column(k, h.coordinates(e_functor_map(C, st.representative(k, C.one()))));
  out.bijective = out.stable_dimension == out.functor_dimension && rank(out.matrix) == out.stable_dimension;
  // the ideal must map to zero: E(-, g eta_X) vanishes
  const Morphism<T> ex = eta(C, x);
  for (const auto &g : image_generators<T>(C, ex.target(), y, std::nullopt, ex))
    if (!is_zero_nat(C, e_functor_map(C, g))) out.bijective = false;
  return out;
}

} // namespace zeroab
