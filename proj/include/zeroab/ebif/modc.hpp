#pragma once

#include <string_view>
#include <vector>

#include "zeroab/ebif/nsles.hpp"
#include "zeroab/fpfun/decompose.hpp"

namespace zeroab {

// A direct summand F of E(-, X), given by a split epi alpha : E(-, X) -> F,
// realized as E(-, V). The composite C(-, X_Inj) -> E(-, X) -> F has kernel
// C(-, V) embedded by a mono g : V -> X_Inj, so F = mr(g); eta_X factors as
// g h, and (1_V, g_Inj^{-1}) identifies mr(g) with E(-, V).
template <FieldScalar T> struct RealizedSummand {
  Object v;
  Morphism<T> h;           // X -> V, a bimorphism
  Morphism<T> g;           // V -> X_Inj
  FpMorphism<T> alpha_section;
  FpMorphism<T> e_h;       // E(-, h) : E(-, X) -> E(-, V)
  FpMorphism<T> e_h_section;
  FpMorphism<T> beta;      // mr(g) -> E(-, V)
  FpMorphism<T> gamma;     // mr(g) -> F
  FpMorphism<T> iso;       // F -> E(-, V)
  FpMorphism<T> iso_inverse;
};

template <FieldScalar T>
RealizedSummand<T> realize_summand(const Category<T> &C, const Object &x, const FpMorphism<T> &alpha) {
  const FpFunctor<T> ex = effaceable_e(C, x);
  require(alpha.source == ex, ErrorKind::Validation, "realize_summand: source is not E(-, X)");
  const auto sigma = section(C, alpha);
  require(sigma.has_value(), ErrorKind::Precondition, "realize_summand: the map is not a split epimorphism");
  const Object xi = injective_hull(C, x);
  const FpFunctor<T> &F = alpha.target;

  // C(-, X_Inj) -> F
  const FpMorphism<T> onto(representable(C, xi), F, C.zero(C.zero_object(), F.relations()), alpha.b);
  const NatKernel<T> k = kernel_nat(C, onto);
  const Morphism<T> g = k.inclusion.b;
  const Object v = g.source();
  const auto h = solve_for<T>(C, x, v, g, std::nullopt, eta(C, x));
  require(h.has_value(), ErrorKind::Precondition, "internal: eta_X does not factor through the kernel");
  require(is_bimorphism(*h), ErrorKind::Precondition, "internal: realizing map is not a bimorphism");
  require(v.size() == x.size(), ErrorKind::Precondition, "internal: V_Inj and X_Inj differ");

  const auto gi_inv = inverse(C, injective_map(C, g));
  require(gi_inv.has_value(), ErrorKind::Precondition, "internal: g_Inj not invertible");
  const FpFunctor<T> mg = mr(g);
  FpMorphism<T> beta(mg, effaceable_e(C, v), C.identity(v), *gi_inv);
  const auto a = solve_for<T>(C, v, F.relations(), F.presentation, std::nullopt, alpha.b * g);
  require(a.has_value(), ErrorKind::Precondition, "internal: kernel does not map to the relations");
  FpMorphism<T> gamma(mg, F, *a, alpha.b);
  const auto gamma_inv = section(C, gamma);
  const auto beta_inv = section(C, beta);
  require(gamma_inv && retraction(C, gamma) && beta_inv && retraction(C, beta), ErrorKind::Precondition,
          "internal: realizing maps are not isomorphisms");

  FpMorphism<T> eh = e_functor_map(C, *h);
  const auto eh_section = section(C, eh);
  require(eh_section.has_value(), ErrorKind::Precondition, "internal: E(-, h) is not split epi");
  FpMorphism<T> iso = beta * *gamma_inv;
  FpMorphism<T> iso_inv = gamma * *beta_inv;
  return {v, *h, g, *sigma, std::move(eh), *eh_section, std::move(beta), std::move(gamma),
          std::move(iso), std::move(iso_inv)};
}

// 0 -> F -> E(-, S) + C(-, W_Inj) -> E(-, V) + E(-, W) -> 0 built from the
// torsion decomposition F = mr(s) + C(-, W) with s : S -> V a bimorphism.
template <FieldScalar T> struct InjectiveResolution {
  TorsionDecomposition<T> decomposition;
  FpFunctor<T> middle, right;
  FpMorphism<T> iota, pi;
  std::vector<ExactnessPoint> points;
  std::vector<std::size_t> dual_dimensions;      // dim Hom(F, C(-, P_k))
  std::vector<std::size_t> expected_dual_dimensions; // dim Hom(W, P_k)

  [[nodiscard]] bool exact() const { return all_exact(points); }
  [[nodiscard]] bool dual_matches() const { return dual_dimensions == expected_dual_dimensions; }
};

namespace detail {

template <FieldScalar T> InjectiveResolution<T> resolution_core(const Category<T> &C, const FpFunctor<T> &F) {
  TorsionDecomposition<T> d = decompose(C, F);
  const Morphism<T> s = d.bimorphism_part;
  const Object S = s.source();
  const Object V = s.target();
  const Object W = d.projective_part;
  const Morphism<T> eta_s = eta(C, S), eta_v = eta(C, V), eta_w = eta(C, W);
  const auto s_inj_inv = inverse(C, injective_map(C, s));
  require(s_inj_inv.has_value(), ErrorKind::Precondition, "internal: s_Inj not invertible");

  const Biproduct<T> mid = direct_sum(C, eta_s.target(), eta_w.target()); // S_Inj + W_Inj
  FpFunctor<T> middle{mid.i1 * eta_s};
  const Biproduct<T> rgen = direct_sum(C, eta_v.target(), eta_w.target()); // V_Inj + W_Inj
  const Biproduct<T> rrel = direct_sum(C, V, W);
  FpFunctor<T> right{direct_sum(C, eta_v, eta_w)};
  require(right.presentation.source() == rrel.object && right.presentation.target() == rgen.object,
          ErrorKind::Precondition, "internal: biproduct orders disagree");

  FpMorphism<T> iota(F, middle, d.kernel_part.h,
                     mid.i1 * *s_inj_inv * eta_v * d.cokernel_part.r_retraction + mid.i2 * eta_w * d.w_projection);
  FpMorphism<T> pi(middle, right, rrel.i1 * d.bimorphism_part,
                   rgen.i1 * injective_map(C, s) * mid.p1 + rgen.i2 * mid.p2);
  if (is_zero(C, F)) {
    // a zero functor gets the zero resolution rather than E(-, S) = E(-, V)
    const FpFunctor<T> zero = representable(C, C.zero_object());
    middle = zero;
    right = zero;
    iota = zero_nat(C, F, zero);
    pi = zero_nat(C, zero, zero);
  }
  auto pts = exactness(C, {iota, pi});
  InjectiveResolution<T> out{std::move(d), std::move(middle), std::move(right), std::move(iota), std::move(pi),
                             std::move(pts), {}, {}};
  for (std::size_t k = 1; k <= C.m(); ++k) {
    const Object pk = C.indecomposable(k);
    out.dual_dimensions.push_back(hom_functors(C, F, representable(C, pk)).dimension());
    out.expected_dual_dimensions.push_back(C.hom(W, pk).dimension());
  }
  return out;
}

} // namespace detail

enum class ModCClass { ProjectiveInjective, EffaceableInjective, NotInjective, MixedInjective };

inline std::string_view to_string(ModCClass c) {
  switch (c) {
  case ModCClass::ProjectiveInjective: return "ProjectiveInjective";
  case ModCClass::EffaceableInjective: return "EffaceableInjective";
  case ModCClass::NotInjective: return "NotInjective";
  case ModCClass::MixedInjective: return "MixedInjective";
  }
  return "";
}

// Injective F in mod C is C(-, I) + E(-, X) with I injective. A zero functor
// is reported as ProjectiveInjective(0).
template <FieldScalar T> struct ModCClassification {
  ModCClass kind = ModCClass::NotInjective;
  Object injective_part;   // I
  Object effaceable_part;  // X, with the effaceable summand isomorphic to E(-, X)
  std::optional<FpMorphism<T>> retraction; // of the canonical embedding, when injective
};

template <FieldScalar T> ModCClassification<T> classify_injective_modC(const Category<T> &C, const FpFunctor<T> &F) {
  const InjectiveResolution<T> res = detail::resolution_core(C, F);
  ModCClassification<T> out;
  out.retraction = retraction(C, res.iota);
  if (!out.retraction) return out;
  const auto &d = res.decomposition;
  out.injective_part = d.projective_part;
  const FpFunctor<T> fe = mr(d.bimorphism_part);
  if (is_zero(C, fe)) {
    out.kind = ModCClass::ProjectiveInjective;
    out.effaceable_part = C.zero_object();
    return out;
  }
  // mr(s) -> E(-, S) is split mono since mr(s) is injective; its retraction
  // exhibits mr(s) as a summand of E(-, S).
  const Morphism<T> &s = d.bimorphism_part;
  const auto s_inj_inv = inverse(C, injective_map(C, s));
  const FpMorphism<T> emb(fe, effaceable_e(C, s.source()), C.identity(s.source()), *s_inj_inv * eta(C, s.target()));
  const auto r = retraction(C, emb);
  require(r.has_value(), ErrorKind::Precondition, "internal: effaceable part of an injective is not a summand");
  out.effaceable_part = realize_summand(C, s.source(), *r).v;
  out.kind = d.projective_part.is_zero() ? ModCClass::EffaceableInjective : ModCClass::MixedInjective;
  return out;
}

template <FieldScalar T> bool is_injective_modC(const Category<T> &C, const FpFunctor<T> &F) {
  return classify_injective_modC(C, F).kind != ModCClass::NotInjective;
}

template <FieldScalar T>
InjectiveResolution<T> injective_resolution(const Category<T> &C, const FpFunctor<T> &F) {
  InjectiveResolution<T> res = detail::resolution_core(C, F);
  require(res.exact(), ErrorKind::Precondition, "internal: injective resolution is not exact");
  require(is_injective_modC(C, res.middle) && is_injective_modC(C, res.right), ErrorKind::Precondition,
          "internal: resolution terms are not injective");
  return res;
}

} // namespace zeroab
