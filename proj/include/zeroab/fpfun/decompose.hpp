#pragma once

#include "zeroab/fpfun/evaluate.hpp"
#include "zeroab/fpfun/hom.hpp"

namespace zeroab {

// F = mr(f) split as F_e + C(-, W) with F_e = mr(s) effaceable.
//
// With f = g h (0-kernel), mr(f) = mr(g) because h is split epi. With
// g = r s (0-cokernel), s is a bimorphism: mono since g is, epi by
// construction. The split mono r : V -> P0 and the splitting of 1 - r rho
// decompose P0 = V + W, and mr(g) = mr(s) + C(-, W).
template <ExactScalar T> struct TorsionDecomposition {
  Morphism<T> bimorphism_part; // s : S -> V
  Object projective_part;      // W
  FpFunctor<T> sum;            // mr(i1 s : S -> V + W)
  FpMorphism<T> to_sum;        // F -> sum, an isomorphism
  FpMorphism<T> from_sum;      // its inverse
  // pieces of the construction, reused by the injective resolution
  ZeroKernel<T> kernel_part;      // f = g h
  ZeroCokernel<T> cokernel_part;  // g = r s
  Morphism<T> w_inclusion;        // i_W : W -> P0
  Morphism<T> w_projection;       // p_W : P0 -> W
  Biproduct<T> vw;                // V + W
};

template <ExactScalar T> TorsionDecomposition<T> decompose(const Category<T> &C, const FpFunctor<T> &F) {
  const auto &f = F.presentation;
  ZeroKernel<T> zk = zero_kernel(C, f);
  ZeroCokernel<T> zc = zero_cokernel(C, zk.g);
  const Morphism<T> e = C.identity(f.target()) - zc.r * zc.r_retraction;
  const IdempotentSplitting<T> w = split_idempotent(C, e);
  const Object &V = zc.r.source();
  const Object &W = w.g.source();
  Biproduct<T> vw = direct_sum(C, V, W);
  FpFunctor<T> sum{vw.i1 * zc.s};
  FpMorphism<T> to(F, sum, zk.h, vw.i1 * zc.r_retraction + vw.i2 * w.h);
  FpMorphism<T> from(sum, F, zk.h_section, zc.r * vw.p1 + w.g * vw.p2);
  return {zc.s, W, std::move(sum), std::move(to), std::move(from), std::move(zk), std::move(zc),
          w.g, w.h, std::move(vw)};
}

// Hom(F_e, C(-, W)) must vanish: (eff C, proj C) is a torsion pair.
template <ExactScalar T> bool orthogonality_holds(const Category<T> &C, const TorsionDecomposition<T> &d) {
  return hom_functors(C, mr(d.bimorphism_part), representable(C, d.projective_part)).group.is_zero();
}

template <ExactScalar T> bool is_effaceable(const Category<T> &C, const FpFunctor<T> &F) {
  return decompose(C, F).projective_part.is_zero();
}

template <ExactScalar T> bool is_representable(const Category<T> &C, const FpFunctor<T> &F) {
  return is_iso(C, decompose(C, F).bimorphism_part);
}

template <ExactScalar T> struct NatKernel {
  FpFunctor<T> functor;
  FpMorphism<T> inclusion;
};

template <ExactScalar T> struct NatCokernel {
  FpFunctor<T> functor;
  FpMorphism<T> projection;
};

// Kernel of alpha : mr(f) -> mr(f'). The elements of C(-, P0) sent into the
// image of f' form the image of C(-, u) for u = p1 k, where k is the kernel
// of [b, -f'] : P0 + Q1 -> Q0. Taking the 0-kernel u = g_u h_u, that image
// is C(-, U) embedded by g_u, and f = g_u q for a unique q, so the kernel is
// mr(q) with inclusion (1, g_u).
template <ExactScalar T> NatKernel<T> kernel_nat(const Category<T> &C, const FpMorphism<T> &alpha) {
  const auto &f = alpha.source.presentation;
  const auto &f2 = alpha.target.presentation;
  const Morphism<T> d = copair(C, alpha.b, -f2);
  const SplitMono<T> k = kernel(C, d);
  const Biproduct<T> s = direct_sum(C, f.target(), f2.source());
  const Morphism<T> u = s.p1 * k.map;
  const ZeroKernel<T> zu = zero_kernel(C, u);
  const auto q = solve_for<T>(C, f.source(), zu.g.source(), zu.g, std::nullopt, f);
  require(q.has_value(), ErrorKind::Precondition, "internal: presentation does not factor through kernel");
  FpFunctor<T> K{*q};
  FpMorphism<T> inc(K, alpha.source, C.identity(f.source()), zu.g);
  return {std::move(K), std::move(inc)};
}

// Cokernel of alpha : mr(f) -> mr(f') is mr([f', b]) with projection (i1, 1).
template <ExactScalar T> NatCokernel<T> cokernel_nat(const Category<T> &C, const FpMorphism<T> &alpha) {
  const auto &f2 = alpha.target.presentation;
  const Morphism<T> pres = copair(C, f2, alpha.b);
  const Biproduct<T> s = direct_sum(C, f2.source(), alpha.b.source());
  FpFunctor<T> Q{pres};
  FpMorphism<T> proj(alpha.target, Q, s.i1, C.identity(f2.target()));
  return {std::move(Q), std::move(proj)};
}

// M = coker of a presentation, split as N + P with Hom(N, Lambda) = 0 and P
// projective, both evaluated at the generator.
template <ExactScalar T> struct ModuleSplitting {
  ModuleDescriptor torsion_part;    // N
  ModuleDescriptor projective_part; // P
  TorsionDecomposition<T> decomposition;
};

template <ExactScalar T> ModuleSplitting<T> split_module(const Category<T> &C, const Morphism<T> &f) {
  TorsionDecomposition<T> d = decompose(C, mr(f));
  const Object G = C.generator();
  ModuleDescriptor n = evaluate(C, mr(d.bimorphism_part), G);
  ModuleDescriptor p = evaluate(C, representable(C, d.projective_part), G);
  return {std::move(n), std::move(p), std::move(d)};
}

} // namespace zeroab
