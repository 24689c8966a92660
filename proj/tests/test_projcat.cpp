#include <gtest/gtest.h>

#include "support.hpp"

using namespace zt;

namespace {

template <class T> Morphism<T> scalar_map(const Category<T> &C, std::size_t i, std::size_t j, long c) {
  return C.morphism(C.indecomposable(i), C.indecomposable(j), {{c}});
}

} // namespace

// --- composition ----------------------------------------------------------

TEST(Compose, IdentityAndIntegers) {
  const auto C = Z();
  const auto f = zmap(2, 3, {{1, 2}, {3, 4}, {5, 6}});
  EXPECT_EQ(C.identity(f.target()) * f, f);
  EXPECT_EQ(f * C.identity(f.source()), f);
  EXPECT_EQ(zmap(1, 1, {{3}}) * zmap(1, 1, {{2}}), zmap(1, 1, {{6}}));
}

TEST(Compose, TriangularChainMatchesVertexMaps) {
  const auto C = TriP(3, 2);
  const auto a = scalar_map(C, 1, 2, 1);
  const auto b = scalar_map(C, 2, 3, 1);
  const auto ba = b * a;
  EXPECT_EQ(ba, scalar_map(C, 1, 3, 1));
  // the oracle composes the underlying representation maps
  const auto composed = oracle::compose(rep(a.source(), 2), rep(b, 2), rep(a, 2));
  EXPECT_EQ(oracle::flatten(composed), oracle::flatten(rep(ba, 2)));
}

TEST(Compose, MismatchRejected) {
  try {
    (void)(zmap(1, 1, {{1}}) * zmap(1, 2, {{1}, {0}}));
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::DimensionMismatch);
  }
}

TEST(Morphism, SupportViolationRejected) {
  const auto C = TriQ(2);
  try {
    (void)scalar_map(C, 2, 1, 1);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::Validation);
  }
}

// --- predicates -----------------------------------------------------------

TEST(Predicates, MultiplicationByTwo) {
  const auto C = Z();
  const auto two = zmap(1, 1, {{2}});
  EXPECT_TRUE(is_mono(two));
  EXPECT_TRUE(is_epi(two));
  EXPECT_TRUE(is_bimorphism(two));
  EXPECT_FALSE(is_split_mono(C, two));
  EXPECT_FALSE(is_split_epi(C, two));
  EXPECT_FALSE(is_iso(C, two));
}

TEST(Predicates, ZeroMapIsNeither) {
  const auto zero = zmap(1, 1, {{0}});
  EXPECT_FALSE(is_mono(zero));
  EXPECT_FALSE(is_epi(zero));
}

TEST(Predicates, IdentityIsEverything) {
  const auto C = TriQ(3);
  const auto id = C.identity(C.object({1, 2, 1}));
  EXPECT_TRUE(is_mono(id) && is_epi(id) && is_split_mono(C, id) && is_split_epi(C, id) && is_iso(C, id));
}

TEST(Predicates, FirstCoordinateInclusionSplits) {
  const auto C = Z();
  const auto inc = zmap(1, 2, {{1}, {0}});
  const auto r = retraction(C, inc);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(*r * inc, C.identity(inc.source()));
}

TEST(Predicates, CanonicalMapP1P2IsNonSplitBimorphism) {
  const auto C = TriP(2, 2);
  const auto f = scalar_map(C, 1, 2, 1);
  EXPECT_TRUE(is_bimorphism(f));
  EXPECT_FALSE(is_iso(C, f));
  // oracle: vertex-wise injectivity and right cancellability
  const auto X = rep(f.source(), 2), Y = rep(f.target(), 2);
  const auto phi = rep(f, 2);
  for (std::size_t k = 0; k < phi.size(); ++k) EXPECT_EQ(oracle::rank_of(phi[k]), X.dims[k]);
  EXPECT_TRUE(oracle::right_cancellable(X, Y, phi));
}

TEST(Predicates, EpiAgreesWithRightCancellabilityOverF2) {
  for (std::size_t m = 1; m <= 3; ++m) {
    const auto C = TriP(m, 2);
    Rng rng(100 + m);
    for (int trial = 0; trial < 60; ++trial) {
      const Object x = random_object(C, rng, 0, 2), y = random_object(C, rng, 0, 2);
      const auto f = random_morphism(C, rng, x, y);
      EXPECT_EQ(is_epi(f), oracle::right_cancellable(rep(x, 2), rep(y, 2), rep(f, 2))) << f;
    }
  }
}

TEST(Predicates, EpiAgreesWithRightCancellabilityOverZ) {
  const auto C = Z();
  Rng rng(7);
  for (int trial = 0; trial < 150; ++trial) {
    const auto x = Object::free(uniform_int(rng, 0, 2)), y = Object::free(uniform_int(rng, 0, 2));
    const auto f = random_morphism(C, rng, x, y, 4);
    EXPECT_EQ(is_epi(f), oracle::right_cancellable_integer(small_ints(f.matrix()), x.size())) << f;
  }
}

// --- factorizations -------------------------------------------------------

TEST(ZeroKernel, TwoOverZ) {
  const auto C = Z();
  const auto f = zmap(1, 1, {{2}});
  const auto w = zero_kernel(C, f);
  EXPECT_EQ(w.g, zmap(1, 1, {{2}}));
  EXPECT_EQ(w.h, zmap(1, 1, {{1}}));
  EXPECT_EQ(w.h_section, zmap(1, 1, {{1}}));
  EXPECT_TRUE(verify(C, w, f));
}

TEST(ZeroKernel, ZeroAndIdentity) {
  const auto C = Z();
  const auto zero = C.zero(Object::free(2), Object::free(3));
  const auto w = zero_kernel(C, zero);
  EXPECT_TRUE(w.g.source().is_zero());
  EXPECT_TRUE(verify(C, w, zero));
  const auto id = C.identity(Object::free(3));
  const auto wi = zero_kernel(C, id);
  EXPECT_EQ(wi.g, id);
  EXPECT_EQ(wi.h, id);
}

TEST(ZeroCokernel, TwoOverZ) {
  const auto C = Z();
  const auto f = zmap(1, 1, {{2}});
  const auto w = zero_cokernel(C, f);
  EXPECT_EQ(w.r, C.identity(Object::free(1)));
  EXPECT_EQ(w.s, f);
  EXPECT_TRUE(verify(C, w, f));
  const auto zero = C.zero(Object::free(2), Object::free(1));
  const auto wz = zero_cokernel(C, zero);
  EXPECT_TRUE(wz.s.target().is_zero());
  EXPECT_TRUE(verify(C, wz, zero));
  const auto id = C.identity(Object::free(2));
  EXPECT_EQ(zero_cokernel(C, id).s, id);
}

TEST(ZeroKernel, ImageMultiplicitiesFollowTheVertexFiltration) {
  const auto C = TriQ(4);
  Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const Object x = random_object(C, rng, 0, 4), y = random_object(C, rng, 0, 4);
    // compose through a small object to get interesting images
    const Object mid = random_object(C, rng, 0, 2);
    const auto f = random_morphism(C, rng, mid, y, 2) * random_morphism(C, rng, x, mid, 2);
    const auto w = zero_kernel(C, f);
    ASSERT_TRUE(verify(C, w, f));
    std::vector<std::size_t> dims(C.m() + 2, 0); // dim W_k = rank at vertex k
    for (std::size_t k = 1; k <= C.m(); ++k)
      dims[k] = rank(f.matrix().select(y.positions_at_least(k), x.positions_at_least(k)));
    for (std::size_t i = 1; i <= C.m(); ++i) EXPECT_EQ(w.g.source().multiplicity(i), dims[i] - dims[i + 1]);
  }
}

TEST(Kernel, Examples) {
  const auto C = Z();
  const auto k2 = kernel(C, zmap(1, 1, {{2}}));
  EXPECT_TRUE(k2.map.source().is_zero());
  const auto k0 = kernel(C, zmap(1, 1, {{0}}));
  EXPECT_EQ(k0.map, C.identity(Object::free(1)));
  const auto f = zmap(2, 1, {{1, 1}});
  const auto k = kernel(C, f);
  ASSERT_EQ(k.map.source().size(), 1u);
  EXPECT_EQ(k.map.matrix()(0, 0), -k.map.matrix()(1, 0));
  EXPECT_EQ(abs(k.map.matrix()(0, 0)), 1);
  EXPECT_TRUE((f * k.map).is_zero());
  EXPECT_EQ(k.retraction * k.map, C.identity(k.map.source()));
  // universal property: anything killed by f factors uniquely through k
  Rng rng(1);
  for (int t = 0; t < 20; ++t) {
    const long a = uniform_int(rng, -5, 5);
    const auto w = zmap(1, 2, {{a}, {-a}});
    MorphismSystem<Integer> sys(C);
    const auto u = sys.add_unknown(w.source(), k.map.source());
    sys.add_equation({{u, k.map, std::nullopt}}, w);
    EXPECT_TRUE(sys.solve().has_value());
    EXPECT_EQ(sys.nullity(), 0u);
  }
}

TEST(Cokernel, DualExamples) {
  const auto C = Z();
  EXPECT_TRUE(cokernel(C, zmap(1, 1, {{2}})).map.target().is_zero());
  EXPECT_EQ(cokernel(C, zmap(1, 1, {{0}})).map, C.identity(Object::free(1)));
  const auto f = zmap(1, 2, {{1}, {1}});
  const auto c = cokernel(C, f);
  ASSERT_EQ(c.map.target().size(), 1u);
  EXPECT_TRUE((c.map * f).is_zero());
  EXPECT_EQ(c.map * c.section, C.identity(c.map.target()));
}

TEST(SplitIdempotent, Examples) {
  const auto C = Z();
  const auto id = C.identity(Object::free(2));
  const auto s = split_idempotent(C, id);
  EXPECT_EQ(s.g, id);
  EXPECT_EQ(s.h, id);
  const auto e = zmap(2, 2, {{1, 0}, {0, 0}});
  const auto se = split_idempotent(C, e);
  EXPECT_EQ(se.g, zmap(1, 2, {{1}, {0}}));
  EXPECT_EQ(se.h, zmap(2, 1, {{1, 0}}));
  const auto e2 = zmap(2, 2, {{1, 1}, {0, 0}});
  const auto s2 = split_idempotent(C, e2);
  EXPECT_EQ(s2.g.source().size(), 1u);
  EXPECT_EQ(s2.g * s2.h, e2);
  EXPECT_EQ(s2.h * s2.g, C.identity(s2.g.source()));
}

TEST(SplitIdempotent, RejectsNonIdempotent) {
  try {
    (void)split_idempotent(Z(), zmap(1, 1, {{2}}));
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::Precondition);
  }
}

// --- duality --------------------------------------------------------------

TEST(Dual, Examples) {
  EXPECT_EQ(dual(zmap(1, 1, {{2}})), zmap(1, 1, {{2}}));
  const auto C = TriQ(4);
  // c : P_i -> P_j becomes c : P_{m+1-j} -> P_{m+1-i}
  const auto f = C.morphism(C.indecomposable(2), C.indecomposable(3), {{5}});
  EXPECT_EQ(dual(f), C.morphism(C.indecomposable(2), C.indecomposable(3), {{5}}));
  const auto g = C.morphism(C.indecomposable(1), C.indecomposable(3), {{7}});
  EXPECT_EQ(dual(g), C.morphism(C.indecomposable(2), C.indecomposable(4), {{7}}));
}

TEST(Dual, InvolutionAndContravariance) {
  const auto C = TriP(4, 3);
  Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const Object x = random_object(C, rng, 0, 4), y = random_object(C, rng, 0, 4), z = random_object(C, rng, 0, 4);
    const auto f = random_morphism(C, rng, x, y), g = random_morphism(C, rng, y, z);
    EXPECT_EQ(dual(dual(f)), f);
    EXPECT_EQ(dual(g * f), dual(f) * dual(g));
  }
}

// --- reflectors and classification -----------------------------------------

TEST(Eta, Examples) {
  const auto C = TriQ(3);
  const auto e = eta(C, C.indecomposable(2));
  EXPECT_EQ(e, C.morphism(C.indecomposable(2), C.indecomposable(3), {{1}}));
  EXPECT_TRUE(is_bimorphism(e));
  EXPECT_TRUE(classify(C, e.target()).injective);
  EXPECT_EQ(eta(C, C.indecomposable(3)), C.identity(C.indecomposable(3)));
  try {
    (void)eta(Z(), Object::free(1));
    FAIL();
  } catch (const Error &err) {
    EXPECT_EQ(err.kind(), ErrorKind::NoEnoughInjectives);
  }
  try {
    (void)epsilon(Z(), Object::free(1));
    FAIL();
  } catch (const Error &err) {
    EXPECT_EQ(err.kind(), ErrorKind::NoEnoughProjectives);
  }
}

TEST(Eta, NaturalityAndAdjunctionDimensions) {
  for (std::size_t m = 1; m <= 5; ++m) {
    const auto C = TriQ(m);
    Rng rng(m);
    for (int trial = 0; trial < 30; ++trial) {
      const Object x = random_object(C, rng, 0, 3), y = random_object(C, rng, 0, 3);
      const auto f = random_morphism(C, rng, x, y);
      EXPECT_EQ(eta(C, y) * f, injective_map(C, f) * eta(C, x));
      EXPECT_EQ(f * epsilon(C, x), epsilon(C, y) * projective_map(C, f));
      EXPECT_TRUE(is_bimorphism(eta(C, x)));
      EXPECT_TRUE(is_bimorphism(epsilon(C, x)));
      EXPECT_EQ(C.hom(projective_cover(C, x), y).dimension(), C.hom(x, injective_hull(C, y)).dimension());
    }
  }
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify(Z(), Object::free(1)), (ObjectClass{false, false}));
  EXPECT_EQ(classify(Z(), Object::free(0)), (ObjectClass{true, true}));
  for (std::size_t m = 2; m <= 5; ++m) {
    const auto C = TriQ(m);
    std::vector<std::size_t> mult(m, 0);
    mult.back() = 3;
    EXPECT_EQ(classify(C, C.object(mult)), (ObjectClass{true, false}));
    EXPECT_EQ(classify(C, C.indecomposable(1)), (ObjectClass{false, true}));
    EXPECT_EQ(classify(C, C.zero_object()), (ObjectClass{true, true}));
  }
  const auto C1 = TriQ(1);
  EXPECT_EQ(classify(C1, C1.indecomposable(1)), (ObjectClass{true, true}));
}

// --- orthogonality and universal properties --------------------------------

TEST(OrthogonalFill, Examples) {
  const auto C = Z();
  const auto f = zmap(1, 1, {{1}});
  const auto g = zmap(1, 2, {{1}, {0}});
  const auto x = zmap(1, 1, {{4}});
  const auto y = g * x; // y f = g x
  const auto fill = orthogonal_fill(C, f, g, x, y);
  ASSERT_TRUE(fill.r.has_value());
  EXPECT_TRUE(fill.unique);
  EXPECT_EQ(*fill.r, x);

  const auto id = C.identity(Object::free(2));
  const auto x2 = zmap(2, 2, {{1, 2}, {3, 4}});
  const auto fill2 = orthogonal_fill(C, id, id, x2, x2);
  ASSERT_TRUE(fill2.r.has_value());
  EXPECT_EQ(*fill2.r, x2);
}

TEST(OrthogonalFill, EpiAgainstNonSplitMonoHasNoFill) {
  const auto C = Z();
  // f = (2) is epi, g = (2) is a non-split mono, x = y = 1 commute
  const auto two = zmap(1, 1, {{2}});
  const auto one = zmap(1, 1, {{1}});
  const auto fill = orthogonal_fill(C, two, two, one, one);
  EXPECT_FALSE(fill.r.has_value());
}

TEST(OrthogonalFill, NonCommutingSquareRejected) {
  const auto C = Z();
  try {
    (void)orthogonal_fill(C, zmap(1, 1, {{2}}), zmap(1, 1, {{3}}), zmap(1, 1, {{3}}), zmap(1, 1, {{2}}));
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::Precondition);
  }
}

TEST(UniversalProperty, Examples) {
  const auto C = Z();
  const auto f = zmap(1, 1, {{2}});
  const FactorizationWitness<Integer> w = zero_kernel(C, f);
  auto rep4 = universal_property_check(C, w, f, {zmap(1, 1, {{4}})});
  EXPECT_EQ(rep4.factoring, 1u);
  EXPECT_TRUE(rep4.passed());
  auto rep3 = universal_property_check(C, w, f, {zmap(1, 1, {{3}})});
  EXPECT_EQ(rep3.factoring, 0u);
  EXPECT_TRUE(rep3.passed());
  const auto id = C.identity(Object::free(2));
  const FactorizationWitness<Integer> wi = zero_kernel(C, id);
  EXPECT_TRUE(universal_property_check(C, wi, id, {zmap(1, 2, {{3}, {5}})}).passed());
}

// --- randomized properties ------------------------------------------------

template <class T> void factorization_properties(const Category<T> &C, std::uint64_t seed, long bound) {
  Rng rng(seed);
  for (int trial = 0; trial < 60; ++trial) {
    const Object x = random_object(C, rng, 0, 4), y = random_object(C, rng, 0, 4);
    const Object mid = random_object(C, rng, 0, 3);
    const auto f = (trial % 2) ? random_morphism(C, rng, x, y, bound)
                               : random_morphism(C, rng, mid, y, bound) * random_morphism(C, rng, x, mid, bound);
    const auto zk = zero_kernel(C, f);
    const auto zc = zero_cokernel(C, f);
    EXPECT_TRUE(verify(C, zk, f)) << f;
    EXPECT_TRUE(verify(C, zc, f)) << f;
    const auto k = kernel(C, f);
    EXPECT_TRUE((f * k.map).is_zero());
    EXPECT_EQ(k.retraction * k.map, C.identity(k.map.source()));
    const auto c = cokernel(C, f);
    EXPECT_TRUE((c.map * f).is_zero());
    EXPECT_EQ(c.map * c.section, C.identity(c.map.target()));
    // the 0-cokernel equals the dual of the 0-kernel of the dual
    EXPECT_EQ(zc.s.target(), dual(zero_kernel(C, dual(f)).g.source()));
    // iso criteria agree
    const bool iso = is_iso(C, f);
    EXPECT_EQ(iso, is_split_mono(C, f) && is_epi(f));
    EXPECT_EQ(iso, is_split_epi(C, f) && is_mono(f));
  }
}

TEST(Properties, FactorizationsOverZ) { factorization_properties(Z(), 21, 9); }
TEST(Properties, FactorizationsOverQ) { factorization_properties(TriQ(4), 22, 4); }
TEST(Properties, FactorizationsOverF2) { factorization_properties(TriP(3, 2), 23, 1); }
TEST(Properties, FactorizationsOverF3) { factorization_properties(TriP(5, 3), 24, 2); }

TEST(Properties, NonSplitBimorphismsExist) {
  const auto CZ = Z();
  const auto two = zmap(1, 1, {{2}});
  EXPECT_TRUE(is_bimorphism(two) && !is_iso(CZ, two));
  for (std::size_t m = 2; m <= 5; ++m) {
    const auto C = TriQ(m);
    const auto f = C.morphism(C.indecomposable(1), C.indecomposable(2), {{1}});
    EXPECT_TRUE(is_bimorphism(f) && !is_iso(C, f));
  }
}
