#include <gtest/gtest.h>

#include "support.hpp"
#include "zeroab/suites.hpp"

using namespace zt;
using suites::SuiteParams;
using suites::SuiteReport;

namespace {

void expect_ok(const SuiteReport &r) {
  EXPECT_GT(r.cases.size(), 0u) << r.name;
  for (const auto &c : r.cases) EXPECT_TRUE(c.passed) << r.name << " " << r.ring << " case " << c.index << " seed " << c.seed << ": " << c.detail;
}

template <ExactScalar T> std::optional<Morphism<T>> random_iso(const Category<T> &C, Rng &rng, const Object &x) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    const auto t = random_morphism(C, rng, x, x, 3);
    if (is_iso(C, t)) return t;
  }
  return std::nullopt;
}

// sum over i, j of x_i y_j [cond(i, j)]
std::size_t pair_count(const Object &x, const Object &y, const std::function<bool(std::size_t, std::size_t)> &cond) {
  std::size_t n = 0;
  for (std::size_t i = 1; i <= x.m(); ++i)
    for (std::size_t j = 1; j <= y.m(); ++j)
      if (cond(i, j)) n += x.multiplicity(i) * y.multiplicity(j);
  return n;
}

} // namespace

TEST(Suites, ProjcatFamiliesOverEveryBackend) {
  const SuiteParams p{31, 60, 5, false};
  expect_ok(suites::factorization(Z(), p));
  expect_ok(suites::kernel_splitness(Z(), p));
  expect_ok(suites::universal_property(Z(), p));
  expect_ok(suites::bimorphisms(Z(), p));
  expect_ok(suites::torsion_decomposition(Z(), p));
  for (std::size_t m : {1u, 2u, 4u}) {
    expect_ok(suites::factorization(TriQ(m), p));
    expect_ok(suites::kernel_splitness(TriP(m, 5), p));
    expect_ok(suites::universal_property(TriP(m, 2), p));
    expect_ok(suites::bimorphisms(TriP(m, 3), p));
    expect_ok(suites::torsion_decomposition(TriQ(m), p));
  }
}

TEST(Suites, EFamiliesOverFields) {
  const SuiteParams p{32, 25, 3, false};
  expect_ok(suites::e_table(TriP(5, 7)));
  expect_ok(suites::nsles_exactness(TriP(3, 5), p));
  expect_ok(suites::balance(TriQ(4), p));
  expect_ok(suites::realize_summands(TriP(3, 5), p));
  expect_ok(suites::injective_resolutions(TriP(4, 2), p));
  expect_ok(suites::hilton_rees(TriP(3, 2)));
  expect_ok(suites::stable_equivalence(TriP(4, 5)));
}

TEST(Suites, ExhaustiveNsLesOverF2) { expect_ok(suites::nsles_exactness(TriP(3, 2), SuiteParams{0, 0, 2, true})); }

TEST(Suites, SameSeedSameReport) {
  const auto a = suites::torsion_decomposition(Z(), SuiteParams{9, 30, 4, false});
  const auto b = suites::torsion_decomposition(Z(), SuiteParams{9, 30, 4, false});
  ASSERT_EQ(a.cases.size(), b.cases.size());
  for (std::size_t i = 0; i < a.cases.size(); ++i) EXPECT_EQ(a.cases[i].seed, b.cases[i].seed);
  EXPECT_NE(suites::case_seed(9, 0), suites::case_seed(10, 0));
}

TEST(Suites, FailuresAreReportedWithSeeds) {
  const auto r = suites::run_cases<Integer>("always-fails", Z(), SuiteParams{3, 4, 2, false},
                                            [](Rng &, std::string &detail) {
                                              detail = "no";
                                              return false;
                                            });
  EXPECT_EQ(r.failed(), 4u);
  EXPECT_EQ(r.cases[2].seed, suites::case_seed(3, 2));
  EXPECT_EQ(r.cases[2].detail, "no");
  const auto e = suites::run_cases<Integer>("throws", Z(), SuiteParams{3, 2, 2, false}, [](Rng &, std::string &) -> bool {
    fail(ErrorKind::Precondition, "boom");
  });
  EXPECT_EQ(e.failed(), 2u);
  EXPECT_EQ(e.cases[0].detail, "Precondition: boom");
}

// E and the stable homs are additive, so their dimensions count pairs of
// summands: E(P_i, P_j) for j < i, stable inj for i <= j < m, stable proj
// for 1 < i <= j.
TEST(Additivity, DimensionsCountSummandPairs) {
  Rng rng(41);
  for (int t = 0; t < 60; ++t) {
    const std::size_t m = static_cast<std::size_t>(uniform_int(rng, 1, 5));
    const auto C = TriP(m, 3);
    const Object x = random_object(C, rng, 0, 4), y = random_object(C, rng, 0, 4);
    EXPECT_EQ(e_group(C, x, y).dimension(), pair_count(x, y, [](auto i, auto j) { return j < i; }));
    EXPECT_EQ(stable_hom(C, x, y, StableFlavor::InjectivelyStable).dimension,
              pair_count(x, y, [&](auto i, auto j) { return i <= j && j < m; }));
    EXPECT_EQ(stable_hom(C, x, y, StableFlavor::ProjectivelyStable).dimension,
              pair_count(x, y, [](auto i, auto j) { return 1 < i && i <= j; }));
    EXPECT_EQ(C.hom(x, y).dimension(), pair_count(x, y, [](auto i, auto j) { return i <= j; }));
  }
}

// Changing a presentation by automorphisms does not change the functor.
TEST(Presentations, InvariantUnderAutomorphisms) {
  Rng rng(42);
  for (int t = 0; t < 40; ++t) {
    const auto C = TriQ(3);
    const Object p1 = random_object(C, rng, 0, 3), p0 = random_object(C, rng, 1, 3);
    const auto f = random_morphism(C, rng, p1, p0, 4);
    const auto a = random_iso(C, rng, p1), b = random_iso(C, rng, p0);
    ASSERT_TRUE(a && b);
    const auto g = *b * f * *a;
    EXPECT_EQ(vertex_dimensions(C, mr(f)), vertex_dimensions(C, mr(g)));
    const FpMorphism<Rational> iso(mr(f), mr(g), *inverse(C, *a), *b);
    EXPECT_TRUE(is_iso_nat(C, iso));
    const auto d = decompose(C, mr(g));
    EXPECT_EQ(vertex_dimensions(C, mr(d.bimorphism_part)), vertex_dimensions(C, mr(decompose(C, mr(f)).bimorphism_part)));
  }
  for (int t = 0; t < 40; ++t) {
    const Object p1 = random_object(Z(), rng, 0, 3), p0 = random_object(Z(), rng, 1, 3);
    const auto f = random_morphism(Z(), rng, p1, p0, 9);
    const auto a = random_iso(Z(), rng, p1), b = random_iso(Z(), rng, p0);
    if (!a || !b) continue;
    EXPECT_EQ(evaluate(Z(), mr(f), Z().generator()), evaluate(Z(), mr(*b * f * *a), Z().generator()));
  }
}

// E(f, Y) and E(X, g) commute, as maps of a bifunctor must.
TEST(Bifunctor, VariablesCommute) {
  Rng rng(43);
  for (int t = 0; t < 40; ++t) {
    const auto C = TriP(4, 5);
    const Object x = random_object(C, rng, 0, 3), x2 = random_object(C, rng, 0, 3);
    const Object y = random_object(C, rng, 0, 3), y2 = random_object(C, rng, 0, 3);
    const auto f = random_morphism(C, rng, x, x2, 4);
    const auto g = random_morphism(C, rng, y, y2, 4);
    // E(X2, Y) -> E(X, Y) -> E(X, Y2) against E(X2, Y) -> E(X2, Y2) -> E(X, Y2)
    const auto a = e_map_cov(C, x, g).matrix * e_map_contra(C, f, y).matrix;
    const auto b = e_map_contra(C, f, y2).matrix * e_map_cov(C, x2, g).matrix;
    EXPECT_EQ(a, b);
  }
}

// Evaluating the exact sequence at P_k gives dims that alternate to zero.
TEST(NsLes, EulerCharacteristicVanishes) {
  Rng rng(44);
  for (int t = 0; t < 40; ++t) {
    const auto C = TriQ(4);
    const Object x = random_object(C, rng, 1, 3);
    const auto f = suites::random_bimorphism_from(C, rng, x);
    if (!f) continue;
    const auto s = nsles(C, *f);
    for (const auto &p : s.points) {
      long chi = 0;
      for (std::size_t i = 0; i < p.dims.size(); ++i) chi += (i % 2 ? -1 : 1) * static_cast<long>(p.dims[i]);
      EXPECT_EQ(chi, 0);
    }
  }
}
