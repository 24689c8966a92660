#include <gtest/gtest.h>

#include <random>

#include "zeroab/exactla/linalg.hpp"

using namespace zeroab;

namespace {

using IM = Matrix<Integer>;

IM random_int_matrix(std::mt19937_64 &rng, std::size_t r, std::size_t c, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  IM m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

bool is_unimodular(const IM &u) {
  const Integer d = determinant(u);
  return d == 1 || d == -1;
}

// Checks the documented HNF conventions on an output.
void expect_canonical(const HermiteForm &hf) {
  for (std::size_t j = 0; j < hf.H.cols(); ++j) {
    if (j >= hf.rank) {
      for (std::size_t i = 0; i < hf.H.rows(); ++i) EXPECT_EQ(hf.H(i, j), 0);
      continue;
    }
    const std::size_t p = hf.pivot_rows[j];
    EXPECT_GT(hf.H(p, j), 0);
    for (std::size_t i = p + 1; i < hf.H.rows(); ++i) EXPECT_EQ(hf.H(i, j), 0);
    if (j > 0) {
      EXPECT_GT(p, hf.pivot_rows[j - 1]);
    }
    for (std::size_t k = j + 1; k < hf.rank; ++k) {
      EXPECT_GE(hf.H(p, k), 0);
      EXPECT_LT(hf.H(p, k), hf.H(p, j));
    }
  }
}

} // namespace

TEST(Hermite, OneByOneIsCanonical) {
  const auto hf = hermite(IM{{2}});
  EXPECT_EQ(hf.H, (IM{{2}}));
  EXPECT_EQ(hf.rank, 1u);
}

TEST(Hermite, ZeroMatrixHasRankZero) {
  const auto hf = hermite(IM(2, 2));
  EXPECT_TRUE(hf.H.is_zero());
  EXPECT_EQ(hf.rank, 0u);
}

TEST(Hermite, GcdColumnLattice) {
  // lattice spanned by (4,0) and (6,0) is {(2k, 0)}
  const auto hf = hermite(IM{{4, 6}, {0, 0}});
  EXPECT_EQ(hf.rank, 1u);
  EXPECT_EQ(hf.H.column(0), (std::vector<Integer>{2, 0}));
  EXPECT_EQ(hf.H.column(1), (std::vector<Integer>{0, 0}));
  // small combinations of the generators land in the lattice and vice versa
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b) {
      const Integer x = 4 * a + 6 * b;
      EXPECT_TRUE(int_solve(hf.H, {x, 0}).has_value());
    }
  EXPECT_FALSE(int_solve(hf.H, {Integer(1), Integer(0)}).has_value());
}

TEST(Hermite, WitnessesAndIdempotenceOnRandomMatrices) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
    const IM a = random_int_matrix(rng, r, c, -9, 9);
    const auto hf = hermite(a);
    EXPECT_EQ(a * hf.U, hf.H);
    EXPECT_EQ(hf.U * hf.U_inverse, IM::identity(c, Integer(1)));
    EXPECT_TRUE(is_unimodular(hf.U));
    expect_canonical(hf);
    EXPECT_EQ(hermite(hf.H).H, hf.H);
  }
}

TEST(Smith, DiagonalAndIdentity) {
  EXPECT_EQ(smith(IM{{2, 0}, {0, 0}}).invariant_factors, (std::vector<Integer>{2}));
  EXPECT_EQ(smith(IM{{1, 0}, {0, 1}}).invariant_factors, (std::vector<Integer>{1, 1}));
}

TEST(Smith, TwoByTwo) {
  const IM a{{2, 4}, {6, 8}};
  const auto sf = smith(a);
  EXPECT_EQ(sf.invariant_factors, (std::vector<Integer>{2, 4}));
  EXPECT_EQ(sf.L * a * sf.R, sf.D);
}

TEST(Smith, RandomWitnessesAndDeterminant) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
    const IM a = random_int_matrix(rng, r, c, -9, 9);
    const auto sf = smith(a);
    EXPECT_EQ(sf.L * a * sf.R, sf.D);
    EXPECT_TRUE(is_unimodular(sf.L));
    EXPECT_TRUE(is_unimodular(sf.R));
    for (std::size_t i = 0; i < sf.D.rows(); ++i)
      for (std::size_t j = 0; j < sf.D.cols(); ++j)
        if (i != j) {
          EXPECT_EQ(sf.D(i, j), 0);
        }
    for (std::size_t k = 0; k + 1 < sf.invariant_factors.size(); ++k) {
      EXPECT_GT(sf.invariant_factors[k], 0);
      EXPECT_TRUE(mpz_divisible_p(sf.invariant_factors[k + 1].get_mpz_t(),
                                  sf.invariant_factors[k].get_mpz_t()));
    }
  }
  for (int trial = 0; trial < 100; ++trial) {
    const IM a = random_int_matrix(rng, 3, 3, -5, 5);
    const Integer det = determinant(a);
    if (det == 0) continue;
    Integer prod = 1;
    for (const auto &d : smith(a).invariant_factors) prod *= d;
    EXPECT_EQ(prod, abs(det));
  }
}

TEST(IntSolve, Parity) {
  EXPECT_FALSE(int_solve(IM{{2}}, {Integer(3)}).has_value());
  const auto x = int_solve(IM{{2}}, {Integer(4)});
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(*x, (std::vector<Integer>{2}));
}

TEST(IntSolve, DimensionMismatchRejected) {
  try {
    (void)int_solve(IM{{1, 2}}, {Integer(1), Integer(2)});
    FAIL() << "expected an error";
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::DimensionMismatch);
  }
}

TEST(IntKernel, SumMap) {
  const IM k = int_kernel(IM{{1, 1}});
  ASSERT_EQ(k.cols(), 1u);
  EXPECT_EQ(k(0, 0), -k(1, 0));
  EXPECT_EQ(abs(k(0, 0)), 1);
}

TEST(Field, RankOfIdentityOverF2) {
  EXPECT_EQ(field_rank(Matrix<Modular>::identity(3, Modular(1, 2))), 3u);
}

TEST(Field, RankNullityOverQAndFp) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
    const IM a = random_int_matrix(rng, r, c, -2, 2);
    const auto q = map_entries<Integer, Rational>(a, [](const Integer &x) { return Rational(x); });
    const auto kq = field_kernel(q, Rational(1));
    EXPECT_EQ(field_rank(q) + kq.cols(), c);
    EXPECT_TRUE((q * kq).is_zero());
    const auto f = map_entries<Integer, Modular>(a, [](const Integer &x) {
      return Modular(x.get_si(), 3);
    });
    const auto kf = field_kernel(f, Modular(1, 3));
    EXPECT_EQ(field_rank(f) + kf.cols(), c);
    EXPECT_TRUE((f * kf).is_zero());
  }
}

TEST(Field, SolveAndInverse) {
  const Matrix<Rational> a{{Rational(1), Rational(2)}, {Rational(3), Rational(4)}};
  const auto x = field_solve(a, {Rational(5), Rational(6)});
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(a.apply(*x), (std::vector<Rational>{5, 6}));
  const auto inv = field_inverse(a, Rational(1));
  ASSERT_TRUE(inv.has_value());
  EXPECT_EQ(a * *inv, (Matrix<Rational>::identity(2, Rational(1))));
  const Matrix<Rational> singular{{Rational(1), Rational(2)}, {Rational(2), Rational(4)}};
  EXPECT_FALSE(field_solve(singular, {Rational(1), Rational(0)}).has_value());
  EXPECT_FALSE(field_inverse(singular, Rational(1)).has_value());
}

TEST(Field, QuotientSpaceLeftmostPivots) {
  // W = span{(1,1,0)} inside Q^3: pivot at coordinate 0, so reps are e1, e2
  const Matrix<Rational> gens{{Rational(1)}, {Rational(1)}, {Rational(0)}};
  const QuotientSpace<Rational> q(3, gens);
  EXPECT_EQ(q.dimension(), 2u);
  EXPECT_EQ(q.free_coordinates(), (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(q.coordinates({Rational(1), Rational(0), Rational(0)}),
            (std::vector<Rational>{-1, 0}));
  EXPECT_TRUE(q.contains({Rational(2), Rational(2), Rational(0)}));
}

TEST(Modular, InverseAndReduction) {
  for (std::int64_t v = 1; v < 7; ++v) EXPECT_EQ(Modular(v, 7) * Modular(v, 7).inverse(), Modular(1, 7));
  EXPECT_EQ(Modular(-1, 5).value(), 4u);
  EXPECT_EQ((Modular{} + Modular(3, 5)).modulus(), 5u);
}
