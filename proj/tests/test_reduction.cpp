#include <gtest/gtest.h>

#include <algorithm>

#include "hecke/reduction.hpp"
#include "test_util.hpp"

using namespace hecke;
using hecke::testutil::lp;
using hecke::testutil::mat;

TEST(Reduction, IdentityIsTrivial) {
  auto f = make_field(3);
  for (int n = 1; n <= 4; ++n) {
    const auto w = birkhoff_reduce(LaurentMat::identity(f, n));
    EXPECT_EQ(w.d, Vertex(std::vector<int>(n, 0)));
    EXPECT_EQ(w.left, LaurentMat::identity(f, n));
    EXPECT_EQ(w.right, LaurentMat::identity(f, n));
    EXPECT_EQ(splitting_type_cohomology(LaurentMat::identity(f, n)), w.d);
  }
}

TEST(Reduction, SmallExamples) {
  auto f = make_field(2);
  const LaurentPoly one = LaurentPoly::one(f), zero(f);
  const auto t = [&](int k) { return LaurentPoly::t_pow(f, k); };
  const LaurentMat a = mat(f, {{t(2), t(1)}, {zero, one}});
  EXPECT_EQ(birkhoff_reduce(a).d, Vertex({1, 1}));
  EXPECT_EQ(splitting_type_cohomology(a), Vertex({1, 1}));
  const LaurentMat b = mat(f, {{t(1), one}, {zero, one}});
  EXPECT_EQ(birkhoff_reduce(b).d, Vertex({1, 0}));
  EXPECT_EQ(splitting_type_cohomology(b), Vertex({1, 0}));
  const std::vector<int> d{3, 1, 0};
  EXPECT_EQ(splitting_type_cohomology(LaurentMat::diag_t(f, d)), Vertex({3, 1, 0}));
  const std::vector<int> unsorted{-2, 5, 0};
  EXPECT_EQ(birkhoff_reduce(LaurentMat::diag_t(f, unsorted)).d, Vertex({5, 0, -2}));
}

TEST(Reduction, WitnessCertifiesFactorization) {
  auto f = make_field(2);
  // det = (1/t + 1) t - t = 1
  const LaurentMat m = mat(f, {{lp(f, {1, 1}, -1), LaurentPoly::one(f)}, {lp(f, {0, 1}), lp(f, {0, 1})}});
  ASSERT_EQ(mat_det(m), LaurentPoly::one(f));
  const auto w = birkhoff_reduce(m);
  EXPECT_EQ(w.check(m), "");
}

TEST(Reduction, RecoversPlantedSplittingType) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> expo(-4, 4);
  for (auto f : {make_field(2), make_field(3), make_field(2, 2), make_field(5)}) {
    for (int n = 1; n <= 4; ++n) {
      for (int k = 0; k < 30; ++k) {
        std::vector<int> d(n);
        for (int& x : d) x = expo(rng);
        const LaurentMat a = testutil::random_unimodular_minus(f, n, rng, 2 * n, 2);
        const LaurentMat b = testutil::random_unimodular_plus(f, n, rng, 2 * n, 2);
        const LaurentMat perm_left = LaurentMat::permutation(f, [&] {
          std::vector<int> p(n);
          for (int i = 0; i < n; ++i) p[i] = i;
          std::shuffle(p.begin(), p.end(), rng);
          return p;
        }());
        const LaurentMat m = perm_left * a * LaurentMat::diag_t(f, d) * b;
        const Vertex want = Vertex::sorted(d);
        const auto w = birkhoff_reduce(m);
        ASSERT_EQ(w.d, want) << m.to_string();
        ASSERT_EQ(w.check(m), "") << m.to_string();
        ASSERT_EQ(splitting_type_cohomology(m), want) << m.to_string();
      }
    }
  }
}

TEST(Reduction, StableUnderUnimodularFactors) {
  std::mt19937_64 rng(77);
  auto f = make_field(3);
  for (int n = 2; n <= 3; ++n) {
    for (int k = 0; k < 20; ++k) {
      std::vector<int> gaps(n);
      for (int i = 0; i < n; ++i) gaps[i] = 2 * (n - i);
      const LaurentMat base = testutil::random_unimodular_plus(f, n, rng, 4, 3) * LaurentMat::diag_t(f, gaps);
      const Vertex d0 = birkhoff_reduce(base).d;
      const LaurentMat left = testutil::random_unimodular_minus(f, n, rng, 4, 3);
      const LaurentMat right = testutil::random_unimodular_plus(f, n, rng, 4, 3);
      EXPECT_EQ(birkhoff_reduce(left * base).d, d0);
      EXPECT_EQ(birkhoff_reduce(base * right).d, d0);
      EXPECT_EQ(birkhoff_reduce(left * base * right).d, d0);
    }
  }
}

TEST(Reduction, DegreeSumEqualsDeterminantExponent) {
  std::mt19937_64 rng(3);
  auto f = make_field(2);
  for (int k = 0; k < 50; ++k) {
    const LaurentMat m = testutil::random_unimodular_plus(f, 3, rng, 5, 2) * LaurentMat::diag_t(f, std::vector<int>{4, -1, 2}) *
                         testutil::random_unimodular_minus(f, 3, rng, 5, 2);
    const auto w = birkhoff_reduce(m);
    EXPECT_EQ(w.d.sum(), mat_det(m).valuation());
  }
}

TEST(Reduction, RejectsNonUnits) {
  auto f = make_field(3);
  const LaurentPoly one = LaurentPoly::one(f);
  EXPECT_THROW(birkhoff_reduce(mat(f, {{one, one}, {one, one}})), ReductionError);
  EXPECT_THROW(birkhoff_reduce(mat(f, {{lp(f, {1, 1}), LaurentPoly(f)}, {LaurentPoly(f), one}})), ReductionError);
  EXPECT_THROW(splitting_type_cohomology(mat(f, {{lp(f, {1, 1}), LaurentPoly(f)}, {LaurentPoly(f), one}})), ReductionError);
}
