#include <gtest/gtest.h>

#include "hecke/laurent.hpp"
#include "test_util.hpp"

using namespace hecke;
using hecke::testutil::lp;
using hecke::testutil::mat;

TEST(LaurentPoly, NormalFormAndAccessors) {
  auto f = make_field(3);
  const LaurentPoly p = lp(f, {0, 0, 2, 0, 1, 0}, -3);  // 2t^-1 + t
  EXPECT_EQ(p.valuation(), -1);
  EXPECT_EQ(p.degree(), 1);
  EXPECT_EQ(p.coeffs().size(), 3u);
  EXPECT_EQ(p.leading(), f->one());
  EXPECT_EQ(p.trailing(), f->from_int(2));
  EXPECT_EQ(p.to_string(), "2*t^-1 + t");
  EXPECT_TRUE(lp(f, {0, 0}).is_zero());
  EXPECT_THROW((void)LaurentPoly(f).degree(), ArithmeticError);
  EXPECT_THROW((void)LaurentPoly(f).valuation(), ArithmeticError);
}

TEST(LaurentPoly, ArithmeticExamples) {
  auto f2 = make_field(2);
  EXPECT_EQ(LaurentPoly::t_pow(f2, 1) * LaurentPoly::t_pow(f2, -1), LaurentPoly::one(f2));
  EXPECT_EQ(lp(f2, {1, 1}) + lp(f2, {0, 1}), LaurentPoly::one(f2));
  auto f3 = make_field(3);
  EXPECT_EQ(lp(f3, {1, 1}) * lp(f3, {1, 2}), lp(f3, {1, 0, 2}));
}

TEST(LaurentPoly, RingLawsRandom) {
  std::mt19937_64 rng(11);
  for (auto f : {make_field(2), make_field(5), make_field(2, 2)}) {
    for (int k = 0; k < 200; ++k) {
      auto a = testutil::random_poly(f, rng, -3, 3), b = testutil::random_poly(f, rng, -2, 4), c = testutil::random_poly(f, rng, 0, 2);
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a - a, LaurentPoly(f));
      EXPECT_EQ(a + (-a), LaurentPoly(f));
      if (!b.is_zero()) {
        EXPECT_EQ((a * b).divide_exact(b), a);
        if (!a.is_zero()) EXPECT_EQ((a * b).degree(), a.degree() + b.degree());
      }
    }
  }
}

TEST(LaurentPoly, DivideExactRejectsNonMultiples) {
  auto f = make_field(3);
  EXPECT_THROW((void)lp(f, {1, 1}).divide_exact(lp(f, {1, 0, 1})), ArithmeticError);
  EXPECT_THROW((void)lp(f, {1}).divide_exact(LaurentPoly(f)), ArithmeticError);
}

TEST(LaurentPoly, SubringMembership) {
  auto f = make_field(2);
  EXPECT_TRUE(lp(f, {1, 1}).in_r_plus());
  EXPECT_FALSE(lp(f, {1, 1}).in_r_minus());
  EXPECT_TRUE(lp(f, {1, 1}, -1).in_r_minus());
  EXPECT_TRUE(LaurentPoly::one(f).in_r_plus() && LaurentPoly::one(f).in_r_minus());
}

TEST(LaurentPoly, MixedFieldsRejected) {
  auto a = LaurentPoly::one(make_field(2)), b = LaurentPoly::one(make_field(3));
  EXPECT_THROW((void)(a + b), ArithmeticError);
}

TEST(LaurentMat, ProductExamples) {
  auto f = make_field(2);
  const auto t = [&](int k) { return LaurentPoly::t_pow(f, k); };
  const LaurentPoly one = LaurentPoly::one(f), zero(f);
  const LaurentMat a = mat(f, {{t(1), one}, {zero, one}});
  EXPECT_EQ(a * LaurentMat::identity(f, 2), a);
  const std::vector<int> x{2, -1, 0}, y{1, 1, 3}, xy{3, 0, 3};
  EXPECT_EQ(LaurentMat::diag_t(f, x) * LaurentMat::diag_t(f, y), LaurentMat::diag_t(f, xy));
  const std::vector<int> g{1, 0};
  EXPECT_EQ(LaurentMat::diag_t(f, g) * a, mat(f, {{t(2), t(1)}, {zero, one}}));
}

TEST(LaurentMat, DeterminantExamples) {
  auto f = make_field(2);
  EXPECT_EQ(mat_det(LaurentMat::identity(f, 4)), LaurentPoly::one(f));
  const std::vector<int> d{3, 1, -2};
  EXPECT_EQ(mat_det(LaurentMat::diag_t(f, d)), LaurentPoly::t_pow(f, 2));
  EXPECT_EQ(mat_det(mat(f, {{LaurentPoly::t_pow(f, 1), LaurentPoly::one(f)}, {LaurentPoly(f), LaurentPoly::one(f)}})), LaurentPoly::t_pow(f, 1));
}

TEST(LaurentMat, BareissMatchesCofactorAndIsMultiplicative) {
  std::mt19937_64 rng(5);
  for (auto f : {make_field(2), make_field(3), make_field(2, 2)}) {
    for (int n = 1; n <= 4; ++n) {
      for (int k = 0; k < 25; ++k) {
        auto a = testutil::random_mat(f, n, rng, -1, 2), b = testutil::random_mat(f, n, rng, 0, 1);
        ASSERT_EQ(mat_det(a), det_cofactor(a)) << a.to_string();
        ASSERT_EQ(mat_det(a * b), mat_det(a) * mat_det(b));
      }
    }
  }
}

TEST(LaurentMat, SingularMatricesHaveZeroDeterminant) {
  auto f = make_field(3);
  const auto p = lp(f, {1, 2}, -1), q = lp(f, {0, 1, 1});
  const LaurentMat m = mat(f, {{p, q}, {p * q, q * q}});
  EXPECT_TRUE(mat_det(m).is_zero());
  EXPECT_THROW((void)inverse(m), ArithmeticError);
}

TEST(LaurentMat, InverseOfUnimodular) {
  std::mt19937_64 rng(9);
  auto f = make_field(5);
  for (int n = 1; n <= 4; ++n) {
    for (int k = 0; k < 10; ++k) {
      const std::vector<int> shifts{2, -1, 0, 3};
      LaurentMat m = testutil::random_unimodular_plus(f, n, rng, 6, 2) *
                     LaurentMat::diag_t(f, std::span<const int>(shifts.data(), static_cast<std::size_t>(n))) *
                     testutil::random_unimodular_minus(f, n, rng, 6, 2);
      EXPECT_EQ(m * inverse(m), LaurentMat::identity(f, n));
      EXPECT_EQ(inverse(m) * m, LaurentMat::identity(f, n));
      LaurentMat det_i(f, n);
      for (int i = 0; i < n; ++i) det_i(i, i) = mat_det(m);
      EXPECT_EQ(m * adjugate(m), det_i);
    }
  }
}

TEST(LaurentMat, GlrUnitExamples) {
  auto f = make_field(3);
  const LaurentPoly one = LaurentPoly::one(f), zero(f);
  for (Subring s : {Subring::RPlus, Subring::RMinus, Subring::RPlusMinus}) EXPECT_TRUE(is_glr_unit(LaurentMat::identity(f, 3), s));
  const LaurentMat u = mat(f, {{one, -LaurentPoly::t_pow(f, 1)}, {zero, one}});
  EXPECT_TRUE(is_glr_unit(u, Subring::RPlus));
  EXPECT_FALSE(is_glr_unit(u, Subring::RMinus));
  const std::vector<int> d{1, 0};
  const LaurentMat dt = LaurentMat::diag_t(f, d);
  EXPECT_FALSE(is_glr_unit(dt, Subring::RPlus));
  EXPECT_FALSE(is_glr_unit(dt, Subring::RMinus));
  EXPECT_TRUE(is_glr_unit(dt, Subring::RPlusMinus));
  EXPECT_FALSE(is_glr_unit(mat(f, {{one, one}, {one, one}}), Subring::RPlusMinus));
}

TEST(LaurentMat, PermutationAndMinor) {
  auto f = make_field(2);
  const std::vector<int> perm{2, 0, 1};
  const LaurentMat p = LaurentMat::permutation(f, perm);
  EXPECT_EQ(p(0, 2), LaurentPoly::one(f));
  EXPECT_TRUE(p(0, 0).is_zero());
  EXPECT_TRUE(is_glr_unit(p, Subring::RPlus) && is_glr_unit(p, Subring::RMinus));
  EXPECT_EQ(p.minor_matrix(0, 2).size(), 2);
}
