#include <gtest/gtest.h>

#include <random>

#include "czkit/exact.hpp"

using namespace czkit;

TEST(Frac, Canonicalizes) {
  EXPECT_EQ(frac(6, 4), Rational(3, 2));
  EXPECT_EQ(frac(-6, -4), Rational(3, 2));
  EXPECT_EQ(frac(2, -4).get_str(), "-1/2");
  EXPECT_THROW(frac(1, 0), std::exception);
}

TEST(Binomials, GeneralizedAndFalling) {
  EXPECT_EQ(binom(5, 2), Rational(10));
  EXPECT_EQ(binom(3, 5), Rational(0));
  EXPECT_EQ(gen_binom(frac(1, 2), 2), frac(-1, 8));
  EXPECT_EQ(gen_binom(Rational(-1), 3), Rational(-1));
  EXPECT_EQ(falling(Rational(5), 3), Rational(60));
  EXPECT_EQ(factorial(10), Integer(3628800));
  EXPECT_EQ(pow2(-3), frac(1, 8));
}

TEST(GammaExact, IntegersAndHalfIntegers) {
  EXPECT_EQ(gamma_exact(Rational(5)), SymScalar(Rational(24)));
  EXPECT_EQ(gamma_exact(frac(1, 2)), SymScalar::sqrt_pi());
  EXPECT_EQ(gamma_exact(frac(5, 2)), SymScalar(frac(3, 4), 1));
  EXPECT_THROW(gamma_exact(frac(-1, 2)), std::exception);
  EXPECT_THROW(gamma_exact(Rational(0)), std::exception);
  EXPECT_THROW(gamma_exact(frac(1, 3)), std::exception);
}

TEST(GammaExact, NonCanonicalInputIsAccepted) {
  Rational raw(10, 4);  // mpq_class does not reduce on construction
  EXPECT_EQ(gamma_exact(raw), gamma_exact(frac(5, 2)));
}

TEST(SymScalar, ArithmeticAndNumericValue) {
  const SymScalar a(frac(3, 2), 1, 1, 1);  // 3/2 sqrt(pi) sqrt(2) i
  const SymScalar b = a * a.inverse();
  EXPECT_EQ(b, SymScalar(Rational(1)));
  const auto z = a.to_complex();
  EXPECT_NEAR(static_cast<double>(z.imag()), 1.5 * std::sqrt(M_PI) * std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(static_cast<double>(z.real()), 0.0, 1e-15);
  EXPECT_TRUE((SymScalar::i_unit() * SymScalar::i_unit()) == SymScalar(Rational(-1)));
  EXPECT_TRUE(SymScalar().is_zero());
}

TEST(SymSum, CollectsLikeTerms) {
  SymSum s;
  s += SymScalar::pi();
  s += SymScalar(Rational(2), 2);
  s -= SymScalar(Rational(3), 2);
  EXPECT_TRUE(s.is_zero());
  s += SymScalar(Rational(1));
  s += SymScalar::sqrt_pi();
  EXPECT_EQ(s.scalars().size(), 2u);
}

TEST(Multipliers, KnownValues) {
  EXPECT_EQ(gamma_j(1, 2), SymScalar(Rational(-2), 2, 0, 1));  // -2 pi i
  EXPECT_EQ(gamma_j(2, 2), SymScalar(Rational(-1), 2));        // -pi
  EXPECT_EQ(c_n(2), SymScalar(frac(1, 2), -2));
  EXPECT_EQ(c_n(3), SymScalar(frac(1, 2), -4));
  EXPECT_EQ(c_n(5), SymScalar(frac(1, 2), -6));
}

TEST(Multipliers, RatioGamma3OverGamma1) {
  for (int n = 2; n <= 8; ++n) EXPECT_EQ(gamma_j(3, n) / gamma_j(1, n), SymScalar(frac(-1, n + 1))) << "n=" << n;
}

TEST(Multipliers, ParityProperty) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> dim(2, 9);
  for (int t = 0; t < 40; ++t) {
    const int n = dim(rng);
    for (int j = 1; j <= 12; ++j) {
      const SymScalar g = gamma_j(j, n);
      EXPECT_FALSE(g.is_zero());
      EXPECT_EQ(g.is_imaginary(), j % 2 == 1) << "j=" << j << " n=" << n;
    }
  }
}
