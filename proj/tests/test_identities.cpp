#include <gtest/gtest.h>

#include "czkit/identities.hpp"
#include "czkit/radial.hpp"

using namespace czkit;

TEST(Fundamental, LaplacianPowersHitTheKernel) {
  for (int n = 2; n <= 5; ++n)
    for (int N = 1; N <= 6; ++N) EXPECT_TRUE(radial_laplacian_check(n, N)) << "n=" << n << " N=" << N;
}

TEST(Fundamental, RegimesAreClassified) {
  EXPECT_EQ(fundamental_coeffs(2, 3).regime, 1);
  EXPECT_EQ(fundamental_coeffs(7, 1).regime, 2);
  const auto c = fundamental_coeffs(3, 2);
  EXPECT_EQ(c.regime, 3);
  EXPECT_TRUE(c.alpha_free);
  EXPECT_NE(c.beta, 0);
  EXPECT_THROW(fundamental_coeffs(1, 1), std::invalid_argument);
}

TEST(Bessel, HalfOrderClosedForm) {
  for (double r : {0.1, 1.0, 5.0}) EXPECT_NEAR(bessel_series_eval(frac(1, 2), r, 30), bessel_half_closed_form(r), 1e-12);
}

TEST(Bessel, ValueAtZero) {
  for (int twice_q = 1; twice_q <= 12; ++twice_q) {
    const Rational q = frac(twice_q, 2);
    EXPECT_EQ(bessel_at_zero(q), (SymScalar::two_pow(q) * gamma_exact(q + 1)).inverse());
    EXPECT_EQ(bessel_series_coeff(q, 0), bessel_at_zero(q));
  }
}

TEST(RadialFamily, ParsingAndErrors) {
  EXPECT_EQ(parse_radial_family("r^4").index, Rational(2));
  EXPECT_EQ(parse_radial_family("G_3/2").kind, RadialAtom::Kind::Bessel);
  EXPECT_THROW(parse_radial_family("r^3"), std::invalid_argument);
  EXPECT_THROW(parse_radial_family("G_1/3"), std::invalid_argument);
  EXPECT_THROW(parse_radial_family("exp(r)"), std::invalid_argument);
}

TEST(RadialFamily, OperatorOnPowersMatchesDirectDifferentiation) {
  // L(d) |x|^4 with L = x1^2 equals d^2/dx1^2 |x|^4
  const int n = 3;
  const auto x1 = MultiPoly::variable(n, 0);
  const auto terms = lyons_zumbrun_apply(x1 * x1, parse_radial_family("r^4"));
  const auto direct = MultiPoly::radial_power(n, 2).derivative(0).derivative(0);
  EXPECT_EQ(radial_terms_to_poly(n, terms), direct);
}

TEST(Identities, TaylorOracleForAL) {
  for (int n = 2; n <= 5; ++n)
    for (int N = 1; N <= 6; ++N) EXPECT_TRUE(verify_AL(n, N).ok) << "n=" << n << " N=" << N;
}

TEST(Identities, BinomialFamilies) {
  for (int N = 1; N <= 6; ++N)
    for (int L = N + 1; L <= 2 * N; ++L) {
      EXPECT_TRUE(verify_falling_binomial_sum(frac(1, 2), N, L));
      EXPECT_TRUE(verify_falling_binomial_sum(Rational(2), N, L));
      if (N >= 2) {
        EXPECT_TRUE(verify_factorial_binomial_sum(2, N, L));
      }
    }
  EXPECT_TRUE(verify_triple_binomial(3, 4, frac(1, 3), frac(-5, 2)));
}

TEST(Identities, ConstantsAndGammaRatioSums) {
  for (int n = 2; n <= 5; ++n)
    for (int N = 1; N <= 5; ++N) {
      EXPECT_TRUE(verify_C_constants(n, N));
      EXPECT_TRUE(verify_c_forms(n, N));
      for (int j = 0; j < N; ++j) EXPECT_TRUE(verify_C_sum(n, N, j));
    }
}

TEST(Stabilization, CoefficientVectorsAreIndependentOfN) {
  for (int n = 2; n <= 3; ++n)
    for (int p = 0; p <= 4; ++p) {
      const auto base = compute_a_coeff(n, p + 1, p);
      EXPECT_EQ(compute_a_coeff(n, p + 2, p), base);
      EXPECT_EQ(compute_a_coeff(n, p + 3, p), base);
      EXPECT_EQ(a_coeff_closed(n, p), base) << "n=" << n << " p=" << p;
    }
}

TEST(Stabilization, ClosedFormCarriesFactorNMinusOne) {
  for (int n = 2; n <= 5; ++n) {
    const auto ours = a_coeff_closed(n, 2);
    const auto bare = a_coeff_closed(n, 2, true);
    auto scaled = bare;
    scaled *= SymScalar(n - 1);
    EXPECT_EQ(ours, scaled) << "n=" << n;
  }
}

TEST(SizeBounds, HoldForTheCubicFamily) {
  const std::vector<double> norms{1.0, 1.5, 0.75};
  for (int N = 1; N <= 4; ++N) {
    const auto rep = verify_size_bounds(2, N, norms, 6);
    EXPECT_TRUE(rep.ok) << "N=" << N << " margin=" << rep.margin;
    EXPECT_GT(rep.C, 0.0);
  }
}

TEST(Suite, AllChecksPass) {
  const auto results = run_identity_suite();
  EXPECT_GT(results.size(), 300u);
  for (const auto& r : results) EXPECT_TRUE(r.ok) << r.name << " " << r.params;
}
