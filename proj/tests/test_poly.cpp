#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "czkit/poly.hpp"

using namespace czkit;

namespace {
MultiPoly random_homogeneous(std::mt19937& rng, int n, int d) {
  std::uniform_int_distribution<int> c(-5, 5), e(0, d);
  MultiPoly p(n);
  for (int t = 0; t < 6; ++t) {
    Exponent ex{};
    int left = d;
    for (int i = 0; i + 1 < n; ++i) {
      const int k = std::min(left, e(rng) % (left + 1));
      ex[i] = static_cast<std::uint16_t>(k);
      left -= k;
    }
    ex[n - 1] = static_cast<std::uint16_t>(left);
    p += MultiPoly::monomial(n, ex, Rational(c(rng)));
  }
  return p;
}
}  // namespace

TEST(MultiPoly, BasicAlgebra) {
  const auto x = MultiPoly::variable(2, 0), y = MultiPoly::variable(2, 1);
  const auto p = (x + y) * (x - y);
  EXPECT_EQ(p, x * x - y * y);
  EXPECT_EQ(p.degree(), 2);
  EXPECT_TRUE(p.is_homogeneous());
  EXPECT_EQ(p.laplacian(), MultiPoly(2));
  EXPECT_EQ(MultiPoly::radial_power(2, 1), x * x + y * y);
  EXPECT_DOUBLE_EQ(p.eval({3.0, 1.0}), 8.0);
  EXPECT_EQ(p.derivative(0), x * Rational(2));
}

TEST(MultiPoly, ParseWriteRoundTrip) {
  const auto p = parse_poly("coef 3/2 2 1\ncoef -1 0 3\n", 2);
  std::ostringstream os;
  write_poly(os, p);
  EXPECT_EQ(parse_poly(os.str(), 2), p);
  EXPECT_THROW(parse_poly("coef 1 1\n", 2), std::invalid_argument);
  EXPECT_THROW(parse_rational("1/0"), std::exception);
}

TEST(Division, ExactAndInexact) {
  const auto x = MultiPoly::variable(2, 0), y = MultiPoly::variable(2, 1);
  const auto q = divide_exact(x * x * x - x * y * y, x);
  ASSERT_TRUE(q.has_value());
  EXPECT_EQ(*q, x * x - y * y);
  EXPECT_FALSE(divide_exact(x * x + y, x).has_value());
}

TEST(Harmonic, DecompositionRecombines) {
  std::mt19937 rng(11);
  for (int n = 2; n <= 4; ++n)
    for (int d = 1; d <= 5; ++d) {
      const auto P = random_homogeneous(rng, n, d);
      const auto pieces = harmonic_decompose(P);
      EXPECT_EQ(recombine(n, pieces), P) << "n=" << n << " d=" << d;
      for (const auto& piece : pieces) EXPECT_TRUE(piece.component.poly().laplacian().is_zero());
    }
}

TEST(Harmonic, ProjectionOfHarmonicIsIdentity) {
  const auto x = MultiPoly::variable(3, 0), y = MultiPoly::variable(3, 1);
  const auto h = x * x * x - x * y * y * Rational(3);
  EXPECT_EQ(harmonic_projection(h), h);
}

TEST(Sphere, MeansOfMonomials) {
  const auto x = MultiPoly::variable(3, 0);
  EXPECT_EQ(sphere_mean(x * x), frac(1, 3));
  EXPECT_EQ(sphere_mean(x * x * x * x), frac(1, 5));
  EXPECT_EQ(sphere_mean(x), Rational(0));
  EXPECT_EQ(sphere_mean(MultiPoly::radial_power(4, 2)), Rational(1));
}
