#include <gtest/gtest.h>

#include <numbers>
#include <random>
#include <sstream>

#include "czkit/beurling.hpp"
#include "czkit/grid.hpp"
#include "czkit/hilbert.hpp"
#include "czkit/maximal.hpp"

using namespace czkit;

namespace {
StepFunction1D random_step(std::mt19937& rng, double lo, double hi, std::size_t cells) {
  std::uniform_real_distribution<double> v(-1, 1);
  std::vector<double> vals(cells);
  for (auto& x : vals) x = v(rng);
  return StepFunction1D::uniform(lo, (hi - lo) / cells, vals);
}
const auto chi01 = StepFunction1D::indicator(0, 1, -4, 0.125, 64);
}  // namespace

TEST(StepFunction, BasicsAndErrors) {
  EXPECT_DOUBLE_EQ(chi01.integral(), 1.0);
  EXPECT_DOUBLE_EQ(chi01(0.5), 1.0);
  EXPECT_DOUBLE_EQ(chi01(10), 0.0);
  EXPECT_DOUBLE_EQ(chi01.integral(-1, 0.25), 0.25);
  EXPECT_THROW(StepFunction1D({0, 1}, {1, 2}), std::invalid_argument);
  EXPECT_THROW(StepFunction1D({0, 0, 1}, {1, 2}), std::invalid_argument);
}

TEST(GridCsv, LoadsOneAndTwoDimensions) {
  std::istringstream one("x,value\n0.5,1\n1.5,2\n3.5,4\n");
  const auto g = load_grid_csv(one);
  EXPECT_EQ(g.dim(), 1);
  EXPECT_EQ(g.nx(), 4u);
  EXPECT_DOUBLE_EQ(g.mesh(), 1.0);
  EXPECT_DOUBLE_EQ(g.integral(), 7.0);
  std::istringstream two("0.25,0.25,1\n0.75,0.25,2\n0.25,0.75,3\n");
  const auto h = load_grid_csv(two);
  EXPECT_EQ(h.dim(), 2);
  EXPECT_DOUBLE_EQ(h.at(0, 1), 3.0);
  EXPECT_DOUBLE_EQ(h.at(1, 1), 0.0);
  EXPECT_DOUBLE_EQ(h.integral(), 6 * 0.25);
  std::istringstream bad("0,1\n0.3,2\n1,3\n");
  EXPECT_THROW(load_grid_csv(bad), std::invalid_argument);
}

TEST(Hilbert, TruncatedExamples) {
  EXPECT_NEAR(hilbert_truncated(chi01, 2, 0.5), -std::log(2.0), 1e-15);
  const auto sym = StepFunction1D::indicator(-1, 1, -2, 0.25, 16);
  EXPECT_NEAR(hilbert_truncated(sym, 0, 0.3), 0.0, 1e-15);
  EXPECT_NEAR(hilbert_truncated(chi01, 0.5, 0.25), 0.0, 1e-15);
  EXPECT_THROW(hilbert_truncated(chi01, 0, 0), std::invalid_argument);
}

TEST(Hilbert, ProfileAgreesWithDirectSum) {
  std::mt19937 rng(3);
  const auto f = random_step(rng, -2, 3, 37);
  std::uniform_real_distribution<double> x(-3, 4), e(0.01, 6);
  for (int t = 0; t < 200; ++t) {
    const double xx = x(rng), ee = e(rng);
    EXPECT_NEAR(HilbertProfile(f, xx).value(ee), hilbert_truncated(f, xx, ee), 1e-12);
  }
}

TEST(Hilbert, RefinementInvariant) {
  std::mt19937 rng(5);
  const auto f = random_step(rng, -1, 2, 24);
  const auto g = f.refined(5);
  for (double x : {-0.37, 0.11, 1.5, 3.2})
    for (double e : {0.05, 0.3, 1.7}) EXPECT_NEAR(hilbert_truncated(f, x, e), hilbert_truncated(g, x, e), 1e-12);
}

TEST(Hilbert, MaximalExamples) {
  double where = 0;
  const double m = HilbertProfile(chi01, 2).maximal(&where);
  EXPECT_NEAR(m, std::log(2.0), 1e-15);
  EXPECT_GT(where, 0.0);
  EXPECT_LE(where, 1.0);
  const auto zero = StepFunction1D::uniform(0, 1, std::vector<double>(8, 0.0));
  EXPECT_EQ(hilbert_maximal(zero, 3.3), 0.0);
}

TEST(Hilbert, MaximalDominatesEveryTruncationAndGridRefinementIsMonotone) {
  std::mt19937 rng(9);
  const auto f = random_step(rng, 0, 4, 16);
  const double x = 1.37;
  const double exact = hilbert_maximal(f, x);
  for (double e = 0.001; e < 10; e *= 1.1) EXPECT_LE(std::fabs(hilbert_truncated(f, x, e)), exact + 1e-12);
  const HilbertProfile p(f, x);
  double coarse = 0, fine = 0;
  const auto g4 = TruncationGrid::logarithmic(0.01, 20, 4), g64 = TruncationGrid::logarithmic(0.01, 20, 64);
  for (double e : g4.values()) coarse = std::max(coarse, std::fabs(p.value(e)));
  for (double e : g64.values()) fine = std::max(fine, std::fabs(p.value(e)));
  EXPECT_LE(coarse, fine + 1e-15);
  EXPECT_LE(fine, exact + 1e-15);
}

TEST(Hilbert, TransformCellAveragesOfIndicator) {
  // with kernel 1/(y - x): H chi_(0,1)(x) = log|1 - x| - log|x|
  const auto edges = StepFunction1D::uniform(2, 0.5, std::vector<double>(4, 0.0)).edges();
  const auto H = hilbert_transform(chi01, edges);
  for (std::size_t c = 0; c < H.size(); ++c) {
    const double a = edges[c], b = edges[c + 1];
    auto F = [](double x) { return ((x - 1) * std::log(x - 1) - x) - (x * std::log(x) - x); };
    EXPECT_NEAR(H.values()[c], (F(b) - F(a)) / (b - a), 1e-13);
  }
}

TEST(Hilbert, CounterexampleProfileIsOddAboutOneHalf) {
  const auto g = counterexample_profile(100, 0.05, 1e-6);
  for (double y : {-3.3, 0.2, 0.41, 7.9}) EXPECT_NEAR(g(y), -g(1 - y), 1e-9 + 0.1 * std::fabs(g(y)));
  EXPECT_NEAR(g(50.0), counterexample_g(50.0), 0.05 * counterexample_g(50.0));
}

TEST(Maximal, IndicatorAtTwo) {
  const auto f = StepFunction1D::indicator(0, 1, -5, 0.1, 100);
  EXPECT_NEAR(hardy_littlewood(f, 2.0), 0.5, 1e-12);
  EXPECT_NEAR(hardy_littlewood(f, 0.5), 1.0, 1e-12);
  EXPECT_THROW(hardy_littlewood(f, 9.0), std::domain_error);
}

TEST(Maximal, ConstantsAndSharpFunction) {
  const auto c = StepFunction1D::uniform(-50, 1, std::vector<double>(100, 3.0));
  EXPECT_NEAR(hardy_littlewood(c, 0.3), 3.0, 1e-12);
  EXPECT_NEAR(iterated_M2(c, 0.3), 3.0, 1e-12);
  EXPECT_NEAR(M_sharp(StepFunction1D::uniform(0, 1, std::vector<double>(12, 3.0)), 4.5), 0.0, 1e-12);
  EXPECT_NEAR(M_delta(c, 0.3, 0.5), 3.0, 1e-12);
  EXPECT_GT(M_sharp(chi01, 0.5), 0.0);
}

TEST(Maximal, ProfileMatchesPointwiseMaximal) {
  std::mt19937 rng(21);
  const auto f = random_step(rng, 0, 3, 30);
  const auto Mf = maximal_profile(f);
  for (std::size_t c = 0; c < f.size(); c += 3) {
    const double x = 0.5 * (f.edges()[c] + f.edges()[c + 1]);
    EXPECT_NEAR(Mf(x), hardy_littlewood(f, x), 1e-12);
  }
}

TEST(Maximal, Sublinearity) {
  std::mt19937 rng(8);
  for (int t = 0; t < 5; ++t) {
    const auto f = random_step(rng, 0, 2, 20), g = random_step(rng, 0, 2, 20);
    const auto s = f + g;
    for (double x : {0.13, 0.77, 1.61}) {
      EXPECT_LE(hardy_littlewood(s, x), hardy_littlewood(f, x) + hardy_littlewood(g, x) + 1e-9);
      EXPECT_LE(iterated_M2(s, x), iterated_M2(f, x) + iterated_M2(g, x) + 1e-9);
      EXPECT_LE(M_llogl(s, x), M_llogl(f, x) + M_llogl(g, x) + 1e-9);
    }
  }
}

TEST(Maximal, DeltaSublinearityAfterPower) {
  std::mt19937 rng(4);
  const auto f = random_step(rng, 0, 2, 20), g = random_step(rng, 0, 2, 20);
  const auto s = f + g;
  const double d = 0.5;
  for (double x : {0.4, 1.3}) {
    // M_delta(f+g)^delta <= M_delta(f)^delta + M_delta(g)^delta
    EXPECT_LE(std::pow(M_delta(s, x, d), d), std::pow(M_delta(f, x, d), d) + std::pow(M_delta(g, x, d), d) + 1e-9);
  }
  EXPECT_THROW(M_delta(f, 0.4, 1.0), std::invalid_argument);
}

TEST(Orlicz, ConstantOneAndZero) {
  const auto one = StepFunction1D::uniform(0, 0.5, std::vector<double>(4, 1.0));
  EXPECT_NEAR(orlicz_llogl_average(one, 0, 2), 1.0, 1e-9);
  const auto zero = StepFunction1D::uniform(0, 0.5, std::vector<double>(4, 0.0));
  EXPECT_EQ(orlicz_llogl_average(zero, 0, 2), 0.0);
  EXPECT_THROW(orlicz_llogl_average(one, 1, 1), std::invalid_argument);
}

TEST(Orlicz, MonotoneInScaleAndAboveAverage) {
  std::mt19937 rng(12);
  const auto f = random_step(rng, 0, 1, 10);
  double prev = 0;
  for (double c : {0.1, 0.5, 1.0, 2.0, 10.0}) {
    const double v = orlicz_llogl_average(c * f, 0, 1);
    EXPECT_GT(v, prev);
    EXPECT_GE(v, (c * f).abs_integral() - 1e-12);
    prev = v;
  }
}

TEST(Orlicz, MaximalComparableToIteratedMaximal) {
  std::mt19937 rng(31);
  for (int level : {1, 2}) {
    for (int t = 0; t < 3; ++t) {
      const auto f = random_step(rng, 0, 2, 16).refined(level);
      for (double x : {0.31, 1.07, 1.83}) {
        const double ratio = M_llogl(f, x) / iterated_M2(f, x);
        EXPECT_GT(ratio, 1.0 / 8);
        EXPECT_LT(ratio, 8.0);
      }
    }
  }
}

TEST(Beurling, DiskOutsideMatchesClosedForm) {
  const double h = 4.0 / 160;
  const auto D = ComplexField::from(disk_indicator(-2, -2, h, 160, 160, {0, 0}, 1.0));
  const std::complex<double> z(2.0, 0.5);
  const auto v = beurling_truncated(D, z, h);
  EXPECT_LT(std::abs(v - std::numbers::pi / (z * z)), 1e-3);
  EXPECT_EQ(std::abs(beurling_truncated(D, {0, 0}, 1.5)), 0.0);
}

TEST(Beurling, RadialDataGivesZero) {
  auto gauss = [](double h) {
    const auto n = static_cast<std::size_t>(12 / h);
    return GridFunction::sample(-6, -6, h, n, n, [](double x, double y) { return std::exp(-(x * x + y * y)); });
  };
  const auto G = gauss(0.05), F = gauss(0.025);
  for (double e : {0.05, 0.3, 1.1}) {
    EXPECT_LT(std::abs(beurling_truncated(G, {0, 0}, e)), 1e-10);
    // the square grid keeps the fourfold angular mode of the B^2 kernel; it vanishes with the mesh
    const double coarse = std::abs(beurling_sq_truncated(G, {0, 0}, e));
    const double fine = std::abs(beurling_sq_truncated(F, {0, 0}, e));
    EXPECT_LT(coarse, 0.01) << "eps=" << e;
    if (e > 0.1) {
      EXPECT_LT(fine, 0.75 * coarse) << "eps=" << e;
    }
  }
  EXPECT_THROW(beurling_truncated(G, {0, 0}, 0.01), std::invalid_argument);
}

TEST(Beurling, ExactCellIntegralsAgreeWithFineMidpoint) {
  for (auto k : {BeurlingKernel::B, BeurlingKernel::BSquared}) {
    const double x1 = -1.3, x2 = -0.9, y1 = -0.2, y2 = 0.3;  // box straddling the negative axis
    std::complex<double> s = 0;
    const int M = 400;
    for (int a = 0; a < M; ++a)
      for (int b = 0; b < M; ++b) {
        const std::complex<double> w(x1 + (a + 0.5) * (x2 - x1) / M, y1 + (b + 0.5) * (y2 - y1) / M);
        s += detail::beurling_kernel(k, w);
      }
    s *= (x2 - x1) * (y2 - y1) / (M * M);
    EXPECT_LT(std::abs(s - detail::beurling_rect(k, x1, x2, y1, y2)), 1e-5);
  }
}

TEST(Beurling, ProfileAgreesWithDirectEvaluation) {
  const auto D = ComplexField::from(disk_indicator(-2, -2, 0.1, 40, 40, {0.2, -0.1}, 0.9));
  const std::complex<double> z(0.37, 0.21);
  const BeurlingProfile p(D, z, BeurlingKernel::B), q(D, z, BeurlingKernel::BSquared);
  for (double e : {0.05, 0.13, 0.5, 1.2, 3.0}) {
    EXPECT_LT(std::abs(p.value(e) - beurling_truncated(D, z, e)), 1e-12);
    EXPECT_LT(std::abs(q.value(e) - beurling_sq_truncated(D, z, e)), 1e-12);
  }
}

TEST(Beurling, PrincipalValueOfDisk) {
  const auto D = ComplexField::from(disk_indicator(-2, -2, 0.05, 80, 80, {0, 0}, 1.0));
  const auto B = beurling_transform(D);
  EXPECT_LT(std::abs(B.at(40, 40)), 1e-4);
  const auto c = B.center(75, 40);
  EXPECT_LT(std::abs(B.at(75, 40) - std::numbers::pi / (c * c)) / std::abs(std::numbers::pi / (c * c)), 0.01);
}

TEST(Maximal2D, DiskAverages) {
  const auto D = disk_indicator(-2, -2, 0.1, 40, 40, {0, 0}, 1.0);
  EXPECT_NEAR(hardy_littlewood(D, {0.01, 0.02}), 1.0, 1e-12);
  const double far = hardy_littlewood(D, {1.9, 1.9});
  EXPECT_GT(far, 0.0);
  EXPECT_LT(far, 0.5);
  EXPECT_THROW(hardy_littlewood(D, {5.0, 0.0}), std::domain_error);
}
