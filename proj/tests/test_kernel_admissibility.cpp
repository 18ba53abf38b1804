#include <gtest/gtest.h>

#include <sstream>

#include "czkit/admissibility.hpp"
#include "czkit/kernel.hpp"

using namespace czkit;

#ifndef CZKIT_DATA_DIR
#define CZKIT_DATA_DIR "data"
#endif

TEST(Kernel, ParityAndComponents) {
  const auto K = cubic_family_kernel(2, Rational(1));
  EXPECT_EQ(K.parity(), Parity::Odd);
  ASSERT_NE(K.component(1), nullptr);
  ASSERT_NE(K.component(3), nullptr);
  EXPECT_EQ(K.component(2), nullptr);
}

TEST(Kernel, FromPolynomialRejectsNonzeroMean) {
  const auto x = MultiPoly::variable(2, 0);
  EXPECT_THROW(kernel_from_polynomial(2, x * x), CancellationError);
}

TEST(Kernel, WriteReadRoundTrip) {
  const auto K = cubic_family_kernel(3, frac(1, 2));
  std::ostringstream os;
  write_kernel(os, K);
  std::istringstream is(os.str());
  const auto L = read_kernel(is);
  EXPECT_EQ(L.components(), K.components());
}

TEST(Kernel, BadFiles) {
  std::istringstream no_dim("coef 1 1 0\n");
  EXPECT_THROW(read_kernel(no_dim), std::invalid_argument);
  std::istringstream bad_dim("dim 1\n");
  EXPECT_THROW(read_kernel(bad_dim), std::invalid_argument);
}

TEST(Kernel, SampleFilesLoad) {
  const auto K = load_kernel(std::string(CZKIT_DATA_DIR) + "/kernels/cubic_lambda1.kernel");
  EXPECT_EQ(K.components(), cubic_family_kernel(2, Rational(1)).components());
}

TEST(Admissibility, CubicFamilyLambdaOneFails) {
  for (int n : {2, 3}) {
    const auto r = check_condition_iv(cubic_family_kernel(n, Rational(1)), 14);
    EXPECT_EQ(r.verdict, Verdict::FailVanishing) << "n=" << n;
    EXPECT_LT(r.witness_value, 1e-10);
    ASSERT_EQ(r.witness.size(), static_cast<std::size_t>(n));
    EXPECT_NEAR(std::fabs(r.witness[0]), 1.0, 1e-9);
  }
}

TEST(Admissibility, CubicFamilyLambdaHalfPasses) {
  for (int n : {2, 3}) {
    const auto r = check_condition_iv(cubic_family_kernel(n, frac(1, 2)), 14);
    EXPECT_EQ(r.verdict, Verdict::Pass) << "n=" << n;
    ASSERT_TRUE(r.certified_min.has_value());
    EXPECT_GT(*r.certified_min, 0.0);
    EXPECT_GT(r.lipschitz, 0.0);
  }
}

TEST(Admissibility, NegativeLambdaBelowThresholdFails) {
  const auto r = check_condition_iv(cubic_family_kernel(2, frac(-1, 2)), 14);
  EXPECT_NE(r.verdict, Verdict::Pass);
  const auto ok = check_condition_iv(cubic_family_kernel(2, frac(-1, 4)), 14);
  EXPECT_EQ(ok.verdict, Verdict::Pass);
}

TEST(Admissibility, SingleRieszComponentPassesTrivially) {
  const auto x = MultiPoly::variable(2, 0), y = MultiPoly::variable(2, 1);
  const auto r = check_condition_iv(riesz_kernel(x * x * x - x * y * y * Rational(3)), 14);
  EXPECT_EQ(r.verdict, Verdict::Pass);
  EXPECT_EQ(r.depth_used, 0);
}

TEST(Admissibility, RejectsZeroAndEvenKernels) {
  EXPECT_THROW(check_condition_iv(KernelSpec(2, {}), 4), std::invalid_argument);
  const auto x = MultiPoly::variable(2, 0), y = MultiPoly::variable(2, 1);
  EXPECT_THROW(check_condition_iv(riesz_kernel(x * x - y * y), 4), std::invalid_argument);
}

TEST(Admissibility, ReportPrintsKeyValues) {
  const auto r = check_condition_iv(cubic_family_kernel(2, frac(1, 2)), 14);
  std::ostringstream os;
  print_report(os, r);
  EXPECT_NE(os.str().find("verdict=PASS"), std::string::npos);
}
