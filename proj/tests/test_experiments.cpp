#include <gtest/gtest.h>

#include <sstream>

#include "czkit/experiments.hpp"

using namespace czkit;

namespace {
std::string failures(const ExperimentResult& r) {
  std::ostringstream os;
  for (const auto& c : r.checks)
    if (!c.ok) os << c.name << " (" << c.detail << ") ";
  return os.str();
}
}  // namespace

TEST(Experiments, RegistryRejectsUnknownNames) {
  EXPECT_EQ(experiment_names().size(), 5u);
  EXPECT_THROW(run_experiment("nope"), std::invalid_argument);
}

TEST(Experiments, FarFieldTerms) {
  EXPECT_LE(detail::far_field_B(100), 0.01);
  EXPECT_GT(detail::far_field_A(10), 0.0);
  EXPECT_GT(detail::far_field_A(10), detail::far_field_A(1000) * std::log(10.0) / std::log(1000.0) * 0.5);
}

TEST(Experiments, SuperlevelAboveSupIsEmpty) {
  const std::vector<double> x{0, 1, 2, 3};
  const std::vector<double> v{0.5, 2.0, 1.0, 0.6};
  EXPECT_EQ(detail::superlevel_length(x, v, 5.0), 0.0);
  EXPECT_DOUBLE_EQ(detail::superlevel_length(x, v, 0.1), 3.0);
}

TEST(Experiments, EveryCheckPassesAtDefaultResolution) {
  for (const auto& name : experiment_names()) {
    const auto r = run_experiment(name);
    EXPECT_TRUE(r.ok()) << name << ": " << failures(r);
    EXPECT_FALSE(r.rows.empty()) << name;
    for (const auto& row : r.rows) EXPECT_EQ(row.size(), r.columns.size()) << name;
  }
}

TEST(Experiments, CsvIsDeterministic) {
  for (const auto& name : {"counterexample_growth", "beurling_composition"}) {
    std::ostringstream a, b;
    run_experiment(name).write_csv(a);
    run_experiment(name).write_csv(b);
    EXPECT_EQ(a.str(), b.str()) << name;
  }
}

TEST(Experiments, StatisticsStableUnderRefinement) {
  ExperimentConfig fine;
  fine.mesh = 0.5;
  const auto p0 = exp_pointwise_ratios(PointwiseKernel::Both), p1 = exp_pointwise_ratios(PointwiseKernel::Both, fine);
  for (const char* key : {"sup_hilbert_over_M2", "sup_beurling_over_M"})
    EXPECT_NEAR(p1.stat(key) / p0.stat(key), 1.0, 0.2) << key;
  const auto c0 = exp_beurling_composition(), c1 = exp_beurling_composition(fine);
  EXPECT_NEAR(c1.stat("sup_ratio") / c0.stat("sup_ratio"), 1.0, 0.2);
}

TEST(Experiments, LLogLRatioBoundedWhereWeakTypeFails) {
  const auto w = exp_weak11_failure({1e-2, 1e-3, 1e-4});
  EXPECT_GT(w.stat("hilbert_growth_1e-2_to_1e-4"), 1.3);
  const auto l = exp_llogl_modular({1e-2, 1e-3, 1e-4});
  EXPECT_LT(l.stat("ratio_spread"), 3.0);
}
