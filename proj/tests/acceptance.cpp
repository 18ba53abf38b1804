#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>

#include "czkit/admissibility.hpp"
#include "czkit/experiments.hpp"
#include "czkit/hilbert.hpp"
#include "czkit/identities.hpp"
#include "czkit/kernel.hpp"
#include "czkit/maximal.hpp"
#include "czkit/radial.hpp"

using namespace czkit;

namespace {

int failed = 0;

void report(int k, bool ok, const std::string& detail) {
  std::cout << "Criterion " << k << ": " << (ok ? "PASS" : "FAIL") << "  " << detail << std::endl;
  if (!ok) ++failed;
}

template <class F>
void guarded(int k, F&& body) {
  try {
    body();
  } catch (const std::exception& e) {
    report(k, false, std::string("exception: ") + e.what());
  }
}

std::string num(double v) {
  std::ostringstream os;
  os.precision(4);
  os << v;
  return os.str();
}

}  // namespace

int main() {
  guarded(1, [] {
    const auto results = run_identity_suite();
    std::size_t bad = 0;
    for (const auto& r : results) bad += !r.ok;
    report(1, bad == 0 && !results.empty(),
           std::to_string(results.size()) + " exact identity checks, " + std::to_string(bad) + " failures");
  });

  guarded(2, [] {
    bool ok = true;
    int compared = 0;
    for (int n = 2; n <= 3; ++n)
      for (int p = 0; p <= 4; ++p) {
        const auto base = compute_a_coeff(n, p + 1, p);
        ok = ok && compute_a_coeff(n, p + 2, p) == base && compute_a_coeff(n, p + 3, p) == base &&
             a_coeff_closed(n, p) == base;
        ++compared;
      }
    report(2, ok, std::to_string(compared) + " (n, p) pairs stable in N and equal to the closed form");
  });

  guarded(3, [] {
    bool ok = true;
    std::ostringstream os;
    for (int n = 2; n <= 3; ++n) {
      const auto bad = check_condition_iv(cubic_family_kernel(n, Rational(1)), 14);
      const bool zero_found = bad.verdict == Verdict::FailVanishing && bad.witness_value < 1e-10 &&
                              !bad.witness.empty() && std::fabs(std::fabs(bad.witness[0]) - 1) < 1e-6;
      const auto good = check_condition_iv(cubic_family_kernel(n, frac(1, 2)), 14);
      const bool certified = good.verdict == Verdict::Pass && good.certified_min && *good.certified_min > 0;
      ok = ok && zero_found && certified;
      os << "n=" << n << ": lambda=1 " << to_string(bad.verdict) << ", lambda=1/2 " << to_string(good.verdict)
         << " (min >= " << num(good.certified_min.value_or(0)) << ", depth " << good.depth_used << "); ";
    }
    const auto x = MultiPoly::variable(2, 0), y = MultiPoly::variable(2, 1);
    const auto riesz = check_condition_iv(riesz_kernel(x * x * x - x * y * y * Rational(3)), 14);
    ok = ok && riesz.verdict == Verdict::Pass;
    os << "Riesz degree 3 " << to_string(riesz.verdict);
    report(3, ok, os.str());
  });

  guarded(4, [] {
    bool ok = true;
    for (int n = 2; n <= 8; ++n) ok = ok && gamma_j(3, n) / gamma_j(1, n) == SymScalar(frac(-1, n + 1));
    for (int n = 2; n <= 8; ++n)
      for (int j = 1; j <= 12; ++j) {
        const auto g = gamma_j(j, n);
        ok = ok && (j % 2 ? g.is_imaginary() : g.is_real());
      }
    report(4, ok, "gamma_3/gamma_1 = -1/(n+1) for n = 2..8; parity for j <= 12");
  });

  guarded(5, [] {
    const auto growth = exp_counterexample_growth();
    const auto weak = exp_weak11_failure();
    const auto llogl = exp_llogl_modular({1, 1e-1, 1e-2, 1e-3, 1e-4});
    const double f4 = weak.stat("hilbert_growth_1e-2_to_1e-4");
    const double fmin = weak.stat("hilbert_growth_1e-2_to_min");
    const bool ok = growth.ok() && weak.ok() && llogl.ok() && llogl.stat("ratio_spread") < 3;
    report(5, ok,
           "x H*/log x in [" + num(growth.stat("ratio_min")) + ", " + num(growth.stat("ratio_max")) +
               "]; lambda*measure grows " + num(f4) + "x from 1e-2 to 1e-4 and " + num(fmin) +
               "x to 1e-7 (logarithmic growth); L log L ratio spread " + num(llogl.stat("ratio_spread")));
  });

  guarded(6, [] {
    ExperimentConfig fine;
    fine.mesh = 0.5;
    const auto p0 = exp_pointwise_ratios(PointwiseKernel::Both), p1 = exp_pointwise_ratios(PointwiseKernel::Both, fine);
    const auto c0 = exp_beurling_composition(), c1 = exp_beurling_composition(fine);
    auto stable = [](double a, double b) { return std::fabs(b / a - 1) <= 0.2; };
    const double h0 = p0.stat("sup_hilbert_over_M2"), h1 = p1.stat("sup_hilbert_over_M2");
    const double b0 = p0.stat("sup_beurling_over_M"), b1 = p1.stat("sup_beurling_over_M");
    const double k0 = c0.stat("sup_ratio"), k1 = c1.stat("sup_ratio");
    const bool ok = p0.ok() && c0.ok() && stable(h0, h1) && stable(b0, b1) && stable(k0, k1);
    report(6, ok,
           "H*/M^2 " + num(h0) + " -> " + num(h1) + ", B*/M " + num(b0) + " -> " + num(b1) + ", composition " +
               num(k0) + " -> " + num(k1));
  });

  guarded(7, [] {
    double worst = 0;
    for (double r : {0.1, 1.0, 5.0})
      worst = std::max(worst, std::fabs(bessel_series_eval(frac(1, 2), r, 30) - bessel_half_closed_form(r)));
    bool exact = true;
    for (int t = 1; t <= 12; ++t) {
      const Rational q = frac(t, 2);
      exact = exact && bessel_at_zero(q) == (SymScalar::two_pow(q) * gamma_exact(q + 1)).inverse() &&
              bessel_series_coeff(q, 0) == bessel_at_zero(q);
    }
    report(7, worst <= 1e-12 && exact, "half-order series error " + num(worst) + "; G_q(0) exact for 2q = 1..12");
  });

  guarded(8, [] {
    const auto f = StepFunction1D::indicator(0, 1, -4, 0.25, 32);
    double worst = 0;
    for (int k : {2, 3, 7})
      for (double x : {-1.3, 0.37, 2.0, 5.5})
        for (double e : {0.01, 0.4, 3.0})
          worst = std::max(worst, std::fabs(hilbert_truncated(f, x, e) - hilbert_truncated(f.refined(k), x, e)));
    const double m = hardy_littlewood(f, 2.0);
    report(8, worst <= 1e-12 && std::fabs(m - 0.5) <= 1e-14,
           "refinement difference " + num(worst) + "; Mf(2) = " + num(m));
  });

  return failed ? 1 : 0;
}
