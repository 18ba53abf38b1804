#pragma once

/**
 * @file experiments.hpp
 * @brief Numerical experiments around the Hilbert and Beurling transforms:
 *        the log x / x lower bound for H*(Hf), the failure of weak type (1,1)
 *        for H* o H, pointwise control of maximal singular integrals, the
 *        L log L modular bound and the Beurling composition bound.
 *
 * Each experiment returns a table, a summary and a list of named checks. The
 * constants the checks compare against were fitted once on the default
 * configuration and are frozen below with 20% slack.
 */

#include <boost/math/quadrature/exp_sinh.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <limits>
#include <map>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "czkit/beurling.hpp"
#include "czkit/hilbert.hpp"
#include "czkit/maximal.hpp"
#include "czkit/parallel.hpp"

namespace czkit {

struct Check {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct ExperimentResult {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::vector<std::pair<std::string, double>> summary;
  std::vector<Check> checks;

  bool ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.ok; });
  }

  double stat(const std::string& key) const {
    for (const auto& [k, v] : summary)
      if (k == key) return v;
    throw std::out_of_range("ExperimentResult: no summary entry '" + key + "'");
  }

  void set(const std::string& key, double v) { summary.emplace_back(key, v); }
  void check(std::string what, bool ok, std::string detail = {}) {
    checks.push_back({std::move(what), ok, std::move(detail)});
  }

  /// Header line, then one line per row, 17 significant digits.
  void write_csv(std::ostream& os) const {
    for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << columns[i];
    os << '\n' << std::setprecision(17);
    for (const auto& r : rows) {
      for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
      os << '\n';
    }
  }

  /// Writes <dir>/<name>.csv and returns the path.
  std::filesystem::path write_csv(const std::filesystem::path& dir) const {
    std::filesystem::create_directories(dir);
    const auto path = dir / (name + ".csv");
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    write_csv(out);
    return path;
  }

  void print_summary(std::ostream& os) const {
    os << "experiment " << name << '\n' << std::setprecision(6);
    for (const auto& [k, v] : summary) os << "  " << std::left << std::setw(28) << k << ' ' << v << '\n';
    for (const auto& c : checks)
      os << "  [" << (c.ok ? "PASS" : "FAIL") << "] " << c.name << (c.detail.empty() ? "" : ": " + c.detail) << '\n';
  }
};

/// `mesh` and `window` scale every default mesh width and domain size.
struct ExperimentConfig {
  double mesh = 1.0;
  double window = 1.0;
  unsigned seed = 20240601;
};

/// Fitted range of a statistic; membership allows 20% slack on both ends.
struct Bracket {
  double lo, hi;
  bool contains(double v) const { return v >= lo / 1.2 && v <= hi * 1.2; }
  std::string str() const {
    std::ostringstream os;
    os << std::setprecision(4) << "[" << lo / 1.2 << ", " << hi * 1.2 << "]";
    return os.str();
  }
};

/// Truncation offset for the far-field estimate: log(1 + 1/y) y lies in (1/2, 3/2) for y > m.
inline constexpr double kPinnedM = 2.0;

namespace frozen {
inline constexpr Bracket counterexample_ratio{1.2589, 2.1217};
inline constexpr Bracket hilbert_over_M2{1.0583, 1.0583};
inline constexpr Bracket hilbert_cotlar{0.7649, 0.7649};
inline constexpr Bracket beurling_over_M{1.2887, 1.2887};
inline constexpr Bracket llogl_constant{5.6618, 5.6618};
inline constexpr Bracket composition_ratio{2.3196, 2.3196};
}  // namespace frozen

namespace detail {

inline std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(6) << v;
  return os.str();
}

/// Log-spaced points from lo to hi with `per_decade` points per factor 10.
inline std::vector<double> log_points(double lo, double hi, double per_decade) {
  const auto n = static_cast<long>(std::ceil(std::log10(hi / lo) * per_decade));
  std::vector<double> x;
  for (long k = 0; k <= n; ++k) x.push_back(lo * std::pow(hi / lo, static_cast<double>(k) / n));
  return x;
}

/// Length of {x in [x_0, x_last] : v(x) > t} for samples v_k = v(x_k), linear between samples.
inline double superlevel_length(const std::vector<double>& x, const std::vector<double>& v, double t) {
  double len = 0;
  for (std::size_t k = 0; k + 1 < x.size(); ++k) {
    const double a = v[k] - t, b = v[k + 1] - t, w = x[k + 1] - x[k];
    if (a > 0 && b > 0) len += w;
    else if (a > 0) len += w * a / (a - b);
    else if (b > 0) len += w * b / (b - a);
  }
  return len;
}

/// A(x) = int_m^oo log(1 + 1/y) / (x + y) dy.
inline double far_field_A(double x, double m = kPinnedM) {
  boost::math::quadrature::exp_sinh<double> q;
  return q.integrate([&](double t) { return std::log1p(1 / (m + t)) / (x + m + t); });
}

/// B(x) = int_{2x+m}^oo log(y / (y - 1)) / (y - x) dy.
inline double far_field_B(double x, double m = kPinnedM) {
  boost::math::quadrature::exp_sinh<double> q;
  const double y0 = 2 * x + m;
  return q.integrate([&](double t) { return -std::log1p(-1 / (y0 + t)) / (y0 + t - x); });
}

/// Three step functions used for the pointwise Hilbert comparisons.
inline std::vector<StepFunction1D> hilbert_suite(double window, double h) {
  const auto cells = static_cast<std::size_t>(std::llround(2 * window / h));
  const double o = -window;
  std::vector<StepFunction1D> s;
  s.push_back(StepFunction1D::indicator(0, 1, o, h, cells));
  auto a = StepFunction1D::indicator(-1, 0, o, h, cells);
  auto b = StepFunction1D::indicator(0, 0.5, o, h, cells);
  auto c = StepFunction1D::indicator(0.5, 2, o, h, cells);
  s.push_back(a + (-2.0) * b + 0.5 * c);
  std::vector<double> e(cells + 1);
  for (std::size_t i = 0; i <= cells; ++i) e[i] = o + h * static_cast<double>(i);
  // antiderivative of the tent (1 - |y|)+
  s.push_back(StepFunction1D::from_antiderivative(e, [](double y) {
    const double c0 = std::clamp(y, -1.0, 1.0);
    return c0 <= 0 ? 0.5 * (c0 + 1) * (c0 + 1) : 1 - 0.5 * (1 - c0) * (1 - c0);
  }));
  return s;
}

/// Unit disk indicator and a seeded random 4x4 block field on [-1, 1]^2.
inline std::vector<ComplexField> beurling_suite(double window, double h, unsigned seed) {
  const auto n = static_cast<std::size_t>(std::llround(2 * window / h));
  const double o = -window;
  std::vector<ComplexField> s;
  s.push_back(ComplexField::from(disk_indicator(o, o, h, n, n, {0, 0}, 1.0)));
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> level(-4, 4);
  double block[4][4];
  for (auto& row : block)
    for (double& v : row) v = level(rng) / 4.0;
  ComplexField r{o, o, h, n, n, std::vector<std::complex<double>>(n * n, 0.0)};
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      const auto c = r.center(i, j);
      if (std::fabs(c.real()) < 1 && std::fabs(c.imag()) < 1) {
        const int bi = std::min(3, static_cast<int>((c.real() + 1) * 2));
        const int bj = std::min(3, static_cast<int>((c.imag() + 1) * 2));
        r.values[j * n + i] = block[bj][bi];
      }
    }
  s.push_back(std::move(r));
  return s;
}

/// 5 x 5 sample points covering [-1.2, 1.2]^2, slightly off the grid lines.
inline std::vector<std::complex<double>> beurling_samples() {
  std::vector<std::complex<double>> z;
  for (int b = 0; b < 5; ++b)
    for (int a = 0; a < 5; ++a) z.emplace_back(-1.2 + 0.6 * a + 0.0137, -1.2 + 0.6 * b + 0.0091);
  return z;
}

}  // namespace detail

// ---- lower bound for H*(Hf) --------------------------------------------------

inline ExperimentResult exp_counterexample_growth(std::vector<double> xs = {10, 100, 1000, 10000},
                                                  const ExperimentConfig& cfg = {}) {
  if (xs.empty()) throw std::invalid_argument("counterexample_growth: no x values");
  for (double x : xs)
    if (!(x > std::numbers::e && x <= 1e5)) throw std::invalid_argument("counterexample_growth: x must lie in (e, 1e5]");
  std::sort(xs.begin(), xs.end());
  ExperimentResult r;
  r.name = "counterexample_growth";
  r.columns = {"x", "g_x", "Hstar_g", "T_m_plus_x", "A_x", "B_x", "ratio"};
  const double W = 1000 * cfg.window * xs.back();
  const auto g = counterexample_profile(W, 0.02 * cfg.mesh);
  r.rows.resize(xs.size());
  parallel_for(xs.size(), [&](std::size_t k) {
    const double x = xs[k];
    const HilbertProfile p(g, x);
    const double hs = p.maximal();
    r.rows[k] = {x, counterexample_g(x), hs, std::fabs(p.value(kPinnedM + x)), detail::far_field_A(x),
                 detail::far_field_B(x), x * hs / std::log(x)};
  }, 1);
  double lo = std::numeric_limits<double>::infinity(), hi = 0, worst_ab = 0;
  bool dominates = true;
  for (const auto& row : r.rows) {
    lo = std::min(lo, row[6]);
    hi = std::max(hi, row[6]);
    worst_ab = std::max(worst_ab, std::fabs(row[3] - (row[4] + row[5])) / (row[4] + row[5]));
    dominates = dominates && row[2] >= row[3];
  }
  const double B100 = detail::far_field_B(100);
  r.set("ratio_min", lo);
  r.set("ratio_max", hi);
  r.set("ratio_spread", hi / lo);
  r.set("B_100", B100);
  r.set("truncation_vs_A_plus_B", worst_ab);
  r.check("ratio in frozen bracket " + frozen::counterexample_ratio.str(),
          frozen::counterexample_ratio.contains(lo) && frozen::counterexample_ratio.contains(hi),
          "min " + detail::fmt(lo) + ", max " + detail::fmt(hi));
  r.check("ratio varies by less than 3x", hi / lo < 3, "spread " + detail::fmt(hi / lo));
  r.check("B(100) <= 1/100", B100 <= 0.01, detail::fmt(B100));
  r.check("truncation at m + x equals A + B", worst_ab < 1e-3, "relative error " + detail::fmt(worst_ab));
  r.check("H* dominates the single truncation", dominates);
  return r;
}

// ---- weak type (1,1) ----------------------------------------------------------

/// lambda |{x > m : H*(Hf)(x) > lambda}| for the sweep; the set is cut at x_max = 100/lambda.
inline std::vector<std::pair<double, double>> weak11_hilbert_scan(const std::vector<double>& lambdas,
                                                                  const ExperimentConfig& cfg = {}) {
  const double lmin = *std::min_element(lambdas.begin(), lambdas.end());
  const double xmax = 100 / lmin;
  const auto g = counterexample_profile(1000 * cfg.window * xmax, 0.02 * cfg.mesh);
  const auto xs = detail::log_points(kPinnedM, xmax, 32 / cfg.mesh);
  std::vector<double> v(xs.size());
  parallel_for(xs.size(), [&](std::size_t k) { v[k] = hilbert_maximal(g, xs[k]); }, 16);
  std::vector<std::pair<double, double>> out;
  for (double l : lambdas) {
    const double cut = 100 / l;
    std::vector<double> x2, v2;
    for (std::size_t k = 0; k < xs.size() && xs[k] <= cut * (1 + 1e-12); ++k) x2.push_back(xs[k]), v2.push_back(v[k]);
    out.emplace_back(cut, detail::superlevel_length(x2, v2, l));
  }
  return out;
}

/// Radius beyond which B*(conj B chi_D) stays below each lambda, for the rotation-covariant surrogate.
inline std::vector<double> weak11_beurling_radii(const std::vector<double>& lambdas, const ExperimentConfig& cfg,
                                                 bool& resolved) {
  const double L = 48 * cfg.window, h = 0.25 * cfg.mesh;
  const auto n = static_cast<std::size_t>(std::llround(2 * L / h));
  ComplexField F{-L, -L, h, n, n, std::vector<std::complex<double>>(n * n, 0.0)};
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      const auto c = F.center(i, j);
      if (std::abs(c) > 1) F.values[j * n + i] = std::conj(std::numbers::pi / (c * c));
    }
  const auto rs = detail::log_points(1.05, L / 2, 16);
  const auto grid = beurling_grid(F, 32);
  std::vector<double> b(rs.size());
  parallel_for(rs.size(), [&](std::size_t k) { b[k] = beurling_maximal(F, {rs[k] + 0.0137, 0.0091}, grid); }, 1);
  resolved = true;
  std::vector<double> out;
  for (double l : lambdas) {
    double r = 0;
    for (std::size_t k = 0; k + 1 < rs.size(); ++k)
      if (b[k] > l && b[k + 1] <= l) {
        const double s = std::log(b[k] / l) / std::log(b[k] / b[k + 1]);
        r = rs[k] * std::pow(rs[k + 1] / rs[k], s);
      }
    if (b.back() > l) resolved = false;
    out.push_back(r);
  }
  return out;
}

inline const std::vector<double>& weak11_default_lambdas() {
  static const std::vector<double> l{1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6, 1e-7};
  return l;
}

inline ExperimentResult exp_weak11_failure(std::vector<double> lambdas = weak11_default_lambdas(),
                                           const ExperimentConfig& cfg = {}) {
  if (lambdas.empty()) throw std::invalid_argument("weak11_failure: no lambda values");
  for (double l : lambdas)
    if (!(l > 0 && l < std::exp(-1.0))) throw std::invalid_argument("weak11_failure: lambda must lie in (0, 1/e)");
  std::sort(lambdas.begin(), lambdas.end(), std::greater<>());
  ExperimentResult r;
  r.name = "weak11_failure";
  r.columns = {"operator", "lambda", "x_max", "measure", "lambda_measure"};
  const auto scan = weak11_hilbert_scan(lambdas, cfg);
  std::map<double, double> lm;
  bool monotone = true;
  double prev = 0;
  for (std::size_t k = 0; k < lambdas.size(); ++k) {
    const double v = lambdas[k] * scan[k].second;
    r.rows.push_back({0, lambdas[k], scan[k].first, scan[k].second, v});
    lm[lambdas[k]] = v;
    monotone = monotone && v >= prev;
    prev = v;
  }
  const double first = r.rows.front()[4], last = r.rows.back()[4];
  r.set("hilbert_growth_total", last / first);
  r.set("hilbert_growth_per_decade", (last - first) / std::log10(lambdas.front() / lambdas.back()));
  r.check("lambda*measure nondecreasing as lambda decreases", monotone);
  if (lm.count(1e-2) && lm.count(1e-4)) r.set("hilbert_growth_1e-2_to_1e-4", lm[1e-4] / lm[1e-2]);
  if (lm.count(1e-2) && lambdas.back() < 1e-4) {
    const double f = last / lm[1e-2];
    r.set("hilbert_growth_1e-2_to_min", f);
    r.check("lambda*measure at least doubles from 1e-2 to " + detail::fmt(lambdas.back()), f >= 2, detail::fmt(f));
  }

  const std::vector<double> bl{3e-1, 1e-1, 3e-2};
  bool resolved = false;
  const auto radii = weak11_beurling_radii(bl, cfg, resolved);
  double bmin = std::numeric_limits<double>::infinity(), bmax = 0;
  for (std::size_t k = 0; k < bl.size(); ++k) {
    const double meas = std::numbers::pi * radii[k] * radii[k];
    r.rows.push_back({1, bl[k], radii[k], meas, bl[k] * meas});
    bmin = std::min(bmin, bl[k] * meas);
    bmax = std::max(bmax, bl[k] * meas);
  }
  r.set("beurling_spread", bmax / bmin);
  r.check("Beurling surrogate crossings resolved inside the window", resolved);
  r.check("Beurling surrogate lambda*measure bounded (spread < 1.5)", bmax / bmin < 1.5, detail::fmt(bmax / bmin));
  return r;
}

// ---- pointwise control ---------------------------------------------------------

enum class PointwiseKernel { Hilbert, Beurling, Both };

inline ExperimentResult exp_pointwise_ratios(PointwiseKernel which = PointwiseKernel::Both,
                                             const ExperimentConfig& cfg = {}) {
  ExperimentResult r;
  r.name = "pointwise_ratios";
  r.columns = {"kernel", "suite", "x", "y", "Tstar_f", "M_Tf", "M2_Tf", "ratio_M2", "ratio_M", "ratio_cotlar"};
  const double nan = std::numeric_limits<double>::quiet_NaN();

  if (which != PointwiseKernel::Beurling) {
    const auto suite = detail::hilbert_suite(8 * cfg.window, cfg.mesh / 16);
    std::vector<double> xs;
    for (int k = 0; k <= 16; ++k) xs.push_back(-3 + 0.5 * k + 0.1234);
    double s2 = 0, s1 = 0, sc = 0;
    for (std::size_t s = 0; s < suite.size(); ++s) {
      const auto& f = suite[s];
      const auto Hf = hilbert_transform(f, f.edges());
      const auto MHf = maximal_profile(Hf);
      std::vector<std::vector<double>> rows(xs.size());
      parallel_for(xs.size(), [&](std::size_t k) {
        const double x = xs[k];
        const double hs = hilbert_maximal(f, x);
        const double m1 = hardy_littlewood(Hf, x), m2 = hardy_littlewood(MHf, x);
        const double cot = M_delta(Hf, x, 0.5) + hardy_littlewood(f, x);
        rows[k] = {0, static_cast<double>(s), x, 0, hs, m1, m2, hs / m2, hs / m1, hs / cot};
      }, 1);
      for (auto& row : rows) {
        s2 = std::max(s2, row[7]);
        s1 = std::max(s1, row[8]);
        sc = std::max(sc, row[9]);
        r.rows.push_back(std::move(row));
      }
    }
    r.set("sup_hilbert_over_M2", s2);
    r.set("sup_hilbert_over_M", s1);
    r.set("sup_hilbert_cotlar", sc);
    r.check("sup H*f/M^2(Hf) in frozen bracket " + frozen::hilbert_over_M2.str(), frozen::hilbert_over_M2.contains(s2),
            detail::fmt(s2));
    r.check("sup H*f/(M_1/2(Hf) + Mf) in frozen bracket " + frozen::hilbert_cotlar.str(),
            frozen::hilbert_cotlar.contains(sc), detail::fmt(sc));

    // far-field point of g = H(indicator) restricted to growing windows
    std::vector<double> Ws;
    for (double W = 16; W <= 4096; W *= 2) Ws.push_back(W * cfg.window);
    std::vector<std::vector<double>> adv(Ws.size());
    parallel_for(Ws.size(), [&](std::size_t k) {
      const auto g = counterexample_profile(Ws[k], 0.02 * cfg.mesh, 1e-6);
      const auto Hg = hilbert_transform(g, g.edges());
      const double x = Ws[k] / 2 + 0.123;
      const double hs = hilbert_maximal(g, x), m1 = hardy_littlewood(Hg, x);
      adv[k] = {2, Ws[k], x, 0, hs, m1, nan, nan, hs / m1, nan};
    }, 1);
    bool grows = true;
    for (std::size_t k = 0; k < adv.size(); ++k) {
      if (k) grows = grows && adv[k][8] > adv[k - 1][8];
      r.rows.push_back(adv[k]);
    }
    const double growth = adv.back()[8] / adv.front()[8];
    r.set("adversarial_ratio_first", adv.front()[8]);
    r.set("adversarial_ratio_last", adv.back()[8]);
    r.set("adversarial_growth", growth);
    r.check("adversarial H*f/M(Hf) increases with every window doubling", grows);
    r.check("adversarial H*f/M(Hf) at least doubles over the sweep", growth >= 2, detail::fmt(growth));
  }

  if (which != PointwiseKernel::Hilbert) {
    const auto suite = detail::beurling_suite(2 * cfg.window, 0.1 * cfg.mesh, cfg.seed);
    const auto zs = detail::beurling_samples();
    double sb = 0;
    for (std::size_t s = 0; s < suite.size(); ++s) {
      const auto& F = suite[s];
      const auto BF = beurling_transform(F);
      const auto grid = beurling_grid(F);
      std::vector<std::vector<double>> rows(zs.size());
      parallel_for(zs.size(), [&](std::size_t k) {
        const double bs = beurling_maximal(F, zs[k], grid);
        const double m1 = hardy_littlewood(BF, zs[k]);
        rows[k] = {1, static_cast<double>(s), zs[k].real(), zs[k].imag(), bs, m1, nan, nan, bs / m1, nan};
      }, 1);
      for (auto& row : rows) {
        sb = std::max(sb, row[8]);
        r.rows.push_back(std::move(row));
      }
    }
    r.set("sup_beurling_over_M", sb);
    r.check("sup B*f/M(Bf) in frozen bracket " + frozen::beurling_over_M.str(), frozen::beurling_over_M.contains(sb),
            detail::fmt(sb));
  }
  return r;
}

// ---- L log L modular bound --------------------------------------------------------

/// Samples of H*(Hf)(x) for x >= 1/2 (the profile is symmetric about 1/2).
struct HalfLineProfile {
  std::vector<double> x, v;
};

inline HalfLineProfile llogl_profile(double xmax, const ExperimentConfig& cfg) {
  const auto g = counterexample_profile(1000 * cfg.window * xmax, 0.02 * cfg.mesh);
  HalfLineProfile p;
  const double step = 0.004 * cfg.mesh;
  for (double x = 0.5 + step / 2; x < 3; x += step) p.x.push_back(x);
  for (double x : detail::log_points(3, xmax, 32 / cfg.mesh)) p.x.push_back(x);
  p.v.resize(p.x.size());
  parallel_for(p.x.size(), [&](std::size_t k) { p.v[k] = hilbert_maximal(g, p.x[k]); }, 16);
  return p;
}

/// |{x : H*(Hf)(x) > t}| from a half-line profile.
inline double llogl_lhs(const HalfLineProfile& p, double t) { return 2 * detail::superlevel_length(p.x, p.v, t); }

/// Phi(1/t) with Phi(s) = s log(e + s).
inline double llogl_rhs(double t) { return (1 / t) * std::log(std::numbers::e + 1 / t); }

inline ExperimentResult exp_llogl_modular(std::vector<double> ts = {1, 1e-1, 1e-2, 1e-3}, const ExperimentConfig& cfg = {}) {
  if (ts.empty()) throw std::invalid_argument("llogl_modular: no t values");
  for (double t : ts)
    if (!(t > 0)) throw std::invalid_argument("llogl_modular: t must be positive");
  std::sort(ts.begin(), ts.end(), std::greater<>());
  ExperimentResult r;
  r.name = "llogl_modular";
  r.columns = {"t", "lhs_measure", "rhs_phi", "ratio"};
  const auto p = llogl_profile(1000 / ts.back(), cfg);
  double lo = std::numeric_limits<double>::infinity(), hi = 0;
  for (double t : ts) {
    const double lhs = llogl_lhs(p, t), rhs = llogl_rhs(t);
    r.rows.push_back({t, lhs, rhs, lhs / rhs});
    lo = std::min(lo, lhs / rhs);
    hi = std::max(hi, lhs / rhs);
  }
  r.set("fitted_C", hi);
  r.set("ratio_min", lo);
  r.set("ratio_spread", hi / lo);
  r.check("one constant C across the sweep, in frozen bracket " + frozen::llogl_constant.str(),
          frozen::llogl_constant.contains(hi), detail::fmt(hi));
  r.check("ratio stays bounded (spread < 3)", hi / lo < 3, detail::fmt(hi / lo));
  return r;
}

// ---- Beurling composition ----------------------------------------------------------

inline ExperimentResult exp_beurling_composition(const ExperimentConfig& cfg = {}) {
  ExperimentResult r;
  r.name = "beurling_composition";
  r.columns = {"suite", "x", "y", "Bstar_Bf", "B2star_f", "Mf", "ratio"};
  const auto suite = detail::beurling_suite(2 * cfg.window, 0.1 * cfg.mesh, cfg.seed);
  const auto zs = detail::beurling_samples();
  double sup = 0, closed = 0;
  for (std::size_t s = 0; s < suite.size(); ++s) {
    const auto& F = suite[s];
    const auto BF = beurling_transform(F);
    if (s == 0) {
      for (std::size_t j = 0; j < BF.ny; ++j)
        for (std::size_t i = 0; i < BF.nx; ++i) {
          const auto c = BF.center(i, j);
          if (std::abs(c) > 1.25)
            closed = std::max(closed, std::abs(BF.at(i, j) - std::numbers::pi / (c * c)) / std::abs(std::numbers::pi / (c * c)));
        }
    }
    const auto grid = beurling_grid(F);
    std::vector<std::vector<double>> rows(zs.size());
    parallel_for(zs.size(), [&](std::size_t k) {
      const double lhs = beurling_maximal(BF, zs[k], grid);
      const double b2 = beurling_sq_maximal(F, zs[k], grid);
      const double m = hardy_littlewood(F, zs[k]);
      rows[k] = {static_cast<double>(s), zs[k].real(), zs[k].imag(), lhs, b2, m, lhs / (b2 + m)};
    }, 1);
    for (auto& row : rows) {
      sup = std::max(sup, row[6]);
      r.rows.push_back(std::move(row));
    }
  }
  r.set("sup_ratio", sup);
  r.set("disk_closed_form_error", closed);
  r.check("sup B*(Bf)/((B^2)*f + Mf) in frozen bracket " + frozen::composition_ratio.str(),
          frozen::composition_ratio.contains(sup), detail::fmt(sup));
  r.check("B of the disk matches pi/z^2 outside (relative error < 5%)", closed < 0.05, detail::fmt(closed));
  return r;
}

// ---- registry ------------------------------------------------------------------------

inline const std::vector<std::string>& experiment_names() {
  static const std::vector<std::string> n{"counterexample_growth", "weak11_failure", "pointwise_ratios", "llogl_modular",
                                          "beurling_composition"};
  return n;
}

inline ExperimentResult run_experiment(const std::string& name, const ExperimentConfig& cfg = {}) {
  if (name == "counterexample_growth") return exp_counterexample_growth({10, 100, 1000, 10000}, cfg);
  if (name == "weak11_failure") return exp_weak11_failure(weak11_default_lambdas(), cfg);
  if (name == "pointwise_ratios") return exp_pointwise_ratios(PointwiseKernel::Both, cfg);
  if (name == "llogl_modular") return exp_llogl_modular({1, 1e-1, 1e-2, 1e-3}, cfg);
  if (name == "beurling_composition") return exp_beurling_composition(cfg);
  throw std::invalid_argument("unknown experiment '" + name + "'");
}

}  // namespace czkit
