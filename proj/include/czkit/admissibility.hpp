#pragma once

/**
 * @file admissibility.hpp
 * @brief Decides whether the maximal operator of an odd polynomial kernel is
 *        controlled by the operator itself.
 *
 * For an odd kernel with components P_1, P_3, ... the test is:
 *  - the lowest nonzero component P_{2j0+1} divides every other component, and
 *  - F(xi) = sum_j (gamma_{2j+1}/gamma_{2j0+1}) Q_{2j-2j0}(xi) has no zero on the
 *    unit sphere, where P_{2j+1} = P_{2j0+1} Q_{2j-2j0}.
 *
 * The ratios gamma_{2j+1}/gamma_{2j0+1} are real rationals, so F is a real
 * polynomial. Non-vanishing is certified by branch and bound over boxes in
 * spherical angles: a box whose centre c satisfies |F(c)| > L * rho, with L a
 * bound for |grad F| on the closed unit ball and rho a bound for the distance
 * from c to any point of the box, contains no zero.
 */

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <numbers>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "czkit/exact.hpp"
#include "czkit/kernel.hpp"
#include "czkit/parallel.hpp"
#include "czkit/poly.hpp"

namespace czkit {

enum class Verdict { Pass, FailDivisibility, FailVanishing, Inconclusive };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::FailDivisibility: return "FAIL(divisibility)";
    case Verdict::FailVanishing: return "FAIL(vanishing)";
    default: return "INCONCLUSIVE";
  }
}

struct CheckReport {
  int dim = 0;
  HarmonicComponent divisor{0, MultiPoly(1)};
  /// Q_{2j-2j0} for every odd degree 2j+1 >= 2j0+1 present in the kernel.
  std::vector<int> quotient_degrees;
  std::vector<MultiPoly> quotients;
  bool divisibility_ok = false;
  /// Degree of the first component that is not divisible, or -1.
  int failed_degree = -1;
  /// The multiplier equals unit * P_{2j0+1}(xi) * F(xi) on the sphere.
  SymScalar unit;
  MultiPoly F{1};
  double lipschitz = 0;
  /// Rigorous lower bound for min |F| on the sphere; set only on PASS.
  std::optional<double> certified_min;
  /// Smallest |F| seen at any sample point.
  double grid_min = std::numeric_limits<double>::infinity();
  std::vector<double> witness;
  double witness_value = std::numeric_limits<double>::quiet_NaN();
  bool sign_change = false;
  bool exact_zero = false;
  int depth_used = 0;
  double mesh = 0;
  /// For INCONCLUSIVE: how far the best uncertified box is from certification.
  double gap = 0;
  std::size_t boxes_evaluated = 0;
  Verdict verdict = Verdict::Inconclusive;
};

struct CheckOptions {
  int max_depth = 14;
  /// A polished sample with |F| below this counts as a zero.
  double zero_tolerance = 1e-10;
  std::size_t max_boxes = 8'000'000;
};

/// Sum over i of the coefficient sums of dF/dx_i; bounds |grad F| on the unit ball.
inline double spherical_gradient_bound(const MultiPoly& F) {
  Rational s(0);
  for (int i = 0; i < F.nvars(); ++i) s += F.derivative(i).abs_coeff_sum();
  return static_cast<double>(to_long_double(s));
}

namespace detail {

/// Point on S^{n-1} from n-1 hyperspherical angles.
inline std::vector<long double> sphere_point(std::span<const long double> phi, int n) {
  std::vector<long double> x(static_cast<std::size_t>(n));
  long double s = 1;
  for (int i = 0; i < n - 1; ++i) {
    x[i] = s * std::cos(phi[i]);
    s *= std::sin(phi[i]);
  }
  x[n - 1] = s;
  return x;
}

inline void normalize(std::vector<long double>& x) {
  long double r = 0;
  for (auto v : x) r += v * v;
  r = std::sqrt(r);
  for (auto& v : x) v /= r;
}

class SphereSearch {
 public:
  SphereSearch(const MultiPoly& F, const CheckOptions& opt) : F_(F), n_(F.nvars()), opt_(opt) {
    for (int i = 0; i < n_; ++i) grad_.push_back(F.derivative(i));
    L_ = spherical_gradient_bound(F);
    slack_ = 64 * std::numeric_limits<double>::epsilon() * (1 + static_cast<double>(to_long_double(F.abs_coeff_sum())));
  }

  long double value(const std::vector<long double>& x) const {
    return F_.eval<long double>(std::span<const long double>(x));
  }

  /// Bisects along a path on the sphere joining points with F of opposite sign.
  std::vector<long double> bisect(std::vector<long double> a, std::vector<long double> b) const {
    long double fa = value(a);
    long double dot = 0;
    for (int i = 0; i < n_; ++i) dot += a[i] * b[i];
    if (dot < -0.9L) {
      // route through a point orthogonal to a
      int k = 0;
      for (int i = 1; i < n_; ++i)
        if (std::fabs(a[i]) < std::fabs(a[k])) k = i;
      std::vector<long double> c(static_cast<std::size_t>(n_), 0.0L);
      c[k] = 1;
      for (int i = 0; i < n_; ++i) c[i] -= a[k] * a[i];
      normalize(c);
      const long double fc = value(c);
      if (fc == 0) return c;
      if ((fc > 0) == (fa > 0)) a = c, fa = fc;
      else b = c;
    }
    std::vector<long double> m(static_cast<std::size_t>(n_));
    for (int it = 0; it < 200; ++it) {
      for (int i = 0; i < n_; ++i) m[i] = (a[i] + b[i]) / 2;
      normalize(m);
      const long double fm = value(m);
      if (fm == 0) return m;
      if ((fm > 0) == (fa > 0)) a = m, fa = fm;
      else b = m;
    }
    return std::fabs(fa) < std::fabs(value(b)) ? a : b;
  }

  /// Descends |F| from x along the sphere. Returns the final point; sets crossed
  /// if F changed sign on the way, in which case `other` holds the previous point.
  std::vector<long double> polish(std::vector<long double> x, bool& crossed, std::vector<long double>& other) const {
    crossed = false;
    long double f = value(x);
    const long double sgn = f < 0 ? -1 : 1;
    long double step = 0.1L;
    for (int it = 0; it < 2000 && std::fabs(f) > 1e-16L; ++it) {
      std::vector<long double> g(static_cast<std::size_t>(n_));
      long double radial = 0;
      for (int i = 0; i < n_; ++i) {
        g[i] = sgn * grad_[i].eval<long double>(std::span<const long double>(x));
        radial += g[i] * x[i];
      }
      long double gn = 0;
      for (int i = 0; i < n_; ++i) {
        g[i] -= radial * x[i];
        gn += g[i] * g[i];
      }
      if (gn < 1e-30L) break;
      bool moved = false;
      for (int tries = 0; tries < 60; ++tries) {
        std::vector<long double> y(x);
        for (int i = 0; i < n_; ++i) y[i] -= step * g[i];
        normalize(y);
        const long double fy = value(y);
        if (sgn * fy < 0) {
          crossed = true;
          other = x;
          return y;
        }
        if (sgn * fy < sgn * f) {
          x = y;
          f = fy;
          step *= 2;
          moved = true;
          break;
        }
        step /= 2;
      }
      if (!moved) break;
    }
    return x;
  }

  CheckReport& run(CheckReport& rep) const {
    rep.lipschitz = L_;
    const int n = n_;
    const int na = n - 1;
    auto range = [&](int i) { return i == na - 1 ? 2 * std::numbers::pi_v<long double> : std::numbers::pi_v<long double>; };

    // level 0: angle sides at most 2/(n-1), so the distance bound is <= 1
    const long double side0 = 2.0L / na;
    std::vector<int> counts(static_cast<std::size_t>(na));
    std::vector<long double> sides(static_cast<std::size_t>(na));
    for (int i = 0; i < na; ++i) {
      counts[i] = static_cast<int>(std::ceil(range(i) / side0));
      sides[i] = range(i) / counts[i];
    }
    std::vector<std::vector<long double>> centers;
    {
      std::vector<int> idx(static_cast<std::size_t>(na), 0);
      while (true) {
        std::vector<long double> c(static_cast<std::size_t>(na));
        for (int i = 0; i < na; ++i) c[i] = (idx[i] + 0.5L) * sides[i];
        centers.push_back(std::move(c));
        int i = 0;
        while (i < na && ++idx[i] == counts[i]) idx[i++] = 0;
        if (i == na) break;
      }
    }

    double lower = std::numeric_limits<double>::infinity();
    bool have_pos = false, have_neg = false;
    std::vector<long double> pos_pt, neg_pt, best_pt;
    long double best = std::numeric_limits<long double>::infinity();

    for (int depth = 0;; ++depth) {
      rep.depth_used = depth;
      // distance from a box centre to any point of the box
      long double rho = 0;
      for (int i = 0; i < na; ++i) rho += sides[i] / 2;
      rep.mesh = static_cast<double>(rho);

      std::vector<long double> vals(centers.size());
      std::vector<std::vector<long double>> pts(centers.size());
      parallel_for(centers.size(), [&](std::size_t b) {
        pts[b] = sphere_point(centers[b], n);
        vals[b] = value(pts[b]);
      });
      rep.boxes_evaluated += centers.size();

      std::vector<std::vector<long double>> open;
      long double worst_gap = 0;
      for (std::size_t b = 0; b < centers.size(); ++b) {
        const long double v = vals[b];
        if (v > 0 && !have_pos) have_pos = true, pos_pt = pts[b];
        if (v < 0 && !have_neg) have_neg = true, neg_pt = pts[b];
        if (v == 0) {
          have_pos = have_neg = true;
          pos_pt = neg_pt = pts[b];
        }
        if (std::fabs(v) < best) best = std::fabs(v), best_pt = pts[b];
        const long double margin = std::fabs(v) - L_ * rho - slack_;
        if (margin > 0) {
          lower = std::min(lower, static_cast<double>(margin));
        } else {
          open.push_back(centers[b]);
          worst_gap = std::max(worst_gap, -margin);
        }
      }
      rep.grid_min = static_cast<double>(best);

      if (have_pos && have_neg) {
        rep.sign_change = true;
        rep.verdict = Verdict::FailVanishing;
        const auto w = (pos_pt == neg_pt) ? pos_pt : bisect(pos_pt, neg_pt);
        set_witness(rep, w);
        return rep;
      }
      if (open.empty()) {
        rep.verdict = Verdict::Pass;
        rep.certified_min = lower;
        return rep;
      }

      bool crossed = false;
      std::vector<long double> prev;
      const auto polished = polish(best_pt, crossed, prev);
      if (crossed) {
        rep.sign_change = true;
        rep.verdict = Verdict::FailVanishing;
        set_witness(rep, bisect(polished, prev));
        return rep;
      }
      if (std::fabs(value(polished)) < opt_.zero_tolerance) {
        rep.verdict = Verdict::FailVanishing;
        set_witness(rep, polished);
        return rep;
      }

      const std::size_t kids = std::size_t{1} << na;
      if (depth >= opt_.max_depth || open.size() * kids > opt_.max_boxes) {
        rep.verdict = Verdict::Inconclusive;
        rep.gap = static_cast<double>(worst_gap);
        set_witness(rep, polished);
        return rep;
      }
      for (auto& s : sides) s /= 2;
      centers.clear();
      for (const auto& c : open)
        for (std::size_t mask = 0; mask < kids; ++mask) {
          std::vector<long double> k(c);
          for (int i = 0; i < na; ++i) k[i] += ((mask >> i) & 1 ? 0.5L : -0.5L) * sides[i];
          centers.push_back(std::move(k));
        }
    }
  }

 private:
  void set_witness(CheckReport& rep, const std::vector<long double>& w) const {
    rep.witness.assign(w.begin(), w.end());
    rep.witness_value = static_cast<double>(value(w));
    rep.exact_zero = snaps_to_exact_zero(w);
  }

  /// Tries small-denominator rational points near w that lie exactly on the sphere.
  bool snaps_to_exact_zero(const std::vector<long double>& w) const {
    for (long q = 1; q <= 64; ++q) {
      std::vector<Rational> r;
      Rational norm(0);
      for (auto v : w) {
        r.push_back(frac(std::lround(v * q), q));
        norm += r.back() * r.back();
      }
      if (norm == 1 && F_.eval<Rational>(std::span<const Rational>(r)) == 0) return true;
    }
    return false;
  }

  const MultiPoly& F_;
  int n_;
  CheckOptions opt_;
  std::vector<MultiPoly> grad_;
  double L_ = 0;
  double slack_ = 0;
};

}  // namespace detail

/// Divisibility by the lowest component plus certified non-vanishing of F.
inline CheckReport check_condition_iv(const KernelSpec& K, const CheckOptions& opt = {}) {
  if (K.is_zero()) throw std::invalid_argument("check_condition_iv: zero kernel");
  if (K.parity() != Parity::Odd)
    throw std::invalid_argument(std::string("check_condition_iv: kernel must be odd, got ") + to_string(K.parity()));
  const int n = K.dim();
  const auto& comps = K.components();
  CheckReport rep;
  rep.dim = n;
  rep.divisor = comps.front();
  const int d0 = rep.divisor.degree();
  const SymScalar g0 = gamma_j(d0, n);
  rep.unit = g0;
  rep.divisibility_ok = true;
  MultiPoly F(n);
  for (const auto& c : comps) {
    auto q = divide_exact(c.poly(), rep.divisor.poly());
    if (!q) {
      rep.divisibility_ok = false;
      rep.failed_degree = c.degree();
      rep.verdict = Verdict::FailDivisibility;
      return rep;
    }
    rep.quotient_degrees.push_back(c.degree() - d0);
    rep.quotients.push_back(*q);
    const SymScalar ratio = gamma_j(c.degree(), n) / g0;
    if (ratio.h() != 0 || ratio.s() != 0 || !ratio.is_real())
      throw std::logic_error("check_condition_iv: multiplier ratio is not rational");
    F += *q * ratio.signed_q();
  }
  rep.F = F;
  detail::SphereSearch search(rep.F, opt);
  return search.run(rep);
}

inline CheckReport check_condition_iv(const KernelSpec& K, int max_depth) {
  CheckOptions opt;
  opt.max_depth = max_depth;
  return check_condition_iv(K, opt);
}

/// Human readable report; with key_values a machine readable block follows.
inline void print_report(std::ostream& os, const CheckReport& r, bool key_values = true) {
  auto point = [](const std::vector<double>& w) {
    std::ostringstream s;
    s << std::setprecision(12) << "(";
    for (std::size_t i = 0; i < w.size(); ++i) s << (i ? ", " : "") << w[i];
    s << ")";
    return s.str();
  };
  auto row = [&](const std::string& k, const std::string& v) { os << "  " << std::left << std::setw(18) << k << v << "\n"; };
  std::ostringstream num;
  auto fmt = [&](double v) {
    num.str("");
    num << std::setprecision(12) << v;
    return num.str();
  };
  os << "admissibility check, dimension " << r.dim << "\n";
  row("verdict", to_string(r.verdict));
  row("divisor", "P_" + std::to_string(r.divisor.degree()) + " = " + r.divisor.poly().str());
  row("divisible", r.divisibility_ok ? "yes" : "no, fails at degree " + std::to_string(r.failed_degree));
  for (std::size_t i = 0; i < r.quotients.size(); ++i)
    row("Q_" + std::to_string(r.quotient_degrees[i]), r.quotients[i].str());
  if (r.divisibility_ok) {
    row("unit", r.unit.str());
    row("F", r.F.str());
    row("lipschitz", fmt(r.lipschitz));
    row("depth", std::to_string(r.depth_used));
    row("mesh", fmt(r.mesh));
    row("grid_min", fmt(r.grid_min));
    row("certified_min", r.certified_min ? fmt(*r.certified_min) : std::string("-"));
    if (!r.witness.empty()) {
      row("witness", point(r.witness));
      row("F(witness)", fmt(r.witness_value));
    }
    if (r.verdict == Verdict::FailVanishing)
      row("zero evidence", r.exact_zero ? "exact rational zero" : (r.sign_change ? "sign change" : "float minimum"));
    if (r.verdict == Verdict::Inconclusive) row("gap", fmt(r.gap));
    row("boxes", std::to_string(r.boxes_evaluated));
  }
  if (!key_values) return;
  os << "\n";
  os << "verdict=" << to_string(r.verdict) << "\n";
  os << "dim=" << r.dim << "\n";
  os << "divisor_degree=" << r.divisor.degree() << "\n";
  os << "divisibility_ok=" << (r.divisibility_ok ? 1 : 0) << "\n";
  if (r.divisibility_ok) {
    os << "lipschitz=" << fmt(r.lipschitz) << "\n";
    os << "depth=" << r.depth_used << "\n";
    os << "mesh=" << fmt(r.mesh) << "\n";
    os << "grid_min=" << fmt(r.grid_min) << "\n";
    os << "certified_min=" << (r.certified_min ? fmt(*r.certified_min) : std::string("vanishes")) << "\n";
    if (!r.witness.empty()) {
      os << "witness=" << point(r.witness) << "\n";
      os << "witness_value=" << fmt(r.witness_value) << "\n";
    }
    if (r.verdict == Verdict::Inconclusive) os << "gap=" << fmt(r.gap) << "\n";
  }
}

}  // namespace czkit
