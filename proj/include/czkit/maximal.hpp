#pragma once

/**
 * @file maximal.hpp
 * @brief Maximal operators over grid-aligned cubes: Hardy-Littlewood M, its
 *        iterate M^2, M_delta, the sharp function and the L log L maximal
 *        function, in one dimension (any step function) and two dimensions
 *        (uniform grids, squares).
 *
 * The supremum runs over every interval (square) whose endpoints (corners)
 * are grid edges and which contains the point, so all values are exact for
 * that family.
 */

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "czkit/grid.hpp"

namespace czkit {

namespace detail {

/// Edge index ranges [0, last_left] and [first_right, m] with e_i <= x <= e_j.
inline std::pair<std::size_t, std::size_t> bracketing_edges(const StepFunction1D& f, double x) {
  if (f.empty() || x < f.left() || x > f.right())
    throw std::domain_error("maximal function: point outside the evaluation window");
  const auto& e = f.edges();
  const auto last_left = static_cast<std::size_t>(std::upper_bound(e.begin(), e.end(), x) - e.begin()) - 1;
  const auto first_right = static_cast<std::size_t>(std::lower_bound(e.begin(), e.end(), x) - e.begin());
  return {last_left, first_right};
}

inline double young_llogl(double t) { return t <= 1 ? t : t * (1 + std::log(t)); }

}  // namespace detail

/// Mf(x) = sup of the mean of |f| over grid intervals [e_i, e_j] containing x.
inline double hardy_littlewood(const StepFunction1D& f, double x) {
  const auto [L, R] = detail::bracketing_edges(f, x);
  const auto& e = f.edges();
  double best = 0;
  for (std::size_t i = 0; i <= L; ++i)
    for (std::size_t j = std::max(R, i + 1); j < e.size(); ++j)
      best = std::max(best, f.abs_integral_between(i, j) / (e[j] - e[i]));
  return best;
}

/// Mf on every cell (it is constant on open cells for this family), in O(m^2).
inline StepFunction1D maximal_profile(const StepFunction1D& f) {
  const std::size_t m = f.size();
  const auto& e = f.edges();
  std::vector<double> out(m, 0.0);
  std::vector<double> tail(m);
  for (std::size_t i = 0; i < m; ++i) {
    // tail[k] = max over j > k of the mean over [e_i, e_j]
    double run = 0;
    for (std::size_t j = m; j > i; --j) {
      run = std::max(run, f.abs_integral_between(i, j) / (e[j] - e[i]));
      tail[j - 1] = run;
    }
    for (std::size_t k = i; k < m; ++k) out[k] = std::max(out[k], tail[k]);
  }
  return StepFunction1D(e, std::move(out));
}

/// M(Mf)(x), with the inner M sampled on the same grid.
inline double iterated_M2(const StepFunction1D& f, double x) { return hardy_littlewood(maximal_profile(f), x); }

/// M(|f|^delta)(x)^(1/delta), 0 < delta < 1.
inline double M_delta(const StepFunction1D& f, double x, double delta) {
  if (!(delta > 0 && delta < 1)) throw std::invalid_argument("M_delta: need 0 < delta < 1");
  const auto g = f.map([delta](double v) { return std::pow(std::fabs(v), delta); });
  return std::pow(hardy_littlewood(g, x), 1 / delta);
}

/// sup over grid intervals I containing x of the mean of |f - f_I| over I; O(m^3).
inline double M_sharp(const StepFunction1D& f, double x) {
  const auto [L, R] = detail::bracketing_edges(f, x);
  const auto& e = f.edges();
  const auto& v = f.values();
  double best = 0;
  for (std::size_t i = 0; i <= L; ++i)
    for (std::size_t j = std::max(R, i + 1); j < e.size(); ++j) {
      const double len = e[j] - e[i];
      const double avg = f.integral_between(i, j) / len;
      double osc = 0;
      for (std::size_t k = i; k < j; ++k) osc += std::fabs(v[k] - avg) * f.width(k);
      best = std::max(best, osc / len);
    }
  return best;
}

/// Luxemburg average inf{l > 0 : mean over [a, b] of Phi(|f| / l) <= 1},
/// Phi(t) = t (1 + log+ t), by bisection to relative tolerance `tol`.
inline double orlicz_llogl_average(const StepFunction1D& f, double a, double b, double tol = 1e-10) {
  if (!(b > a)) throw std::invalid_argument("orlicz_llogl_average: empty interval");
  std::vector<std::pair<double, double>> parts;  // (|value|, length)
  const auto& e = f.edges();
  double sup = 0, mass = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double len = std::min(b, e[i + 1]) - std::max(a, e[i]);
    const double v = std::fabs(f.values()[i]);
    if (len > 0 && v > 0) {
      parts.emplace_back(v, len);
      sup = std::max(sup, v);
      mass += v * len;
    }
  }
  if (parts.empty()) return 0.0;
  const double width = b - a, avg = mass / width;
  auto modular = [&](double l) {
    double s = 0;
    for (const auto& [v, len] : parts) s += detail::young_llogl(v / l) * len;
    return s / width;
  };
  double lo = avg, hi = avg * (1 + std::log(std::max(1.0, sup / avg)));
  if (modular(hi) > 1) hi *= 2;
  while (hi - lo > tol * hi) {
    const double mid = 0.5 * (lo + hi);
    (modular(mid) > 1 ? lo : hi) = mid;
  }
  return hi;
}

/// sup over grid intervals containing x of the L log L average, pruned by the bound
/// avg (1 + log+(sup/avg)) on each interval.
inline double M_llogl(const StepFunction1D& f, double x, double tol = 1e-10) {
  const auto [L, R] = detail::bracketing_edges(f, x);
  const auto& e = f.edges();
  double best = 0;
  for (std::size_t i = 0; i <= L; ++i) {
    double sup = 0;
    for (std::size_t k = i; k < std::max(R, i + 1) && k < f.size(); ++k) sup = std::max(sup, std::fabs(f.values()[k]));
    for (std::size_t j = std::max(R, i + 1); j < e.size(); ++j) {
      sup = std::max(sup, std::fabs(f.values()[j - 1]));
      const double avg = f.abs_integral_between(i, j) / (e[j] - e[i]);
      if (avg <= 0) continue;
      const double upper = avg * (1 + std::log(std::max(1.0, sup / avg)));
      if (upper <= best) continue;
      best = std::max(best, orlicz_llogl_average(f, e[i], e[j], tol));
    }
  }
  return best;
}

// ---- two dimensions ---------------------------------------------------------

/// Complex-valued function on a uniform 2D grid, values[iy * nx + ix].
struct ComplexField {
  double ox = 0, oy = 0, h = 1;
  std::size_t nx = 0, ny = 0;
  std::vector<std::complex<double>> values;

  static ComplexField from(const GridFunction& g) {
    if (g.dim() != 2) throw std::invalid_argument("ComplexField: grid must be two-dimensional");
    ComplexField c{g.origin(0), g.origin(1), g.mesh(), g.nx(), g.ny(), {}};
    c.values.assign(g.values().begin(), g.values().end());
    return c;
  }
  std::complex<double> at(std::size_t i, std::size_t j) const { return values[j * nx + i]; }
  std::complex<double> center(std::size_t i, std::size_t j) const {
    return {ox + (static_cast<double>(i) + 0.5) * h, oy + (static_cast<double>(j) + 0.5) * h};
  }
};

/// Mf(z) over squares with grid-line sides containing z, z inside the grid.
inline double hardy_littlewood(const ComplexField& f, std::complex<double> z) {
  const double px = (z.real() - f.ox) / f.h, py = (z.imag() - f.oy) / f.h;
  if (px < 0 || py < 0 || px > static_cast<double>(f.nx) || py > static_cast<double>(f.ny))
    throw std::domain_error("maximal function: point outside the evaluation window");
  const std::size_t W = f.nx + 1;
  std::vector<double> P(W * (f.ny + 1), 0.0);
  for (std::size_t j = 0; j < f.ny; ++j)
    for (std::size_t i = 0; i < f.nx; ++i)
      P[(j + 1) * W + i + 1] = std::abs(f.at(i, j)) + P[j * W + i + 1] + P[(j + 1) * W + i] - P[j * W + i];
  auto box = [&](long i0, long j0, long k) {
    return P[(j0 + k) * W + i0 + k] - P[j0 * W + i0 + k] - P[(j0 + k) * W + i0] + P[j0 * W + i0];
  };
  double best = 0;
  const long K = static_cast<long>(std::min(f.nx, f.ny));
  for (long k = 1; k <= K; ++k) {
    const long ilo = std::max(0L, static_cast<long>(std::ceil(px)) - k);
    const long ihi = std::min(static_cast<long>(f.nx) - k, static_cast<long>(std::floor(px)));
    const long jlo = std::max(0L, static_cast<long>(std::ceil(py)) - k);
    const long jhi = std::min(static_cast<long>(f.ny) - k, static_cast<long>(std::floor(py)));
    for (long i = ilo; i <= ihi; ++i)
      for (long j = jlo; j <= jhi; ++j) best = std::max(best, box(i, j, k) / static_cast<double>(k * k));
  }
  return best;
}

inline double hardy_littlewood(const GridFunction& f, std::complex<double> z) {
  return hardy_littlewood(ComplexField::from(f), z);
}

}  // namespace czkit
