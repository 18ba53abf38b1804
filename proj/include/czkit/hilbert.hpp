#pragma once

/**
 * @file hilbert.hpp
 * @brief Truncated and maximal Hilbert transforms of step functions, with
 *        kernel 1/(y - x) and no normalizing constant.
 *
 * For a step function every truncation T^e f(x) has a closed form, and
 * e -> T^e f(x) is monotone between consecutive distances from x to cell
 * edges. The supremum over e > 0 is therefore attained on those distances,
 * which makes hilbert_maximal exact for step functions.
 */

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "czkit/grid.hpp"

namespace czkit {

/// Increasing list of truncation radii.
class TruncationGrid {
 public:
  TruncationGrid() = default;
  explicit TruncationGrid(std::vector<double> eps) : eps_(std::move(eps)) {
    for (std::size_t i = 0; i < eps_.size(); ++i) {
      if (!(eps_[i] > 0)) throw std::invalid_argument("TruncationGrid: radii must be positive");
      if (i && !(eps_[i] > eps_[i - 1])) throw std::invalid_argument("TruncationGrid: radii must increase strictly");
    }
  }

  /// Log-spaced radii from lo to hi inclusive, `per_decade` points per factor 10.
  static TruncationGrid logarithmic(double lo, double hi, int per_decade = 64) {
    if (!(lo > 0) || !(hi > lo) || per_decade < 1) throw std::invalid_argument("TruncationGrid: bad range");
    const auto steps = static_cast<long>(std::ceil(std::log10(hi / lo) * per_decade));
    std::vector<double> e;
    for (long k = 0; k <= steps; ++k) e.push_back(lo * std::pow(10.0, static_cast<double>(k) / per_decade));
    e.back() = hi;
    return TruncationGrid(std::move(e));
  }

  /// [h/2, 4 diameter] with h the smallest cell width of f.
  static TruncationGrid covering(const StepFunction1D& f, int per_decade = 64) {
    if (f.empty()) return {};
    double h = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < f.size(); ++i) h = std::min(h, f.width(i));
    return logarithmic(h / 2, 4 * (f.right() - f.left()), per_decade);
  }

  const std::vector<double>& values() const { return eps_; }
  std::size_t size() const { return eps_.size(); }

 private:
  std::vector<double> eps_;
};

/// Integral of f(y)/(y - x) over |y - x| > eps, summed cell by cell.
inline double hilbert_truncated(const StepFunction1D& f, double x, double eps) {
  if (!(eps > 0)) throw std::invalid_argument("hilbert_truncated: eps must be positive");
  const double lo = x - eps, hi = x + eps;
  double s = 0;
  const auto& e = f.edges();
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double v = f.values()[i];
    if (v == 0) continue;
    const double a = e[i], b = e[i + 1];
    if (a < lo) s += v * (std::log(x - std::min(b, lo)) - std::log(x - a));
    if (b > hi) s += v * (std::log(b - x) - std::log(std::max(a, hi) - x));
  }
  return s;
}

/// All truncations of a fixed step function at a fixed point; each query is O(log m).
class HilbertProfile {
 public:
  HilbertProfile(const StepFunction1D& f, double x) : x_(x) {
    const auto& e = f.edges();
    const auto& v = f.values();
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (e[i + 1] > x) right_.push_back({std::max(e[i] - x, 0.0), e[i + 1] - x, v[i]});
    }
    for (std::size_t i = f.size(); i-- > 0;) {
      if (e[i] < x) left_.push_back({std::max(x - e[i + 1], 0.0), x - e[i], -v[i]});
    }
    build(right_);
    build(left_);
  }

  double point() const { return x_; }

  double value(double eps) const {
    if (!(eps > 0)) throw std::invalid_argument("HilbertProfile: eps must be positive");
    return side(right_, eps) + side(left_, eps);
  }

  /// Distances from x to every cell edge, increasing, without zero.
  std::vector<double> breakpoints() const {
    std::vector<double> d;
    for (const auto* s : {&right_, &left_})
      for (const auto& p : *s) {
        if (p.near > 0) d.push_back(p.near);
        d.push_back(p.far);
      }
    std::sort(d.begin(), d.end());
    d.erase(std::unique(d.begin(), d.end()), d.end());
    return d;
  }

  /// sup over eps > 0 of |T^eps f(x)|, attained at a breakpoint.
  double maximal(double* argmax = nullptr) const {
    double best = 0, where = 0;
    for (double d : breakpoints()) {
      const double t = std::fabs(value(d));
      if (t > best) best = t, where = d;
    }
    if (argmax) *argmax = where;
    return best;
  }

 private:
  struct Piece {
    double near, far, v;
    double full = 0;
  };

  static void build(std::vector<Piece>& s) {
    double acc = 0;
    for (std::size_t i = s.size(); i-- > 0;) {
      auto& p = s[i];
      if (p.near > 0 && p.v != 0) acc += p.v * std::log(p.far / p.near);
      p.full = acc;
    }
  }

  static double side(const std::vector<Piece>& s, double eps) {
    auto it = std::lower_bound(s.begin(), s.end(), eps, [](const Piece& p, double e) { return p.near < e; });
    double t = it == s.end() ? 0.0 : it->full;
    if (it != s.begin()) {
      const auto& p = *(it - 1);
      if (p.far > eps && p.v != 0) t += p.v * std::log(p.far / eps);
    }
    return t;
  }

  double x_;
  std::vector<Piece> right_, left_;
};

/// max |T^eps f(x)| over the grid radii together with every edge distance from x.
inline double hilbert_maximal(const StepFunction1D& f, double x, const TruncationGrid& grid) {
  const HilbertProfile p(f, x);
  double best = p.maximal();
  for (double e : grid.values()) best = std::max(best, std::fabs(p.value(e)));
  return best;
}

/// Exact sup over all eps > 0 for a step function.
inline double hilbert_maximal(const StepFunction1D& f, double x) { return HilbertProfile(f, x).maximal(); }

namespace detail {

/// Mean of log|u| over [u1, u2], evaluated without cancellation far from 0.
inline double mean_log_abs(double u1, double u2) {
  if (u1 < 0 && u2 > 0) {
    auto psi = [](double u) { return u == 0 ? 0.0 : u * std::log(std::fabs(u)) - u; };
    return (psi(u2) - psi(u1)) / (u2 - u1);
  }
  if (u2 <= 0) std::swap(u1, u2), u1 = -u1, u2 = -u2;
  if (u1 == 0) return std::log(u2) - 1;
  const double t = (u2 - u1) / u1;
  return std::log(u2) - 1 + std::log1p(t) / t;
}

}  // namespace detail

/// Exact cell averages of the principal value Hf on the given edges.
inline StepFunction1D hilbert_transform(const StepFunction1D& f, const std::vector<double>& edges) {
  std::vector<double> jump_at, jump;
  const auto& e = f.edges();
  const auto& v = f.values();
  for (std::size_t k = 0; k < e.size(); ++k) {
    const double left = k ? v[k - 1] : 0.0;
    const double right = k < v.size() ? v[k] : 0.0;
    if (left != right) jump_at.push_back(e[k]), jump.push_back(left - right);
  }
  std::vector<double> out(edges.size() - 1, 0.0);
  for (std::size_t c = 0; c + 1 < edges.size(); ++c) {
    double s = 0;
    for (std::size_t k = 0; k < jump.size(); ++k)
      s += jump[k] * detail::mean_log_abs(edges[c] - jump_at[k], edges[c + 1] - jump_at[k]);
    out[c] = s;
  }
  return StepFunction1D(edges, std::move(out));
}

/// Edges accumulating geometrically at 0 and 1, symmetric about 1/2, reaching
/// out to distance `window` from [0, 1]; cell widths grow by the factor 1 + growth.
inline std::vector<double> counterexample_edges(double window, double growth = 0.02, double finest = 1e-8) {
  if (!(window > 1) || !(growth > 0) || !(finest > 0) || finest >= 0.5)
    throw std::invalid_argument("counterexample_edges: bad parameters");
  std::vector<double> d;
  for (double t = finest; t < window; t *= 1 + growth) d.push_back(t);
  d.push_back(window);
  std::vector<double> half{0.5, 1.0};
  for (double t : d) {
    if (t < 0.5 * (1 - growth)) half.push_back(1 - t);
    half.push_back(1 + t);
  }
  std::vector<double> all;
  for (double y : half) all.push_back(y), all.push_back(1 - y);
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

/// g(y) = log(|y| / |y - 1|) for f = indicator of (0, 1), as exact cell averages.
/// This is minus the transform of f with kernel 1/(y - x); only |.| is used downstream.
inline StepFunction1D counterexample_profile(double window, double growth = 0.02, double finest = 1e-8) {
  const auto edges = counterexample_edges(window, growth, finest);
  std::vector<double> v(edges.size() - 1);
  for (std::size_t c = 0; c + 1 < edges.size(); ++c)
    v[c] = detail::mean_log_abs(edges[c], edges[c + 1]) - detail::mean_log_abs(edges[c] - 1, edges[c + 1] - 1);
  return StepFunction1D(edges, std::move(v));
}

/// g(y) = log(|y| / |y - 1|).
inline double counterexample_g(double y) { return std::log(std::fabs(y) / std::fabs(y - 1)); }

}  // namespace czkit
