#pragma once

/**
 * @file beurling.hpp
 * @brief Truncated and maximal Beurling transform B (kernel 1/w^2) and its
 *        square B^2 (kernel -2 conj(w)/w^3), w = omega - z, on uniform 2D grids.
 *
 * Both kernels have elementary mixed antiderivatives,
 *   d^2/dx dy [ i log w ] = 1/w^2,   d^2/dx dy [ 2i Re(w)/w ] = -2 conj(w)/w^3,
 * so a cell lying entirely outside the disk |w| < eps contributes exactly.
 * Cells crossing the circle are split dyadically four times; the pieces
 * still crossing it use the midpoint rule.
 */

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "czkit/hilbert.hpp"
#include "czkit/maximal.hpp"

namespace czkit {

enum class BeurlingKernel { B, BSquared };

namespace detail {

using cplx = std::complex<double>;

inline cplx beurling_kernel(BeurlingKernel k, cplx w) {
  if (k == BeurlingKernel::B) return 1.0 / (w * w);
  return -2.0 * std::conj(w) / (w * w * w);
}

/// Exact integral of the kernel over [x1, x2] x [y1, y2] (w coordinates), 0 not in the box.
inline cplx beurling_rect(BeurlingKernel k, double x1, double x2, double y1, double y2) {
  const cplx I(0, 1);
  if (k == BeurlingKernel::B) {
    // branch cut of the logarithm turned away from the box
    cplx c(0.5 * (x1 + x2), 0.5 * (y1 + y2));
    const cplx rot = std::conj(c) / std::abs(c);
    auto G = [&](double x, double y) { return I * std::log(cplx(x, y) * rot); };
    return G(x2, y2) - G(x1, y2) - G(x2, y1) + G(x1, y1);
  }
  auto G = [&](double x, double y) { return 2.0 * I * x / cplx(x, y); };
  return G(x2, y2) - G(x1, y2) - G(x2, y1) + G(x1, y1);
}

inline double box_min_dist(double x1, double x2, double y1, double y2) {
  const double dx = x1 > 0 ? x1 : (x2 < 0 ? -x2 : 0.0);
  const double dy = y1 > 0 ? y1 : (y2 < 0 ? -y2 : 0.0);
  return std::hypot(dx, dy);
}

inline double box_max_dist(double x1, double x2, double y1, double y2) {
  return std::hypot(std::max(std::fabs(x1), std::fabs(x2)), std::max(std::fabs(y1), std::fabs(y2)));
}

/// Integral over the part of the box with |w| > eps.
inline cplx beurling_clipped(BeurlingKernel k, double x1, double x2, double y1, double y2, double eps, int depth) {
  if (box_min_dist(x1, x2, y1, y2) >= eps) return beurling_rect(k, x1, x2, y1, y2);
  if (box_max_dist(x1, x2, y1, y2) <= eps) return 0.0;
  if (depth == 0) {
    const cplx mid(0.5 * (x1 + x2), 0.5 * (y1 + y2));
    return std::abs(mid) > eps ? beurling_kernel(k, mid) * ((x2 - x1) * (y2 - y1)) : cplx(0);
  }
  const double xm = 0.5 * (x1 + x2), ym = 0.5 * (y1 + y2);
  return beurling_clipped(k, x1, xm, y1, ym, eps, depth - 1) + beurling_clipped(k, xm, x2, y1, ym, eps, depth - 1) +
         beurling_clipped(k, x1, xm, ym, y2, eps, depth - 1) + beurling_clipped(k, xm, x2, ym, y2, eps, depth - 1);
}

}  // namespace detail

inline constexpr int kBeurlingSubdivision = 4;

/// Integral of f(omega) K(omega - z) over |omega - z| > eps.
inline std::complex<double> beurling_apply(const ComplexField& f, std::complex<double> z, double eps, BeurlingKernel k) {
  if (!(eps >= f.h / 2)) throw std::invalid_argument("beurling: eps must be at least half the mesh");
  std::complex<double> s = 0;
  for (std::size_t j = 0; j < f.ny; ++j)
    for (std::size_t i = 0; i < f.nx; ++i) {
      const auto v = f.at(i, j);
      if (v == 0.0) continue;
      const double x1 = f.ox + static_cast<double>(i) * f.h - z.real(), y1 = f.oy + static_cast<double>(j) * f.h - z.imag();
      s += v * detail::beurling_clipped(k, x1, x1 + f.h, y1, y1 + f.h, eps, kBeurlingSubdivision);
    }
  return s;
}

inline std::complex<double> beurling_truncated(const ComplexField& f, std::complex<double> z, double eps) {
  return beurling_apply(f, z, eps, BeurlingKernel::B);
}
inline std::complex<double> beurling_sq_truncated(const ComplexField& f, std::complex<double> z, double eps) {
  return beurling_apply(f, z, eps, BeurlingKernel::BSquared);
}
inline std::complex<double> beurling_truncated(const GridFunction& f, std::complex<double> z, double eps) {
  return beurling_truncated(ComplexField::from(f), z, eps);
}
inline std::complex<double> beurling_sq_truncated(const GridFunction& f, std::complex<double> z, double eps) {
  return beurling_sq_truncated(ComplexField::from(f), z, eps);
}

/// All truncations of one field at one point. Cells entirely outside the disk are
/// summed from a suffix table sorted by distance; only cells crossing the circle are
/// integrated per query.
class BeurlingProfile {
 public:
  BeurlingProfile(const ComplexField& f, std::complex<double> z, BeurlingKernel k) : h_(f.h), k_(k) {
    for (std::size_t j = 0; j < f.ny; ++j)
      for (std::size_t i = 0; i < f.nx; ++i) {
        const auto v = f.at(i, j);
        if (v == 0.0) continue;
        const double x1 = f.ox + static_cast<double>(i) * f.h - z.real(), y1 = f.oy + static_cast<double>(j) * f.h - z.imag();
        const double dmin = detail::box_min_dist(x1, x1 + f.h, y1, y1 + f.h);
        cells_.push_back({dmin, x1, y1, v, 0.0});
      }
    std::sort(cells_.begin(), cells_.end(), [](const Cell& a, const Cell& b) { return a.dmin < b.dmin; });
    std::complex<double> acc = 0;
    for (std::size_t c = cells_.size(); c-- > 0;) {
      auto& cell = cells_[c];
      if (cell.dmin > 0) acc += cell.v * detail::beurling_rect(k_, cell.x1, cell.x1 + f.h, cell.y1, cell.y1 + f.h);
      cell.suffix = acc;
    }
  }

  std::complex<double> value(double eps) const {
    if (!(eps >= h_ / 2)) throw std::invalid_argument("beurling: eps must be at least half the mesh");
    const auto first_out = std::lower_bound(cells_.begin(), cells_.end(), eps,
                                            [](const Cell& c, double e) { return c.dmin < e; });
    std::complex<double> s = first_out == cells_.end() ? std::complex<double>(0) : first_out->suffix;
    const double reach = eps - h_ * std::numbers::sqrt2;
    auto it = std::lower_bound(cells_.begin(), first_out, reach, [](const Cell& c, double e) { return c.dmin < e; });
    for (; it != first_out; ++it)
      s += it->v * detail::beurling_clipped(k_, it->x1, it->x1 + h_, it->y1, it->y1 + h_, eps, kBeurlingSubdivision);
    return s;
  }

  double maximal(const TruncationGrid& grid) const {
    double best = 0;
    for (double e : grid.values())
      if (e >= h_ / 2) best = std::max(best, std::abs(value(e)));
    return best;
  }

 private:
  struct Cell {
    double dmin, x1, y1;
    std::complex<double> v;
    std::complex<double> suffix;
  };
  double h_;
  BeurlingKernel k_;
  std::vector<Cell> cells_;
};

/// Default radii for a field: [h/2, 4 diameter], 64 per decade.
inline TruncationGrid beurling_grid(const ComplexField& f, int per_decade = 64) {
  const double diam = f.h * std::hypot(static_cast<double>(f.nx), static_cast<double>(f.ny));
  return TruncationGrid::logarithmic(f.h / 2, 4 * diam, per_decade);
}

inline double beurling_maximal(const ComplexField& f, std::complex<double> z, const TruncationGrid& grid) {
  return BeurlingProfile(f, z, BeurlingKernel::B).maximal(grid);
}
inline double beurling_sq_maximal(const ComplexField& f, std::complex<double> z, const TruncationGrid& grid) {
  return BeurlingProfile(f, z, BeurlingKernel::BSquared).maximal(grid);
}

/// Principal value Bf at every cell centre; the own cell drops out by symmetry.
inline ComplexField beurling_transform(const ComplexField& f) {
  const long NX = static_cast<long>(f.nx), NY = static_cast<long>(f.ny);
  const long TW = 2 * NX - 1;
  std::vector<std::complex<double>> table(static_cast<std::size_t>(TW * (2 * NY - 1)));
  for (long dj = -(NY - 1); dj < NY; ++dj)
    for (long di = -(NX - 1); di < NX; ++di) {
      if (di == 0 && dj == 0) continue;
      const double x1 = (static_cast<double>(di) - 0.5) * f.h, y1 = (static_cast<double>(dj) - 0.5) * f.h;
      table[static_cast<std::size_t>((dj + NY - 1) * TW + di + NX - 1)] =
          detail::beurling_rect(BeurlingKernel::B, x1, x1 + f.h, y1, y1 + f.h);
    }
  ComplexField out = f;
  for (long j = 0; j < NY; ++j)
    for (long i = 0; i < NX; ++i) {
      std::complex<double> s = 0;
      for (long sj = 0; sj < NY; ++sj)
        for (long si = 0; si < NX; ++si) {
          const auto v = f.at(static_cast<std::size_t>(si), static_cast<std::size_t>(sj));
          if (v != 0.0) s += v * table[static_cast<std::size_t>((sj - j + NY - 1) * TW + si - i + NX - 1)];
        }
      out.values[static_cast<std::size_t>(j * NX + i)] = s;
    }
  return out;
}

/// Indicator of the disk |z - c| < r, cell fractions estimated on a k x k subgrid.
inline GridFunction disk_indicator(double ox, double oy, double h, std::size_t nx, std::size_t ny, std::complex<double> c,
                                   double r, int k = 8) {
  std::vector<double> v(nx * ny, 0.0);
  for (std::size_t j = 0; j < ny; ++j)
    for (std::size_t i = 0; i < nx; ++i) {
      int in = 0;
      for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) {
          const std::complex<double> p(ox + (i + (a + 0.5) / k) * h, oy + (j + (b + 0.5) / k) * h);
          in += std::abs(p - c) < r;
        }
      v[j * nx + i] = static_cast<double>(in) / (k * k);
    }
  return GridFunction::plane(ox, oy, h, nx, ny, std::move(v));
}

}  // namespace czkit
