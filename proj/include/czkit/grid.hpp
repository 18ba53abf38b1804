#pragma once

/**
 * @file grid.hpp
 * @brief Piecewise-constant test functions in one and two dimensions.
 *
 * StepFunction1D allows arbitrary (nonuniform) cell edges and is what the 1D
 * operators work on. GridFunction is the uniform-mesh form used for input and
 * for the 2D operators. Both vanish outside their stored extent.
 */

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace czkit {

class StepFunction1D {
 public:
  StepFunction1D() = default;
  /// edges.size() == values.size() + 1, edges strictly increasing.
  StepFunction1D(std::vector<double> edges, std::vector<double> values)
      : edges_(std::move(edges)), values_(std::move(values)) {
    if (edges_.size() != values_.size() + 1) throw std::invalid_argument("StepFunction1D: need one more edge than values");
    for (std::size_t i = 1; i < edges_.size(); ++i)
      if (!(edges_[i] > edges_[i - 1])) throw std::invalid_argument("StepFunction1D: edges must increase strictly");
    build_prefix();
  }

  static StepFunction1D uniform(double origin, double h, std::vector<double> values) {
    if (!(h > 0)) throw std::invalid_argument("StepFunction1D: mesh must be positive");
    std::vector<double> edges(values.size() + 1);
    for (std::size_t i = 0; i < edges.size(); ++i) edges[i] = origin + h * static_cast<double>(i);
    return StepFunction1D(std::move(edges), std::move(values));
  }

  /// Indicator of [a, b) sampled on the uniform grid origin + h*i, i = 0..cells.
  static StepFunction1D indicator(double a, double b, double origin, double h, std::size_t cells) {
    std::vector<double> v(cells, 0.0);
    for (std::size_t i = 0; i < cells; ++i) {
      const double lo = origin + h * static_cast<double>(i), hi = lo + h;
      const double overlap = std::max(0.0, std::min(hi, b) - std::max(lo, a));
      v[i] = overlap / h;
    }
    return uniform(origin, h, std::move(v));
  }

  /// Cell averages of F' on the given edges, from an antiderivative F.
  static StepFunction1D from_antiderivative(const std::vector<double>& edges, const std::function<double(double)>& F) {
    std::vector<double> v(edges.size() - 1);
    double prev = F(edges.front());
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
      const double next = F(edges[i + 1]);
      v[i] = (next - prev) / (edges[i + 1] - edges[i]);
      prev = next;
    }
    return StepFunction1D(edges, std::move(v));
  }

  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }
  const std::vector<double>& edges() const { return edges_; }
  const std::vector<double>& values() const { return values_; }
  double left() const { return edges_.front(); }
  double right() const { return edges_.back(); }
  double width(std::size_t i) const { return edges_[i + 1] - edges_[i]; }

  double integral() const { return empty() ? 0.0 : prefix_.back(); }
  double abs_integral() const { return empty() ? 0.0 : abs_prefix_.back(); }

  /// Value at x, zero outside; cells are half-open [e_i, e_{i+1}).
  double operator()(double x) const {
    const long i = cell_of(x);
    return i < 0 ? 0.0 : values_[static_cast<std::size_t>(i)];
  }

  /// Index of the cell containing x, or -1.
  long cell_of(double x) const {
    if (empty() || x < edges_.front() || x >= edges_.back()) return -1;
    return static_cast<long>(std::upper_bound(edges_.begin(), edges_.end(), x) - edges_.begin()) - 1;
  }

  /// Integral of |f| between edges i and j (i <= j).
  double abs_integral_between(std::size_t i, std::size_t j) const { return abs_prefix_[j] - abs_prefix_[i]; }
  double integral_between(std::size_t i, std::size_t j) const { return prefix_[j] - prefix_[i]; }

  /// Integral of f over [a, b], any real a <= b.
  double integral(double a, double b) const {
    if (empty() || b <= a) return 0.0;
    return cumulative(b) - cumulative(a);
  }

  /// Every cell split into k equal cells; the function is unchanged.
  StepFunction1D refined(int k) const {
    if (k < 1) throw std::invalid_argument("refined: factor must be positive");
    std::vector<double> e, v;
    e.reserve(size() * k + 1);
    v.reserve(size() * k);
    for (std::size_t i = 0; i < size(); ++i)
      for (int s = 0; s < k; ++s) {
        e.push_back(edges_[i] + width(i) * s / k);
        v.push_back(values_[i]);
      }
    e.push_back(edges_.back());
    return StepFunction1D(std::move(e), std::move(v));
  }

  StepFunction1D map(const std::function<double(double)>& fn) const {
    std::vector<double> v(values_);
    for (auto& x : v) x = fn(x);
    return StepFunction1D(edges_, std::move(v));
  }

  friend StepFunction1D operator+(const StepFunction1D& a, const StepFunction1D& b) {
    if (a.edges_ != b.edges_) throw std::invalid_argument("StepFunction1D: sum needs identical edges");
    std::vector<double> v(a.values_);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += b.values_[i];
    return StepFunction1D(a.edges_, std::move(v));
  }
  friend StepFunction1D operator*(double c, const StepFunction1D& a) {
    return a.map([c](double x) { return c * x; });
  }

 private:
  void build_prefix() {
    prefix_.assign(edges_.size(), 0.0);
    abs_prefix_.assign(edges_.size(), 0.0);
    for (std::size_t i = 0; i < values_.size(); ++i) {
      prefix_[i + 1] = prefix_[i] + values_[i] * width(i);
      abs_prefix_[i + 1] = abs_prefix_[i] + std::fabs(values_[i]) * width(i);
    }
  }
  double cumulative(double x) const {
    if (x <= edges_.front()) return 0.0;
    if (x >= edges_.back()) return prefix_.back();
    const auto i = static_cast<std::size_t>(cell_of(x));
    return prefix_[i] + values_[i] * (x - edges_[i]);
  }

  std::vector<double> edges_;
  std::vector<double> values_;
  std::vector<double> prefix_;
  std::vector<double> abs_prefix_;
};

/// Piecewise constant function on a uniform grid in one or two dimensions.
/// In 2D values are row-major with x varying fastest: values[iy * nx + ix].
class GridFunction {
 public:
  GridFunction() = default;

  static GridFunction line(double origin, double h, std::vector<double> values) {
    GridFunction g;
    g.dim_ = 1;
    g.origin_ = {origin, 0.0};
    g.h_ = h;
    g.nx_ = values.size();
    g.ny_ = 1;
    g.values_ = std::move(values);
    g.validate();
    return g;
  }

  static GridFunction plane(double ox, double oy, double h, std::size_t nx, std::size_t ny, std::vector<double> values) {
    GridFunction g;
    g.dim_ = 2;
    g.origin_ = {ox, oy};
    g.h_ = h;
    g.nx_ = nx;
    g.ny_ = ny;
    g.values_ = std::move(values);
    g.validate();
    return g;
  }

  /// Cell-centre samples of fn over [ox, ox + nx h) x [oy, oy + ny h).
  static GridFunction sample(double ox, double oy, double h, std::size_t nx, std::size_t ny,
                             const std::function<double(double, double)>& fn) {
    std::vector<double> v(nx * ny);
    for (std::size_t j = 0; j < ny; ++j)
      for (std::size_t i = 0; i < nx; ++i) v[j * nx + i] = fn(ox + (i + 0.5) * h, oy + (j + 0.5) * h);
    return plane(ox, oy, h, nx, ny, std::move(v));
  }

  int dim() const { return dim_; }
  double mesh() const { return h_; }
  double origin(int axis = 0) const { return origin_[axis]; }
  std::size_t nx() const { return nx_; }
  std::size_t ny() const { return ny_; }
  const std::vector<double>& values() const { return values_; }
  double at(std::size_t i, std::size_t j = 0) const { return values_[j * nx_ + i]; }

  double cell_center(int axis, std::size_t i) const { return origin_[axis] + (static_cast<double>(i) + 0.5) * h_; }

  double integral() const {
    return std::pow(h_, dim_) * std::accumulate(values_.begin(), values_.end(), 0.0);
  }

  StepFunction1D as_step() const {
    if (dim_ != 1) throw std::logic_error("GridFunction::as_step: not one-dimensional");
    return StepFunction1D::uniform(origin_[0], h_, values_);
  }

  /// Each cell split into k x k (or k) equal cells.
  GridFunction refined(int k) const {
    if (dim_ == 1) {
      std::vector<double> v;
      for (double x : values_)
        for (int s = 0; s < k; ++s) v.push_back(x);
      return line(origin_[0], h_ / k, std::move(v));
    }
    std::vector<double> v(nx_ * ny_ * k * k);
    const std::size_t NX = nx_ * k;
    for (std::size_t j = 0; j < ny_ * k; ++j)
      for (std::size_t i = 0; i < NX; ++i) v[j * NX + i] = at(i / k, j / k);
    return plane(origin_[0], origin_[1], h_ / k, NX, ny_ * k, std::move(v));
  }

 private:
  void validate() const {
    if (!(h_ > 0)) throw std::invalid_argument("GridFunction: mesh must be positive");
    if (values_.size() != nx_ * ny_) throw std::invalid_argument("GridFunction: value count does not match the grid");
  }

  int dim_ = 1;
  std::array<double, 2> origin_{0, 0};
  double h_ = 1;
  std::size_t nx_ = 0, ny_ = 1;
  std::vector<double> values_;
};

/// Reads `x,value` (1D) or `x,y,value` (2D) rows of cell centres on a uniform
/// grid. A non-numeric first line is treated as a header. Missing cells are zero.
inline GridFunction load_grid_csv(std::istream& in) {
  std::vector<std::vector<double>> rows;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    bool numeric = true;
    while (std::getline(ss, cell, ',')) {
      try {
        std::size_t used = 0;
        row.push_back(std::stod(cell, &used));
        if (cell.find_first_not_of(" \t\r", used) != std::string::npos) numeric = false;
      } catch (const std::exception&) {
        numeric = false;
      }
    }
    if (!numeric) {
      if (first) {
        first = false;
        continue;
      }
      throw std::invalid_argument("grid csv: non-numeric row '" + line + "'");
    }
    first = false;
    if (!rows.empty() && row.size() != rows.front().size()) throw std::invalid_argument("grid csv: ragged rows");
    if (row.size() != 2 && row.size() != 3) throw std::invalid_argument("grid csv: expected x,value or x,y,value");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw std::invalid_argument("grid csv: no data");
  const int dim = static_cast<int>(rows.front().size()) - 1;

  auto axis_grid = [&](int axis, double& lo, double& h, std::size_t& count) {
    std::vector<double> c;
    for (const auto& r : rows) c.push_back(r[axis]);
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    h = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < c.size(); ++i) h = std::min(h, c[i] - c[i - 1]);
    if (c.size() == 1) h = 1.0;
    const double span = c.back() - c.front();
    count = static_cast<std::size_t>(std::llround(span / h)) + 1;
    for (double v : c) {
      const double k = (v - c.front()) / h;
      if (std::fabs(k - std::round(k)) > 1e-6) throw std::invalid_argument("grid csv: coordinates are not on a uniform grid");
    }
    lo = c.front() - h / 2;
  };
  double ox, hx, oy = 0, hy = 0;
  std::size_t nx, ny = 1;
  axis_grid(0, ox, hx, nx);
  if (dim == 2) {
    axis_grid(1, oy, hy, ny);
    if (std::fabs(hx - hy) > 1e-9 * std::max(hx, hy)) throw std::invalid_argument("grid csv: x and y spacings differ");
  }
  std::vector<double> v(nx * ny, 0.0);
  for (const auto& r : rows) {
    const auto i = static_cast<std::size_t>(std::llround((r[0] - ox) / hx - 0.5));
    const std::size_t j = dim == 2 ? static_cast<std::size_t>(std::llround((r[1] - oy) / hx - 0.5)) : 0;
    v[j * nx + i] = r.back();
  }
  return dim == 1 ? GridFunction::line(ox, hx, std::move(v)) : GridFunction::plane(ox, oy, hx, nx, ny, std::move(v));
}

inline GridFunction load_grid_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open grid file '" + path + "'");
  return load_grid_csv(in);
}

}  // namespace czkit
