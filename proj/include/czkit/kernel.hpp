#pragma once

/**
 * @file kernel.hpp
 * @brief Smooth homogeneous kernels K(x) = Omega(x)/|x|^n with polynomial Omega.
 *
 * A kernel is stored through the spherical harmonic components of Omega.
 * Components are homogeneous harmonic polynomials of degree >= 1; a constant
 * component would violate the cancellation condition and is rejected.
 */

#include <algorithm>
#include <cmath>
#include <complex>
#include <fstream>
#include <istream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "czkit/exact.hpp"
#include "czkit/poly.hpp"

namespace czkit {

enum class Parity { Odd, Even, Mixed, Zero };

inline const char* to_string(Parity p) {
  switch (p) {
    case Parity::Odd: return "odd";
    case Parity::Even: return "even";
    case Parity::Mixed: return "mixed";
    default: return "zero";
  }
}

/// Raised when Omega has nonzero mean over the sphere; carries the exact mean.
class CancellationError : public std::invalid_argument {
 public:
  explicit CancellationError(const Rational& mean)
      : std::invalid_argument("kernel violates cancellation: sphere mean of Omega is " + mean.get_str()),
        mean_(mean) {}
  const Rational& mean() const { return mean_; }

 private:
  Rational mean_;
};

class KernelSpec {
 public:
  /// Components sorted by degree; repeated degrees are merged.
  KernelSpec(int n, std::vector<HarmonicComponent> components) : n_(n) {
    if (n < 2 || n > kMaxVars) throw std::invalid_argument("KernelSpec: unsupported dimension");
    for (auto& c : components) {
      if (c.poly().nvars() != n) throw std::invalid_argument("KernelSpec: component has wrong number of variables");
      if (c.poly().is_zero()) continue;
      if (c.degree() == 0) throw CancellationError(c.poly().coeff(Exponent{}));
      add(std::move(c));
    }
  }

  int dim() const { return n_; }
  const std::vector<HarmonicComponent>& components() const { return components_; }
  bool is_zero() const { return components_.empty(); }

  Parity parity() const {
    if (components_.empty()) return Parity::Zero;
    bool odd = false, even = false;
    for (const auto& c : components_) (c.degree() % 2 ? odd : even) = true;
    return odd && even ? Parity::Mixed : (odd ? Parity::Odd : Parity::Even);
  }

  /// Component of the given degree, or nullptr.
  const HarmonicComponent* component(int degree) const {
    for (const auto& c : components_)
      if (c.degree() == degree) return &c;
    return nullptr;
  }

  /// Omega(x) = sum_j P_j(x/|x|).
  double omega(std::span<const double> x) const {
    double r2 = 0;
    for (int i = 0; i < n_; ++i) r2 += x[i] * x[i];
    if (r2 == 0) throw std::domain_error("omega: x = 0");
    const double r = std::sqrt(r2);
    std::vector<double> u(x.begin(), x.begin() + n_);
    for (auto& v : u) v /= r;
    double s = 0;
    for (const auto& c : components_) s += c.poly().eval(std::span<const double>(u));
    return s;
  }

  /// sum_j P_j(x) |x|^{2(d-j)/2} as a single homogeneous polynomial of degree d (max degree, matching parity).
  MultiPoly homogenized() const {
    MultiPoly out(n_);
    if (components_.empty()) return out;
    const int d = components_.back().degree();
    for (const auto& c : components_) {
      if ((d - c.degree()) % 2) throw std::domain_error("homogenized: mixed-parity kernel has no homogeneous form");
      out += c.poly() * MultiPoly::radial_power(n_, (d - c.degree()) / 2);
    }
    return out;
  }

 private:
  void add(HarmonicComponent c) {
    for (auto& have : components_) {
      if (have.degree() == c.degree()) {
        have = HarmonicComponent(c.degree(), have.poly() + c.poly());
        std::erase_if(components_, [](const HarmonicComponent& h) { return h.poly().is_zero(); });
        return;
      }
    }
    auto pos = std::find_if(components_.begin(), components_.end(),
                            [&](const HarmonicComponent& h) { return h.degree() > c.degree(); });
    components_.insert(pos, std::move(c));
  }

  int n_;
  std::vector<HarmonicComponent> components_;
};

/// Kernel whose Omega is W restricted to the unit sphere, W homogeneous.
inline KernelSpec kernel_from_polynomial(int n, const MultiPoly& W) {
  if (W.nvars() != n) throw std::invalid_argument("kernel_from_polynomial: W has the wrong number of variables");
  if (!W.is_zero() && !W.is_homogeneous())
    throw std::invalid_argument("kernel_from_polynomial: W must be homogeneous");
  const Rational mean = sphere_mean(W);
  if (mean != 0) throw CancellationError(mean);
  std::vector<HarmonicComponent> comps;
  for (auto& piece : harmonic_decompose(W)) comps.push_back(piece.component);
  return KernelSpec(n, std::move(comps));
}

/// Fourier multiplier sum_j gamma_j P_j(xi/|xi|), in floating point.
inline std::complex<double> multiplier_eval(const KernelSpec& K, std::span<const double> xi) {
  const int n = K.dim();
  if (static_cast<int>(xi.size()) < n) throw std::invalid_argument("multiplier_eval: point has too few coordinates");
  double r2 = 0;
  for (int i = 0; i < n; ++i) r2 += xi[i] * xi[i];
  if (r2 == 0) throw std::domain_error("multiplier_eval: xi = 0");
  const double r = std::sqrt(r2);
  std::vector<double> u(xi.begin(), xi.begin() + n);
  for (auto& v : u) v /= r;
  std::complex<double> m{0, 0};
  for (const auto& c : K.components()) {
    const auto g = gamma_j(c.degree(), n).to_complex();
    m += std::complex<double>(static_cast<double>(g.real()), static_cast<double>(g.imag())) *
         c.poly().eval(std::span<const double>(u));
  }
  return m;
}

// ---- kernel files -----------------------------------------------------------
// "dim n" on the first non-comment line, then polynomial terms of W.

inline KernelSpec read_kernel(std::istream& in) {
  std::string line;
  int n = -1;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    if (key != "dim" || !(ls >> n)) throw std::invalid_argument("kernel file: expected 'dim n' header");
    std::string extra;
    if (ls >> extra) throw std::invalid_argument("kernel file: trailing text after 'dim n'");
    break;
  }
  if (n < 2 || n > kMaxVars) throw std::invalid_argument("kernel file: missing or unsupported dimension");
  return kernel_from_polynomial(n, read_poly(in, n));
}

inline KernelSpec load_kernel(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open kernel file '" + path + "'");
  return read_kernel(in);
}

inline void write_kernel(std::ostream& os, const KernelSpec& K) {
  os << "dim " << K.dim() << "\n";
  write_poly(os, K.homogenized());
}

// ---- named kernels ---------------------------------------------------------

/// x1 + lambda (n+1)(x1^3 - 3 x1 x2^2) on the sphere.
inline KernelSpec cubic_family_kernel(int n, const Rational& lambda) {
  const MultiPoly x1 = MultiPoly::variable(n, 0), x2 = MultiPoly::variable(n, 1);
  const MultiPoly cubic = x1 * x1 * x1 - x1 * x2 * x2 * Rational(3);
  std::vector<HarmonicComponent> comps;
  comps.emplace_back(1, x1);
  comps.emplace_back(3, cubic * (lambda * (n + 1)));
  return KernelSpec(n, std::move(comps));
}

/// Higher order Riesz transform with numerator P (homogeneous harmonic).
inline KernelSpec riesz_kernel(const MultiPoly& P) {
  return KernelSpec(P.nvars(), {HarmonicComponent(P.degree(), P)});
}

}  // namespace czkit
