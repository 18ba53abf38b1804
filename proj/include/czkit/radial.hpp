#pragma once

/**
 * @file radial.hpp
 * @brief Symbolic radial functions: power-log sums, the fundamental solution
 *        of (-Lap)^{1/2} Lap^N, the Bessel-type family G_q and the formula for
 *        L(d) applied to a radial function.
 */

#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <ostream>
#include <regex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "czkit/exact.hpp"
#include "czkit/poly.hpp"

namespace czkit {

/// Finite sum of terms s * x^a * (log x)^e with e in {0, 1}.
class RadialExpr {
 public:
  using Key = std::pair<Rational, int>;  // (a, e)

  RadialExpr() = default;

  static RadialExpr term(const SymScalar& s, const Rational& a, int e = 0) {
    RadialExpr r;
    r.add(s, a, e);
    return r;
  }

  void add(const SymSum& s, const Rational& a, int e = 0) {
    if (e != 0 && e != 1) throw std::invalid_argument("RadialExpr: log power must be 0 or 1");
    if (s.is_zero()) return;
    auto& c = terms_[{a, e}];
    c += s;
    if (c.is_zero()) terms_.erase({a, e});
  }

  const std::map<Key, SymSum>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  RadialExpr& operator+=(const RadialExpr& o) {
    for (const auto& [k, c] : o.terms_) add(c, k.first, k.second);
    return *this;
  }
  RadialExpr& operator*=(const SymScalar& s) {
    RadialExpr out;
    for (const auto& [k, c] : terms_) out.add(c * s, k.first, k.second);
    return *this = out;
  }
  friend RadialExpr operator+(RadialExpr a, const RadialExpr& b) { return a += b; }
  friend RadialExpr operator*(RadialExpr a, const SymScalar& s) { return a *= s; }
  friend bool operator==(const RadialExpr& a, const RadialExpr& b) { return a.terms_ == b.terms_; }

  /// Laplacian in R^n of the radial function r -> expr(r).
  RadialExpr laplacian(int n) const {
    RadialExpr out;
    for (const auto& [k, c] : terms_) {
      const auto& [a, e] = k;
      const Rational f = a * (a + n - 2);
      out.add(c * SymScalar(f), a - 2, e);
      if (e == 1) out.add(c * SymScalar(Rational(2 * a + n - 2)), a - 2, 0);
    }
    return out;
  }

  /// d/dx, using d/dx(x^a log x) = a x^{a-1} log x + x^{a-1}.
  RadialExpr derivative() const {
    RadialExpr out;
    for (const auto& [k, c] : terms_) {
      const auto& [a, e] = k;
      out.add(c * SymScalar(a), a - 1, e);
      if (e == 1) out.add(c, a - 1, 0);
    }
    return out;
  }

  /// Value at x = 1, where log x vanishes.
  SymSum at_one() const {
    SymSum s;
    for (const auto& [k, c] : terms_)
      if (k.second == 0) s += c;
    return s;
  }

  friend std::ostream& operator<<(std::ostream& os, const RadialExpr& r) {
    if (r.is_zero()) return os << "0";
    bool first = true;
    for (const auto& [k, c] : r.terms_) {
      os << (first ? "" : " + ") << "(" << c << ")*r^" << k.first.get_str();
      if (k.second) os << "*log(r)";
      first = false;
    }
    return os;
  }

 private:
  std::map<Key, SymSum> terms_;
};

/// Coefficients of E_N = c_n r^{2N+1-n} (alpha + beta log r^2).
struct FundamentalCoeffs {
  Rational alpha;
  Rational beta;
  /// True in the logarithmic case, where alpha is arbitrary.
  bool alpha_free = false;
  int regime = 1;
};

inline FundamentalCoeffs fundamental_coeffs(int n, int N) {
  if (n < 2 || N < 1) throw std::invalid_argument("fundamental_coeffs: need n >= 2 and N >= 1");
  FundamentalCoeffs fc;
  if (n % 2 == 0) {
    // m = (n-1)/2 is a half-integer
    const Rational m = frac(n - 1, 2);
    fc.alpha = Rational(1) / (gen_binom(N - m, N) * Rational(factorial(2 * N)));
    fc.regime = 1;
    return fc;
  }
  const int m = (n - 1) / 2;
  if (2 * N + 1 - n < 0) {
    Rational num(factorial(m - N - 1) * factorial(N - 1));
    Rational den(2 * factorial(m - 1) * factorial(2 * N - 1));
    fc.alpha = (N % 2 ? Rational(-1) : Rational(1)) * num / den;
    fc.regime = 2;
    return fc;
  }
  const Rational sign = (m + 1) % 2 ? Rational(-1) : Rational(1);
  Rational den = sign * 2 * Rational(factorial(m - 1) * factorial(N - m) * factorial(2 * N - 1)) /
                 Rational(factorial(N - 1));
  fc.beta = Rational(1) / den;
  fc.alpha_free = true;
  fc.regime = 3;
  return fc;
}

/// E_N as a function of r; alpha is taken from `fc` unless overridden.
inline RadialExpr fundamental_solution(int n, int N, const FundamentalCoeffs& fc) {
  const SymScalar cn = c_n(n);
  const Rational a(2 * N + 1 - n);
  RadialExpr E = RadialExpr::term(cn * SymScalar(fc.alpha), a, 0);
  E += RadialExpr::term(cn * SymScalar(2 * fc.beta), a, 1);
  return E;
}

/// Lap^N E_N == c_n r^{1-n}; in the logarithmic case also for several alphas.
inline bool radial_laplacian_check(int n, int N) {
  FundamentalCoeffs fc = fundamental_coeffs(n, N);
  const RadialExpr target = RadialExpr::term(c_n(n), Rational(1 - n), 0);
  std::vector<Rational> alphas{fc.alpha};
  if (fc.alpha_free) alphas = {Rational(0), Rational(1), frac(-7, 3)};
  for (const auto& alpha : alphas) {
    fc.alpha = alpha;
    RadialExpr E = fundamental_solution(n, N, fc);
    for (int i = 0; i < N; ++i) E = E.laplacian(n);
    if (!(E == target)) return false;
  }
  return true;
}

// ---- the family G_q ---------------------------------------------------------

/// Coefficient of r^{2i} in G_q(r) = sum_i (-1)^i r^{2i} / (i! Gamma(q+i+1) 2^{2i+q}).
inline SymScalar bessel_series_coeff(const Rational& q, int i) {
  if (i < 0) return SymScalar();
  const SymScalar den = SymScalar(Rational(factorial(static_cast<unsigned long>(i)))) * gamma_exact(q + i + 1) *
                        SymScalar::two_pow(q + 2 * i);
  return SymScalar(i % 2 ? -1 : 1) / den;
}

/// G_q(0) = 1 / (2^q Gamma(q+1)).
inline SymScalar bessel_at_zero(const Rational& q) {
  return (gamma_exact(q + 1) * SymScalar::two_pow(q)).inverse();
}

/// Partial sum of the series for G_q with the given number of terms.
inline double bessel_series_eval(const Rational& q, double r, int terms = 30) {
  long double s = 0;
  const long double r2 = static_cast<long double>(r) * r;
  long double p = 1;
  for (int i = 0; i < terms; ++i) {
    s += bessel_series_coeff(q, i).to_complex().real() * p;
    p *= r2;
  }
  return static_cast<double>(s);
}

/// G_{1/2}(r) = sqrt(2/pi) sin(r)/r.
inline double bessel_half_closed_form(double r) {
  return std::sqrt(2.0 / std::numbers::pi) * std::sin(r) / r;
}

// ---- L(d) applied to a radial function --------------------------------------

/// Radial factor of a term: r^{2k} or G_q(r).
struct RadialAtom {
  enum class Kind { Power, Bessel } kind = Kind::Power;
  /// k for r^{2k}; q for G_q.
  Rational index;

  friend bool operator==(const RadialAtom&, const RadialAtom&) = default;
  std::string str() const {
    return kind == Kind::Power ? "r^" + Rational(2 * index).get_str() : "G_" + index.get_str();
  }
};

/// Parses "r^<even integer>" or "G_<q>", q a positive integer or half-integer.
inline RadialAtom parse_radial_family(const std::string& text) {
  static const std::regex power(R"(\s*r\^(\d+)\s*)");
  static const std::regex bessel(R"(\s*G_\{?(\d+(?:/\d+)?)\}?\s*)");
  std::smatch m;
  if (std::regex_match(text, m, power)) {
    const long e = std::stol(m[1]);
    if (e % 2) throw std::invalid_argument("radial family: only even powers r^{2k} are supported, got '" + text + "'");
    return {RadialAtom::Kind::Power, Rational(e / 2)};
  }
  if (std::regex_match(text, m, bessel)) {
    Rational q = parse_rational(m[1]);
    if (q <= 0 || !is_integer(2 * q))
      throw std::invalid_argument("radial family: G_q needs a positive integer or half-integer q");
    return {RadialAtom::Kind::Bessel, q};
  }
  throw std::invalid_argument("radial family: '" + text + "' is neither r^{2k} nor G_q");
}

/// One term poly(x) * atom(|x|) of an expansion.
struct RadialTerm {
  MultiPoly poly;
  RadialAtom atom;
};

/// (1/r d/dr)^m applied to an atom: returns (coefficient, atom).
inline std::pair<Rational, RadialAtom> radial_derivative_power(const RadialAtom& f, int m) {
  if (f.kind == RadialAtom::Kind::Bessel)
    return {m % 2 ? Rational(-1) : Rational(1), RadialAtom{RadialAtom::Kind::Bessel, f.index + m}};
  // (1/r d/dr) r^{2k} = 2k r^{2k-2}
  Rational c(1);
  Rational k = f.index;
  for (int i = 0; i < m; ++i) {
    c *= 2 * k;
    k -= 1;
  }
  return {c, RadialAtom{RadialAtom::Kind::Power, c == 0 ? Rational(0) : k}};
}

/// L(d) f(|x|) = sum_nu Lap^nu L(x) / (2^nu nu!) * (1/r d/dr)^{l-nu} f, L homogeneous of degree l.
inline std::vector<RadialTerm> lyons_zumbrun_apply(const MultiPoly& L, const RadialAtom& f) {
  if (!L.is_zero() && !L.is_homogeneous()) throw std::invalid_argument("lyons_zumbrun_apply: L must be homogeneous");
  std::vector<RadialTerm> out;
  if (L.is_zero()) return out;
  const int l = L.degree();
  MultiPoly lap = L;
  for (int nu = 0; 2 * nu <= l && !lap.is_zero(); ++nu) {
    const auto [c, atom] = radial_derivative_power(f, l - nu);
    if (c != 0) {
      const Rational w = c / (pow2(nu) * Rational(factorial(static_cast<unsigned long>(nu))));
      out.push_back({lap * w, atom});
    }
    lap = lap.laplacian();
  }
  return out;
}

/// Sum of the terms when every atom is a nonnegative power of r.
inline MultiPoly radial_terms_to_poly(int n, const std::vector<RadialTerm>& terms) {
  MultiPoly out(n);
  for (const auto& t : terms) {
    if (t.atom.kind != RadialAtom::Kind::Power || t.atom.index < 0 || !is_integer(t.atom.index))
      throw std::domain_error("radial_terms_to_poly: term is not a polynomial");
    out += t.poly * MultiPoly::radial_power(n, static_cast<int>(t.atom.index.get_num().get_si()));
  }
  return out;
}

/// Series of G_q(|x|)/G_q(0) truncated to |x|^{2 terms - 2}, as a polynomial with rational coefficients.
inline MultiPoly bessel_normalized_polynomial(int n, const Rational& q, int terms, const Rational& base_q) {
  const SymScalar g0 = bessel_at_zero(base_q);
  MultiPoly out(n);
  for (int i = 0; i < terms; ++i) {
    const SymScalar c = bessel_series_coeff(q, i) / g0;
    if (c.h() != 0 || c.s() != 0 || !c.is_real()) throw std::logic_error("bessel_normalized_polynomial: irrational ratio");
    out += MultiPoly::radial_power(n, i) * c.signed_q();
  }
  return out;
}

}  // namespace czkit
