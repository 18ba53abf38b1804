#pragma once

/**
 * @file poly.hpp
 * @brief Sparse multivariate polynomials with rational coefficients.
 *
 * Terms are stored in graded-lexicographic order so the leading term of a
 * polynomial is the last map entry. Everything here is exact: derivatives,
 * Laplacians, differential operators P(d), harmonic decomposition,
 * divisibility and integrals of monomials over the unit sphere.
 */

#include <algorithm>
#include <array>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "czkit/exact.hpp"

namespace czkit {

inline constexpr int kMaxVars = 8;

using Exponent = std::array<std::uint16_t, kMaxVars>;

inline int total_degree(const Exponent& e) {
  int d = 0;
  for (auto v : e) d += v;
  return d;
}

/// Graded lexicographic order: total degree first, then lexicographic.
struct GrlexLess {
  bool operator()(const Exponent& a, const Exponent& b) const {
    const int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return a < b;
  }
};

class MultiPoly {
 public:
  using TermMap = std::map<Exponent, Rational, GrlexLess>;

  explicit MultiPoly(int n = 1) : n_(n) {
    if (n < 1 || n > kMaxVars) throw std::invalid_argument("MultiPoly: unsupported number of variables");
  }

  static MultiPoly constant(int n, const Rational& c) {
    MultiPoly p(n);
    p.add_term(Exponent{}, c);
    return p;
  }
  static MultiPoly monomial(int n, const Exponent& e, const Rational& c = Rational(1)) {
    MultiPoly p(n);
    p.check_exponent(e);
    p.add_term(e, c);
    return p;
  }
  /// x_i, zero-based.
  static MultiPoly variable(int n, int i) {
    Exponent e{};
    e.at(static_cast<std::size_t>(i)) = 1;
    return monomial(n, e);
  }
  /// |x|^{2k} expanded by the multinomial theorem.
  static MultiPoly radial_power(int n, int k) {
    MultiPoly r2(n);
    for (int i = 0; i < n; ++i) r2 += variable(n, i) * variable(n, i);
    return r2.pow(k);
  }

  int nvars() const { return n_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rational coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// Degree of the zero polynomial is reported as -1.
  int degree() const { return terms_.empty() ? -1 : total_degree(terms_.rbegin()->first); }
  int min_degree() const { return terms_.empty() ? -1 : total_degree(terms_.begin()->first); }
  bool is_homogeneous() const { return degree() == min_degree(); }

  std::pair<Exponent, Rational> leading_term() const {
    if (terms_.empty()) throw std::domain_error("leading_term of zero polynomial");
    return *terms_.rbegin();
  }

  void add_term(const Exponent& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    same_ring(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    same_ring(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  MultiPoly& operator*=(const Rational& c) {
    if (c == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
  }
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  MultiPoly operator-() const { return *this * Rational(-1); }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.same_ring(b);
    MultiPoly out(a.n_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponent e{};
        for (int i = 0; i < a.n_; ++i) e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
        out.add_term(e, ca * cb);
      }
    return out;
  }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  MultiPoly pow(int k) const {
    MultiPoly out = constant(n_, Rational(1));
    for (int i = 0; i < k; ++i) out *= *this;
    return out;
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }

  /// Partial derivative in variable i (zero-based).
  MultiPoly derivative(int i) const {
    MultiPoly out(n_);
    for (const auto& [e, c] : terms_) {
      if (e[i] == 0) continue;
      Exponent d = e;
      --d[i];
      out.add_term(d, c * e[i]);
    }
    return out;
  }

  MultiPoly laplacian() const {
    MultiPoly out(n_);
    for (int i = 0; i < n_; ++i) out += derivative(i).derivative(i);
    return out;
  }

  MultiPoly laplacian_pow(int j) const {
    MultiPoly out = *this;
    for (int i = 0; i < j && !out.is_zero(); ++i) out = out.laplacian();
    return out;
  }

  /// The homogeneous part of the given degree.
  MultiPoly homogeneous_part(int d) const {
    MultiPoly out(n_);
    for (const auto& [e, c] : terms_)
      if (total_degree(e) == d) out.add_term(e, c);
    return out;
  }

  template <class T>
  T eval(std::span<const T> x) const {
    if (static_cast<int>(x.size()) < n_) throw std::invalid_argument("MultiPoly::eval: point has too few coordinates");
    T sum{};
    for (const auto& [e, c] : terms_) {
      T term = coeff_as<T>(c);
      for (int i = 0; i < n_; ++i)
        for (int p = 0; p < e[i]; ++p) term *= x[i];
      sum += term;
    }
    return sum;
  }
  double eval(std::span<const double> x) const { return eval<double>(x); }
  double eval(std::initializer_list<double> x) const {
    return eval<double>(std::span<const double>(x.begin(), x.size()));
  }

  /// Sum of absolute values of the coefficients, a bound for |P| on the closed unit ball.
  Rational abs_coeff_sum() const {
    Rational s(0);
    for (const auto& [e, c] : terms_) s += abs(c);
    return s;
  }

  std::string str() const {
    std::ostringstream os;
    os << *this;
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const MultiPoly& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (auto it = p.terms_.rbegin(); it != p.terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
      const Rational a = abs(c);
      const bool unit = a == 1 && total_degree(e) > 0;
      if (!unit) os << a.get_str();
      bool star = !unit;
      for (int i = 0; i < p.n_; ++i) {
        if (e[i] == 0) continue;
        os << (star ? "*" : "") << "x" << (i + 1);
        if (e[i] > 1) os << "^" << e[i];
        star = true;
      }
      first = false;
    }
    return os;
  }

 private:
  template <class T>
  static T coeff_as(const Rational& c) {
    if constexpr (std::is_same_v<T, Rational>) {
      return c;
    } else {
      return static_cast<T>(to_long_double(c));
    }
  }

  void check_exponent(const Exponent& e) const {
    for (int i = n_; i < kMaxVars; ++i)
      if (e[i] != 0) throw std::invalid_argument("MultiPoly: exponent uses a variable beyond n");
  }
  void same_ring(const MultiPoly& o) const {
    if (o.n_ != n_) throw std::invalid_argument("MultiPoly: mismatched number of variables");
  }

  int n_;
  TermMap terms_;
};

/// P(d) applied to Q: each monomial x^a of P becomes the mixed partial d^a.
inline MultiPoly apply_diffop(const MultiPoly& P, const MultiPoly& Q) {
  if (P.nvars() != Q.nvars()) throw std::invalid_argument("apply_diffop: mismatched number of variables");
  MultiPoly out(Q.nvars());
  for (const auto& [e, c] : P.terms()) {
    MultiPoly d = Q;
    for (int i = 0; i < P.nvars() && !d.is_zero(); ++i)
      for (int p = 0; p < e[i] && !d.is_zero(); ++p) d = d.derivative(i);
    out += d * c;
  }
  return out;
}

/// Exact division; nullopt when D does not divide P in Q[x1..xn].
inline std::optional<MultiPoly> divide_exact(const MultiPoly& P, const MultiPoly& D) {
  if (D.is_zero()) throw std::domain_error("divide_exact: division by the zero polynomial");
  if (P.nvars() != D.nvars()) throw std::invalid_argument("divide_exact: mismatched number of variables");
  const int n = P.nvars();
  const auto [lead_e, lead_c] = D.leading_term();
  MultiPoly quotient(n), rem = P;
  while (!rem.is_zero()) {
    const auto [e, c] = rem.leading_term();
    Exponent t{};
    for (int i = 0; i < n; ++i) {
      if (e[i] < lead_e[i]) return std::nullopt;  // the leading term can never be cancelled
      t[i] = static_cast<std::uint16_t>(e[i] - lead_e[i]);
    }
    const MultiPoly step = MultiPoly::monomial(n, t, c / lead_c);
    quotient += step;
    rem -= step * D;
  }
  if (!(quotient * D == P)) throw std::logic_error("divide_exact: verification failed");
  return quotient;
}

/// Homogeneous harmonic polynomial together with its degree.
class HarmonicComponent {
 public:
  HarmonicComponent(int degree, MultiPoly poly) : degree_(degree), poly_(std::move(poly)) {
    if (!poly_.is_zero() && (!poly_.is_homogeneous() || poly_.degree() != degree_))
      throw std::invalid_argument("HarmonicComponent: polynomial is not homogeneous of the stated degree");
    if (!poly_.laplacian().is_zero()) throw std::invalid_argument("HarmonicComponent: polynomial is not harmonic");
  }
  int degree() const { return degree_; }
  const MultiPoly& poly() const { return poly_; }
  friend bool operator==(const HarmonicComponent&, const HarmonicComponent&) = default;

 private:
  int degree_;
  MultiPoly poly_;
};

/// H_{d-2k} |x|^{2k} term of a decomposition.
struct HarmonicPiece {
  int k;
  HarmonicComponent component;
};

/// Harmonic projection of a homogeneous polynomial of degree m:
/// sum_j (-1)^j / (2^j j! prod_{i<j}(n + 2m - 4 - 2i)) |x|^{2j} Lap^j P.
inline MultiPoly harmonic_projection(const MultiPoly& P) {
  if (P.is_zero()) return P;
  if (!P.is_homogeneous()) throw std::invalid_argument("harmonic_projection: polynomial must be homogeneous");
  const int n = P.nvars(), m = P.degree();
  MultiPoly out = P;
  MultiPoly lap = P;
  Rational c(1);
  for (int j = 1; 2 * j <= m; ++j) {
    lap = lap.laplacian();
    if (lap.is_zero()) break;
    c *= Rational(-1) / Rational(2 * j * (n + 2 * m - 4 - 2 * (j - 1)));
    out += MultiPoly::radial_power(n, j) * lap * c;
  }
  if (!out.laplacian().is_zero()) throw std::logic_error("harmonic_projection: result is not harmonic");
  return out;
}

/// P = sum_k H_{d-2k} |x|^{2k}; zero harmonic parts are omitted.
inline std::vector<HarmonicPiece> harmonic_decompose(const MultiPoly& P) {
  if (!P.is_zero() && !P.is_homogeneous())
    throw std::invalid_argument("harmonic_decompose: polynomial must be homogeneous");
  std::vector<HarmonicPiece> out;
  const int n = P.nvars();
  const MultiPoly r2 = MultiPoly::radial_power(n, 1);
  MultiPoly rest = P;
  int k = 0;
  int d = P.degree();
  while (!rest.is_zero()) {
    MultiPoly h = harmonic_projection(rest);
    if (!h.is_zero()) out.push_back({k, HarmonicComponent(d, h)});
    auto q = divide_exact(rest - h, r2);
    if (!q) throw std::logic_error("harmonic_decompose: remainder not divisible by |x|^2");
    rest = *q;
    ++k;
    d -= 2;
  }
  return out;
}

inline MultiPoly recombine(int n, const std::vector<HarmonicPiece>& pieces) {
  MultiPoly out(n);
  for (const auto& p : pieces) out += p.component.poly() * MultiPoly::radial_power(n, p.k);
  return out;
}

/// Integral of x^a over S^{n-1} against the normalised surface measure.
inline SymScalar sphere_monomial_integral(const Exponent& a, int n) {
  if (n < 1 || n > kMaxVars) throw std::invalid_argument("sphere_monomial_integral: bad dimension");
  int total = 0;
  for (int i = 0; i < n; ++i) {
    if (a[i] % 2) return SymScalar();
    total += a[i];
  }
  for (int i = n; i < kMaxVars; ++i)
    if (a[i] != 0) throw std::invalid_argument("sphere_monomial_integral: exponent uses a variable beyond n");
  // prod Gamma((a_i+1)/2) * Gamma(n/2) / (pi^{n/2} Gamma((|a|+n)/2))
  SymScalar num = gamma_exact(frac(n, 2));
  for (int i = 0; i < n; ++i) num *= gamma_exact(frac(a[i] + 1, 2));
  return num / (SymScalar::sqrt_pi(n) * gamma_exact(frac(total + n, 2)));
}

/// Mean of P over the unit sphere (exact, always rational).
inline Rational sphere_mean(const MultiPoly& P) {
  SymSum s;
  for (const auto& [e, c] : P.terms()) s += sphere_monomial_integral(e, P.nvars()) * SymScalar(c);
  const SymScalar v = s.as_scalar();
  if (v.h() != 0 || v.s() != 0 || !v.is_real()) throw std::logic_error("sphere_mean: non-rational result");
  return v.signed_q();
}

// ---- text format ----------------------------------------------------------
// One term per line: [coef] num/den e1 ... en. Blank lines and '#' comments
// are ignored.

inline Rational parse_rational(const std::string& tok) {
  Rational r;
  if (r.set_str(tok, 10) != 0) throw std::invalid_argument("bad rational literal: '" + tok + "'");
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator in '" + tok + "'");
  r.canonicalize();
  return r;
}

/// Parses terms from the remaining lines of `in`.
inline MultiPoly read_poly(std::istream& in, int n) {
  MultiPoly p(n);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> toks;
    for (std::string t; ls >> t;) toks.push_back(t);
    if (toks.empty()) continue;
    std::size_t at = 0;
    if (toks[0] == "coef") at = 1;
    if (toks.size() != at + 1 + static_cast<std::size_t>(n))
      throw std::invalid_argument("polynomial line " + std::to_string(lineno) + ": expected coefficient and " +
                                  std::to_string(n) + " exponents");
    const Rational c = parse_rational(toks[at]);
    Exponent e{};
    for (int i = 0; i < n; ++i) {
      const std::string& t = toks[at + 1 + static_cast<std::size_t>(i)];
      std::size_t used = 0;
      int v = -1;
      try {
        v = std::stoi(t, &used);
      } catch (const std::exception&) {
      }
      if (v < 0 || used != t.size() || v > 255)
        throw std::invalid_argument("polynomial line " + std::to_string(lineno) + ": bad exponent '" + t + "'");
      e[i] = static_cast<std::uint16_t>(v);
    }
    p.add_term(e, c);
  }
  return p;
}

inline MultiPoly parse_poly(const std::string& text, int n) {
  std::istringstream in(text);
  return read_poly(in, n);
}

inline void write_poly(std::ostream& os, const MultiPoly& p) {
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    os << "coef " << c.get_num().get_str() << "/" << c.get_den().get_str();
    for (int i = 0; i < p.nvars(); ++i) os << " " << e[i];
    os << "\n";
  }
}

}  // namespace czkit
