#pragma once

/**
 * @file exact.hpp
 * @brief Exact scalars of the form q * sqrt(pi)^h * sqrt(2)^s * i^k.
 *
 * Every constant handled by the toolkit (Fourier multipliers of Riesz
 * kernels, normalisations of fundamental solutions, Bessel series
 * coefficients) is a rational multiple of a monomial in sqrt(pi), sqrt(2)
 * and the imaginary unit. Keeping the monomial symbolic lets identities be
 * tested with exact equality instead of a tolerance.
 *
 * Canonical form of SymScalar:
 *  - zero is (0, 0, 0, 0)
 *  - q > 0 otherwise; a negative sign is carried as i^2
 *  - s in {0, 1}; even powers of sqrt(2) are folded into q
 *  - k in {0, 1, 2, 3}
 */

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace czkit {

/// Arbitrary precision rational, always kept in lowest terms by GMP.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational frac(long num, long den = 1) {
  if (den == 0) throw std::domain_error("frac: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/// True when 2r is an integer but r is not.
inline bool is_half_odd(const Rational& r) { return r.get_den() == 2; }

inline Integer factorial(unsigned long n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

/// 2^e for any integer e, as an exact rational.
inline Rational pow2(long e) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
  return e < 0 ? Rational(Integer(1), p) : Rational(p);
}

inline Rational rpow(const Rational& base, unsigned long e) {
  Rational out(1);
  for (unsigned long i = 0; i < e; ++i) out *= base;
  return out;
}

/// Converts with about 106 significant bits before rounding to long double.
inline long double to_long_double(const Rational& q) {
  mpf_class x(0, 256);
  x = q;
  const double hi = x.get_d();
  mpf_class rest(0, 256);
  rest = x - hi;
  return static_cast<long double>(hi) + static_cast<long double>(rest.get_d());
}

/// Generalised binomial coefficient a(a-1)...(a-m+1)/m!.
inline Rational gen_binom(const Rational& a, long m) {
  if (m < 0) return Rational(0);
  Rational num(1);
  for (long i = 0; i < m; ++i) num *= (a - i);
  return num / Rational(factorial(static_cast<unsigned long>(m)));
}

/// Binomial with an upper integer index; zero for m < 0 or m > a >= 0.
inline Rational binom(long a, long m) { return gen_binom(Rational(a), m); }

/// Falling factorial a(a-1)...(a-m+1).
inline Rational falling(const Rational& a, long m) {
  Rational out(1);
  for (long i = 0; i < m; ++i) out *= (a - i);
  return out;
}

class SymScalar {
 public:
  SymScalar() = default;
  SymScalar(const Rational& q, int h = 0, int s = 0, int k = 0) : q_(q), h_(h), s_(s), k_(k) {
    canonicalize();
  }
  SymScalar(long v) : SymScalar(Rational(v)) {}  // NOLINT: implicit from integers is convenient

  static SymScalar i_unit(int k = 1) { return SymScalar(Rational(1), 0, 0, k); }
  static SymScalar sqrt_pi(int h = 1) { return SymScalar(Rational(1), h, 0, 0); }
  static SymScalar pi(int e = 1) { return SymScalar(Rational(1), 2 * e, 0, 0); }
  /// 2^e for a half-integer or integer exponent.
  static SymScalar two_pow(const Rational& e) {
    const Rational twice = 2 * e;
    if (!is_integer(twice)) throw std::domain_error("two_pow: exponent must be a half-integer");
    return SymScalar(Rational(1), 0, static_cast<int>(twice.get_num().get_si()), 0);
  }

  const Rational& q() const { return q_; }
  int h() const { return h_; }
  int s() const { return s_; }
  int k() const { return k_; }
  bool is_zero() const { return q_ == 0; }
  bool is_real() const { return is_zero() || k_ % 2 == 0; }
  bool is_imaginary() const { return is_zero() || k_ % 2 == 1; }

  /// Real multiple of a common monomial: (h, s, k mod 2).
  std::tuple<int, int, int> basis() const { return {h_, s_, k_ % 2}; }
  /// Signed rational coefficient relative to basis().
  Rational signed_q() const { return k_ >= 2 ? Rational(-q_) : q_; }

  SymScalar operator-() const { return SymScalar(q_, h_, s_, k_ + 2); }

  SymScalar& operator*=(const SymScalar& o) {
    q_ *= o.q_;
    h_ += o.h_;
    s_ += o.s_;
    k_ += o.k_;
    canonicalize();
    return *this;
  }
  friend SymScalar operator*(SymScalar a, const SymScalar& b) { return a *= b; }

  SymScalar inverse() const {
    if (is_zero()) throw std::domain_error("SymScalar: division by zero");
    return SymScalar(Rational(1) / q_, -h_, -s_, 4 - k_);
  }
  SymScalar& operator/=(const SymScalar& o) { return *this *= o.inverse(); }
  friend SymScalar operator/(SymScalar a, const SymScalar& b) { return a /= b; }

  /// Addition is only defined inside one basis; use SymSum otherwise.
  SymScalar& operator+=(const SymScalar& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (basis() != o.basis()) throw std::domain_error("SymScalar: adding values with different bases");
    const Rational sum = signed_q() + o.signed_q();
    *this = SymScalar(sum, h_, s_, k_ % 2);
    return *this;
  }
  friend SymScalar operator+(SymScalar a, const SymScalar& b) { return a += b; }
  friend SymScalar operator-(SymScalar a, const SymScalar& b) { return a += -b; }

  friend bool operator==(const SymScalar& a, const SymScalar& b) {
    return a.q_ == b.q_ && a.h_ == b.h_ && a.s_ == b.s_ && a.k_ == b.k_;
  }

  std::complex<long double> to_complex() const {
    const long double mag = to_long_double(q_) *
                            std::pow(std::sqrt(std::numbers::pi_v<long double>), static_cast<long double>(h_)) *
                            (s_ ? std::numbers::sqrt2_v<long double> : 1.0L);
    switch (k_) {
      case 0: return {mag, 0.0L};
      case 1: return {0.0L, mag};
      case 2: return {-mag, 0.0L};
      default: return {0.0L, -mag};
    }
  }

  std::string str() const {
    std::ostringstream os;
    os << *this;
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const SymScalar& x) {
    if (x.is_zero()) return os << "0";
    os << (x.k_ >= 2 ? "-" : "") << x.q_.get_str();
    if (x.h_ != 0) os << "*sqrt(pi)^" << x.h_;
    if (x.s_ != 0) os << "*sqrt(2)";
    if (x.k_ % 2) os << "*i";
    return os;
  }

 private:
  void canonicalize() {
    q_.canonicalize();
    if (q_ == 0) {
      h_ = s_ = k_ = 0;
      return;
    }
    if (q_ < 0) {
      q_ = -q_;
      k_ += 2;
    }
    // s = 2a + b with b in {0,1}
    int a = s_ >= 0 ? s_ / 2 : -((-s_ + 1) / 2);
    s_ -= 2 * a;
    if (a != 0) q_ *= pow2(a);
    k_ = ((k_ % 4) + 4) % 4;
  }

  Rational q_{0};
  int h_ = 0;
  int s_ = 0;
  int k_ = 0;
};

/// Formal finite sum of SymScalars over distinct bases.
class SymSum {
 public:
  using Basis = std::tuple<int, int, int>;  // (h, s, k mod 2)

  SymSum() = default;
  SymSum(const SymScalar& x) { *this += x; }  // NOLINT

  SymSum& operator+=(const SymScalar& x) {
    if (x.is_zero()) return *this;
    auto& c = terms_[x.basis()];
    c += x.signed_q();
    if (c == 0) terms_.erase(x.basis());
    return *this;
  }
  SymSum& operator-=(const SymScalar& x) { return *this += -x; }
  SymSum& operator+=(const SymSum& o) {
    for (const auto& t : o.scalars()) *this += t;
    return *this;
  }
  SymSum& operator-=(const SymSum& o) {
    for (const auto& t : o.scalars()) *this -= t;
    return *this;
  }
  friend SymSum operator+(SymSum a, const SymSum& b) { return a += b; }
  friend SymSum operator-(SymSum a, const SymSum& b) { return a -= b; }

  SymSum& operator*=(const SymScalar& x) {
    SymSum out;
    for (const auto& t : scalars()) out += t * x;
    return *this = out;
  }
  friend SymSum operator*(SymSum a, const SymScalar& x) { return a *= x; }
  friend SymSum operator*(const SymSum& a, const SymSum& b) {
    SymSum out;
    for (const auto& x : a.scalars())
      for (const auto& y : b.scalars()) out += x * y;
    return out;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  friend bool operator==(const SymSum& a, const SymSum& b) { return a.terms_ == b.terms_; }

  std::vector<SymScalar> scalars() const {
    std::vector<SymScalar> out;
    out.reserve(terms_.size());
    for (const auto& [b, c] : terms_) out.emplace_back(c, std::get<0>(b), std::get<1>(b), std::get<2>(b));
    return out;
  }

  /// The single SymScalar this sum equals; throws for mixed bases.
  SymScalar as_scalar() const {
    if (terms_.empty()) return SymScalar();
    if (terms_.size() > 1) throw std::domain_error("SymSum: value spans several bases");
    return scalars().front();
  }

  std::complex<long double> to_complex() const {
    std::complex<long double> z{0, 0};
    for (const auto& t : scalars()) z += t.to_complex();
    return z;
  }

  friend std::ostream& operator<<(std::ostream& os, const SymSum& x) {
    if (x.is_zero()) return os << "0";
    bool first = true;
    for (const auto& t : x.scalars()) {
      if (!first) os << " + ";
      os << t;
      first = false;
    }
    return os;
  }

 private:
  std::map<Basis, Rational> terms_;
};

/// Gamma(a) for a positive integer or half-integer a.
inline SymScalar gamma_exact(Rational a) {
  a.canonicalize();
  if (a <= 0) throw std::domain_error("gamma_exact: argument must be positive");
  if (is_integer(a)) return SymScalar(Rational(factorial(a.get_num().get_ui() - 1)));
  if (!is_half_odd(a)) throw std::domain_error("gamma_exact: argument must be an integer or half-integer");
  // a = m + 1/2: Gamma(a) = (2m)! / (4^m m!) * sqrt(pi)
  const Rational mr = a - frac(1, 2);
  const unsigned long m = mr.get_num().get_ui();
  Rational q(factorial(2 * m), factorial(m));
  q.canonicalize();
  q /= pow2(2 * static_cast<long>(m));
  return SymScalar(q, 1, 0, 0);
}

/// Fourier multiplier constant of a degree-j Riesz kernel in dimension n:
/// i^{-j} pi^{n/2} Gamma(j/2) / Gamma((n+j)/2).
inline SymScalar gamma_j(int j, int n) {
  if (j < 1) throw std::domain_error("gamma_j: j must be positive");
  if (n < 2) throw std::domain_error("gamma_j: dimension must be at least 2");
  return SymScalar::i_unit(-j) * SymScalar::sqrt_pi(n) * gamma_exact(frac(j, 2)) /
         gamma_exact(frac(n + j, 2));
}

/// Normalisation with (c_n |x|^{1-n})^ = 1/|xi|.
inline SymScalar c_n(int n) {
  if (n < 2) throw std::domain_error("c_n: dimension must be at least 2");
  return gamma_exact(frac(n - 1, 2)) /
         (SymScalar(2) * SymScalar::sqrt_pi(n) * gamma_exact(frac(1, 2)));
}

}  // namespace czkit
