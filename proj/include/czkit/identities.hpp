#pragma once

/**
 * @file identities.hpp
 * @brief Exact verifiers for the constants of the zero-set argument for odd
 *        kernels: Taylor coefficients A_L, the constants c_{L,j,k} and
 *        C_{2j+1}, the series coefficients a^N_{2p+1} and the binomial
 *        summation identities behind them.
 *
 * Every verifier computes both sides independently and compares them with
 * exact equality.
 */

#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "czkit/exact.hpp"
#include "czkit/kernel.hpp"
#include "czkit/parallel.hpp"
#include "czkit/radial.hpp"

namespace czkit {

namespace detail {

inline Rational half(long v) { return frac(v, 2); }

inline Rational fact(long v) {
  if (v < 0) throw std::domain_error("factorial of a negative integer");
  return Rational(factorial(static_cast<unsigned long>(v)));
}

inline Rational sign(long e) { return e % 2 ? Rational(-1) : Rational(1); }

}  // namespace detail

// ---- Taylor coefficients A_L --------------------------------------------------

/// Closed form c_n (-1)^{L+N} C(L+m-N-1, L-N) C(N+m, 2N-L) / ((2N)! C(L, N)), m = (n-1)/2.
inline SymScalar A_L_closed(int n, int N, int L) {
  const Rational m = detail::half(n - 1);
  const Rational q = detail::sign(L + N) * gen_binom(L + m - N - 1, L - N) * gen_binom(N + m, 2 * N - L) /
                     (detail::fact(2 * N) * binom(L, N));
  return c_n(n) * SymScalar(q);
}

/// sum_{i=L}^{2N} E^{(i)}(1)/i! (-1)^{i-L} C(i, L) with E(t) = c_n t^{N-m}(alpha + beta log t).
inline SymSum A_L_taylor(int n, int N, int L, const Rational& alpha, const Rational& beta) {
  const Rational a = Rational(N) - detail::half(n - 1);
  RadialExpr E = RadialExpr::term(c_n(n) * SymScalar(alpha), a, 0);
  E += RadialExpr::term(c_n(n) * SymScalar(beta), a, 1);
  SymSum out;
  for (int i = 0; i <= 2 * N; ++i) {
    if (i >= L) out += E.at_one() * SymScalar(detail::sign(i - L) * binom(i, L) / detail::fact(i));
    E = E.derivative();
  }
  return out;
}

struct ALReport {
  bool ok = true;
  /// In the logarithmic case: whether A_L (L > N) came out the same for every alpha tried.
  bool alpha_independent = true;
  std::vector<int> failed_L;
};

/// Closed form of A_L against the Taylor oracle for L = N+1..2N.
inline ALReport verify_AL(int n, int N) {
  ALReport rep;
  const FundamentalCoeffs fc = fundamental_coeffs(n, N);
  std::vector<Rational> alphas{fc.alpha};
  if (fc.alpha_free) alphas = {Rational(0), Rational(1), frac(5, 7)};
  for (int L = N + 1; L <= 2 * N; ++L) {
    const SymSum closed(A_L_closed(n, N, L));
    const SymSum first = A_L_taylor(n, N, L, alphas.front(), fc.beta);
    for (const auto& alpha : alphas) {
      const SymSum oracle = A_L_taylor(n, N, L, alpha, fc.beta);
      if (!(oracle == first)) rep.alpha_independent = false;
      if (!(oracle == closed)) {
        rep.ok = false;
        rep.failed_L.push_back(L);
        break;
      }
    }
  }
  rep.ok = rep.ok && rep.alpha_independent;
  return rep;
}

// ---- summation identities ---------------------------------------------------

/// sum_{i=L}^{2N} (N-m)_i (-1)^i / i! C(i, L) == (-1)^L C(N-m, L) C(m+N, 2N-L).
inline bool verify_falling_binomial_sum(const Rational& m, int N, int L) {
  if (!is_integer(2 * m) || N < 0 || L < 0 || L > 2 * N) throw std::invalid_argument("verify_falling_binomial_sum: index out of range");
  Rational lhs(0);
  for (int i = L; i <= 2 * N; ++i) lhs += falling(N - m, i) * detail::sign(i) / detail::fact(i) * binom(i, L);
  const Rational rhs = detail::sign(L) * gen_binom(N - m, L) * gen_binom(m + N, 2 * N - L);
  return lhs == rhs;
}

/// sum_{i=L}^{2N} (i-N+m-1)!/i! C(i, L) == (L-N+m-1)!/L! C(N+m, 2N-L), integer m with L-N+m-1 >= 0.
inline bool verify_factorial_binomial_sum(int m, int N, int L) {
  if (L > 2 * N || L < 0 || L - N + m - 1 < 0)
    throw std::invalid_argument("verify_factorial_binomial_sum: factorials undefined outside the logarithmic regime");
  Rational lhs(0);
  for (int i = L; i <= 2 * N; ++i) lhs += detail::fact(i - N + m - 1) / detail::fact(i) * binom(i, L);
  const Rational rhs = detail::fact(L - N + m - 1) / detail::fact(L) * binom(N + m, 2 * N - L);
  return lhs == rhs;
}

/// sum_k C(m-r+s, k) C(n+r-s, n-k) C(r+k, m+n) == C(r, m) C(s, n).
inline bool verify_triple_binomial(int m, int n, const Rational& r, const Rational& s) {
  if (m < 0 || n < 0) throw std::invalid_argument("verify_triple_binomial: m and n must be non-negative");
  Rational lhs(0);
  for (int k = 0; k <= n; ++k) lhs += gen_binom(m - r + s, k) * gen_binom(n + r - s, n - k) * gen_binom(r + k, m + n);
  return lhs == gen_binom(r, m) * gen_binom(s, n);
}

// ---- the constants c_{L,j,k} and C_{2j+1} -------------------------------------

/// c_{L,j,k} from A_L: i (-1)^{L+k+N} A_L gamma_{2j+1} 2^{2N+1} L! (N-j)! / (L-N-j-1-k)!
///                       * C(L-1+n/2, N-j) 2^k C(n/2+j+L-N-1, k).
inline SymScalar c_Ljk_from_AL(int n, int N, int L, int j, int k) {
  if (L - N - j - 1 - k < 0) return SymScalar();
  const Rational h = detail::half(n);
  const Rational q = detail::sign(L + k + N) * pow2(2 * N + 1 + k) * detail::fact(L) * detail::fact(N - j) /
                     detail::fact(L - N - j - 1 - k) * gen_binom(L - 1 + h, N - j) * gen_binom(h + j + L - N - 1, k);
  return SymScalar::i_unit() * A_L_closed(n, N, L) * gamma_j(2 * j + 1, n) * SymScalar(q);
}

/// Simplified form: i (-1)^k c_n gamma_{2j+1} 2^k (N-j)! (n-1) C(L-1+n/2, N-j) C(n/2+j+L-N-1, k) C(N+n/2-1/2, N)
///                  / ((2N-L)! (L-N+n/2-1/2) (L-N-j-1-k)! C(N-1/2, N)).
inline SymScalar c_Ljk(int n, int N, int L, int j, int k) {
  if (L - N - j - 1 - k < 0) return SymScalar();
  const Rational h = detail::half(n);
  const Rational num = detail::sign(k) * pow2(k) * detail::fact(N - j) * (n - 1) * gen_binom(L - 1 + h, N - j) *
                       gen_binom(h + j + L - N - 1, k) * gen_binom(N + h - detail::half(1), N);
  const Rational den = detail::fact(2 * N - L) * (L - N + h - detail::half(1)) * detail::fact(L - N - j - 1 - k) *
                       gen_binom(N - detail::half(1), N);
  return SymScalar::i_unit() * c_n(n) * gamma_j(2 * j + 1, n) * SymScalar(num / den);
}

inline bool verify_c_forms(int n, int N) {
  for (int L = N + 1; L <= 2 * N; ++L)
    for (int j = 0; j <= L - N - 1; ++j)
      for (int k = 0; k <= L - N - j - 1; ++k)
        if (!(c_Ljk(n, N, L, j, k) == c_Ljk_from_AL(n, N, L, j, k))) return false;
  return true;
}

/// C_{2j+1} = sum_{L=N+1+j}^{2N} c_{L,j,L-N-j-1} G_{n/2+L-N+j}(0).
inline SymSum C_constant_sum(int n, int N, int j) {
  SymSum s;
  for (int L = N + 1 + j; L <= 2 * N; ++L)
    s += c_Ljk(n, N, L, j, L - N - j - 1) * bessel_at_zero(detail::half(n) + L - N + j);
  return s;
}

/// 2^{-n/2} (-1)^j / (4^j (2j+1) Gamma(n/2+2j+1)).
inline SymScalar C_constant_closed(int n, int j) {
  return SymScalar::two_pow(-detail::half(n)) *
         SymScalar(detail::sign(j) / (pow2(2 * j) * (2 * j + 1))) / gamma_exact(detail::half(n) + 2 * j + 1);
}

inline bool verify_C_constants(int n, int N) {
  for (int j = 0; j < N; ++j)
    if (!(C_constant_sum(n, N, j) == SymSum(C_constant_closed(n, j)))) return false;
  return true;
}

// ---- gamma-ratio summation identity -------------------------------------------

/// The identity with m = p+1-i, valid for N-1 >= p >= j+i >= 0.
inline bool verify_gamma_ratio_sum(int n, int N, int p, int j, int i) {
  if (!(N - 1 >= p && p >= j + i && j >= 0 && i >= 0)) throw std::invalid_argument("verify_gamma_ratio_sum: index out of range");
  const Rational h = detail::half(n), half1 = detail::half(1);
  const int m = p + 1 - i;
  SymSum lhs;
  for (int s = 0; s <= N - m; ++s) {
    const Rational q = detail::sign(s) * gen_binom(h + N + m + s - 1, N - j) * gen_binom(h + j + m + s - 1, s) /
                       ((m + s + h - half1) * detail::fact(N - m - s));
    lhs += SymScalar(q) / gamma_exact(h + 2 * m + i + s);
  }
  const Rational q = detail::fact(N - m - i) * detail::fact(m + i - j) / detail::fact(N - j) *
                     gen_binom(N - half1, N - m - i) * gen_binom(h + 2 * m + i - 1, m + i - j);
  const SymScalar rhs =
      SymScalar(q) * gamma_exact(m + h - half1) / (gamma_exact(h + 2 * m + i) * gamma_exact(N + h + half1));
  return lhs == SymSum(rhs);
}

/// The summation used for C_{2j+1}, j = 0..N-1.
inline bool verify_C_sum(int n, int N, int j) {
  if (j < 0 || j > N - 1) throw std::invalid_argument("verify_C_sum: j out of range");
  const Rational h = detail::half(n), half1 = detail::half(1);
  Rational lhs(0);
  for (int i = 0; i <= N - j - 1; ++i) {
    Rational prod(1);
    for (int k = 0; k <= i + 1; ++k) prod *= h + 2 * j + k;
    lhs += detail::sign(i) * gen_binom(N + i + j + h, N - j) * gen_binom(h + 2 * j + i, i) /
           ((i + j + h + half1) * detail::fact(N - j - i - 1) * prod);
  }
  const SymScalar rhs = SymScalar(2 * gen_binom(N + half1, N - j) / ((2 * N + 1) * (2 * j + h))) *
                        gamma_exact(h + j + half1) / gamma_exact(h + N + half1);
  return SymSum(SymScalar(lhs)) == SymSum(rhs);
}

// ---- series coefficients a^N_{2p+1} -------------------------------------------

/// Linear form in the formal symbols P_{2j+1}(xi_0): component j holds the coefficient of P_{2j+1}.
class FormalCoefficientVector {
 public:
  void add(int j, const SymSum& v) {
    if (v.is_zero()) return;
    auto& c = coeffs_[j];
    c += v;
    if (c.is_zero()) coeffs_.erase(j);
  }
  SymSum operator[](int j) const {
    auto it = coeffs_.find(j);
    return it == coeffs_.end() ? SymSum() : it->second;
  }
  const std::map<int, SymSum>& components() const { return coeffs_; }

  FormalCoefficientVector& operator+=(const FormalCoefficientVector& o) {
    for (const auto& [j, c] : o.coeffs_) add(j, c);
    return *this;
  }
  FormalCoefficientVector& operator*=(const SymScalar& s) {
    FormalCoefficientVector out;
    for (const auto& [j, c] : coeffs_) out.add(j, c * s);
    return *this = out;
  }
  friend FormalCoefficientVector operator+(FormalCoefficientVector a, const FormalCoefficientVector& b) { return a += b; }
  friend FormalCoefficientVector operator*(FormalCoefficientVector a, const SymScalar& s) { return a *= s; }
  friend bool operator==(const FormalCoefficientVector& a, const FormalCoefficientVector& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// Substitutes numbers for the symbols.
  SymSum evaluate(const std::vector<SymScalar>& symbols) const {
    SymSum s;
    for (const auto& [j, c] : coeffs_)
      if (j < static_cast<int>(symbols.size())) s += c * symbols[j];
    return s;
  }

  friend std::ostream& operator<<(std::ostream& os, const FormalCoefficientVector& v) {
    if (v.coeffs_.empty()) return os << "0";
    bool first = true;
    for (const auto& [j, c] : v.coeffs_) {
      os << (first ? "" : " + ") << "(" << c << ")*P_" << 2 * j + 1;
      first = false;
    }
    return os;
  }

 private:
  std::map<int, SymSum> coeffs_;
};

/// a^N_{2p+1}: coefficient of r^{2p+1} in sum_{j<N} sum_{s=j+1}^{N} sum_{k<s-j}
/// c_{N+s,j,k} P_{2j+1} r^{2(s-k)-1} G_{n/2+2s-1-k}(r).
inline FormalCoefficientVector compute_a_coeff(int n, int N, int p) {
  if (n < 2 || N < 1 || p < 0) throw std::invalid_argument("compute_a_coeff: need n >= 2, N >= 1, p >= 0");
  const Rational h = detail::half(n);
  FormalCoefficientVector out;
  for (int j = 0; j < N; ++j) {
    SymSum v;
    for (int s = j + 1; s <= N; ++s)
      for (int k = 0; k <= s - j - 1; ++k) {
        const int i = p + 1 - s + k;
        if (i < 0) continue;
        v += c_Ljk(n, N, N + s, j, k) * bessel_series_coeff(h + 2 * s - 1 - k, i);
      }
    out.add(j, v);
  }
  return out;
}

/// N-free closed form for p <= N-1. With `without_factor` the leading factor (n-1)
/// is left out.
inline FormalCoefficientVector a_coeff_closed(int n, int p, bool without_factor = false) {
  const Rational h = detail::half(n), half1 = detail::half(1);
  // c_n Gamma(1/2) (pi/2)^{n/2} / (2^{2p+1} Gamma(n/2+1/2) Gamma(p+3/2))
  SymScalar pref = c_n(n) * gamma_exact(half1) * SymScalar::sqrt_pi(n) * SymScalar::two_pow(-h) /
                   (SymScalar(pow2(2 * p + 1)) * gamma_exact(h + half1) * gamma_exact(Rational(p) + frac(3, 2)));
  if (!without_factor) pref *= SymScalar(n - 1);
  FormalCoefficientVector out;
  for (int j = 0; j <= p; ++j) {
    SymSum inner;
    for (int i = 0; i <= p - j; ++i)
      inner += SymScalar(detail::sign(i) / (detail::fact(i) * detail::fact(p - i - j))) *
               gamma_exact(h + p - i + half1) / gamma_exact(h + p - i + j + 1);
    const SymScalar outer = SymScalar(detail::sign(j)) * gamma_exact(j + half1) / gamma_exact(h + j + half1);
    out.add(j, inner * (pref * outer));
  }
  return out;
}

// ---- size bounds for a_{2p+1} ---------------------------------------------------

inline long double magnitude(const SymSum& s) { return std::abs(s.to_complex()); }

struct SizeBoundRow {
  int N;
  int p;
  /// sum_j |coefficient_j| * ||P_{2j+1}||, an upper bound for sup |a^N_{2p+1}|.
  double lhs;
  double rhs;
  bool ok() const { return lhs <= rhs * (1 + 1e-12); }
};

struct SizeBoundReport {
  double C = 0;
  std::vector<SizeBoundRow> rows;
  bool ok = true;
  /// min over rows of rhs - lhs.
  double margin = 0;
};

/// Checks |a_{2p+1}| <= C/(p! 4^p) sum_{j<=p} ||P_{2j+1}|| for p <= N-1 and
/// |a^N_{2p+1}| <= C/4^p C(N+n/2-1/2, N)/C(N-1/2, N) sum_{j<N} ||P_{2j+1}|| for 1 < N <= p <= p_max.
/// sup_norms[j] is ||P_{2j+1}||_inf. C is fitted once as |coefficient of P_1 in a_1|.
inline SizeBoundReport verify_size_bounds(int n, int N, const std::vector<double>& sup_norms, int p_max) {
  SizeBoundReport rep;
  rep.C = static_cast<double>(magnitude(compute_a_coeff(n, 1, 0)[0]));
  auto norm = [&](int j) { return j < static_cast<int>(sup_norms.size()) ? sup_norms[j] : 0.0; };
  auto lhs_of = [&](const FormalCoefficientVector& a) {
    long double s = 0;
    for (const auto& [j, c] : a.components()) s += magnitude(c) * norm(j);
    return static_cast<double>(s);
  };
  rep.margin = std::numeric_limits<double>::infinity();
  for (int p = 0; p <= p_max; ++p) {
    SizeBoundRow row{N, p, 0, 0};
    if (p <= N - 1) {
      double sum = 0;
      for (int j = 0; j <= p; ++j) sum += norm(j);
      row.lhs = lhs_of(compute_a_coeff(n, N, p));
      row.rhs = rep.C / (std::tgamma(p + 1.0) * std::pow(4.0, p)) * sum;
    } else if (N > 1) {
      double sum = 0;
      for (int j = 0; j < N; ++j) sum += norm(j);
      const Rational h = detail::half(n);
      const double ratio = static_cast<double>(
          to_long_double(gen_binom(N + h - detail::half(1), N) / gen_binom(N - detail::half(1), N)));
      row.lhs = lhs_of(compute_a_coeff(n, N, p));
      row.rhs = rep.C / std::pow(4.0, p) * ratio * sum;
    } else {
      continue;
    }
    rep.ok = rep.ok && row.ok();
    rep.margin = std::min(rep.margin, row.rhs - row.lhs);
    rep.rows.push_back(row);
  }
  return rep;
}

/// sup over sphere samples of |P_{2j+1}|, for every odd degree up to 2*count-1.
inline std::vector<double> sampled_sup_norms(const KernelSpec& K, int count, int samples = 20000,
                                             unsigned seed = 12345) {
  std::vector<double> out(static_cast<std::size_t>(count), 0.0);
  std::mt19937 rng(seed);
  std::normal_distribution<double> gauss;
  const int n = K.dim();
  std::vector<double> x(static_cast<std::size_t>(n));
  for (int s = 0; s < samples; ++s) {
    double r = 0;
    for (auto& v : x) {
      v = gauss(rng);
      r += v * v;
    }
    r = std::sqrt(r);
    for (auto& v : x) v /= r;
    for (const auto& c : K.components()) {
      const int j = (c.degree() - 1) / 2;
      if (c.degree() % 2 == 1 && j < count)
        out[j] = std::max(out[j], std::fabs(c.poly().eval(std::span<const double>(x))));
    }
  }
  return out;
}

// ---- batch driver -------------------------------------------------------------

struct IdentityResult {
  std::string name;
  std::string params;
  bool ok = false;
};

struct IdentitySuiteConfig {
  int n_min = 2;
  int n_max = 5;
  int N_max = 6;
  int triple_samples = 200;
  unsigned seed = 20240601;
  int stabilization_n_max = 3;
  int stabilization_p_max = 4;
};

/// Every exact check over the configured ranges, in a stable order.
inline std::vector<IdentityResult> run_identity_suite(const IdentitySuiteConfig& cfg = {}) {
  std::vector<std::function<IdentityResult()>> jobs;
  auto tag = [](std::initializer_list<std::pair<const char*, long>> kv) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : kv) {
      os << (first ? "" : " ") << k << "=" << v;
      first = false;
    }
    return os.str();
  };
  for (int n = cfg.n_min; n <= cfg.n_max; ++n)
    for (int N = 1; N <= cfg.N_max; ++N) {
      jobs.push_back([=] { return IdentityResult{"radial_laplacian", tag({{"n", n}, {"N", N}}), radial_laplacian_check(n, N)}; });
      jobs.push_back([=] { return IdentityResult{"A_L", tag({{"n", n}, {"N", N}}), verify_AL(n, N).ok}; });
      jobs.push_back([=] {
        bool ok = true;
        for (int L = N + 1; L <= 2 * N; ++L) ok = ok && verify_falling_binomial_sum(detail::half(n - 1), N, L);
        return IdentityResult{"falling_binomial_sum", tag({{"n", n}, {"N", N}}), ok};
      });
      if (n % 2 == 1 && 2 * N + 1 - n >= 0)
        jobs.push_back([=] {
          bool ok = true;
          for (int L = N + 1; L <= 2 * N; ++L) ok = ok && verify_factorial_binomial_sum((n - 1) / 2, N, L);
          return IdentityResult{"factorial_binomial_sum", tag({{"n", n}, {"N", N}}), ok};
        });
      jobs.push_back([=] { return IdentityResult{"c_LJK_forms", tag({{"n", n}, {"N", N}}), verify_c_forms(n, N)}; });
      jobs.push_back([=] { return IdentityResult{"C_constants", tag({{"n", n}, {"N", N}}), verify_C_constants(n, N)}; });
      jobs.push_back([=] {
        bool ok = true;
        for (int j = 0; j < N; ++j) ok = ok && verify_C_sum(n, N, j);
        return IdentityResult{"C_sum", tag({{"n", n}, {"N", N}}), ok};
      });
      jobs.push_back([=] {
        bool ok = true;
        for (int p = 0; p <= N - 1; ++p)
          for (int j = 0; j <= p; ++j)
            for (int i = 0; i + j <= p; ++i) ok = ok && verify_gamma_ratio_sum(n, N, p, j, i);
        return IdentityResult{"gamma_ratio_sum", tag({{"n", n}, {"N", N}}), ok};
      });
    }
  {
    std::mt19937 rng(cfg.seed);
    std::uniform_int_distribution<int> small(0, 6), num(-40, 40), den(1, 6);
    for (int t = 0; t < cfg.triple_samples; ++t) {
      const int m = small(rng), nn = small(rng);
      const int rn = num(rng), rd = den(rng), sn = num(rng), sd = den(rng);
      jobs.push_back([=] {
        std::ostringstream os;
        os << "m=" << m << " n=" << nn << " r=" << frac(rn, rd).get_str() << " s=" << frac(sn, sd).get_str();
        return IdentityResult{"triple_binomial", os.str(), verify_triple_binomial(m, nn, frac(rn, rd), frac(sn, sd))};
      });
    }
  }
  for (int n = cfg.n_min; n <= std::min(cfg.n_max, cfg.stabilization_n_max); ++n)
    for (int p = 0; p <= cfg.stabilization_p_max; ++p)
      jobs.push_back([=] {
        const auto base = compute_a_coeff(n, p + 1, p);
        bool ok = base == a_coeff_closed(n, p);
        for (int N = p + 2; N <= p + 3; ++N) ok = ok && compute_a_coeff(n, N, p) == base;
        return IdentityResult{"a_coeff_stable", tag({{"n", n}, {"p", p}}), ok};
      });

  std::vector<IdentityResult> out(jobs.size());
  parallel_for(jobs.size(), [&](std::size_t i) { out[i] = jobs[i](); }, 1);
  return out;
}

}  // namespace czkit
