#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <string>

#include "eplasing/error.hpp"

namespace eplasing {

/// Result of a series evaluation together with its error estimate.
struct SpecialValue {
  std::complex<double> value;
  long terms_used = 0;
  double est_error = 0.0;
};

inline constexpr double kDefaultSeriesTolerance = 1e-12;
inline constexpr long kSeriesTermCap = 10'000'000;

namespace detail {

// B_0 .. B_20 with B_1 = -1/2.
inline constexpr std::array<double, 21> kBernoulli = {
    1.0,
    -0.5,
    1.0 / 6.0,
    0.0,
    -1.0 / 30.0,
    0.0,
    1.0 / 42.0,
    0.0,
    -1.0 / 30.0,
    0.0,
    5.0 / 66.0,
    0.0,
    -691.0 / 2730.0,
    0.0,
    7.0 / 6.0,
    0.0,
    -3617.0 / 510.0,
    0.0,
    43867.0 / 798.0,
    0.0,
    -174611.0 / 330.0};

inline double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Bernoulli polynomial B_n(x) for x in [0, 1].
inline double bernoulli_polynomial(int n, double x) {
  if (n <= 10) {
    double sum = 0.0;
    for (int k = 0; k <= n; ++k) sum += binomial(n, k) * kBernoulli[k] * std::pow(x, n - k);
    return sum;
  }
  // Fourier series; converges like k^-n.
  const double two_pi = 2.0 * std::numbers::pi;
  const double scale = std::exp(std::lgamma(n + 1.0) - n * std::log(two_pi));
  double sum = 0.0;
  for (int k = 1;; ++k) {
    const double term = std::cos(two_pi * k * x - n * std::numbers::pi / 2.0) / std::pow(k, n);
    sum += term;
    if (std::pow(k, -n) < 1e-18) break;
  }
  return -2.0 * scale * sum;
}

}  // namespace detail

/// Hurwitz zeta sum_{n>=0} (n+a)^-s for s > 1, a > 0 (Euler-Maclaurin).
inline double hurwitz_zeta(double s, double a) {
  if (!(s > 1.0) || !(a > 0.0)) throw ParameterError("hurwitz_zeta: needs s > 1 and a > 0");
  constexpr int head = 20;
  double sum = 0.0;
  for (int n = 0; n < head; ++n) sum += std::pow(n + a, -s);
  const double x = head + a;
  sum += std::pow(x, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(x, -s);
  // sum_j B_2j/(2j)! * s(s+1)...(s+2j-2) * x^(-s-2j+1)
  double rising = s;
  double factorial = 2.0;
  double xpow = std::pow(x, -s - 1.0);
  for (int j = 1; j <= 10; ++j) {
    sum += detail::kBernoulli[2 * j] / factorial * rising * xpow;
    rising *= (s + 2 * j - 1) * (s + 2 * j);
    factorial *= (2.0 * j + 1) * (2.0 * j + 2);
    xpow /= x * x;
  }
  return sum;
}

/// Hurwitz zeta at a non-positive integer: zeta(-m, a) = -B_{m+1}(a)/(m+1).
inline double hurwitz_zeta_nonpositive(int m, double a) {
  if (m < 0 || !(a > 0.0)) throw ParameterError("hurwitz_zeta_nonpositive: bad arguments");
  // Shift a into (0, 1]: zeta(s, a) = zeta(s, a - 1) - (a - 1)^-s.
  double base = a;
  double correction = 0.0;
  while (base > 1.0) {
    base -= 1.0;
    correction += std::pow(base, m);
  }
  return -detail::bernoulli_polynomial(m + 1, base) / (m + 1) - correction;
}

inline double digamma(double x) {
  if (!(x > 0.0)) throw ParameterError("digamma: argument must be positive");
  double shift = 0.0;
  while (x < 10.0) {
    shift -= 1.0 / x;
    x += 1.0;
  }
  const double inv2 = 1.0 / (x * x);
  // ln x - 1/(2x) - sum B_2k / (2k x^2k)
  double series = 0.0;
  double p = inv2;
  for (int k = 1; k <= 8; ++k) {
    series += detail::kBernoulli[2 * k] / (2.0 * k) * p;
    p *= inv2;
  }
  return shift + std::log(x) - 0.5 / x - series;
}

namespace detail {

inline SpecialValue lerch_direct(std::complex<double> z, double s, double alpha, double tol) {
  const double r = std::abs(z);
  std::complex<double> sum = 0.0;
  std::complex<double> zn = 1.0;
  for (long n = 0; n < kSeriesTermCap; ++n) {
    sum += zn / std::pow(n + alpha, s);
    zn *= z;
    const double next = n + 1 + alpha;
    double bound = std::numeric_limits<double>::infinity();
    if (r < 1.0) bound = std::pow(r, n + 1) / (std::pow(next, s) * (1.0 - r));
    if (next > 1.0) bound = std::min(bound, std::pow(next - 1.0, 1.0 - s) / (s - 1.0));
    if (r == 0.0 || bound <= tol) return {sum, n + 1, bound};
  }
  const double last = static_cast<double>(kSeriesTermCap) + alpha;
  const double bound = std::pow(last - 1.0, 1.0 - s) / (s - 1.0);
  throw NumericalError("lerch_phi: tolerance unreachable within term cap (est_error " +
                       std::to_string(bound) + ")");
}

// Expansion in powers of L = log z, valid for |L| < 2 pi and integer order m:
//   z^a Phi = sum_{k != m-1} zeta(m-k, a) L^k / k!
//           + [psi(m) - psi(a) - log(-L)] L^(m-1) / (m-1)!
inline SpecialValue lerch_log_series(std::complex<double> z, int m, double alpha, double tol) {
  const std::complex<double> log_z = std::log(z);
  if (std::abs(log_z) == 0.0) return {hurwitz_zeta(m, alpha), 1, 1e-16};

  std::complex<double> sum = 0.0;
  std::complex<double> power = 1.0;  // L^k / k!
  double magnitude = 0.0;
  int quiet = 0;
  long terms = 0;
  constexpr int kMaxTerms = 160;
  double last_term = 0.0;
  for (int k = 0; k < kMaxTerms; ++k) {
    std::complex<double> term;
    const int order = m - k;
    if (k == m - 1) {
      const double harmonic_part = digamma(m) - digamma(alpha);
      term = (harmonic_part - std::log(-log_z)) * power;
    } else if (order >= 2) {
      term = hurwitz_zeta(order, alpha) * power;
    } else {
      term = hurwitz_zeta_nonpositive(-order, alpha) * power;
    }
    sum += term;
    ++terms;
    last_term = std::abs(term);
    magnitude = std::max(magnitude, last_term);
    quiet = (k > m && last_term <= 0.1 * tol) ? quiet + 1 : 0;
    if (quiet >= 3) break;
    power *= log_z / static_cast<double>(k + 1);
  }
  const double err = last_term + 64.0 * std::numeric_limits<double>::epsilon() * magnitude;
  if (quiet < 3) {
    throw NumericalError("lerch_phi: log-series did not settle (est_error " +
                         std::to_string(err) + ")");
  }
  return {std::exp(-alpha * log_z) * sum, terms, err};
}

}  // namespace detail

/// Lerch transcendent Phi(z, s, a) = sum_{n>=0} z^n / (n+a)^s on the closed
/// unit disk, s >= 2, a > 0.
///
/// Inside |z| <= 1/2 the series is summed directly. Closer to the circle,
/// integer s uses the expansion in log z (exact on |z| = 1, including z = 1);
/// other s fall back to direct summation and fail if the tail bound cannot
/// reach tol within the term cap.
inline SpecialValue lerch_phi(std::complex<double> z, double s, double alpha,
                              double tol = kDefaultSeriesTolerance) {
  if (!(std::abs(z) <= 1.0 + 1e-15)) throw ParameterError("lerch_phi: needs |z| <= 1");
  if (!(s >= 2.0)) throw ParameterError("lerch_phi: needs s >= 2");
  if (!(alpha > 0.0)) throw ParameterError("lerch_phi: needs alpha > 0");
  if (std::abs(z) <= 0.5) return detail::lerch_direct(z, s, alpha, tol);
  if (s == std::floor(s) && s < 64.0) {
    return detail::lerch_log_series(z, static_cast<int>(s), alpha, tol);
  }
  return detail::lerch_direct(z, s, alpha, tol);
}

/// Real dilogarithm Li_2(x) on [-1, 1].
inline SpecialValue dilog(double x, double tol = 1e-16) {
  if (!(x >= -1.0 && x <= 1.0)) throw ParameterError("dilog: needs x in [-1, 1]");
  constexpr double pi2 = std::numbers::pi * std::numbers::pi;
  auto series = [tol](double y) {
    // |y| <= 1/2: tail after term k is below |y|^(k+1) / (k+1)^2 / (1 - |y|).
    double sum = 0.0;
    double power = y;
    long k = 1;
    for (;; ++k) {
      sum += power / static_cast<double>(k * k);
      power *= y;
      const double bound = std::abs(power) / static_cast<double>((k + 1) * (k + 1)) * 2.0;
      if (bound <= tol || power == 0.0) return SpecialValue{sum, k, bound};
    }
  };
  if (x == 1.0) return {pi2 / 6.0, 0, 0.0};
  if (x == -1.0) return {-pi2 / 12.0, 0, 0.0};
  if (std::abs(x) <= 0.5) return series(x);
  if (x > 0.5) {
    // Li2(x) = pi^2/6 - ln x ln(1-x) - Li2(1-x)
    SpecialValue r = series(1.0 - x);
    r.value = pi2 / 6.0 - std::log(x) * std::log1p(-x) - r.value;
    return r;
  }
  // x < -1/2: Li2(x) = -Li2(x/(x-1)) - ln^2(1-x)/2, with x/(x-1) in (1/3, 1/2).
  SpecialValue r = series(x / (x - 1.0));
  const double l = std::log1p(-x);
  r.value = -r.value - 0.5 * l * l;
  return r;
}

}  // namespace eplasing
