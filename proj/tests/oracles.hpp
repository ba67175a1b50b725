#pragma once

// Reference computations that share no code with the library.

#include <cmath>
#include <complex>
#include <random>

#include <Eigen/Dense>

namespace oracles {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

inline ComplexMatrix random_matrix(Eigen::Index n, double scale, std::mt19937_64& rng) {
  std::normal_distribution<double> dist(0.0, scale);
  ComplexMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = Complex(dist(rng), dist(rng));
  }
  return m;
}

/// Taylor series in long double on A / 2^s, then squared back.
inline ComplexMatrix taylor_expm(const ComplexMatrix& a) {
  using LComplex = std::complex<long double>;
  using LMatrix = Eigen::Matrix<LComplex, Eigen::Dynamic, Eigen::Dynamic>;
  const double norm = a.cwiseAbs().colwise().sum().maxCoeff();
  const int s = norm > 0.25 ? static_cast<int>(std::ceil(std::log2(norm / 0.25))) : 0;
  const LMatrix x = a.cast<LComplex>() / static_cast<long double>(std::ldexp(1.0, s));
  LMatrix term = LMatrix::Identity(a.rows(), a.cols());
  LMatrix sum = term;
  for (int k = 1; k <= 40; ++k) {
    term = (term * x) / static_cast<long double>(k);
    sum += term;
  }
  for (int i = 0; i < s; ++i) sum = sum * sum;
  return sum.cast<Complex>();
}

inline double max_rel_error(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a - b).cwiseAbs().maxCoeff() / b.cwiseAbs().maxCoeff();
}

/// Plain partial sums of sum z^n / (n+a)^s, run until the geometric tail is
/// negligible. Needs |z| < 1.
inline Complex lerch_brute(Complex z, double s, double a) {
  const double r = std::abs(z);
  Complex sum = 0.0;
  Complex zn = 1.0;
  for (long n = 0;; ++n) {
    sum += zn / std::pow(n + a, s);
    zn *= z;
    if (std::pow(r, n + 1) / (1.0 - r) < 1e-17) break;
  }
  return sum;
}

}  // namespace oracles
