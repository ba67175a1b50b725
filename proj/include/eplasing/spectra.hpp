#pragma once

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "eplasing/lattice.hpp"

namespace eplasing {

/// Thrown when the QR iteration hits its cap; carries whatever eigenvalues
/// had been deflated by then.
class SpectrumError : public NumericalError {
 public:
  SpectrumError(const std::string& what, std::vector<Complex> partial)
      : NumericalError(what), partial_(std::move(partial)) {}
  const std::vector<Complex>& partial() const noexcept { return partial_; }

 private:
  std::vector<Complex> partial_;
};

/// Orders eigenvalues by |Re|, then Re, then Im.
inline void sort_spectrum(std::vector<Complex>& values) {
  std::sort(values.begin(), values.end(), [](const Complex& x, const Complex& y) {
    const double ax = std::abs(x.real());
    const double ay = std::abs(y.real());
    if (ax != ay) return ax < ay;
    if (x.real() != y.real()) return x.real() < y.real();
    return x.imag() < y.imag();
  });
}

/// All eigenvalues of a general complex matrix (Hessenberg reduction followed
/// by shifted complex QR, capped at 30 iterations per row).
inline std::vector<Complex> full_spectrum(const ComplexMatrix& h) {
  if (h.rows() != h.cols()) throw ParameterError("full_spectrum: matrix must be square");
  if (h.rows() == 0) return {};
  Eigen::ComplexEigenSolver<ComplexMatrix> solver;
  solver.setMaxIterations(30 * static_cast<Eigen::Index>(h.rows()));
  solver.compute(h, /*computeEigenvectors=*/false);
  std::vector<Complex> values(solver.eigenvalues().data(),
                              solver.eigenvalues().data() + solver.eigenvalues().size());
  if (solver.info() != Eigen::Success) {
    throw SpectrumError("full_spectrum: QR iteration did not converge", std::move(values));
  }
  sort_spectrum(values);
  return values;
}

/// Band energy and companion phase at one wavenumber.
struct DispersionValue {
  double energy;  ///< epsilon_k
  double phase;   ///< phi_k with tan(phi_k) = gamma / epsilon_k
};

/// epsilon_k = sqrt([(1+delta) - (1-delta) cos k]^2 - gamma^2).
inline DispersionValue dispersion_at(double k, const LatticeParams& p) {
  const double band = (1.0 + p.delta()) - (1.0 - p.delta()) * std::cos(k);
  const double arg = band * band - p.gamma() * p.gamma();
  if (arg < 0.0) {
    throw NumericalError("analytic_dispersion: complex band (gamma exceeds band edge at k = " +
                         std::to_string(k) + ")");
  }
  const double energy = std::sqrt(arg);
  return {energy, std::atan2(p.gamma(), energy)};
}

/// Open-chain level n (1..N) at k = n pi / (N+1).
inline DispersionValue analytic_dispersion(int n, const LatticeParams& p) {
  if (n < 1 || n > p.cells()) throw ParameterError("analytic_dispersion: level out of range");
  return dispersion_at(n * std::numbers::pi / (p.cells() + 1.0), p);
}

/// Equal level spacing omega = sqrt(2 delta (1-delta)) pi / (N+1).
inline double esm_spacing(const LatticeParams& p) {
  return std::sqrt(2.0 * p.delta() * (1.0 - p.delta())) * std::numbers::pi / (p.cells() + 1.0);
}

/// Revival period tau = 2 pi / omega = 2 (N+1) / sqrt(2 delta (1-delta)).
inline double revival_period(const LatticeParams& p) {
  return 2.0 * std::numbers::pi / esm_spacing(p);
}

struct SpectrumReport {
  std::vector<Complex> eigenvalues;
  double esm_spacing = 0.0;
  double max_imag = 0.0;
  /// |E_n - n omega| / (n omega) for n = 1..n_max.
  std::vector<double> spacing_deviations;
  /// Paired level magnitudes E_n, averaged over the +/- partners.
  std::vector<double> levels;
};

/// Pairs the 2*n_max eigenvalues nearest zero into +-E_n and compares them
/// with n*omega.
inline SpectrumReport verify_equal_spacing(std::vector<Complex> spectrum, int n_max,
                                           const LatticeParams& p) {
  if (n_max < 1) throw ParameterError("verify_equal_spacing: n_max must be >= 1");
  if (spectrum.size() < static_cast<std::size_t>(2 * n_max)) {
    throw AnalysisError("verify_equal_spacing: spectrum has fewer than 2*n_max levels");
  }
  sort_spectrum(spectrum);
  SpectrumReport report;
  report.esm_spacing = esm_spacing(p);

  double scale = 0.0;
  for (const auto& e : spectrum) scale = std::max(scale, std::abs(e));
  const double real_tol = 1e-6 * std::max(scale, 1.0);

  std::vector<Complex> nearest = spectrum;
  std::partial_sort(nearest.begin(), nearest.begin() + 2 * n_max, nearest.end(),
                    [](const Complex& x, const Complex& y) { return std::abs(x) < std::abs(y); });
  nearest.resize(2 * n_max);

  std::vector<double> positive;
  std::vector<double> negative;
  for (const auto& e : nearest) {
    report.max_imag = std::max(report.max_imag, std::abs(e.imag()));
    if (std::abs(e.imag()) > real_tol) continue;
    (e.real() >= 0.0 ? positive : negative).push_back(std::abs(e.real()));
  }
  if (positive.size() < static_cast<std::size_t>(n_max) ||
      negative.size() < static_cast<std::size_t>(n_max)) {
    throw AnalysisError("verify_equal_spacing: found " + std::to_string(positive.size()) + "+" +
                        std::to_string(negative.size()) + " near-real levels, need " +
                        std::to_string(n_max) + " on each side");
  }
  std::sort(positive.begin(), positive.end());
  std::sort(negative.begin(), negative.end());
  for (int n = 1; n <= n_max; ++n) {
    const double level = 0.5 * (positive[n - 1] + negative[n - 1]);
    const double target = n * report.esm_spacing;
    report.levels.push_back(level);
    report.spacing_deviations.push_back(std::abs(level - target) / target);
  }
  report.eigenvalues = std::move(spectrum);
  return report;
}

}  // namespace eplasing
