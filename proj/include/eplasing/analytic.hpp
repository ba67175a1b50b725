#pragma once

#include <cmath>
#include <numbers>

#include "eplasing/lattice.hpp"
#include "eplasing/special_functions.hpp"
#include "eplasing/spectra.hpp"

namespace eplasing {

/// Wave-packet family c_n^sigma = sigma * lambda * sin(n kappa0) e^{-q n} / n.
///
/// lambda is fixed by coefficient normalisation,
///   2 lambda^2 sum_n sin^2(n kappa0) e^{-2qn} / n^2 = 1,
/// so the Dirac norm of the packet itself is free to be small: near the
/// threshold the two branches nearly cancel and P(0) << 1.
struct PacketSpec {
  double kappa0;
  double q;
  double lambda;
};

/// Highest level index n kept in packet sums: terms with n*q > 40 are dropped.
inline int packet_level_cutoff(double q, int cells) {
  if (q <= 0.0) return cells;
  return static_cast<int>(std::min<double>(cells, std::floor(40.0 / q)));
}

inline double packet_weight(int n, double kappa0, double q) {
  return std::sin(n * kappa0) * std::exp(-q * n) / n;
}

inline void validate_packet_shape(double kappa0, double q) {
  if (!(kappa0 > 0.0 && kappa0 < std::numbers::pi)) {
    throw ParameterError("packet: kappa0 must lie strictly inside (0, pi)");
  }
  if (!(q >= 0.0) || !std::isfinite(q)) throw ParameterError("packet: q must be finite and >= 0");
}

/// Coefficient-normalised packet for a chain of `cells` unit cells.
inline PacketSpec make_packet(double kappa0, double q, int cells) {
  validate_packet_shape(kappa0, q);
  double sum = 0.0;
  const int top = packet_level_cutoff(q, cells);
  for (int n = 1; n <= top; ++n) {
    const double w = packet_weight(n, kappa0, q);
    sum += w * w;
  }
  if (!(sum > 0.0)) throw ParameterError("packet: all coefficients vanish");
  return {kappa0, q, 1.0 / std::sqrt(2.0 * sum)};
}

namespace detail {

inline void require_threshold(const LatticeParams& p, const char* who) {
  if (std::abs(p.gamma() - p.gamma_c()) > 1e-12 * std::max(1.0, p.gamma_c())) {
    throw ParameterError(std::string(who) + ": analytic eigenbasis requires gamma = 2*delta");
  }
}

/// sqrt(x) on the principal branch, with x taken on the real axis.
inline Complex principal_sqrt(double x) { return std::sqrt(Complex(x, 0.0)); }

}  // namespace detail

/// Approximate open-chain eigenvector |psi_n^sign> at gamma = gamma_c.
///
///   A_j = C (-1)^j sin(kj) e^{+- i phi_k/2},
///   B_j = +- C (-1)^j sin(kj) e^{-+ i phi_k/2},   C = sqrt(+-(-1)^N / (N+1)).
///
/// With `approx` set, phi_k is replaced by pi/2 so that both branches share
/// one spatial shape.
inline StateVector analytic_eigenstate(int n, int sign, const LatticeParams& p,
                                       bool approx = false) {
  detail::require_threshold(p, "analytic_eigenstate");
  if (n < 1 || n > p.cells()) throw ParameterError("analytic_eigenstate: n out of range");
  if (sign != 1 && sign != -1) throw ParameterError("analytic_eigenstate: sign must be +-1");
  const int cells = p.cells();
  const double k = n * std::numbers::pi / (cells + 1.0);
  const double phi = approx ? std::numbers::pi / 2.0 : analytic_dispersion(n, p).phase;
  const double parity = (cells % 2 == 0) ? 1.0 : -1.0;
  const Complex c = detail::principal_sqrt(sign * parity / (cells + 1.0));
  const Complex phase_a = std::polar(1.0, sign * phi / 2.0);
  const Complex phase_b = static_cast<double>(sign) * std::polar(1.0, -sign * phi / 2.0);

  StateVector v(p.sites());
  for (int j = 1; j <= cells; ++j) {
    const double envelope = ((j % 2 == 0) ? 1.0 : -1.0) * std::sin(k * j);
    v(site_a(j)) = c * envelope * phase_a;
    v(site_b(j)) = c * envelope * phase_b;
  }
  return v;
}

/// How the sublattice phase offset enters theta in the closed-form state.
enum class PhaseOffset {
  /// eta * omega / (4 delta): first-order expansion of phi_k / 2 about pi/4.
  Linearized,
  /// eta / (4 delta), the offset as printed alongside the compact form.
  Verbatim,
  None,
};

/// Periodic sawtooth r(x) = (pi - x)/2 + m pi on [2 pi m, 2 pi (m+1)).
inline double sawtooth(double x) {
  const double two_pi = 2.0 * std::numbers::pi;
  const double reduced = x - two_pi * std::floor(x / two_pi);
  return 0.5 * (std::numbers::pi - reduced);
}

/// sum_{n>=1} sin(n theta) e^{-q n} / n, closed form.
inline double damped_sine_sum(double theta, double q) {
  if (q == 0.0) return sawtooth(theta);
  return std::atan(std::sin(theta) / (std::exp(q) - std::cos(theta)));
}

/// Compact approximate form of exp(-iHt)|psi(0)> for the packet family.
inline StateVector evolved_state_closed_form(double t, const PacketSpec& spec,
                                             const LatticeParams& p,
                                             PhaseOffset offset = PhaseOffset::Linearized) {
  detail::require_threshold(p, "evolved_state_closed_form");
  validate_packet_shape(spec.kappa0, spec.q);
  const int cells = p.cells();
  const double omega = esm_spacing(p);
  const double parity = (cells % 2 == 0) ? 1.0 : -1.0;
  const Complex prefactor = 0.5 * spec.lambda * detail::principal_sqrt(parity / (cells + 1.0));
  double offset_scale = 0.0;
  switch (offset) {
    case PhaseOffset::Linearized: offset_scale = omega / (4.0 * p.delta()); break;
    case PhaseOffset::Verbatim: offset_scale = 1.0 / (4.0 * p.delta()); break;
    case PhaseOffset::None: break;
  }

  StateVector v = StateVector::Zero(p.sites());
  for (int j = 1; j <= cells; ++j) {
    const double alternation = (j % 2 == 0) ? 1.0 : -1.0;
    for (int eta : {1, -1}) {
      double sum = 0.0;
      for (int rho : {1, -1}) {
        for (int upsilon : {1, -1}) {
          const double theta = rho * spec.kappa0 + upsilon * std::numbers::pi * j / (cells + 1.0) +
                               omega * t - eta * offset_scale;
          sum += rho * upsilon * damped_sine_sum(theta, spec.q);
        }
      }
      const Complex amp =
          prefactor * sum * alternation * static_cast<double>(eta) *
          std::polar(1.0, eta * std::numbers::pi / 4.0);
      // eta = +1 lands on b_j (site 2j), eta = -1 on a_j (site 2j-1).
      v(eta == 1 ? site_b(j) : site_a(j)) += amp;
    }
  }
  return v;
}

/// Closed-form Dirac norm of the evolved kappa0 = pi/2 packet:
///   P(t) = -(L^2 e^{-2q}/2) Re[e^{-2i w t} Phi(e^{-4(q + i w t)}, 2, 1/2)]
///          + L^2 [Li2(e^{-2q}) - Li2(-e^{-2q})].
inline double dirac_norm_closed_form(double t, const PacketSpec& spec, const LatticeParams& p) {
  if (std::abs(spec.kappa0 - std::numbers::pi / 2.0) > 1e-12) {
    throw ParameterError("dirac_norm_closed_form: derived for kappa0 = pi/2 only");
  }
  if (!(spec.q >= 0.0)) throw ParameterError("dirac_norm_closed_form: q must be >= 0");
  const double omega = esm_spacing(p);
  const double l2 = spec.lambda * spec.lambda;
  const double decay = std::exp(-2.0 * spec.q);
  const Complex z = std::exp(Complex(-4.0 * spec.q, -4.0 * omega * t));
  const SpecialValue lerch = lerch_phi(z, 2.0, 0.5);
  const double oscillating =
      -(l2 * decay / 2.0) * (std::polar(1.0, -2.0 * omega * t) * lerch.value).real();
  const double constant = l2 * (dilog(decay).value.real() - dilog(-decay).value.real());
  return oscillating + constant;
}

/// Triangle wave with slope 2 L^2 pi^2 / tau rising on [0, tau/4) and
/// falling on [tau/4, tau/2), repeated with period tau/2.
inline double triangle_wave_norm(double t, double lambda, double tau) {
  const double half = tau / 2.0;
  const double phase = t - half * std::floor(t / half);
  const double slope = 2.0 * lambda * lambda * std::numbers::pi * std::numbers::pi / tau;
  return slope * (phase < tau / 4.0 ? phase : half - phase);
}

/// |<phi_c|psi(0)>| ~ sqrt(delta(1-delta)) L / (N delta) * arctan(sin kappa0 / sinh q).
inline double overlap_formula(const PacketSpec& spec, const LatticeParams& p) {
  validate_packet_shape(spec.kappa0, spec.q);
  const double d = p.delta();
  return std::sqrt(d * (1.0 - d)) * spec.lambda / (p.cells() * d) *
         std::atan2(std::sin(spec.kappa0), std::sinh(spec.q));
}

}  // namespace eplasing
