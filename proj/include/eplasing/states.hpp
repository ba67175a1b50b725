#pragma once

#include <cmath>
#include <numbers>
#include <optional>

#include "eplasing/analytic.hpp"
#include "eplasing/lattice.hpp"

namespace eplasing {

namespace detail {

/// sum_n sum_sigma sigma * coeff(n) |psi_n^sigma>, written out site by site.
template <class Coefficient>
StateVector superpose_branches(const LatticeParams& p, int top, Coefficient&& coeff) {
  detail::require_threshold(p, "packet state");
  const int cells = p.cells();
  const double parity = (cells % 2 == 0) ? 1.0 : -1.0;
  const Complex c_plus = principal_sqrt(parity / (cells + 1.0));
  const Complex c_minus = principal_sqrt(-parity / (cells + 1.0));

  StateVector v = StateVector::Zero(p.sites());
  for (int n = 1; n <= top; ++n) {
    const double weight = coeff(n);
    if (weight == 0.0) continue;
    const double k = n * std::numbers::pi / (cells + 1.0);
    const double half_phi = 0.5 * analytic_dispersion(n, p).phase;
    const Complex e_plus = std::polar(1.0, half_phi);
    const Complex e_minus = std::conj(e_plus);
    // sigma=+1: A ~ C+ e^{+i phi/2}, B ~ C+ e^{-i phi/2}
    // sigma=-1 (times sigma): A ~ -C- e^{-i phi/2}, B ~ +C- e^{+i phi/2}
    const Complex amp_a = weight * (c_plus * e_plus - c_minus * e_minus);
    const Complex amp_b = weight * (c_plus * e_minus + c_minus * e_plus);
    for (int j = 1; j <= cells; ++j) {
      const double envelope = ((j % 2 == 0) ? 1.0 : -1.0) * std::sin(k * j);
      v(site_a(j)) += envelope * amp_a;
      v(site_b(j)) += envelope * amp_b;
    }
  }
  return v;
}

}  // namespace detail

/// |psi(0)> = lambda sum_{n, sigma} sigma sin(n kappa0) e^{-qn}/n |psi_n^sigma>.
inline StateVector build_initial_state(const PacketSpec& spec, const LatticeParams& p) {
  validate_packet_shape(spec.kappa0, spec.q);
  return detail::superpose_branches(p, packet_level_cutoff(spec.q, p.cells()), [&](int n) {
    return spec.lambda * packet_weight(n, spec.kappa0, spec.q);
  });
}

/// Two packets at kappa01 and kappa02 sharing one normalisation constant.
struct PacketPairSpec {
  double kappa01;
  double kappa02;
  double q;
  int relative_sign;  ///< +1 for Psi_+, -1 for Psi_-
  double lambda;
};

/// Pair whose lambda is the single-packet constant at kappa01, so that
/// Psi_+ + Psi_- = sqrt(2) x packet(kappa01).
inline PacketPairSpec make_pair(double kappa01, double kappa02, double q, int relative_sign,
                                int cells) {
  validate_packet_shape(kappa02, q);
  if (relative_sign != 1 && relative_sign != -1) {
    throw ParameterError("packet pair: relative sign must be +-1");
  }
  return {kappa01, kappa02, q, relative_sign, make_packet(kappa01, q, cells).lambda};
}

/// Psi_+- with coefficients (lambda/sqrt 2) sigma [sin(n k1) +- sin(n k2)] e^{-qn}/n.
inline StateVector build_pair_state(const PacketPairSpec& spec, const LatticeParams& p) {
  validate_packet_shape(spec.kappa01, spec.q);
  validate_packet_shape(spec.kappa02, spec.q);
  const double scale = spec.lambda / std::numbers::sqrt2;
  return detail::superpose_branches(p, packet_level_cutoff(spec.q, p.cells()), [&](int n) {
    return scale * (packet_weight(n, spec.kappa01, spec.q) +
                    spec.relative_sign * packet_weight(n, spec.kappa02, spec.q));
  });
}

/// Zero mode of H^dagger on the ring at gamma = 2 delta:
///   phi_c = (2N)^{-1/2} sum_j (-1)^j (|2j-1> + i |2j>).
inline StateVector coalescing_state(int cells) {
  if (cells < 2 || cells % 2 != 0) {
    throw ParameterError("coalescing_state: needs an even number of cells >= 2");
  }
  const double scale = 1.0 / std::sqrt(2.0 * cells);
  StateVector v(2 * Eigen::Index{cells});
  for (int j = 1; j <= cells; ++j) {
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    v(site_a(j)) = sign * scale;
    v(site_b(j)) = Complex(0.0, sign * scale);
  }
  return v;
}

/// |<phi_c|psi>| computed by direct summation.
inline double coalescing_overlap(const StateVector& state, int cells) {
  const StateVector phi = coalescing_state(cells);
  if (state.size() != phi.size()) throw ParameterError("coalescing_overlap: size mismatch");
  return std::abs(phi.dot(state));  // Eigen's dot conjugates the left operand
}

/// Profile averaged over the 4-site window {l-1, l, l+1, l+2}, clamped at
/// the chain ends; removes the A/B alternation.
inline Profile smoothed_profile(const Profile& prof) {
  const Eigen::Index n = prof.size();
  Profile out(n);
  for (Eigen::Index l = 0; l < n; ++l) {
    const Eigen::Index lo = std::max<Eigen::Index>(0, l - 1);
    const Eigen::Index hi = std::min<Eigen::Index>(n - 1, l + 2);
    out(l) = prof.segment(lo, hi - lo + 1).mean();
  }
  return out;
}

/// Half-maximum crossings of the smoothed profile, as fractional 1-based sites.
struct SiteInterval {
  double left;
  double right;

  double width() const noexcept { return right - left; }
  bool intersects(const SiteInterval& other) const noexcept {
    return left <= other.right && other.left <= right;
  }
};

inline SiteInterval fwhm_interval(const Profile& prof) {
  if (prof.size() == 0) throw AnalysisError("fwhm_interval: empty profile");
  const Profile sm = smoothed_profile(prof);
  Eigen::Index peak = 0;
  const double top = sm.maxCoeff(&peak);
  if (!(top > 0.0)) throw AnalysisError("fwhm_interval: zero profile");
  const double half = 0.5 * top;
  Eigen::Index lo = peak;
  while (lo > 0 && sm(lo - 1) >= half) --lo;
  Eigen::Index hi = peak;
  while (hi + 1 < sm.size() && sm(hi + 1) >= half) ++hi;
  // Interpolate the crossing between the last sample below and first above.
  auto crossing = [&](Eigen::Index inside, Eigen::Index outside) {
    const double a = sm(inside);
    const double b = sm(outside);
    const double frac = (a - half) / (a - b);
    return static_cast<double>(inside) + frac * static_cast<double>(outside - inside);
  };
  const double left = lo > 0 ? crossing(lo, lo - 1) : 0.0;
  const double right = hi + 1 < sm.size() ? crossing(hi, hi + 1) : static_cast<double>(hi);
  return {left + 1.0, right + 1.0};
}

struct Measurement {
  double dirac_norm;
  double center;  ///< probability-weighted mean site (1-based)
  double width;   ///< FWHM of the smoothed profile, in sites
};

inline Measurement measure(const Profile& prof) {
  const double total = prof.sum();
  if (!(total > 0.0)) throw AnalysisError("measure: zero state");
  double first_moment = 0.0;
  for (Eigen::Index l = 0; l < prof.size(); ++l) first_moment += (l + 1.0) * prof(l);
  return {total, first_moment / total, fwhm_interval(prof).width()};
}

inline Measurement measure(const StateVector& state) { return measure(Profile(state.cwiseAbs2())); }

}  // namespace eplasing
