#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "eplasing/expm.hpp"
#include "eplasing/lattice.hpp"

namespace eplasing {

/// One-step propagator exp(-i H dt).
inline ComplexMatrix propagator(const ComplexMatrix& h, double dt) {
  if (!(dt > 0.0)) throw ParameterError("propagator: dt must be positive");
  return expm(Complex(0.0, -dt) * h);
}

/// Time-ordered samples of one evolution run at t = t0 + k*dt.
struct Trajectory {
  std::vector<double> times;
  std::vector<Profile> profiles;
  std::vector<double> norms;
  /// Filled only when full states were requested.
  std::vector<StateVector> states;

  std::size_t size() const noexcept { return times.size(); }
  double dt() const { return times.size() > 1 ? times[1] - times[0] : 0.0; }
  Eigen::Index sites() const { return profiles.empty() ? 0 : profiles.front().size(); }

  /// Index of the sample closest to t, if t lies within the sampled span.
  std::optional<std::size_t> index_of(double t) const {
    if (times.empty()) return std::nullopt;
    const double step = dt();
    if (step <= 0.0) return t == times.front() ? std::optional<std::size_t>(0) : std::nullopt;
    const double k = std::round((t - times.front()) / step);
    if (k < 0.0 || k > static_cast<double>(times.size() - 1)) return std::nullopt;
    return static_cast<std::size_t>(k);
  }
};

struct RecordOptions {
  bool states = false;
};

inline Profile site_probabilities(const StateVector& state) {
  return state.cwiseAbs2();
}

inline double dirac_norm(const StateVector& state) { return state.squaredNorm(); }

/// Samples exp(-iHt)|psi0> at t = 0, dt, ..., steps*dt with a precomputed
/// one-step propagator.
inline Trajectory evolve_with(const StateVector& state0, const ComplexMatrix& step,
                              double dt, int steps, RecordOptions record = {}) {
  if (state0.size() != step.rows() || step.rows() != step.cols()) {
    throw ParameterError("evolve: state and propagator dimensions differ");
  }
  if (steps < 1) throw ParameterError("evolve: steps must be >= 1");
  Trajectory traj;
  const auto samples = static_cast<std::size_t>(steps) + 1;
  traj.times.reserve(samples);
  traj.profiles.reserve(samples);
  traj.norms.reserve(samples);
  if (record.states) traj.states.reserve(samples);

  StateVector psi = state0;
  StateVector next(psi.size());
  for (std::size_t k = 0; k < samples; ++k) {
    traj.times.push_back(static_cast<double>(k) * dt);
    Profile prof = site_probabilities(psi);
    traj.norms.push_back(prof.sum());
    traj.profiles.push_back(std::move(prof));
    if (record.states) traj.states.push_back(psi);
    if (k + 1 < samples) {
      next.noalias() = step * psi;
      psi.swap(next);
      if (!psi.allFinite()) throw NumericalError("evolve: state overflowed at t = " +
                                                 std::to_string((k + 1) * dt));
    }
  }
  return traj;
}

inline Trajectory evolve(const StateVector& state0, const ComplexMatrix& h, double dt,
                         int steps, RecordOptions record = {}) {
  return evolve_with(state0, propagator(h, dt), dt, steps, record);
}

}  // namespace eplasing
