#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <string>

#include "eplasing/error.hpp"

namespace eplasing {

using Complex = std::complex<double>;

/// Dense operator on the 2N single-particle sites.
using ComplexMatrix = Eigen::MatrixXcd;

/// Single-particle amplitudes. Site l (1-based) lives at index l-1; site
/// 2j-1 is a_j on sublattice A and site 2j is b_j on sublattice B.
using StateVector = Eigen::VectorXcd;

/// Per-site probabilities |<l|psi>|^2, indexed like StateVector.
using Profile = Eigen::VectorXd;

enum class Boundary { Open, Periodic };

inline const char* to_string(Boundary b) {
  return b == Boundary::Open ? "open" : "periodic";
}

/// 0-based storage index of a_j for 1-based cell j.
constexpr Eigen::Index site_a(Eigen::Index j) { return 2 * j - 2; }
/// 0-based storage index of b_j for 1-based cell j.
constexpr Eigen::Index site_b(Eigen::Index j) { return 2 * j - 1; }

/// Model definition for the dimerised gain/loss chain.
///
/// Hopping is 1+delta inside a cell and 1-delta between cells; A sites carry
/// +i*gamma and B sites -i*gamma. The ring reaches its exceptional point at
/// gamma_c = 2*delta.
class LatticeParams {
 public:
  LatticeParams(int cells, double delta, double gamma,
                Boundary boundary = Boundary::Open)
      : cells_(cells), delta_(delta), gamma_(gamma), boundary_(boundary) {
    if (cells < 2) {
      throw ParameterError("cells must be >= 2, got " + std::to_string(cells));
    }
    if (boundary == Boundary::Periodic && cells % 2 != 0) {
      throw ParameterError("periodic boundary requires an even number of cells");
    }
    if (!(delta > 0.0 && delta < 1.0)) {
      throw ParameterError("delta must lie in (0, 1), got " + std::to_string(delta));
    }
    if (!(gamma >= 0.0) || !std::isfinite(gamma)) {
      throw ParameterError("gamma must be finite and >= 0, got " + std::to_string(gamma));
    }
  }

  /// Same chain tuned to gamma = gamma_c.
  static LatticeParams at_threshold(int cells, double delta,
                                    Boundary boundary = Boundary::Open) {
    return {cells, delta, 2.0 * delta, boundary};
  }

  int cells() const noexcept { return cells_; }
  Eigen::Index sites() const noexcept { return 2 * Eigen::Index{cells_}; }
  double delta() const noexcept { return delta_; }
  double gamma() const noexcept { return gamma_; }
  Boundary boundary() const noexcept { return boundary_; }
  double gamma_c() const noexcept { return 2.0 * delta_; }

  LatticeParams with_gamma(double gamma) const {
    return {cells_, delta_, gamma, boundary_};
  }
  LatticeParams with_boundary(Boundary boundary) const {
    return {cells_, delta_, gamma_, boundary};
  }

 private:
  int cells_;
  double delta_;
  double gamma_;
  Boundary boundary_;
};

inline ComplexMatrix build_hamiltonian(const LatticeParams& p) {
  const Eigen::Index n = p.sites();
  const double strong = 1.0 + p.delta();
  const double weak = 1.0 - p.delta();
  ComplexMatrix h = ComplexMatrix::Zero(n, n);
  for (Eigen::Index j = 1; j <= p.cells(); ++j) {
    const auto a = site_a(j);
    const auto b = site_b(j);
    h(a, b) = strong;
    h(b, a) = strong;
    h(a, a) = Complex(0.0, p.gamma());
    h(b, b) = Complex(0.0, -p.gamma());
  }
  // Open chains drop the weak bond between b_N and a_1.
  const Eigen::Index weak_bonds = p.boundary() == Boundary::Open ? p.cells() - 1 : p.cells();
  for (Eigen::Index j = 1; j <= weak_bonds; ++j) {
    const auto b = site_b(j);
    const auto next_a = site_a(j % p.cells() + 1);
    h(b, next_a) = weak;
    h(next_a, b) = weak;
  }
  return h;
}

enum class LinearSymmetry { P, C };
enum class AntilinearSymmetry { T, PT, CT };

/// P maps a_l <-> b_{N+1-l}, i.e. site s <-> 2N+1-s. C is +1 on A, -1 on B.
inline ComplexMatrix symmetry_operator(LinearSymmetry kind, int cells) {
  if (cells < 1) throw ParameterError("symmetry_operator: cells must be >= 1");
  const Eigen::Index n = 2 * Eigen::Index{cells};
  ComplexMatrix op = ComplexMatrix::Zero(n, n);
  for (Eigen::Index s = 0; s < n; ++s) {
    if (kind == LinearSymmetry::P) {
      op(n - 1 - s, s) = 1.0;
    } else {
      op(s, s) = (s % 2 == 0) ? 1.0 : -1.0;
    }
  }
  return op;
}

namespace detail {

inline void require_even_length(const StateVector& v, const char* who) {
  if (v.size() == 0 || v.size() % 2 != 0) {
    throw ParameterError(std::string(who) + ": state length must be a positive even number");
  }
}

}  // namespace detail

/// Applies T (conjugation), PT or CT. P and C are real so the order of the
/// linear part and the conjugation does not matter.
inline StateVector apply_antilinear(AntilinearSymmetry kind, const StateVector& state) {
  detail::require_even_length(state, "apply_antilinear");
  const Eigen::Index n = state.size();
  StateVector out(n);
  for (Eigen::Index s = 0; s < n; ++s) {
    switch (kind) {
      case AntilinearSymmetry::T:
        out(s) = std::conj(state(s));
        break;
      case AntilinearSymmetry::PT:
        out(s) = std::conj(state(n - 1 - s));
        break;
      case AntilinearSymmetry::CT:
        out(s) = (s % 2 == 0 ? 1.0 : -1.0) * std::conj(state(s));
        break;
    }
  }
  return out;
}

struct SymmetryResiduals {
  double pt_residual;
  double ct_residual;
};

/// Max-entry norms of P conj(H) P - H and C conj(H) C + H.
inline SymmetryResiduals symmetry_residuals(const ComplexMatrix& h, int cells) {
  const Eigen::Index n = 2 * Eigen::Index{cells};
  if (h.rows() != n || h.cols() != n) {
    throw ParameterError("symmetry_residuals: matrix is not 2N x 2N");
  }
  double pt = 0.0;
  double ct = 0.0;
  for (Eigen::Index c = 0; c < n; ++c) {
    for (Eigen::Index r = 0; r < n; ++r) {
      const Complex mirrored = std::conj(h(n - 1 - r, n - 1 - c));
      pt = std::max(pt, std::abs(mirrored - h(r, c)));
      const double sign = ((r + c) % 2 == 0) ? 1.0 : -1.0;
      ct = std::max(ct, std::abs(sign * std::conj(h(r, c)) + h(r, c)));
    }
  }
  return {pt, ct};
}

/// Operator 1-norm (max column sum).
inline double norm1(const ComplexMatrix& m) {
  return m.cwiseAbs().colwise().sum().maxCoeff();
}

}  // namespace eplasing
