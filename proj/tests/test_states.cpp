#include <gtest/gtest.h>

#include <numbers>

#include "eplasing/states.hpp"

using namespace eplasing;

namespace {

constexpr double kPi = std::numbers::pi;

// Independent construction: sum the analytic eigenvectors one by one.
StateVector packet_by_eigenstates(const PacketSpec& spec, const LatticeParams& p) {
  StateVector v = StateVector::Zero(p.sites());
  for (int n = 1; n <= p.cells(); ++n) {
    const double c = spec.lambda * std::sin(n * spec.kappa0) * std::exp(-spec.q * n) / n;
    v += c * analytic_eigenstate(n, 1, p) - c * analytic_eigenstate(n, -1, p);
  }
  return v;
}

}  // namespace

TEST(InitialState, MatchesEigenstateSum) {
  const LatticeParams p = LatticeParams::at_threshold(30, 0.8);
  const PacketSpec spec = make_packet(kPi / 3.0, 0.1, 30);
  const StateVector fast = build_initial_state(spec, p);
  EXPECT_LT((fast - packet_by_eigenstates(spec, p)).cwiseAbs().maxCoeff(), 1e-13);
}

TEST(InitialState, CentreTracksKappa) {
  const LatticeParams p = LatticeParams::at_threshold(250, 0.9);
  const Measurement m = measure(build_initial_state(make_packet(kPi / 2.0, 0.02, 250), p));
  EXPECT_NEAR(m.center, 250.0, 5.0);
  EXPECT_LT(m.dirac_norm, 1e-3);  // branches nearly cancel at the threshold
  EXPECT_THROW(build_initial_state(make_packet(1.0, 0.1, 250), LatticeParams{250, 0.9, 1.0}),
               ParameterError);
}

TEST(InitialState, ScaleInvariantShape) {
  const LatticeParams p = LatticeParams::at_threshold(100, 0.9);
  PacketSpec spec = make_packet(kPi / 4.0, 0.05, 100);
  const StateVector a = build_initial_state(spec, p);
  spec.lambda *= 3.0;
  EXPECT_LT((build_initial_state(spec, p) - 3.0 * a).norm(), 1e-13);
}

TEST(PairState, IsLinearInConstituents) {
  const LatticeParams p = LatticeParams::at_threshold(60, 0.9);
  const double k1 = kPi / 6.0, k2 = 5.0 * kPi / 6.0;
  const PacketPairSpec plus = make_pair(k1, k2, 0.05, 1, 60);
  const PacketPairSpec minus = make_pair(k1, k2, 0.05, -1, 60);
  const StateVector single1 = build_initial_state({k1, 0.05, plus.lambda}, p);
  const StateVector single2 = build_initial_state({k2, 0.05, plus.lambda}, p);
  const StateVector sp = build_pair_state(plus, p);
  const StateVector sm = build_pair_state(minus, p);
  EXPECT_LT((sp - (single1 + single2) / std::sqrt(2.0)).norm(), 1e-13);
  EXPECT_LT((sp + sm - std::sqrt(2.0) * single1).norm(), 1e-13);
  EXPECT_THROW(make_pair(k1, k2, 0.05, 0, 60), ParameterError);
  EXPECT_THROW(make_pair(k1, 4.0, 0.05, 1, 60), ParameterError);
}

TEST(CoalescingState, ZeroModeOfAdjoint) {
  for (double delta : {0.5, 0.8, 0.9}) {
    for (int cells : {2, 10, 250}) {
      const LatticeParams p = LatticeParams::at_threshold(cells, delta, Boundary::Periodic);
      const StateVector phi = coalescing_state(cells);
      EXPECT_NEAR(phi.norm(), 1.0, 1e-14);
      const StateVector r = build_hamiltonian(p).adjoint() * phi;
      EXPECT_LT(r.cwiseAbs().maxCoeff(), 1e-13);
    }
  }
  EXPECT_THROW(coalescing_state(3), ParameterError);
  EXPECT_THROW(coalescing_state(0), ParameterError);
}

TEST(CoalescingState, OverlapIsConjugateLinear) {
  StateVector v = coalescing_state(4);
  EXPECT_NEAR(coalescing_overlap(v, 4), 1.0, 1e-15);
  EXPECT_NEAR(coalescing_overlap(Complex(0.0, 2.0) * v, 4), 2.0, 1e-15);
  EXPECT_THROW(coalescing_overlap(StateVector::Zero(6), 4), ParameterError);
}

TEST(CoalescingState, OverlapFormulaForPaperPacket) {
  const LatticeParams p = LatticeParams::at_threshold(250, 0.9);
  for (double q : {0.02, 0.05, 0.1}) {
    const PacketSpec spec = make_packet(kPi / 2.0, q, 250);
    const double numeric = coalescing_overlap(build_initial_state(spec, p), 250);
    EXPECT_NEAR(overlap_formula(spec, p) / numeric, 1.0, 0.2) << q;
  }
}

TEST(Profiles, SmoothingWindow) {
  Profile prof = Profile::Zero(6);
  prof(2) = 4.0;
  const Profile sm = smoothed_profile(prof);
  // Window {l-1, l, l+1, l+2}: site 2 contributes to l = 0..3.
  EXPECT_NEAR(sm(0), 4.0 / 3.0, 1e-15);  // clamped window {0, 1, 2}
  EXPECT_NEAR(sm(1), 1.0, 1e-15);
  EXPECT_NEAR(sm(3), 1.0, 1e-15);
  EXPECT_EQ(sm(4), 0.0);
}

TEST(Profiles, FwhmOfPlateau) {
  Profile prof = Profile::Zero(100);
  prof.segment(40, 20).setConstant(1.0);
  const SiteInterval iv = fwhm_interval(prof);
  EXPECT_NEAR(iv.width(), 20.0, 1.01);
  EXPECT_TRUE(iv.intersects({iv.right, iv.right + 5}));
  EXPECT_FALSE(iv.intersects({iv.right + 1, iv.right + 5}));
  const Measurement m = measure(prof);
  EXPECT_NEAR(m.center, 50.5, 1e-12);
  EXPECT_DOUBLE_EQ(m.dirac_norm, 20.0);
  EXPECT_THROW(measure(Profile(Profile::Zero(10))), AnalysisError);
  EXPECT_THROW(fwhm_interval(Profile()), AnalysisError);
}
