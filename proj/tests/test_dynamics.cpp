#include <gtest/gtest.h>

#include <numbers>

#include "eplasing/dynamics.hpp"

using namespace eplasing;

namespace {

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = a + (b - a) * i / (n - 1);
  return v;
}

template <class F>
std::vector<double> sample(const std::vector<double>& t, F f) {
  std::vector<double> v;
  for (double x : t) v.push_back(f(x));
  return v;
}

// A Gaussian bump moving at constant speed, reflected at t_turn.
Trajectory synthetic(int sites, int samples, double dt, double (*centre)(double)) {
  Trajectory traj;
  for (int k = 0; k < samples; ++k) {
    const double t = k * dt;
    Profile prof(sites);
    for (int l = 0; l < sites; ++l) {
      const double x = l + 1.0 - centre(t);
      prof(l) = std::exp(-x * x / 18.0);
    }
    traj.times.push_back(t);
    traj.norms.push_back(prof.sum());
    traj.profiles.push_back(prof);
  }
  return traj;
}

}  // namespace

TEST(FitLine, ExactLine) {
  const auto t = linspace(0.0, 1.0, 11);
  const auto y = sample(t, [](double x) { return 3.0 - 2.0 * x; });
  const LineFit f = fit_line(t, y);
  EXPECT_NEAR(f.slope, -2.0, 1e-14);
  EXPECT_NEAR(f.intercept, 3.0, 1e-14);
  EXPECT_NEAR(f.r_squared, 1.0, 1e-14);
}

TEST(Classify, Exponential) {
  const auto t = linspace(0.0, 10.0, 200);
  const auto p = sample(t, [](double x) { return std::exp(0.8 * x); });
  const GrowthReport r = classify_growth(t, p, {1.0, 9.0});
  EXPECT_EQ(r.label, GrowthLabel::Exponential);
  EXPECT_NEAR(r.exponential.slope, 0.8, 1e-12);
}

TEST(Classify, Linear) {
  const auto t = linspace(0.0, 10.0, 200);
  const auto p = sample(t, [](double x) { return 0.1 + 2.0 * x + 0.01 * std::sin(7 * x); });
  const GrowthReport r = classify_growth(t, p, {1.0, 9.0});
  EXPECT_EQ(r.label, GrowthLabel::Linear);
  EXPECT_GT(r.r_squared, 0.99);
}

TEST(Classify, Oscillatory) {
  const auto t = linspace(0.0, 10.0, 200);
  const auto p = sample(t, [](double x) { return 1.0 + 0.9 * std::sin(x); });
  EXPECT_EQ(classify_growth(t, p, {0.0, 10.0}).label, GrowthLabel::Oscillatory);
}

TEST(Classify, ScaleInvariant) {
  const auto t = linspace(0.0, 10.0, 300);
  for (auto f : {+[](double x) { return std::exp(0.5 * x); }, +[](double x) { return 1.0 + x; },
                 +[](double x) { return 1.0 + 0.9 * std::cos(x); }}) {
    const auto p = sample(t, f);
    const GrowthLabel base = classify_growth(t, p, {0.5, 9.5}).label;
    for (double scale : {1e-8, 3.0, 1e6}) {
      const auto q = sample(p, [&](double v) { return scale * v; });
      EXPECT_EQ(classify_growth(t, q, {0.5, 9.5}).label, base);
    }
  }
}

TEST(Classify, RejectsDegenerateInput) {
  const auto t = linspace(0.0, 1.0, 100);
  const std::vector<double> flat(100, 2.0);
  EXPECT_THROW(classify_growth(t, flat, {0.0, 1.0}), AnalysisError);
  EXPECT_THROW(classify_growth(t, t, {0.0, 0.3}), AnalysisError);  // 30 samples < 50
  EXPECT_THROW(classify_growth(t, std::vector<double>(99, 1.0), {0.0, 1.0}), ParameterError);
}

TEST(Classify, DefaultWindow) {
  const TimeWindow w = default_growth_window(1000.0);
  EXPECT_EQ(w.begin, 50.0);
  EXPECT_EQ(w.end, 200.0);
}

TEST(Reflection, SymmetricMotionScoresZero) {
  // Centre bounces off site 10 at t = 50: c(t) = 10 + |t - 50|.
  const Trajectory traj =
      synthetic(120, 101, 1.0, [](double t) { return 10.0 + std::abs(t - 50.0); });
  EXPECT_LT(reflection_symmetry(traj, 50.0, 30.0), 1e-12);
  EXPECT_LT(reflection_symmetry(traj, 50.0, 30.0, MismatchScale::PerLag), 1e-12);
  // About the wrong instant the profiles do not match.
  EXPECT_GT(reflection_symmetry(traj, 40.0, 30.0), 0.5);
  EXPECT_THROW(reflection_symmetry(traj, 90.0, 30.0), AnalysisError);
  EXPECT_THROW(reflection_symmetry(traj, 500.0, 3.0), AnalysisError);
}

TEST(Reflection, MirroredAndMismatch) {
  Profile a(4);
  a << 1, 2, 3, 4;
  EXPECT_TRUE(mirrored(a).isApprox(Profile((Profile(4) << 4, 3, 2, 1).finished())));
  EXPECT_EQ(profile_l1(a, mirrored(a)), 8.0);
  EXPECT_THROW(profile_l1(a, Profile(3)), ParameterError);
  const Trajectory traj = synthetic(50, 3, 1.0, [](double) { return 25.0; });
  EXPECT_EQ(snapshot_mismatch(traj, traj.profiles[0], traj.profiles[2]), 0.0);
}

TEST(Translation, WindowBetweenBounces) {
  // Bounce off site 1 at t = 20, cross at speed 1, bounce off site 200 at t = 219.
  const Trajectory traj = synthetic(200, 300, 1.0, [](double t) {
    if (t < 20.0) return 21.0 - t;
    if (t < 219.0) return 1.0 + (t - 20.0);
    return 200.0 - (t - 219.0);
  });
  const TranslationReport r = translation_window(traj);
  EXPECT_GT(r.window.begin, 20.0);
  EXPECT_LT(r.window.end, 219.0);
  EXPECT_LT(r.window.begin, 40.0);
  EXPECT_GT(r.window.end, 190.0);
  EXPECT_NEAR(r.center_velocity, 1.0, 1e-6);
  EXPECT_LT(r.norm_drift, 1e-5);
}

TEST(Translation, NeedsTwoReflections) {
  const Trajectory still = synthetic(200, 50, 1.0, [](double) { return 100.0; });
  EXPECT_THROW(translation_window(still), AnalysisError);
  const Trajectory once = synthetic(200, 50, 1.0, [](double t) { return 5.0 + t; });
  EXPECT_THROW(translation_window(once), AnalysisError);
}

TEST(Interference, DetectsOverlapWindow) {
  // Two bumps approaching each other; pair norm doubles while they overlap.
  const Trajectory left = synthetic(200, 101, 1.0, [](double t) { return 20.0 + t; });
  const Trajectory right = synthetic(200, 101, 1.0, [](double t) { return 180.0 - t; });
  Trajectory pair = left;
  for (std::size_t k = 0; k < pair.size(); ++k) {
    const double overlap = (left.profiles[k].cwiseProduct(right.profiles[k])).cwiseSqrt().sum();
    pair.norms[k] = 0.5 * (left.norms[k] + right.norms[k]) + overlap;
  }
  const InterferenceReport r = interference_report(pair, left, right);
  EXPECT_GT(r.overlap_window.begin, 60.0);
  EXPECT_LT(r.overlap_window.end, 100.0);
  // Full overlap doubles the norm; p_before already carries part of the cross term.
  EXPECT_NEAR(r.max_ratio * r.p_before, 2.0 * left.norms[0], 1e-6);
  EXPECT_EQ(r.p_ratio_extremum, r.max_ratio);
  // Just outside the FWHM touch the Gaussian cross term is still ~exp(-d^2/72).
  EXPECT_GT(r.separated_deviation, 0.2);
  EXPECT_LT(r.separated_deviation, 0.6);
}

TEST(Interference, ErrorsWhenPacketsNeverMeet) {
  const Trajectory a = synthetic(200, 20, 1.0, [](double) { return 30.0; });
  const Trajectory b = synthetic(200, 20, 1.0, [](double) { return 170.0; });
  EXPECT_THROW(interference_report(a, a, b), AnalysisError);
  EXPECT_THROW(interference_report(a, a, a), AnalysisError);  // overlapping from t = 0
  const Trajectory shorter = synthetic(200, 10, 1.0, [](double) { return 30.0; });
  EXPECT_THROW(interference_report(a, shorter, b), ParameterError);
}
