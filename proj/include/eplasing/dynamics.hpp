#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <span>
#include <vector>

#include "eplasing/propagator.hpp"
#include "eplasing/states.hpp"

namespace eplasing {

enum class GrowthLabel { Exponential, Linear, Oscillatory };

inline const char* to_string(GrowthLabel label) {
  switch (label) {
    case GrowthLabel::Exponential: return "Exponential";
    case GrowthLabel::Linear: return "Linear";
    case GrowthLabel::Oscillatory: return "Oscillatory";
  }
  return "?";
}

struct TimeWindow {
  double begin;
  double end;
};

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

inline LineFit fit_line(std::span<const double> x, std::span<const double> y) {
  const auto n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  LineFit fit;
  fit.slope = sxx > 0.0 ? sxy / sxx : 0.0;
  fit.intercept = my - fit.slope * mx;
  fit.r_squared = (sxx > 0.0 && syy > 0.0) ? std::clamp(sxy * sxy / (sxx * syy), 0.0, 1.0) : 0.0;
  return fit;
}

/// Fraction by which a local maximum must be undercut to count as oscillation.
inline constexpr double kOscillationDrop = 0.20;
inline constexpr std::size_t kMinGrowthSamples = 50;

struct GrowthReport {
  GrowthLabel label;
  LineFit linear;       ///< P ~ intercept + slope t
  LineFit exponential;  ///< log P ~ intercept + slope t
  double max_drop = 0.0;  ///< largest relative fall below the running maximum
  double r_squared = 0.0;  ///< R^2 of the model backing the label
  TimeWindow window;
};

/// Labels P(t) on a window as exponential, linear or oscillatory growth.
///
/// A fall of at least 20% below the running maximum means Oscillatory;
/// otherwise the better of the linear fit of P and the linear fit of log P
/// (by R^2) decides. All criteria are invariant under rescaling P.
inline GrowthReport classify_growth(std::span<const double> times, std::span<const double> norms,
                                    TimeWindow window) {
  if (times.size() != norms.size()) throw ParameterError("classify_growth: size mismatch");
  std::vector<double> t;
  std::vector<double> p;
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (times[i] >= window.begin && times[i] <= window.end) {
      t.push_back(times[i]);
      p.push_back(norms[i]);
    }
  }
  if (t.size() < kMinGrowthSamples) {
    throw AnalysisError("classify_growth: window holds " + std::to_string(t.size()) +
                        " samples, need " + std::to_string(kMinGrowthSamples));
  }
  const auto [lo, hi] = std::minmax_element(p.begin(), p.end());
  if (!(*hi - *lo > 1e-12 * std::abs(*hi))) {
    throw AnalysisError("classify_growth: indeterminate (constant series)");
  }

  GrowthReport report{};
  report.window = window;
  double running = p.front();
  for (double v : p) {
    running = std::max(running, v);
    if (running > 0.0) report.max_drop = std::max(report.max_drop, (running - v) / running);
  }
  report.linear = fit_line(t, p);
  std::vector<double> logp(p.size());
  std::transform(p.begin(), p.end(), logp.begin(),
                 [](double v) { return std::log(std::max(v, 1e-300)); });
  report.exponential = fit_line(t, logp);

  if (report.max_drop >= kOscillationDrop) {
    report.label = GrowthLabel::Oscillatory;
    report.r_squared = std::max(report.linear.r_squared, report.exponential.r_squared);
  } else if (report.exponential.r_squared > report.linear.r_squared) {
    report.label = GrowthLabel::Exponential;
    report.r_squared = report.exponential.r_squared;
  } else {
    report.label = GrowthLabel::Linear;
    report.r_squared = report.linear.r_squared;
  }
  return report;
}

/// Default fit window [0.05 tau, 0.2 tau]: after the packet has formed its
/// flat top and before it reaches the chain ends.
inline TimeWindow default_growth_window(double tau) { return {0.05 * tau, 0.2 * tau}; }

inline GrowthReport classify_growth(const Trajectory& traj, double tau) {
  return classify_growth(traj.times, traj.norms, default_growth_window(tau));
}

inline double profile_l1(const Profile& a, const Profile& b) {
  if (a.size() != b.size()) throw ParameterError("profile_l1: size mismatch");
  return (a - b).cwiseAbs().sum();
}

/// Site reflection l -> 2N+1-l.
inline Profile mirrored(const Profile& prof) { return prof.reverse(); }

enum class MismatchScale {
  /// Divide by the largest Dirac norm among the compared samples.
  SpanPeak,
  /// Divide each lag by P(t_reflect - lag).
  PerLag,
};

/// max_{lag <= half_span} |profile(t+lag) - profile(t-lag)|_1, normalised.
inline double reflection_symmetry(const Trajectory& traj, double t_reflect, double half_span,
                                  MismatchScale scale = MismatchScale::SpanPeak) {
  const auto centre = traj.index_of(t_reflect);
  const double dt = traj.dt();
  if (!centre || dt <= 0.0) throw AnalysisError("reflection_symmetry: t_reflect outside trajectory");
  const auto lags = static_cast<std::size_t>(std::floor(half_span / dt + 1e-9));
  if (lags < 1 || *centre < lags || *centre + lags >= traj.size()) {
    throw AnalysisError("reflection_symmetry: span insufficient around t_reflect");
  }
  double peak = 0.0;
  for (std::size_t k = *centre - lags; k <= *centre + lags; ++k) peak = std::max(peak, traj.norms[k]);
  double worst = 0.0;
  for (std::size_t lag = 1; lag <= lags; ++lag) {
    const double dist = profile_l1(traj.profiles[*centre + lag], traj.profiles[*centre - lag]);
    const double denom = scale == MismatchScale::SpanPeak ? peak : traj.norms[*centre - lag];
    worst = std::max(worst, dist / denom);
  }
  return worst;
}

/// Distance between two snapshots of one trajectory, normalised by the peak
/// Dirac norm of the whole trajectory.
inline double snapshot_mismatch(const Trajectory& traj, const Profile& a, const Profile& b) {
  const double peak = *std::max_element(traj.norms.begin(), traj.norms.end());
  return profile_l1(a, b) / peak;
}

struct TranslationReport {
  TimeWindow window;
  double norm_drift = 0.0;      ///< max |P - P(window start)| / P(window start)
  double center_velocity = 0.0;  ///< sites per unit time
};

/// A packet is in contact with an end when its FWHM interval comes within
/// this fraction of 2N of site 1 or 2N. The smoothed edge turns around some
/// ten sites short of the end, so the margin cannot be a few sites.
inline constexpr double kBoundaryContactFraction = 0.05;

inline std::vector<bool> boundary_contact(const Trajectory& traj) {
  std::vector<bool> contact(traj.size());
  const auto last = static_cast<double>(traj.sites());
  const double margin = kBoundaryContactFraction * last;
  for (std::size_t k = 0; k < traj.size(); ++k) {
    const SiteInterval iv = fwhm_interval(traj.profiles[k]);
    contact[k] = iv.left <= 1.0 + margin || iv.right >= last - margin;
  }
  return contact;
}

/// Interval between the first and second boundary reflections of a single
/// packet, with the Dirac-norm drift and centre velocity measured on it.
inline TranslationReport translation_window(const Trajectory& traj) {
  if (traj.size() < 3) throw AnalysisError("translation_window: trajectory too short");
  const std::vector<bool> contact = boundary_contact(traj);
  std::size_t k = 0;
  while (k < contact.size() && !contact[k]) ++k;
  if (k == contact.size()) throw AnalysisError("translation_window: no reflection found in span");
  while (k < contact.size() && contact[k]) ++k;
  const std::size_t begin = k;
  while (k < contact.size() && !contact[k]) ++k;
  if (k == contact.size()) throw AnalysisError("translation_window: second reflection not in span");
  const std::size_t end = k - 1;
  if (end <= begin) throw AnalysisError("translation_window: reflections overlap");

  TranslationReport report;
  report.window = {traj.times[begin], traj.times[end]};
  const double ref = traj.norms[begin];
  std::vector<double> t;
  std::vector<double> centre;
  for (std::size_t i = begin; i <= end; ++i) {
    report.norm_drift = std::max(report.norm_drift, std::abs(traj.norms[i] - ref) / ref);
    t.push_back(traj.times[i]);
    centre.push_back(measure(traj.profiles[i]).center);
  }
  report.center_velocity = fit_line(t, centre).slope;
  return report;
}

struct InterferenceReport {
  TimeWindow overlap_window;
  double p_before = 0.0;
  double min_ratio = 0.0;
  double max_ratio = 0.0;
  /// Whichever of min_ratio / max_ratio lies farther from 1 (in log scale).
  double p_ratio_extremum = 0.0;
  /// max over non-overlapping samples of |P_pair - (P_1 + P_2)/2|, divided by
  /// the peak of (P_1 + P_2)/2.
  double separated_deviation = 0.0;
};

/// Compares the evolution of (psi_1 +- psi_2)/sqrt(2) with its constituents.
///
/// `first` and `second` are trajectories of psi_1 and psi_2 on the same time
/// grid. Packets overlap when their FWHM intervals intersect; the first such
/// stretch is the reported window.
inline InterferenceReport interference_report(const Trajectory& pair, const Trajectory& first,
                                              const Trajectory& second) {
  if (pair.size() != first.size() || pair.size() != second.size()) {
    throw ParameterError("interference_report: trajectories differ in length");
  }
  std::vector<bool> overlap(pair.size());
  for (std::size_t k = 0; k < pair.size(); ++k) {
    overlap[k] = fwhm_interval(first.profiles[k]).intersects(fwhm_interval(second.profiles[k]));
  }
  std::size_t begin = 0;
  while (begin < overlap.size() && !overlap[begin]) ++begin;
  if (begin == overlap.size()) throw AnalysisError("interference_report: packets never meet in span");
  if (begin == 0) throw AnalysisError("interference_report: packets overlap at t = 0");
  std::size_t end = begin;
  while (end + 1 < overlap.size() && overlap[end + 1]) ++end;

  InterferenceReport report;
  report.overlap_window = {pair.times[begin], pair.times[end]};
  report.p_before = pair.norms[begin - 1];
  const auto [lo, hi] =
      std::minmax_element(pair.norms.begin() + static_cast<std::ptrdiff_t>(begin),
                          pair.norms.begin() + static_cast<std::ptrdiff_t>(end) + 1);
  report.min_ratio = *lo / report.p_before;
  report.max_ratio = *hi / report.p_before;
  report.p_ratio_extremum = std::abs(std::log(report.min_ratio)) > std::abs(std::log(report.max_ratio))
                                ? report.min_ratio
                                : report.max_ratio;

  double peak = 0.0;
  for (std::size_t k = 0; k < pair.size(); ++k) {
    peak = std::max(peak, 0.5 * (first.norms[k] + second.norms[k]));
  }
  for (std::size_t k = 0; k < pair.size(); ++k) {
    if (overlap[k]) continue;
    const double expected = 0.5 * (first.norms[k] + second.norms[k]);
    report.separated_deviation =
        std::max(report.separated_deviation, std::abs(pair.norms[k] - expected) / peak);
  }
  return report;
}

}  // namespace eplasing
