#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "eplasing/analytic.hpp"
#include "eplasing/dynamics.hpp"
#include "eplasing/lattice.hpp"
#include "eplasing/propagator.hpp"
#include "eplasing/spectra.hpp"
#include "eplasing/states.hpp"

namespace eplasing {

enum class ExperimentId { Fig2, Fig3, Fig4, Fig5, Fig6, Fig7, Spectrum, OracleCompare };

inline constexpr std::pair<std::string_view, ExperimentId> kExperimentNames[] = {
    {"fig2", ExperimentId::Fig2},         {"fig3", ExperimentId::Fig3},
    {"fig4", ExperimentId::Fig4},         {"fig5", ExperimentId::Fig5},
    {"fig6", ExperimentId::Fig6},         {"fig7", ExperimentId::Fig7},
    {"spectrum", ExperimentId::Spectrum}, {"oracle-compare", ExperimentId::OracleCompare},
};

inline std::string_view to_string(ExperimentId id) {
  for (const auto& [name, value] : kExperimentNames) {
    if (value == id) return name;
  }
  return "?";
}

struct ExperimentConfig {
  ExperimentId experiment = ExperimentId::Fig3;
  int cells = 250;
  double delta = 0.9;
  /// Unset means gamma = 2*delta.
  std::optional<double> gamma;
  Boundary boundary = Boundary::Open;
  double q = 0.02;
  double kappa0_over_pi = 0.5;
  double kappa01_over_pi = 1.0 / 6.0;
  double kappa02_over_pi = 5.0 / 6.0;
  double tmax_over_tau = 0.5;
  int samples = 2000;
  /// Empty means {2 delta - 0.1, 2 delta, 2 delta + 0.1}.
  std::vector<double> gamma_sweep;
  std::filesystem::path out = "out";

  double effective_gamma() const { return gamma.value_or(2.0 * delta); }
  LatticeParams lattice() const { return {cells, delta, effective_gamma(), boundary}; }
  /// Open chain at gamma_c: the basis all packet states are built from.
  LatticeParams basis() const { return LatticeParams::at_threshold(cells, delta); }
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

inline double parse_double(std::string_view text, int line, std::string_view key) {
  text = trim(text);
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || !std::isfinite(value)) {
    throw ConfigError(line, "cannot parse '" + std::string(text) + "' as a number for " +
                                std::string(key));
  }
  return value;
}

inline int parse_int(std::string_view text, int line, std::string_view key) {
  text = trim(text);
  int value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ConfigError(line, "cannot parse '" + std::string(text) + "' as an integer for " +
                                std::string(key));
  }
  return value;
}

/// "0.5", "1/6" or "5/6": a multiple of pi given as a decimal or a fraction.
inline double parse_ratio(std::string_view text, int line, std::string_view key) {
  text = trim(text);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return parse_double(text, line, key);
  const double num = parse_double(text.substr(0, slash), line, key);
  const double den = parse_double(text.substr(slash + 1), line, key);
  if (den == 0.0) throw ConfigError(line, std::string(key) + ": zero denominator");
  return num / den;
}

inline void require(bool ok, int line, const std::string& message) {
  if (!ok) throw ConfigError(line, message);
}

}  // namespace detail

/// Applies one key=value setting; shared by config files and CLI flags.
inline void apply_setting(ExperimentConfig& cfg, std::string_view key, std::string_view value,
                          int line = 0) {
  using namespace detail;
  key = trim(key);
  value = trim(value);
  if (key == "experiment") {
    for (const auto& [name, id] : kExperimentNames) {
      if (value == name) {
        cfg.experiment = id;
        return;
      }
    }
    throw ConfigError(line, "unknown experiment '" + std::string(value) + "'");
  } else if (key == "cells") {
    cfg.cells = parse_int(value, line, key);
    require(cfg.cells >= 2, line, "cells must be >= 2");
  } else if (key == "delta") {
    cfg.delta = parse_double(value, line, key);
    require(cfg.delta > 0.0 && cfg.delta < 1.0, line, "delta must lie in (0, 1)");
  } else if (key == "gamma") {
    cfg.gamma = parse_double(value, line, key);
    require(*cfg.gamma >= 0.0, line, "gamma must be >= 0");
  } else if (key == "boundary") {
    if (value == "open") {
      cfg.boundary = Boundary::Open;
    } else if (value == "periodic") {
      cfg.boundary = Boundary::Periodic;
    } else {
      throw ConfigError(line, "boundary must be 'open' or 'periodic'");
    }
  } else if (key == "q") {
    cfg.q = parse_double(value, line, key);
    require(cfg.q >= 0.0, line, "q must be >= 0");
  } else if (key == "kappa0_over_pi" || key == "kappa01_over_pi" || key == "kappa02_over_pi") {
    const double r = parse_ratio(value, line, key);
    require(r > 0.0 && r < 1.0, line, std::string(key) + " must lie in (0, 1)");
    (key == "kappa0_over_pi" ? cfg.kappa0_over_pi
     : key == "kappa01_over_pi" ? cfg.kappa01_over_pi
                                : cfg.kappa02_over_pi) = r;
  } else if (key == "tmax_over_tau") {
    cfg.tmax_over_tau = parse_double(value, line, key);
    require(cfg.tmax_over_tau > 0.0, line, "tmax_over_tau must be > 0");
  } else if (key == "samples") {
    cfg.samples = parse_int(value, line, key);
    require(cfg.samples >= 2, line, "samples must be >= 2");
  } else if (key == "gamma_sweep") {
    cfg.gamma_sweep.clear();
    std::string_view rest = value;
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      const double g = parse_double(rest.substr(0, comma), line, key);
      require(g >= 0.0, line, "gamma_sweep entries must be >= 0");
      cfg.gamma_sweep.push_back(g);
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
  } else if (key == "out") {
    require(!value.empty(), line, "out must not be empty");
    cfg.out = std::string(value);
  } else {
    throw ConfigError(line, "unknown key '" + std::string(key) + "'");
  }
}

/// Cross-field checks that no single key can enforce.
inline void validate(const ExperimentConfig& cfg) {
  if (cfg.boundary == Boundary::Periodic && cfg.cells % 2 != 0) {
    throw ConfigError(0, "periodic boundary requires an even number of cells");
  }
}

/// Parses `key=value` lines; '#' starts a comment, blank lines are skipped.
inline ExperimentConfig parse_config(std::string_view text) {
  ExperimentConfig cfg;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ConfigError(line_no, "expected key=value");
    apply_setting(cfg, line.substr(0, eq), line.substr(eq + 1), line_no);
  }
  validate(cfg);
  return cfg;
}

// ---------------------------------------------------------------------------
// Output

/// Shortest round-trip decimal form; independent of the C++ locale.
inline std::string format_number(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return ec == std::errc() ? std::string(buf, ptr) : std::string("nan");
}

class CsvWriter {
 public:
  CsvWriter(const std::filesystem::path& path, std::initializer_list<std::string_view> header)
      : path_(path), out_(path, std::ios::binary) {
    if (!out_) throw Error("cannot open " + path.string() + " for writing");
    write_fields(header);
  }

  void row(std::initializer_list<std::string> fields) { write_fields(fields); }

  const std::filesystem::path& path() const noexcept { return path_; }

 private:
  template <class Range>
  void write_fields(const Range& fields) {
    bool first = true;
    for (const auto& f : fields) {
      if (!first) out_ << ',';
      out_ << f;
      first = false;
    }
    out_ << '\n';
  }

  std::filesystem::path path_;
  std::ofstream out_;
};

struct CheckResult {
  std::string name;
  double value;
  double threshold;
  bool passed;
};

struct ExperimentResult {
  std::vector<std::filesystem::path> files;
  std::vector<CheckResult> checks;

  bool all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
  }
};

namespace detail {

struct Run {
  LatticeParams params;
  double tau;
  double dt;
  int steps;
};

inline Run make_run(const ExperimentConfig& cfg, double gamma, double tmax_over_tau) {
  const LatticeParams params{cfg.cells, cfg.delta, gamma, cfg.boundary};
  const double tau = revival_period(params);
  const int steps = cfg.samples - 1;
  return {params, tau, tmax_over_tau * tau / steps, steps};
}

inline void write_profile(ExperimentResult& result, const std::filesystem::path& path,
                          const Profile& prof) {
  CsvWriter csv(path, {"site", "probability"});
  for (Eigen::Index l = 0; l < prof.size(); ++l) {
    csv.row({std::to_string(l + 1), format_number(prof(l))});
  }
  result.files.push_back(path);
}

inline void write_norms(ExperimentResult& result, const std::filesystem::path& path,
                        const Trajectory& traj, const std::vector<double>* closed = nullptr) {
  CsvWriter csv(path, {"t", "P_numeric", "P_closed_form"});
  for (std::size_t k = 0; k < traj.size(); ++k) {
    csv.row({format_number(traj.times[k]), format_number(traj.norms[k]),
             closed ? format_number((*closed)[k]) : std::string()});
  }
  result.files.push_back(path);
}

/// Sample indices at t = f*tau for f = 0, 1/8, 2/8, ... inside the span.
inline std::vector<std::size_t> snapshot_indices(const Trajectory& traj, double tau) {
  std::vector<std::size_t> out;
  for (int m = 0;; ++m) {
    const auto idx = traj.index_of(m * tau / 8.0);
    if (!idx) break;
    if (out.empty() || out.back() != *idx) out.push_back(*idx);
  }
  return out;
}

inline void add_check(ExperimentResult& r, std::string name, double value, double threshold,
                      bool passed) {
  r.checks.push_back({std::move(name), value, threshold, passed});
}

inline bool is_half_pi(double kappa0_over_pi) { return std::abs(kappa0_over_pi - 0.5) < 1e-12; }

inline void write_summary(ExperimentResult& result, const std::filesystem::path& path,
                          const std::vector<std::pair<std::string, double>>& entries) {
  CsvWriter csv(path, {"key", "value"});
  for (const auto& [k, v] : entries) csv.row({k, format_number(v)});
  result.files.push_back(path);
}

inline void run_fig2(const ExperimentConfig& cfg, ExperimentResult& result) {
  const LatticeParams basis = cfg.basis();
  const double sites = 2.0 * cfg.cells;
  CsvWriter geometry(cfg.out / "geometry.csv", {"kappa0_over_pi", "center", "width", "dirac_norm"});
  std::vector<Profile> shapes;
  double worst_center = 0.0;
  for (int m = 1; m <= 7; ++m) {
    const PacketSpec spec = make_packet(m * std::numbers::pi / 8.0, cfg.q, cfg.cells);
    const Profile prof = build_initial_state(spec, basis).cwiseAbs2();
    const Measurement meas = measure(prof);
    geometry.row({format_number(m / 8.0), format_number(meas.center), format_number(meas.width),
                  format_number(meas.dirac_norm)});
    write_profile(result, cfg.out / ("profile_kappa" + std::to_string(m) + "_8.csv"), prof);
    worst_center = std::max(worst_center, std::abs(meas.center - sites * m / 8.0));
    shapes.push_back(prof / prof.sum());
  }
  result.files.push_back(geometry.path());
  add_check(result, "fig2.center_offset_sites", worst_center, 5.0, worst_center <= 5.0);
  // Neighbouring packets differ by a translation of 2N/8 sites.
  const auto shift = static_cast<Eigen::Index>(std::llround(sites / 8.0));
  double worst_shape = 0.0;
  for (std::size_t m = 0; m + 1 < shapes.size(); ++m) {
    const Eigen::Index n = shapes[m].size();
    const double dist =
        (shapes[m + 1].segment(shift, n - shift) - shapes[m].head(n - shift)).cwiseAbs().sum() +
        shapes[m + 1].head(shift).cwiseAbs().sum() + shapes[m].tail(shift).cwiseAbs().sum();
    worst_shape = std::max(worst_shape, dist);
  }
  add_check(result, "fig2.adjacent_shape_l1", worst_shape, 0.05, worst_shape < 0.05);
}

inline double oracle_mismatch(const Trajectory& traj, std::size_t k, const PacketSpec& spec,
                              const LatticeParams& basis) {
  const Profile closed = evolved_state_closed_form(traj.times[k], spec, basis).cwiseAbs2();
  return profile_l1(closed, traj.profiles[k]) / traj.norms[k];
}

inline void run_single_packet(const ExperimentConfig& cfg, ExperimentResult& result) {
  const Run run = make_run(cfg, cfg.effective_gamma(), cfg.tmax_over_tau);
  const LatticeParams basis = cfg.basis();
  const PacketSpec spec = make_packet(cfg.kappa0_over_pi * std::numbers::pi, cfg.q, cfg.cells);
  const Trajectory traj =
      evolve(build_initial_state(spec, basis), build_hamiltonian(run.params), run.dt, run.steps);
  const bool at_threshold = std::abs(run.params.gamma() - run.params.gamma_c()) < 1e-12 &&
                            cfg.boundary == Boundary::Open;

  std::vector<double> closed;
  if (at_threshold && is_half_pi(cfg.kappa0_over_pi)) {
    for (double t : traj.times) closed.push_back(dirac_norm_closed_form(t, spec, basis));
  }
  write_norms(result, cfg.out / "norms.csv", traj, closed.empty() ? nullptr : &closed);
  for (std::size_t idx : snapshot_indices(traj, run.tau)) {
    write_profile(result, cfg.out / ("profile_t" + std::to_string(idx) + ".csv"),
                  traj.profiles[idx]);
    if (at_threshold && cfg.experiment != ExperimentId::Fig6) {
      write_profile(result, cfg.out / ("analytic_profile_t" + std::to_string(idx) + ".csv"),
                    evolved_state_closed_form(traj.times[idx], spec, basis).cwiseAbs2());
    }
  }

  switch (cfg.experiment) {
    case ExperimentId::Fig3:
    case ExperimentId::OracleCompare: {
      if (!at_threshold) break;
      if (cfg.experiment == ExperimentId::OracleCompare) {
        CsvWriter csv(cfg.out / "oracle_compare.csv", {"t", "P_numeric", "l1_relative"});
        for (std::size_t k = 0; k < traj.size(); ++k) {
          csv.row({format_number(traj.times[k]), format_number(traj.norms[k]),
                   format_number(oracle_mismatch(traj, k, spec, basis))});
        }
        result.files.push_back(csv.path());
      }
      for (int eighth : {0, 1, 2}) {
        if (const auto idx = traj.index_of(eighth * run.tau / 8.0)) {
          const double m = oracle_mismatch(traj, *idx, spec, basis);
          add_check(result, "oracle_l1_at_" + std::to_string(eighth) + "tau_over_8", m, 0.10,
                    m < 0.10);
        }
      }
      break;
    }
    case ExperimentId::Fig4: {
      if (closed.empty()) break;
      const double peak = *std::max_element(closed.begin(), closed.end());
      double sq = 0.0;
      std::size_t count = 0;
      for (std::size_t k = 0; k < traj.size(); ++k) {
        sq += (traj.norms[k] - closed[k]) * (traj.norms[k] - closed[k]);
        ++count;
      }
      const double rms = std::sqrt(sq / count) / peak;
      // First interior minimum of the numeric norm: the measured period of P.
      double measured = std::nan("");
      const double top = *std::max_element(traj.norms.begin(), traj.norms.end());
      for (std::size_t k = 1; k + 1 < traj.size(); ++k) {
        if (traj.norms[k] <= traj.norms[k - 1] && traj.norms[k] <= traj.norms[k + 1] &&
            traj.norms[k] < 0.1 * top) {
          measured = traj.times[k];
          break;
        }
      }
      write_summary(result, cfg.out / "summary.csv",
                    {{"tau", run.tau},
                     {"formula_period_of_P", run.tau / 2.0},
                     {"measured_period_of_P", measured},
                     {"rms_over_peak", rms}});
      add_check(result, "fig4.rms_over_peak", rms, 0.15, rms < 0.15);
      break;
    }
    case ExperimentId::Fig6: {
      const TranslationReport tr = translation_window(traj);
      CsvWriter csv(cfg.out / "translation.csv",
                    {"window_begin", "window_end", "norm_drift", "center_velocity"});
      csv.row({format_number(tr.window.begin), format_number(tr.window.end),
               format_number(tr.norm_drift), format_number(tr.center_velocity)});
      result.files.push_back(csv.path());
      add_check(result, "fig6.norm_drift", tr.norm_drift, 0.05, tr.norm_drift < 0.05);
      break;
    }
    default:
      break;
  }
}

inline void run_fig5(const ExperimentConfig& cfg, ExperimentResult& result) {
  std::vector<double> sweep = cfg.gamma_sweep;
  const double gc = 2.0 * cfg.delta;
  if (sweep.empty()) sweep = {gc - 0.1, gc, gc + 0.1};
  const LatticeParams basis = cfg.basis();
  const PacketSpec spec = make_packet(cfg.kappa0_over_pi * std::numbers::pi, cfg.q, cfg.cells);
  const StateVector psi0 = build_initial_state(spec, basis);
  // Growth above threshold overflows doubles well before tau/2.
  const double span = std::min(cfg.tmax_over_tau, 0.25);

  CsvWriter csv(cfg.out / "classification.csv", {"gamma", "label", "r_squared", "slope"});
  for (std::size_t i = 0; i < sweep.size(); ++i) {
    const Run run = make_run(cfg, sweep[i], span);
    const Trajectory traj = evolve(psi0, build_hamiltonian(run.params), run.dt, run.steps);
    const GrowthReport rep = classify_growth(traj, run.tau);
    const LineFit& fit = rep.label == GrowthLabel::Exponential ? rep.exponential : rep.linear;
    csv.row({format_number(sweep[i]), to_string(rep.label), format_number(rep.r_squared),
             format_number(fit.slope)});
    write_norms(result, cfg.out / ("norms_gamma" + std::to_string(i) + ".csv"), traj);
    const GrowthLabel expected = std::abs(sweep[i] - gc) < 1e-12 ? GrowthLabel::Linear
                                 : sweep[i] < gc                 ? GrowthLabel::Oscillatory
                                                                 : GrowthLabel::Exponential;
    add_check(result, "fig5.label_gamma_" + format_number(sweep[i]),
              static_cast<double>(rep.label), static_cast<double>(expected),
              rep.label == expected);
  }
  result.files.push_back(csv.path());
}

inline void run_fig7(const ExperimentConfig& cfg, ExperimentResult& result) {
  const Run run = make_run(cfg, cfg.effective_gamma(), cfg.tmax_over_tau);
  const LatticeParams basis = cfg.basis();
  const double k1 = cfg.kappa01_over_pi * std::numbers::pi;
  const double k2 = cfg.kappa02_over_pi * std::numbers::pi;
  const ComplexMatrix step = propagator(build_hamiltonian(run.params), run.dt);

  PacketSpec first = make_packet(k1, cfg.q, cfg.cells);
  PacketSpec second{k2, cfg.q, first.lambda};
  const Trajectory t1 = evolve_with(build_initial_state(first, basis), step, run.dt, run.steps);
  const Trajectory t2 = evolve_with(build_initial_state(second, basis), step, run.dt, run.steps);

  CsvWriter csv(cfg.out / "interference.csv",
                {"sign", "overlap_begin", "overlap_end", "p_ratio_extremum", "separated_deviation"});
  for (int sign : {1, -1}) {
    const PacketPairSpec pair = make_pair(k1, k2, cfg.q, sign, cfg.cells);
    const Trajectory traj = evolve_with(build_pair_state(pair, basis), step, run.dt, run.steps);
    const std::string tag = sign > 0 ? "plus" : "minus";
    write_norms(result, cfg.out / ("norms_" + tag + ".csv"), traj);
    const InterferenceReport rep = interference_report(traj, t1, t2);
    csv.row({sign > 0 ? "+" : "-", format_number(rep.overlap_window.begin),
             format_number(rep.overlap_window.end), format_number(rep.p_ratio_extremum),
             format_number(rep.separated_deviation)});
    if (sign > 0) {
      const double off = std::abs(rep.p_ratio_extremum - 2.0) / 2.0;
      add_check(result, "fig7.plus_ratio_rel_error", off, 0.20, off <= 0.20);
    } else {
      add_check(result, "fig7.minus_ratio", rep.p_ratio_extremum, 0.25,
                rep.p_ratio_extremum < 0.25);
    }
    add_check(result, "fig7." + tag + "_separated_deviation", rep.separated_deviation, 0.05,
              rep.separated_deviation < 0.05);
  }
  result.files.push_back(csv.path());
}

inline void run_spectrum(const ExperimentConfig& cfg, ExperimentResult& result) {
  const LatticeParams params = cfg.lattice();
  const ComplexMatrix h = build_hamiltonian(params);
  const std::vector<Complex> spectrum = full_spectrum(h);
  CsvWriter csv(cfg.out / "eigenvalues.csv", {"re", "im"});
  for (const auto& e : spectrum) csv.row({format_number(e.real()), format_number(e.imag())});
  result.files.push_back(csv.path());

  std::vector<std::pair<std::string, double>> summary{{"esm_spacing", esm_spacing(params)},
                                                      {"norm1_H", norm1(h)}};
  std::vector<double> magnitudes;
  for (const auto& e : spectrum) magnitudes.push_back(std::abs(e));
  std::sort(magnitudes.begin(), magnitudes.end());
  summary.emplace_back("smallest_abs_E_1", magnitudes[0]);
  summary.emplace_back("smallest_abs_E_2", magnitudes[1]);

  const bool at_threshold = std::abs(params.gamma() - params.gamma_c()) < 1e-12;
  if (at_threshold && cfg.boundary == Boundary::Open) {
    const int n_max = std::min(5, cfg.cells);
    const SpectrumReport rep = verify_equal_spacing(spectrum, n_max, params);
    double worst = 0.0;
    for (std::size_t n = 0; n < rep.spacing_deviations.size(); ++n) {
      summary.emplace_back("spacing_deviation_n" + std::to_string(n + 1), rep.spacing_deviations[n]);
      worst = std::max(worst, rep.spacing_deviations[n]);
    }
    summary.emplace_back("max_imag_low_levels", rep.max_imag);
    add_check(result, "spectrum.spacing_deviation", worst, 0.10, worst < 0.10);
    const double imag_bound = 1e-6 * norm1(h);
    add_check(result, "spectrum.max_imag", rep.max_imag, imag_bound, rep.max_imag < imag_bound);
  } else if (at_threshold) {
    add_check(result, "spectrum.coalescing_pair", magnitudes[1], 1e-6, magnitudes[1] < 1e-6);
  }
  write_summary(result, cfg.out / "summary.csv", summary);
}

}  // namespace detail

/// Runs one experiment and writes its CSV files into cfg.out.
inline ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  validate(cfg);
  std::filesystem::create_directories(cfg.out);
  ExperimentResult result;
  switch (cfg.experiment) {
    case ExperimentId::Fig2: detail::run_fig2(cfg, result); break;
    case ExperimentId::Fig3:
    case ExperimentId::Fig4:
    case ExperimentId::Fig6:
    case ExperimentId::OracleCompare: detail::run_single_packet(cfg, result); break;
    case ExperimentId::Fig5: detail::run_fig5(cfg, result); break;
    case ExperimentId::Fig7: detail::run_fig7(cfg, result); break;
    case ExperimentId::Spectrum: detail::run_spectrum(cfg, result); break;
  }
  return result;
}

}  // namespace eplasing
