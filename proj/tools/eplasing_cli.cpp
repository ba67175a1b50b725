// Command-line front end: reads a config file, applies flag overrides and
// runs one experiment.
//
// Exit codes: 0 ok, 2 bad configuration, 3 numerical failure, 4 failed check.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "eplasing/experiments.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitCheck = 4;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw eplasing::ConfigError(0, "cannot read config file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exceptional-point lasing in the non-Hermitian SSH chain"};
  std::string config_path;
  bool check = false;
  app.add_option("--config", config_path, "key=value config file");
  app.add_flag("--check", check, "evaluate the experiment's pass/fail checks");

  // Flag name -> config key; values go through the same validation as the file.
  const std::vector<std::pair<std::string, std::string>> overrides_spec = {
      {"--experiment", "experiment"}, {"--cells", "cells"},
      {"--delta", "delta"},           {"--gamma", "gamma"},
      {"--boundary", "boundary"},     {"--q", "q"},
      {"--kappa0-over-pi", "kappa0_over_pi"},
      {"--kappa01-over-pi", "kappa01_over_pi"},
      {"--kappa02-over-pi", "kappa02_over_pi"},
      {"--tmax-over-tau", "tmax_over_tau"},
      {"--samples", "samples"},       {"--gamma-sweep", "gamma_sweep"},
      {"--out", "out"},
  };
  std::vector<std::optional<std::string>> values(overrides_spec.size());
  for (std::size_t i = 0; i < overrides_spec.size(); ++i) {
    app.add_option(overrides_spec[i].first, values[i], "overrides '" + overrides_spec[i].second + "'");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  eplasing::ExperimentConfig cfg;
  try {
    if (!config_path.empty()) cfg = eplasing::parse_config(read_file(config_path));
    for (std::size_t i = 0; i < overrides_spec.size(); ++i) {
      if (values[i]) eplasing::apply_setting(cfg, overrides_spec[i].second, *values[i]);
    }
    eplasing::validate(cfg);
  } catch (const eplasing::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  }

  eplasing::ExperimentResult result;
  try {
    result = eplasing::run_experiment(cfg);
  } catch (const eplasing::ParameterError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const eplasing::Error& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  }

  for (const auto& f : result.files) std::cout << "wrote " << f.string() << '\n';
  if (!check) return 0;
  for (const auto& c : result.checks) {
    std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << " value=" << c.value
              << " threshold=" << c.threshold << '\n';
  }
  return result.all_passed() ? 0 : kExitCheck;
}
