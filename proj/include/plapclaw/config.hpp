#ifndef PLAPCLAW_CONFIG_HPP
#define PLAPCLAW_CONFIG_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "plapclaw/diagnostics.hpp"
#include "plapclaw/rates.hpp"
#include "plapclaw/solver.hpp"

namespace plapclaw {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Shortest round-trip decimal formatting; used everywhere numbers are
/// persisted so that identical configs produce byte-identical output.
std::string format_number(double v);
double parse_number(const std::string& key, const std::string& text);

/// A fully resolved experiment description. Built from a strict key = value
/// config file (unknown keys are fatal) or from a previously written run
/// manifest; all defaults are materialized so the resolved map round-trips.
struct ExperimentConfig {
  Problem problem;

  std::vector<double> q_list;               // deviation norm exponents (inf allowed)
  std::vector<double> gradient_exponents;   // r+1 values, default {p+1}
  double alpha = 0.0;
  double energy_q = 2.0;
  AsymptoticState deviation_state = AsymptoticState::SmoothedUr;
  double fit_window_lo = 0.0;
  double fit_window_hi = 0.0;
  double fit_tolerance = 0.15;
  std::optional<RateSet> rate_set;

  std::string output_dir = "out";
  bool write_fields = false;
  bool write_energy = false;
  bool write_plot_data = true;

  std::map<std::string, std::string> resolved;  // canonical key -> value
};

/// Parse a config file (key = value lines, '#' comments). A file whose first
/// non-space byte is '{' is read as a run manifest and its embedded resolved
/// config is used instead.
ExperimentConfig load_config(const std::string& path);

/// Parse config text directly (same grammar as the file form).
ExperimentConfig parse_config_text(const std::string& text);

/// Build a config from a key -> value map (the manifest round-trip path).
ExperimentConfig config_from_map(const std::map<std::string, std::string>& kv);

}  // namespace plapclaw

#endif
