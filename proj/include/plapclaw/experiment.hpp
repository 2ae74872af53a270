#ifndef PLAPCLAW_EXPERIMENT_HPP
#define PLAPCLAW_EXPERIMENT_HPP

#include <string>
#include <vector>

#include "plapclaw/config.hpp"
#include "plapclaw/diagnostics.hpp"

namespace plapclaw {

/// One fitted norm column. `has_reference` is set when the configured rate
/// set provides a theoretical exponent for this norm; only those rows count
/// toward a verification verdict.
struct FitRow {
  std::string column;   // CSV column the fit was run on
  double q = 0.0;       // norm exponent (inf allowed); gradient rows use r+1
  bool gradient = false;
  DecayFit fit;
  bool has_reference = false;
};

struct ExperimentResult {
  Trajectory trajectory;
  std::vector<std::string> columns;        // CSV header, in order
  std::vector<std::vector<double>> rows;   // one row per snapshot
  std::vector<FitRow> fits;
  double wall_seconds = 0.0;
};

/// Run the configured problem and evaluate all per-snapshot norms and decay
/// fits. Deterministic: identical configs produce identical rows.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

/// Write manifest.json, norms.csv, fits.json and the optional field/energy/
/// plot files into out_dir (created if needed).
void write_outputs(const ExperimentConfig& cfg, const ExperimentResult& result,
                   const std::string& out_dir);

/// Render the norms table as CSV text (header plus one line per snapshot).
std::string norms_csv_text(const ExperimentResult& result);

}  // namespace plapclaw

#endif
