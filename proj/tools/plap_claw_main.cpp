// plap-claw: batch runner for degenerate-viscosity conservation-law
// experiments. Subcommands: simulate, verify, oracle.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <thread>

#include <CLI11.hpp>

#include "plapclaw/experiment.hpp"
#include "plapclaw/properties.hpp"

namespace fs = std::filesystem;
using namespace plapclaw;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitBlowup = 2;
constexpr int kExitFailed = 3;

std::string fit_label(const FitRow& fr) {
  if (fr.gradient) return "grad L^" + format_number(fr.q) + "(u)";
  return "L^" + (std::isinf(fr.q) ? std::string("inf") : format_number(fr.q)) +
         "(phi)";
}

std::string run_output_dir(const ExperimentConfig& cfg, const std::string& out_flag,
                           const std::string& config_path, bool multi) {
  if (out_flag.empty()) return cfg.output_dir;
  if (!multi) return out_flag;
  return (fs::path(out_flag) / fs::path(config_path).stem()).string();
}

struct RunReport {
  std::string config_path;
  int exit_code = kExitOk;
  std::string error;
  std::optional<ExperimentConfig> cfg;
  ExperimentResult result;
};

RunReport run_one(const std::string& config_path, const std::string& out_flag,
                  bool multi) {
  RunReport report;
  report.config_path = config_path;
  try {
    report.cfg = load_config(config_path);
  } catch (const std::exception& e) {
    report.exit_code = kExitConfig;
    report.error = e.what();
    return report;
  }
  try {
    report.result = run_experiment(*report.cfg);
  } catch (const NumericalBlowup& e) {
    report.exit_code = kExitBlowup;
    report.error = std::string(e.what()) + " at t = " + format_number(e.t);
    return report;
  }
  write_outputs(*report.cfg, report.result,
                run_output_dir(*report.cfg, out_flag, config_path, multi));
  return report;
}

void print_fits(const RunReport& report, std::ostream& os) {
  for (const auto& fr : report.result.fits) {
    os << "  " << fit_label(fr) << ": exponent " << format_number(fr.fit.exponent)
       << " (R^2 " << format_number(fr.fit.r_squared) << ")";
    if (fr.has_reference)
      os << ", reference " << format_number(fr.fit.reference_exponent)
         << (fr.fit.pass ? " [pass]" : " [FAIL]");
    os << "\n";
  }
}

int cmd_simulate(const std::vector<std::string>& configs,
                 const std::string& out_flag) {
  const bool multi = configs.size() > 1;
  for (const auto& path : configs) {
    const RunReport report = run_one(path, out_flag, multi);
    if (report.exit_code != kExitOk) {
      std::cerr << "error: " << report.error << "\n";
      return report.exit_code;
    }
    std::cout << path << ": " << report.result.rows.size() << " snapshots, "
              << report.result.trajectory.steps.size() << " steps, "
              << format_number(report.result.wall_seconds) << " s\n";
    print_fits(report, std::cout);
  }
  return kExitOk;
}

int cmd_verify(const std::vector<std::string>& configs, const std::string& out_flag,
               int threads) {
  const bool multi = configs.size() > 1;
  std::vector<RunReport> reports(configs.size());
  {
    std::mutex next_mutex;
    size_t next = 0;
    auto worker = [&]() {
      for (;;) {
        size_t idx;
        {
          std::lock_guard<std::mutex> lock(next_mutex);
          if (next >= configs.size()) return;
          idx = next++;
        }
        reports[idx] = run_one(configs[idx], out_flag, multi);
      }
    };
    const int n_workers = std::max(1, std::min<int>(threads, configs.size()));
    std::vector<std::thread> pool;
    for (int i = 0; i < n_workers; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  int exit_code = kExitOk;
  for (const auto& report : reports) {
    if (report.exit_code != kExitOk) {
      std::cerr << report.config_path << ": error: " << report.error << "\n";
      exit_code = std::max(exit_code, report.exit_code);
      continue;
    }
    if (!report.cfg->rate_set) {
      std::cerr << report.config_path
                << ": error: diagnostics.theorem: verify needs a theorem selector\n";
      exit_code = std::max(exit_code, kExitConfig);
      continue;
    }
    const std::string dir =
        run_output_dir(*report.cfg, out_flag, report.config_path, multi);
    std::ofstream verdict(fs::path(dir) / "verdict.csv");
    verdict << "theorem,norm,q,reference_exponent,fitted_exponent,tolerance,pass\n";
    bool all_pass = true;
    std::cout << report.config_path << " ["
              << rate_set_name(*report.cfg->rate_set) << "]\n";
    for (const auto& fr : report.result.fits) {
      if (!fr.has_reference) continue;
      verdict << rate_set_name(*report.cfg->rate_set) << "," << fr.column << ","
              << (std::isinf(fr.q) ? "inf" : format_number(fr.q)) << ","
              << format_number(fr.fit.reference_exponent) << ","
              << format_number(fr.fit.exponent) << ","
              << format_number(fr.fit.tolerance) << ","
              << (fr.fit.pass ? "true" : "false") << "\n";
      std::cout << "  " << fit_label(fr) << ": fitted "
                << format_number(fr.fit.exponent) << " vs reference "
                << format_number(fr.fit.reference_exponent)
                << (fr.fit.pass ? " [pass]" : " [FAIL]") << "\n";
      all_pass = all_pass && fr.fit.pass;
    }
    if (!all_pass) exit_code = std::max(exit_code, kExitFailed);
  }
  return exit_code;
}

int cmd_oracle(const std::string& lemma, double p, double q) {
  std::vector<PropertyOutcome> outcomes;
  auto append = [&](std::vector<PropertyOutcome> more) {
    for (auto& o : more) outcomes.push_back(std::move(o));
  };

  const bool all = lemma.empty();
  if (all || lemma == "4.5") append(identity_fuzz_suite(10000, 987654321));
  if (all || lemma == "2.1") append(fan_approximant_suite(q));
  if (all || lemma == "2.2") append(smoothed_wave_suite(q));
  if (all || lemma == "4.2" || lemma == "interpolation")
    append(interpolation_fuzz_suite(1000, 13579, p));
  if (all || lemma == "7" || lemma == "barenblatt")
    append(barenblatt_suite(p));
  if (outcomes.empty()) {
    std::cerr << "error: unknown suite '" << lemma
              << "' (expected 2.1, 2.2, 4.2, 4.5 or barenblatt)\n";
    return kExitConfig;
  }

  bool all_pass = true;
  for (const auto& o : outcomes) {
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << o.name;
    if (!o.detail.empty()) std::cout << " -- " << o.detail;
    std::cout << "\n";
    all_pass = all_pass && o.pass;
  }
  std::cout << (all_pass ? "all properties hold\n" : "property violations found\n");
  return all_pass ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Degenerate-viscosity conservation law experiment runner"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  std::string out_flag;
  int threads = 1;
  app.add_option("--out", out_flag, "Output directory (overrides output.dir)");
  app.add_option("--threads", threads, "Worker threads for verify")
      ->check(CLI::PositiveNumber);

  std::vector<std::string> sim_configs;
  auto* sim = app.add_subcommand("simulate", "Run experiments and write outputs");
  sim->add_option("config", sim_configs, "Config file(s)")->required();

  std::vector<std::string> ver_configs;
  auto* ver = app.add_subcommand("verify", "Run and check fitted decay rates");
  ver->add_option("config", ver_configs, "Config file(s)")->required();

  std::string lemma;
  double oracle_p = 0.0, oracle_q = 0.0;
  auto* ora = app.add_subcommand("oracle", "Run the property suites");
  ora->add_option("--lemma", lemma, "Restrict to one suite (2.1, 2.2, 4.2, 4.5, barenblatt)");
  ora->add_option("--p", oracle_p, "Override the nonlinearity exponent");
  ora->add_option("--q", oracle_q, "Restrict rate checks to one norm exponent");

  CLI11_PARSE(app, argc, argv);

  try {
    if (sim->parsed()) return cmd_simulate(sim_configs, out_flag);
    if (ver->parsed()) return cmd_verify(ver_configs, out_flag, threads);
    return cmd_oracle(lemma, oracle_p, oracle_q);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
}
