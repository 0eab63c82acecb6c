#include "uavland/cli_commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iomanip>
#include <ostream>

#include "uavland/csv_io.hpp"
#include "uavland/sweep.hpp"

namespace uavland {

namespace {

namespace fs = std::filesystem;

void write_run_outputs(const SimLog& log, const SafetyMetrics& metrics,
                       bool safe, const std::string& breach,
                       const std::string& dir, bool metrics_only) {
  fs::create_directories(dir);
  if (!metrics_only) {
    write_states_csv(log, dir + "/states.csv");
    write_barriers_csv(log, dir + "/barriers.csv");
    write_inputs_csv(log, dir + "/inputs.csv");
  }
  write_metrics_json(metrics, safe, breach, dir + "/metrics.json");
}

}  // namespace

int cmd_run(const RunManifest& manifest, std::ostream& out) {
  ScenarioConfig cfg;
  try {
    cfg = load_scenario(manifest.scenario_path);
    if (manifest.fidelity_override) {
      cfg.fidelity = *manifest.fidelity_override;
      cfg.validate();
    }
  } catch (const std::exception& e) {
    out << "error: " << e.what() << "\n";
    return 2;
  }

  SimLog log;
  SafetyMetrics metrics;
  std::string breach;
  try {
    log = run_scenario(cfg);
    metrics = safety_metrics(log);
    breach = breach_reason(metrics, cfg.fidelity);
    write_run_outputs(log, metrics, breach.empty(), breach, manifest.out_dir,
                      manifest.metrics_only);
  } catch (const std::exception& e) {
    out << "error: " << e.what() << "\n";
    return 2;
  }

  out << cfg.name << ": " << log.ticks.size() << " ticks, "
      << log.touchdowns.size() << "/" << cfg.n_uavs << " touchdowns";
  if (!std::isnan(metrics.min_scbf_overall)) {
    out << ", min pair barrier " << metrics.min_scbf_overall;
  }
  out << "\n";
  for (const auto& event : log.touchdowns) {
    out << "  uav" << (event.uav + 1) << " touched down at t = " << event.t
        << " s\n";
  }
  if (!breach.empty()) {
    out << "UNSAFE: " << breach;
    if (log.halted) {
      out << " (halted at t = " << log.halt_time << " s)";
    }
    out << "\n";
    return 1;
  }
  out << "safe completion\n";
  return 0;
}

int cmd_validate(const ValidationOptions& opts, std::ostream& out) {
  const auto results = run_validation(opts);
  std::size_t width = 0;
  for (const auto& r : results) {
    width = std::max(width, r.name.size());
  }
  bool all_pass = true;
  for (const auto& r : results) {
    out << (r.pass ? "[PASS] " : "[FAIL] ") << std::left
        << std::setw(static_cast<int>(width) + 2) << r.name << r.detail
        << "\n";
    all_pass = all_pass && r.pass;
  }
  out << (all_pass ? "all checks passed" : "some checks FAILED") << "\n";
  return all_pass ? 0 : 1;
}

int cmd_sweep(const SweepManifest& manifest, std::ostream& out) {
  ScenarioConfig base;
  SweepGrid grid;
  try {
    base = load_scenario(manifest.scenario_path);
    grid = parse_grid(manifest.grid_spec);
    fs::create_directories(manifest.out_dir);
  } catch (const std::exception& e) {
    out << "error: " << e.what() << "\n";
    return 2;
  }

  const auto cells = run_sweep(base, grid);
  write_sweep_summary(cells, grid, manifest.out_dir + "/summary.csv");

  if (manifest.full_export) {
    for (const auto& cell : cells) {
      if (cell.status == "error") {
        continue;
      }
      ScenarioConfig cfg = base;
      for (const auto& [name, value] : cell.params) {
        apply_param(cfg, name, value);
      }
      char cell_name[32];
      std::snprintf(cell_name, sizeof(cell_name), "cell_%03zu", cell.index);
      const SimLog log = run_scenario(cfg);
      const SafetyMetrics metrics = safety_metrics(log);
      const std::string breach = breach_reason(metrics, cfg.fidelity);
      write_run_outputs(log, metrics, breach.empty(), breach,
                        manifest.out_dir + "/" + cell_name, false);
    }
  }

  std::size_t ok = 0;
  for (const auto& cell : cells) {
    if (cell.status == "ok") {
      ++ok;
    }
  }
  out << "sweep: " << cells.size() << " cells, " << ok << " safe\n";
  return 0;
}

}  // namespace uavland
