#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "uavland/scenario.hpp"
#include "uavland/validation.hpp"

namespace uavland {

/// One run request. Runs are seed-free and deterministic by construction;
/// the flag exists only to record that contract.
struct RunManifest {
  std::string scenario_path;
  std::string out_dir = ".";
  std::optional<Fidelity> fidelity_override;
  bool metrics_only = false;
  bool deterministic = true;
};

/// Loads, validates and runs the scenario, then writes states.csv,
/// barriers.csv, inputs.csv and metrics.json into out_dir. Returns 0 on safe
/// completion, 1 on a barrier breach or QP infeasibility (the breach tick is
/// named), 2 on configuration or I/O errors.
int cmd_run(const RunManifest& manifest, std::ostream& out);

/// Runs the built-in property suites and prints one pass/fail line each.
/// Returns 0 when every check passes, 1 otherwise.
int cmd_validate(const ValidationOptions& opts, std::ostream& out);

struct SweepManifest {
  std::string scenario_path;
  std::string grid_spec;
  std::string out_dir = ".";
  bool full_export = false;  // also write per-cell CSV logs
};

/// Runs the parameter grid and writes summary.csv (plus per-cell outputs
/// under cell_XXX/ when full_export is set). Per-cell failures are recorded
/// in the summary; returns 0 unless the sweep itself cannot be set up.
int cmd_sweep(const SweepManifest& manifest, std::ostream& out);

}  // namespace uavland
