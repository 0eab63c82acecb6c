#pragma once

#include <string>
#include <utility>
#include <vector>

#include "uavland/simulator.hpp"

namespace uavland {

/// Parameter grid spec of the form "alpha=1,2,4;rho=10,20". Names are the
/// ones apply_param accepts. An empty spec yields an empty grid.
struct SweepGrid {
  std::vector<std::string> names;
  std::vector<std::vector<double>> values;  // one value list per name

  std::size_t cells() const;
};

SweepGrid parse_grid(const std::string& spec);

struct SweepCell {
  std::size_t index = 0;
  std::vector<std::pair<std::string, double>> params;
  SafetyMetrics metrics;
  std::string status;  // ok | breach | infeasible | error
  std::string detail;
};

/// Runs every cell of the Cartesian grid over the base scenario. Cells run
/// concurrently and independently; per-cell failures are recorded in the
/// cell status and do not stop the sweep. Results come back in grid order.
std::vector<SweepCell> run_sweep(const ScenarioConfig& base,
                                 const SweepGrid& grid);

/// One summary row per cell: index, the grid parameters, status, last
/// touchdown time, min barrier values, min pair distance, max deviation.
void write_sweep_summary(const std::vector<SweepCell>& cells,
                         const SweepGrid& grid, const std::string& path);

/// Breach rule shared by run and sweep: halted runs always breach; barrier
/// minima are held to 0 / -1e-6 in kinematic fidelity and to the -0.05
/// tracking budget in full dynamics. Returns an empty string when safe.
std::string breach_reason(const SafetyMetrics& metrics, Fidelity fidelity);

}  // namespace uavland
