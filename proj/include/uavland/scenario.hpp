#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "uavland/barriers.hpp"
#include "uavland/constraints.hpp"
#include "uavland/controllers.hpp"
#include "uavland/ugv_motion.hpp"

namespace uavland {

/// Configuration or file-format problem, with file/line context when the
/// scenario came from disk.
class ScenarioError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct UavSpec {
  UavParams params;
  LcbfParams lcbf;
  int carrier = 0;                 // UGV the vehicle rides before t = 0 (0-based)
  int target = 0;                  // UGV the vehicle lands on (0-based)
  std::optional<Vec3> p0_override; // start position, defaults to the carrier pad
};

enum class Fidelity { Kinematic, FullDynamics };

struct ScenarioConfig {
  std::string name = "scenario";
  int n_uavs = 0;
  std::vector<UavSpec> uavs;
  std::vector<UgvProgram> ugvs;   // one pad per vehicle
  GainSet gains;
  FilterConfig filter;

  double controller_on_time = 0.0;  // carry phase length; sim starts at -this
  double dt_outer = 0.01;           // filter / position loop period [s]
  double dt_inner = 0.001;          // attitude / integration period [s]
  double t_final = 20.0;
  Fidelity fidelity = Fidelity::Kinematic;
  double landing_tolerance = 0.02;  // touchdown radius [m]
  double psi_d = 0.0;

  // Recorded scenario constants without a computational role.
  double a_k = 1.0;
  double b_k = 3.0;
  double m_k = 0.5;

  double t_start() const { return -controller_on_time; }

  /// Checks every scenario invariant (positive rates, vehicle parameters,
  /// pad separations above the largest radius sum over the whole horizon,
  /// pad speed bounds below sigma, carrier/target ranges). Throws
  /// ScenarioError naming the violated invariant.
  void validate() const;
};

ScenarioConfig parse_scenario(std::istream& in, const std::string& name);

/// Loads and validates a scenario file. Parse errors carry file and line.
ScenarioConfig load_scenario(const std::string& path);

/// Applies a named sweep override: alpha/beta (all vehicles), rho_l, rho_s,
/// rho (both), sigma, kp, kv. Throws ScenarioError on unknown names.
void apply_param(ScenarioConfig& cfg, const std::string& name, double value);

}  // namespace uavland
