#pragma once

#include <string>
#include <vector>

#include "uavland/scenario.hpp"
#include "uavland/types.hpp"

namespace uavland {

struct TickRecord {
  double t = 0.0;
  std::vector<UavState> uavs;
  std::vector<UgvState> targets;        // landing pad of each vehicle
  VecX u_nom;                           // 3N, zero before the controller is on
  VecX u_star;                          // 3N
  std::vector<double> h;                // all barrier values in row order
  VecX margins;                         // A u_star + b, zero before t = 0
  std::vector<std::uint8_t> active;     // |margin| <= activity threshold
  std::vector<std::uint8_t> landed;
};

struct TouchdownEvent {
  double t = 0.0;
  int uav = 0;  // 0-based
};

struct SimLog {
  int n_uavs = 0;
  double dt = 0.0;
  std::vector<std::string> barrier_names;  // h_l1.., then h_s12.. in row order
  std::vector<TickRecord> ticks;
  std::vector<TouchdownEvent> touchdowns;
  bool halted = false;
  std::string halt_reason;
  double halt_time = 0.0;

  int pairs() const { return n_uavs * (n_uavs - 1) / 2; }
};

/// Runs one scenario end to end on a uniform dt_outer grid from -carry time
/// to t_final: carry phase pinned to the carrier pads, then per tick the
/// nominal controller, the safety filter and the state update at the chosen
/// fidelity, with touchdown detection and full logging. QP infeasibility or
/// a non-finite state halts the run with the tick recorded.
SimLog run_scenario(const ScenarioConfig& cfg);

struct SafetyMetrics {
  // Per vehicle; NaN when the barrier never crossed zero / never landed.
  std::vector<double> min_lcbf_after_crossing;
  std::vector<double> touchdown_time;
  // Per pair in row order.
  std::vector<double> min_scbf;
  double min_scbf_overall = 0.0;
  double min_pair_distance = 0.0;
  double max_filter_deviation = 0.0;  // max ||u* - u'|| over ticks
  bool all_landed = false;
  bool halted = false;
  std::string halt_reason;
};

/// Post-hoc summary of one run.
SafetyMetrics safety_metrics(const SimLog& log);

}  // namespace uavland
