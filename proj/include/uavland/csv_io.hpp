#pragma once

#include <string>
#include <vector>

#include "uavland/simulator.hpp"

namespace uavland {

/// Columns: time,uav_id,px,py,pz,vx,vy,vz. One row per tick per vehicle,
/// full %.17g precision so values round-trip exactly.
void write_states_csv(const SimLog& log, const std::string& path);

/// Columns: time,name,value with names h_l1.., h_s12.. in row order.
void write_barriers_csv(const SimLog& log, const std::string& path);

/// Columns: time,uav_id,unom_x,unom_y,unom_z,ustar_x,ustar_y,ustar_z.
void write_inputs_csv(const SimLog& log, const std::string& path);

/// Metrics plus run status as JSON. NaN serializes as null.
void write_metrics_json(const SafetyMetrics& metrics, bool safe,
                        const std::string& breach_reason,
                        const std::string& path);

struct StateRow {
  double t = 0.0;
  int uav = 0;  // 1-based as written
  Vec3 p = Vec3::Zero();
  Vec3 v = Vec3::Zero();
};

struct BarrierRow {
  double t = 0.0;
  std::string name;
  double value = 0.0;
};

std::vector<StateRow> read_states_csv(const std::string& path);
std::vector<BarrierRow> read_barriers_csv(const std::string& path);

}  // namespace uavland
