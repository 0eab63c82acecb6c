#pragma once

#include <vector>

#include "uavland/dynamics.hpp"
#include "uavland/types.hpp"

namespace uavland {

enum class ProgramKind { Static, Constant, Cosine, Piecewise };

struct MotionSegment {
  double t_start = 0.0;
  Vec3 v = Vec3::Zero();
};

/// Velocity program of one ground vehicle, anchored at position p0 at time
/// t_start. Cosine programs follow v(t) = v_const + v_amp * cos(omega t);
/// piecewise programs hold each segment velocity until the next segment.
/// Positions are exact time integrals of the program, never accumulated.
struct UgvProgram {
  ProgramKind kind = ProgramKind::Static;
  Vec3 p0 = Vec3::Zero();
  double t_start = 0.0;
  Vec3 v_const = Vec3::Zero();
  Vec3 v_amp = Vec3::Zero();
  double omega = 0.0;
  std::vector<MotionSegment> segments;

  /// Upper bound on ||v(t)||; exact for static/constant/piecewise programs,
  /// ||v_const|| + ||v_amp|| for cosine ones.
  double speed_bound() const;
};

/// Pad state at absolute time t >= t_start.
UgvState ugv_state_at(const UgvProgram& prog, double t);

}  // namespace uavland
