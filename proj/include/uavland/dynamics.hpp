#pragma once

#include "uavland/types.hpp"

namespace uavland {

struct UavParams {
  double mass = 1.0;                                        // kg
  Mat3 inertia = (Mat3() << 0.01, 0.0, 0.0,
                            0.0, 0.01, 0.0,
                            0.0, 0.0, 0.02).finished();     // kg m^2
  double bounding_radius = 0.25;                            // m, collision sphere

  /// Throws std::invalid_argument unless mass > 0, inertia is symmetric
  /// positive definite and bounding_radius > 0.
  void validate() const;
};

struct UavState {
  Vec3 p = Vec3::Zero();     // position, inertial frame [m]
  Vec3 v = Vec3::Zero();     // velocity, inertial frame [m/s]
  Mat3 R = Mat3::Identity(); // body-to-inertial attitude
  Vec3 w = Vec3::Zero();     // body rates [rad/s]
};

struct UgvState {
  Vec3 p = Vec3::Zero();  // landing pad position [m]
  Vec3 v = Vec3::Zero();  // landing pad velocity [m/s]
};

/// Explicit Euler step of the first-order kinematics pdot = u.
inline Vec3 step_kinematic(const Vec3& p, const Vec3& u, double dt) {
  return p + u * dt;
}

/// One RK4 step of the rigid-body model
///   pdd = (tau_p - m G) / m,   G = [0, 0, -g]
///   Rdot = R hat(w)
///   wdot = J^-1 (tau_q - w x J w)
/// with the attitude re-orthonormalized by polar projection after the step.
/// Throws std::runtime_error with a state dump if anything goes non-finite.
UavState step_full_dynamics(const UavState& s, const UavParams& params,
                            const Vec3& tau_p, const Vec3& tau_q, double dt);

}  // namespace uavland
