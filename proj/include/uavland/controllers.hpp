#pragma once

#include <vector>

#include "uavland/dynamics.hpp"
#include "uavland/types.hpp"

namespace uavland {

/// Scalar gains applied as multiples of the identity: Kp, Kv on the stacked
/// position loop, K1, K2 on each attitude loop.
struct GainSet {
  double kp = 2.0;
  double kv = 2.0;
  double k1 = 0.5;
  double k2 = 0.5;
};

struct AttitudeSetpoint {
  Mat3 R_d = Mat3::Identity();
  Vec3 w_d = Vec3::Zero();   // desired body rates [rad/s]
  Vec3 dw_d = Vec3::Zero();  // desired body accelerations [rad/s^2]
  double psi_d = 0.0;        // desired yaw [rad]
};

/// Pseudo-velocity input u' = Kp (p_d - p) + pdot_d on the stacked 3N vector.
VecX nominal_position_control(const VecX& p, const VecX& p_d, const VecX& v_d,
                              double kp);

/// Position control forces tau_p = Kv (u* - v) + M G, stacked; masses has one
/// entry per vehicle.
VecX velocity_tracking_control(const VecX& u_star, const VecX& v, double kv,
                               const std::vector<double>& masses);

/// Body-frame force F = R^T tau_p; the thrust scalar is F.z().
Vec3 body_force_map(const Vec3& tau_p, const Mat3& R);

enum class AttitudeStatus { Ok, DegenerateThrust, GimbalDegenerate };

struct DesiredAttitude {
  AttitudeStatus status = AttitudeStatus::Ok;
  Mat3 R = Mat3::Identity();

  bool ok() const { return status == AttitudeStatus::Ok; }
};

/// Desired body frame from the commanded force direction and yaw:
///   Z_B = tau_p / ||tau_p||, Y_A = [-sin psi_d, cos psi_d, 0],
///   X_B = (Y_A x Z_B) / ||.||, Y_B = Z_B x X_B, R_d = [X_B Y_B Z_B].
/// DegenerateThrust when ||tau_p|| <= f_min, GimbalDegenerate when Y_A is
/// within 1e-6 of parallel to Z_B; callers hold the previous setpoint then.
DesiredAttitude desired_attitude(const Vec3& tau_p, double psi_d,
                                 double f_min = 1e-6);

/// Geometric attitude tracking torque
///   tau_q = K1 e_q + K2 de_q - J (R^T R_d dw_d - hat(w) R^T R_d w_d)
///           - w x J w
/// with e_q = vee(R^T R_d - R_d^T R) / 2 and de_q = R^T R_d w_d - w.
Vec3 attitude_control(const UavState& s, const AttitudeSetpoint& sp,
                      const UavParams& params, double k1, double k2);

}  // namespace uavland
