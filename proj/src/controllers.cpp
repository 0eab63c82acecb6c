#include "uavland/controllers.hpp"

#include <cmath>
#include <stdexcept>

#include "uavland/so3.hpp"

namespace uavland {

VecX nominal_position_control(const VecX& p, const VecX& p_d, const VecX& v_d,
                              double kp) {
  if (p.size() != p_d.size() || p.size() != v_d.size() || p.size() % 3 != 0) {
    throw std::invalid_argument("nominal_position_control: size mismatch");
  }
  return kp * (p_d - p) + v_d;
}

VecX velocity_tracking_control(const VecX& u_star, const VecX& v, double kv,
                               const std::vector<double>& masses) {
  const int n = static_cast<int>(masses.size());
  if (u_star.size() != 3 * n || v.size() != 3 * n) {
    throw std::invalid_argument("velocity_tracking_control: size mismatch");
  }
  VecX tau = kv * (u_star - v);
  for (int i = 0; i < n; ++i) {
    tau.segment<3>(3 * i) += masses[i] * gravity_vector();
  }
  return tau;
}

Vec3 body_force_map(const Vec3& tau_p, const Mat3& R) {
  return R.transpose() * tau_p;
}

DesiredAttitude desired_attitude(const Vec3& tau_p, double psi_d,
                                 double f_min) {
  DesiredAttitude out;
  const double norm = tau_p.norm();
  if (norm <= f_min) {
    out.status = AttitudeStatus::DegenerateThrust;
    return out;
  }
  const Vec3 z_b = tau_p / norm;
  const Vec3 y_a(-std::sin(psi_d), std::cos(psi_d), 0.0);
  const Vec3 cross = y_a.cross(z_b);
  if (cross.norm() < 1e-6) {
    out.status = AttitudeStatus::GimbalDegenerate;
    return out;
  }
  const Vec3 x_b = cross.normalized();
  const Vec3 y_b = z_b.cross(x_b);
  out.R.col(0) = x_b;
  out.R.col(1) = y_b;
  out.R.col(2) = z_b;
  return out;
}

Vec3 attitude_control(const UavState& s, const AttitudeSetpoint& sp,
                      const UavParams& params, double k1, double k2) {
  const Mat3 rel = s.R.transpose() * sp.R_d;
  const Mat3 err = rel - rel.transpose();
  const Vec3 e_q = 0.5 * Vec3(err(2, 1), err(0, 2), err(1, 0));
  const Vec3 de_q = rel * sp.w_d - s.w;
  const Vec3 feedforward =
      params.inertia * (rel * sp.dw_d - hat(s.w) * rel * sp.w_d);
  return k1 * e_q + k2 * de_q - feedforward - s.w.cross(params.inertia * s.w);
}

}  // namespace uavland
