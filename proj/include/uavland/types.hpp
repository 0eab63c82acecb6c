#pragma once

#include <Eigen/Dense>

namespace uavland {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using VecX = Eigen::VectorXd;
using MatX = Eigen::MatrixXd;

inline constexpr double kGravity = 9.81;  // m/s^2

/// Gravity vector G = [0, 0, -g] of the translational model m*pdd + m*G = tau_p.
inline Vec3 gravity_vector() { return Vec3(0.0, 0.0, -kGravity); }

inline Vec3 block3(const VecX& v, int i) { return v.segment<3>(3 * i); }
inline void set_block3(VecX& v, int i, const Vec3& x) { v.segment<3>(3 * i) = x; }

}  // namespace uavland
