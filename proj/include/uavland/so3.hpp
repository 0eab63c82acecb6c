#pragma once

#include <cmath>
#include <stdexcept>

#include "uavland/types.hpp"

namespace uavland {

/// Skew-symmetric matrix of v, so that hat(v) * u == v x u.
inline Mat3 hat(const Vec3& v) {
  Mat3 m;
  // clang-format off
  m <<     0.0, -v.z(),  v.y(),
         v.z(),    0.0, -v.x(),
        -v.y(),  v.x(),    0.0;
  // clang-format on
  return m;
}

/// Inverse of hat. Requires ||M + M^T|| < 1e-9.
inline Vec3 vee(const Mat3& m) {
  if ((m + m.transpose()).norm() >= 1e-9) {
    throw std::invalid_argument("vee: input matrix is not antisymmetric");
  }
  return Vec3(m(2, 1), m(0, 2), m(1, 0));
}

/// Nearest rotation matrix in the Frobenius sense (polar decomposition).
Mat3 project_to_rotation(const Mat3& m);

/// Orthonormality and det(+1) within tol.
inline bool is_rotation(const Mat3& r, double tol = 1e-9) {
  return (r.transpose() * r - Mat3::Identity()).norm() < tol &&
         std::abs(r.determinant() - 1.0) < tol;
}

/// Rotation by angle about the z axis.
inline Mat3 rot_z(double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  Mat3 m;
  m << c, -s, 0.0, s, c, 0.0, 0.0, 0.0, 1.0;
  return m;
}

}  // namespace uavland
