#pragma once

#include "uavland/types.hpp"

namespace uavland {

/// Shaping parameters of the landing barrier. alpha scales the boundary
/// horizontally (1/m), beta vertically (m).
struct LcbfParams {
  double alpha = 2.0;
  double beta = 1.0;
};

/// One barrier evaluated at one instant: value, spatial gradient and the
/// explicit time partial. The landing barrier uses grad_i only; the sphere
/// barrier fills grad_i and grad_j = -grad_i and has dt_partial == 0.
struct BarrierEval {
  double value = 0.0;
  Vec3 grad_i = Vec3::Zero();
  Vec3 grad_j = Vec3::Zero();
  double dt_partial = 0.0;
  bool near_axis = false;  // landing barrier only: horizontal distance < d_tol
};

/// Landing barrier
///   h = e_z - beta * alpha * d * exp(-alpha d),  e = p - p_d,
///   d = sqrt(e_x^2 + e_y^2)
/// with gradient
///   dh/dp = [ab e_x exp(-ad)(ad - 1)/d, ab e_y exp(-ad)(ad - 1)/d, 1]
/// and time partial (pad moving at v_d)
///   dh/dt = -v_dz - grad_x v_dx - grad_y v_dy.
///
/// The gradient direction is ambiguous on the axis d = 0; inside d < d_tol
/// the result is flagged near_axis and the gradient is evaluated with d
/// clamped to d_tol (finite, but callers must bypass the constraint row).
/// The value itself is continuous everywhere and always uses the true d.
BarrierEval lcbf_eval(const Vec3& p, const Vec3& p_d, const Vec3& v_d,
                      const LcbfParams& params, double d_tol);

/// Sphere barrier h = ||p_i - p_j||^2 - (s_i + s_j)^2 between two vehicles
/// with bounding radii s_i, s_j. No explicit time dependence.
BarrierEval scbf_eval(const Vec3& p_i, const Vec3& p_j, double s_i, double s_j);

/// Boundary surface height beta * alpha * d * exp(-alpha d) at horizontal
/// distance d. Zero at d = 0, peaks at d = 1/alpha, decays to zero as
/// d -> infinity.
double lcbf_boundary(double d, const LcbfParams& params);

/// Inverts the peak condition: returns the parameters that place the
/// boundary maximum at horizontal distance d_star with height ez_star,
/// i.e. alpha = 1/d_star and beta = ez_star * e.
LcbfParams shaping_from_peak(double d_star, double ez_star);

}  // namespace uavland
