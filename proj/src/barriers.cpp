#include "uavland/barriers.hpp"

#include <cmath>
#include <stdexcept>

namespace uavland {

BarrierEval lcbf_eval(const Vec3& p, const Vec3& p_d, const Vec3& v_d,
                      const LcbfParams& params, double d_tol) {
  const double a = params.alpha;
  const double b = params.beta;
  const Vec3 e = p - p_d;
  const double d = std::hypot(e.x(), e.y());

  BarrierEval out;
  out.near_axis = d < d_tol;
  out.value = e.z() - b * a * d * std::exp(-a * d);

  // Gradient with the horizontal distance clamped away from the axis.
  const double dg = std::max(d, d_tol);
  const double coeff = a * b * std::exp(-a * dg) * (a * dg - 1.0) / dg;
  out.grad_i = Vec3(coeff * e.x(), coeff * e.y(), 1.0);

  // Explicit time dependence enters only through p_d(t); e = p - p_d gives
  // dh/dt = -grad . pdot_d (the z component of the gradient is 1).
  out.dt_partial = -v_d.z() - out.grad_i.x() * v_d.x() - out.grad_i.y() * v_d.y();
  return out;
}

BarrierEval scbf_eval(const Vec3& p_i, const Vec3& p_j, double s_i,
                      double s_j) {
  const Vec3 delta = p_i - p_j;
  const double radius_sum = s_i + s_j;

  BarrierEval out;
  out.value = delta.squaredNorm() - radius_sum * radius_sum;
  out.grad_i = 2.0 * delta;
  out.grad_j = -out.grad_i;
  out.dt_partial = 0.0;
  return out;
}

double lcbf_boundary(double d, const LcbfParams& params) {
  return params.beta * params.alpha * d * std::exp(-params.alpha * d);
}

LcbfParams shaping_from_peak(double d_star, double ez_star) {
  if (!(d_star > 0.0) || !(ez_star > 0.0)) {
    throw std::invalid_argument(
        "shaping_from_peak: d_star and ez_star must be positive");
  }
  LcbfParams out;
  out.alpha = 1.0 / d_star;
  out.beta = ez_star * std::exp(1.0);
  return out;
}

}  // namespace uavland
