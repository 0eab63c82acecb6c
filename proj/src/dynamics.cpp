#include "uavland/dynamics.hpp"

#include <sstream>
#include <stdexcept>

#include "uavland/so3.hpp"

namespace uavland {

void UavParams::validate() const {
  if (!(mass > 0.0)) {
    throw std::invalid_argument("UavParams: mass must be positive");
  }
  if (!(bounding_radius > 0.0)) {
    throw std::invalid_argument("UavParams: bounding_radius must be positive");
  }
  if ((inertia - inertia.transpose()).norm() > 1e-12) {
    throw std::invalid_argument("UavParams: inertia must be symmetric");
  }
  Eigen::SelfAdjointEigenSolver<Mat3> eig(inertia);
  if (eig.eigenvalues().minCoeff() <= 0.0) {
    throw std::invalid_argument("UavParams: inertia must be positive definite");
  }
}

namespace {

struct StateDeriv {
  Vec3 dp, dv, dw;
  Mat3 dR;
};

StateDeriv derivative(const UavState& s, const UavParams& params,
                      const Mat3& inertia_inv, const Vec3& tau_p,
                      const Vec3& tau_q) {
  StateDeriv d;
  d.dp = s.v;
  d.dv = (tau_p - params.mass * gravity_vector()) / params.mass;
  d.dR = s.R * hat(s.w);
  d.dw = inertia_inv * (tau_q - s.w.cross(params.inertia * s.w));
  return d;
}

UavState advance(const UavState& s, const StateDeriv& d, double h) {
  UavState out;
  out.p = s.p + h * d.dp;
  out.v = s.v + h * d.dv;
  out.R = s.R + h * d.dR;
  out.w = s.w + h * d.dw;
  return out;
}

bool state_finite(const UavState& s) {
  return s.p.allFinite() && s.v.allFinite() && s.R.allFinite() &&
         s.w.allFinite();
}

[[noreturn]] void halt_non_finite(const char* where, const UavState& s) {
  std::ostringstream msg;
  msg << "step_full_dynamics: non-finite state (" << where << "): p=["
      << s.p.transpose() << "] v=[" << s.v.transpose() << "] w=["
      << s.w.transpose() << "]";
  throw std::runtime_error(msg.str());
}

}  // namespace

UavState step_full_dynamics(const UavState& s, const UavParams& params,
                            const Vec3& tau_p, const Vec3& tau_q, double dt) {
  if (!(dt > 0.0)) {
    throw std::invalid_argument("step_full_dynamics: dt must be positive");
  }
  if (!state_finite(s) || !tau_p.allFinite() || !tau_q.allFinite()) {
    halt_non_finite("input", s);
  }
  const Mat3 inertia_inv = params.inertia.inverse();

  const StateDeriv k1 = derivative(s, params, inertia_inv, tau_p, tau_q);
  const StateDeriv k2 =
      derivative(advance(s, k1, 0.5 * dt), params, inertia_inv, tau_p, tau_q);
  const StateDeriv k3 =
      derivative(advance(s, k2, 0.5 * dt), params, inertia_inv, tau_p, tau_q);
  const StateDeriv k4 =
      derivative(advance(s, k3, dt), params, inertia_inv, tau_p, tau_q);

  const double h6 = dt / 6.0;
  UavState out;
  out.p = s.p + h6 * (k1.dp + 2.0 * k2.dp + 2.0 * k3.dp + k4.dp);
  out.v = s.v + h6 * (k1.dv + 2.0 * k2.dv + 2.0 * k3.dv + k4.dv);
  out.w = s.w + h6 * (k1.dw + 2.0 * k2.dw + 2.0 * k3.dw + k4.dw);
  out.R = project_to_rotation(
      s.R + h6 * (k1.dR + 2.0 * k2.dR + 2.0 * k3.dR + k4.dR));

  if (!state_finite(out)) {
    halt_non_finite("output", out);
  }
  return out;
}

}  // namespace uavland
