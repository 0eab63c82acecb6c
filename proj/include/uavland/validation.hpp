#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace uavland {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct ValidationOptions {
  std::uint32_t seed = 1840;
  int gradient_points = 200;
  int qp_instances = 25;
  double qp_tol = 1e-8;
  // Test-harness hook: flips the sign of the first checked gradient
  // component so the finite-difference check must fail.
  bool inject_lcbf_grad_sign_error = false;
};

/// Runs the built-in property suites: finite-difference gradient checks of
/// both barriers and the landing time partial, QP-vs-reference agreement at
/// the configured and at a tightened tolerance, KKT residuals, pair-row
/// bijectivity, hat/vee round trips and the shaping peak identity.
std::vector<CheckResult> run_validation(const ValidationOptions& opts);

}  // namespace uavland
