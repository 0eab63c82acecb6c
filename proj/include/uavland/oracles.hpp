#pragma once

#include <functional>

#include "uavland/types.hpp"

namespace uavland {

// Reference routines used to cross-check the analytic code. They share no
// internals with the implementations they verify: derivatives come from
// central differences, the QP reference is an iterative dual method, and
// extrema come from golden-section search.

/// Central-difference gradient of a scalar field, default step 1e-6.
VecX fd_gradient(const std::function<double(const VecX&)>& f, const VecX& x,
                 double step = 1e-6);

/// Central-difference derivative of a scalar function of one variable.
double fd_derivative(const std::function<double(double)>& f, double x,
                     double step = 1e-6);

struct PolyhedronProjection {
  VecX u;
  bool converged = false;
  int sweeps = 0;
};

/// Reference minimizer of ||u - u_nom||^2 s.t. C u >= d by dual coordinate
/// ascent (Hildreth): exact one-dimensional maximizations of the dual,
/// iterated until the primal violation and the complementarity residual
/// drop below tol. Intended for small, feasible instances.
PolyhedronProjection project_polyhedron_reference(const VecX& u_nom,
                                                  const MatX& c, const VecX& d,
                                                  double tol = 1e-11,
                                                  int max_sweeps = 200000);

/// Argmax of a unimodal function on [lo, hi] by golden-section search.
double golden_section_max(const std::function<double(double)>& f, double lo,
                          double hi, double tol = 1e-10);

/// Adaptive Simpson integral of f on [a, b].
double simpson_integrate(const std::function<double(double)>& f, double a,
                         double b, double tol = 1e-12);

}  // namespace uavland
