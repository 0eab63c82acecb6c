#pragma once

#include <string>

#include "uavland/constraints.hpp"
#include "uavland/types.hpp"

namespace uavland {

struct QpResult {
  VecX u;                  // minimizer (last iterate on failure)
  VecX lambda;             // multipliers over all solver rows, >= 0 at optimum
  bool optimal = false;
  bool infeasible = false;
  bool iteration_limit = false;
  int iterations = 0;
  int worst_row = -1;        // most violated solver row on failure
  double worst_violation = 0.0;

  bool ok() const { return optimal; }
};

/// Solver row list for min ||u - u_nom||^2 s.t. A u >= -b, |u_k| <= sigma,
/// written uniformly as C u >= d: first the Q barrier rows, then 3N lower
/// bounds u_k >= -sigma, then 3N upper bounds -u_k >= -sigma.
void qp_constraint_rows(const ConstraintSystem& cs, const FilterConfig& cfg,
                        MatX& c_out, VecX& d_out);

/// Human-readable name of a solver row (for diagnostics).
std::string qp_row_name(const ConstraintSystem& cs, int row);

/// Exact minimizer of ||u - u_nom||^2 subject to A u >= -b and the per
/// component box |u_k| <= sigma, by a dual active-set method specialized to
/// the identity Hessian (iterated projection onto the violated halfspaces).
/// Deterministic: ties in the violated-row and blocking-row choices are
/// broken by lowest index. Throws std::invalid_argument on non-finite input;
/// an empty feasible set is reported through the result, not thrown.
QpResult solve_qp(const VecX& u_nom, const ConstraintSystem& cs,
                  const FilterConfig& cfg);

}  // namespace uavland
