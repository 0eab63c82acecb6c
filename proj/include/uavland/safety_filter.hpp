#pragma once

#include <vector>

#include "uavland/qp.hpp"

namespace uavland {

struct FilterResult {
  VecX u_star;           // filtered velocity input, 3N
  ConstraintSystem cs;   // constraint system of this instant
  VecX margins;          // A u_star + b per row (>= -qp_tol when optimal)
  QpResult qp;
};

/// Assembles the barrier constraints at the current instant and solves the
/// minimally-deviating QP. QP failures are reported through the result so
/// the caller can halt with diagnostics.
FilterResult apply_filter(const VecX& u_nom,
                          const std::vector<UavState>& states,
                          const std::vector<UgvState>& targets,
                          const std::vector<LcbfParams>& lcbf,
                          const std::vector<double>& radii,
                          const FilterConfig& cfg,
                          const std::vector<std::uint8_t>& landed);

}  // namespace uavland
