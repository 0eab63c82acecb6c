#include "uavland/safety_filter.hpp"

namespace uavland {

FilterResult apply_filter(const VecX& u_nom,
                          const std::vector<UavState>& states,
                          const std::vector<UgvState>& targets,
                          const std::vector<LcbfParams>& lcbf,
                          const std::vector<double>& radii,
                          const FilterConfig& cfg,
                          const std::vector<std::uint8_t>& landed) {
  FilterResult out;
  out.cs = assemble_constraints(states, targets, lcbf, radii, cfg, landed);
  out.qp = solve_qp(u_nom, out.cs, cfg);
  out.u_star = out.qp.u;
  out.margins = out.cs.A * out.u_star + out.cs.b;
  return out;
}

}  // namespace uavland
