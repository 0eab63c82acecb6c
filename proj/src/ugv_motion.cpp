#include "uavland/ugv_motion.hpp"

#include <algorithm>
#include <cmath>

namespace uavland {

double UgvProgram::speed_bound() const {
  switch (kind) {
    case ProgramKind::Static:
      return 0.0;
    case ProgramKind::Constant:
      return v_const.norm();
    case ProgramKind::Cosine:
      return v_const.norm() + v_amp.norm();
    case ProgramKind::Piecewise: {
      double worst = 0.0;
      for (const auto& seg : segments) {
        worst = std::max(worst, seg.v.norm());
      }
      return worst;
    }
  }
  return 0.0;
}

UgvState ugv_state_at(const UgvProgram& prog, double t) {
  UgvState out;
  switch (prog.kind) {
    case ProgramKind::Static:
      out.p = prog.p0;
      out.v = Vec3::Zero();
      break;
    case ProgramKind::Constant:
      out.p = prog.p0 + prog.v_const * (t - prog.t_start);
      out.v = prog.v_const;
      break;
    case ProgramKind::Cosine: {
      out.v = prog.v_const + prog.v_amp * std::cos(prog.omega * t);
      out.p = prog.p0 + prog.v_const * (t - prog.t_start);
      if (prog.omega != 0.0) {
        out.p += prog.v_amp *
                 ((std::sin(prog.omega * t) - std::sin(prog.omega * prog.t_start)) /
                  prog.omega);
      } else {
        out.p += prog.v_amp * (t - prog.t_start);
      }
      break;
    }
    case ProgramKind::Piecewise: {
      out.p = prog.p0;
      Vec3 v = Vec3::Zero();
      double t_prev = prog.t_start;
      // Each segment is active on [seg.t_start, next.t_start).
      for (std::size_t k = 0; k < prog.segments.size(); ++k) {
        const auto& seg = prog.segments[k];
        if (seg.t_start > t) {
          break;
        }
        out.p += v * (seg.t_start - t_prev);
        t_prev = seg.t_start;
        v = seg.v;
      }
      out.p += v * (t - t_prev);
      out.v = v;
      break;
    }
  }
  return out;
}

}  // namespace uavland
