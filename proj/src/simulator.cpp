#include "uavland/simulator.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "uavland/safety_filter.hpp"
#include "uavland/so3.hpp"

namespace uavland {

namespace {

constexpr double kActivityTol = 1e-6;

// Per-vehicle attitude loop memory for the full-dynamics fidelity.
struct AttitudeMemory {
  Mat3 R_d_prev = Mat3::Identity();
  Vec3 w_d_prev = Vec3::Zero();
  bool primed = false;
};

Vec3 first_order_body_rate(const Mat3& R_prev, const Mat3& R_now, double dt) {
  // vee of the antisymmetric part of (R_prev^T R_now - I) / dt, the
  // first-order body-rate estimate between consecutive setpoints.
  const Mat3 rel = R_prev.transpose() * R_now;
  const Mat3 skew = 0.5 * (rel - rel.transpose());
  return Vec3(skew(2, 1), skew(0, 2), skew(1, 0)) / dt;
}

void pin_to_pad(UavState& s, const UgvState& pad) {
  s.p = pad.p;
  s.v = pad.v;
  s.w = Vec3::Zero();
}

}  // namespace

SimLog run_scenario(const ScenarioConfig& cfg) {
  cfg.validate();
  const int n = cfg.n_uavs;
  const int q_total = n * (n + 1) / 2;

  SimLog log;
  log.n_uavs = n;
  log.dt = cfg.dt_outer;
  for (int i = 0; i < n; ++i) {
    log.barrier_names.push_back("h_l" + std::to_string(i + 1));
  }
  {
    std::vector<std::string> pair_names(q_total - n);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        pair_names[pair_row_index(i + 1, j + 1, n) - n - 1] =
            "h_s" + std::to_string(i + 1) + std::to_string(j + 1);
      }
    }
    for (auto& name : pair_names) {
      log.barrier_names.push_back(std::move(name));
    }
  }

  std::vector<double> radii(n), masses(n);
  std::vector<LcbfParams> lcbf(n);
  for (int i = 0; i < n; ++i) {
    radii[i] = cfg.uavs[i].params.bounding_radius;
    masses[i] = cfg.uavs[i].params.mass;
    lcbf[i] = cfg.uavs[i].lcbf;
  }

  const int n_pre =
      static_cast<int>(std::lround(cfg.controller_on_time / cfg.dt_outer));
  const int n_run = static_cast<int>(std::lround(cfg.t_final / cfg.dt_outer));
  const int n_sub = std::max(
      1, static_cast<int>(std::lround(cfg.dt_outer / cfg.dt_inner)));
  const double dt_sub = cfg.dt_outer / n_sub;

  std::vector<UavState> states(n);
  std::vector<std::uint8_t> landed(n, 0);
  std::vector<AttitudeMemory> att(n);
  for (int i = 0; i < n; ++i) {
    const UgvState carrier =
        ugv_state_at(cfg.ugvs[cfg.uavs[i].carrier], cfg.t_start());
    states[i].p = cfg.uavs[i].p0_override.value_or(carrier.p);
    states[i].v = carrier.v;
  }

  auto targets_at = [&](double t) {
    std::vector<UgvState> targets(n);
    for (int i = 0; i < n; ++i) {
      targets[i] = ugv_state_at(cfg.ugvs[cfg.uavs[i].target], t);
    }
    return targets;
  };

  auto barrier_values = [&](const std::vector<UavState>& st,
                            const std::vector<UgvState>& targets) {
    std::vector<double> h(q_total);
    for (int i = 0; i < n; ++i) {
      h[i] = lcbf_eval(st[i].p, targets[i].p, targets[i].v, lcbf[i],
                       cfg.filter.d_tol)
                 .value;
    }
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        h[pair_row_index(i + 1, j + 1, n) - 1] =
            scbf_eval(st[i].p, st[j].p, radii[i], radii[j]).value;
      }
    }
    return h;
  };

  for (int k = 0; k <= n_pre + n_run; ++k) {
    const double t = (k - n_pre) * cfg.dt_outer;
    const bool controller_on = k >= n_pre;
    const std::vector<UgvState> targets = targets_at(t);

    TickRecord rec;
    rec.t = t;
    rec.uavs = states;
    rec.targets = targets;
    rec.h = barrier_values(states, targets);
    rec.landed = landed;
    rec.u_nom = VecX::Zero(3 * n);
    rec.u_star = VecX::Zero(3 * n);
    rec.margins = VecX::Zero(q_total);
    rec.active.assign(q_total, 0);

    VecX u_star;
    if (controller_on) {
      VecX u_nom(3 * n);
      for (int i = 0; i < n; ++i) {
        if (landed[i]) {
          set_block3(u_nom, i, targets[i].v);
        } else {
          set_block3(u_nom, i,
                     cfg.gains.kp * (targets[i].p - states[i].p) + targets[i].v);
        }
      }
      const FilterResult fr = apply_filter(u_nom, states, targets, lcbf,
                                           radii, cfg.filter, landed);
      rec.u_nom = u_nom;
      rec.u_star = fr.u_star;
      rec.margins = fr.margins;
      for (int r = 0; r < q_total; ++r) {
        rec.active[r] = !fr.cs.bypassed[r] &&
                        std::abs(fr.margins(r)) <= kActivityTol;
      }
      if (!fr.qp.ok()) {
        std::ostringstream msg;
        msg << (fr.qp.infeasible ? "QP infeasible" : "QP iteration limit")
            << " at t = " << t << " s, most violated row "
            << qp_row_name(fr.cs, fr.qp.worst_row) << " (violation "
            << fr.qp.worst_violation << ")";
        log.ticks.push_back(std::move(rec));
        log.halted = true;
        log.halt_reason = msg.str();
        log.halt_time = t;
        return log;
      }
      u_star = fr.u_star;
    }

    log.ticks.push_back(std::move(rec));
    if (k == n_pre + n_run) {
      break;
    }

    // Advance to t + dt.
    const double t_next = (k + 1 - n_pre) * cfg.dt_outer;
    try {
      for (int i = 0; i < n; ++i) {
        if (!controller_on) {
          pin_to_pad(states[i],
                     ugv_state_at(cfg.ugvs[cfg.uavs[i].carrier], t_next));
          continue;
        }
        if (landed[i]) {
          pin_to_pad(states[i],
                     ugv_state_at(cfg.ugvs[cfg.uavs[i].target], t_next));
          continue;
        }
        const Vec3 u_i = block3(u_star, i);
        if (cfg.fidelity == Fidelity::Kinematic) {
          states[i].p = step_kinematic(states[i].p, u_i, cfg.dt_outer);
          states[i].v = u_i;
        } else {
          for (int sub = 0; sub < n_sub; ++sub) {
            const Vec3 tau_p = cfg.gains.kv * (u_i - states[i].v) +
                               masses[i] * gravity_vector();
            const DesiredAttitude att_sp = desired_attitude(tau_p, cfg.psi_d);
            const Mat3 R_d = att_sp.ok() ? att_sp.R : att[i].R_d_prev;
            Vec3 w_d = Vec3::Zero();
            Vec3 dw_d = Vec3::Zero();
            if (att[i].primed) {
              w_d = first_order_body_rate(att[i].R_d_prev, R_d, dt_sub);
              dw_d = (w_d - att[i].w_d_prev) / dt_sub;
            }
            const Vec3 tau_q = attitude_control(
                states[i], {R_d, w_d, dw_d, cfg.psi_d}, cfg.uavs[i].params,
                cfg.gains.k1, cfg.gains.k2);
            states[i] = step_full_dynamics(states[i], cfg.uavs[i].params,
                                           tau_p, tau_q, dt_sub);
            att[i].R_d_prev = R_d;
            att[i].w_d_prev = w_d;
            att[i].primed = true;
          }
        }
      }
    } catch (const std::exception& e) {
      log.halted = true;
      log.halt_reason = e.what();
      log.halt_time = t_next;
      return log;
    }

    // Touchdown: within landing_tolerance of the pad and inside the axis
    // corridor. Landed vehicles stay pinned to their pads.
    if (controller_on) {
      const std::vector<UgvState> targets_next = targets_at(t_next);
      for (int i = 0; i < n; ++i) {
        if (landed[i]) {
          continue;
        }
        const Vec3 e = states[i].p - targets_next[i].p;
        const double d = std::hypot(e.x(), e.y());
        if (e.norm() <= cfg.landing_tolerance && d < cfg.filter.d_tol) {
          landed[i] = 1;
          pin_to_pad(states[i], targets_next[i]);
          log.touchdowns.push_back({t_next, i});
        }
      }
    }
  }
  return log;
}

SafetyMetrics safety_metrics(const SimLog& log) {
  const int n = log.n_uavs;
  const int n_pairs = log.pairs();
  const double nan = std::numeric_limits<double>::quiet_NaN();

  SafetyMetrics m;
  m.min_lcbf_after_crossing.assign(n, nan);
  m.touchdown_time.assign(n, nan);
  m.min_scbf.assign(n_pairs, nan);
  m.min_scbf_overall = nan;
  m.min_pair_distance = nan;
  m.max_filter_deviation = 0.0;
  m.halted = log.halted;
  m.halt_reason = log.halt_reason;

  std::vector<bool> crossed(n, false);
  for (const auto& tick : log.ticks) {
    for (int i = 0; i < n; ++i) {
      const double h = tick.h[i];
      if (!crossed[i] && h >= 0.0) {
        crossed[i] = true;
        m.min_lcbf_after_crossing[i] = h;
      } else if (crossed[i]) {
        m.min_lcbf_after_crossing[i] =
            std::min(m.min_lcbf_after_crossing[i], h);
      }
    }
    for (int r = 0; r < n_pairs; ++r) {
      const double h = tick.h[n + r];
      if (std::isnan(m.min_scbf[r]) || h < m.min_scbf[r]) {
        m.min_scbf[r] = h;
      }
    }
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        const double dist = (tick.uavs[i].p - tick.uavs[j].p).norm();
        if (std::isnan(m.min_pair_distance) || dist < m.min_pair_distance) {
          m.min_pair_distance = dist;
        }
      }
    }
    if (tick.u_nom.size() > 0) {
      m.max_filter_deviation = std::max(m.max_filter_deviation,
                                        (tick.u_star - tick.u_nom).norm());
    }
  }
  for (int r = 0; r < n_pairs; ++r) {
    if (!std::isnan(m.min_scbf[r]) &&
        (std::isnan(m.min_scbf_overall) || m.min_scbf[r] < m.min_scbf_overall)) {
      m.min_scbf_overall = m.min_scbf[r];
    }
  }
  for (const auto& event : log.touchdowns) {
    m.touchdown_time[event.uav] = event.t;
  }
  m.all_landed = !log.touchdowns.empty() &&
                 static_cast<int>(log.touchdowns.size()) == n;
  return m;
}

}  // namespace uavland
