#include "uavland/validation.hpp"

#include <cmath>
#include <random>
#include <set>
#include <sstream>

#include "uavland/barriers.hpp"
#include "uavland/oracles.hpp"
#include "uavland/qp.hpp"
#include "uavland/so3.hpp"

namespace uavland {

namespace {

using Rng = std::mt19937;

Vec3 random_vec3(Rng& rng, double lo, double hi) {
  std::uniform_real_distribution<double> dist(lo, hi);
  return Vec3(dist(rng), dist(rng), dist(rng));
}

// Random landing-barrier sample outside the near-axis guard.
struct LcbfSample {
  Vec3 p, p_d, v_d;
  LcbfParams params;
};

LcbfSample random_lcbf_sample(Rng& rng) {
  std::uniform_real_distribution<double> d_dist(0.02, 5.0);
  std::uniform_real_distribution<double> angle_dist(0.0, 2.0 * M_PI);
  std::uniform_real_distribution<double> z_dist(-2.0, 2.0);
  std::uniform_real_distribution<double> shape_dist(0.3, 4.0);

  LcbfSample s;
  s.p_d = random_vec3(rng, -3.0, 3.0);
  const double d = d_dist(rng);
  const double angle = angle_dist(rng);
  s.p = s.p_d + Vec3(d * std::cos(angle), d * std::sin(angle), z_dist(rng));
  s.v_d = random_vec3(rng, -1.5, 1.5);
  s.params.alpha = shape_dist(rng);
  s.params.beta = shape_dist(rng);
  return s;
}

double scaled_error(const VecX& got, const VecX& want) {
  const double scale = std::max(1.0, want.cwiseAbs().maxCoeff());
  return (got - want).cwiseAbs().maxCoeff() / scale;
}

CheckResult check_lcbf_gradient(const ValidationOptions& opts) {
  Rng rng(opts.seed);
  double worst = 0.0;
  for (int k = 0; k < opts.gradient_points; ++k) {
    const LcbfSample s = random_lcbf_sample(rng);
    BarrierEval ev = lcbf_eval(s.p, s.p_d, s.v_d, s.params, 1e-3);
    if (opts.inject_lcbf_grad_sign_error) {
      ev.grad_i.x() = -ev.grad_i.x();
    }
    const VecX fd = fd_gradient(
        [&](const VecX& x) {
          return lcbf_eval(Vec3(x), s.p_d, s.v_d, s.params, 1e-3).value;
        },
        s.p);
    worst = std::max(worst, scaled_error(ev.grad_i, fd));
  }
  std::ostringstream detail;
  detail << "max scaled error " << worst << " over " << opts.gradient_points
         << " points";
  return {"lcbf_gradient_fd", worst < 1e-5, detail.str()};
}

CheckResult check_lcbf_time_partial(const ValidationOptions& opts) {
  Rng rng(opts.seed + 1);
  double worst = 0.0;
  for (int k = 0; k < opts.gradient_points; ++k) {
    const LcbfSample s = random_lcbf_sample(rng);
    const BarrierEval ev = lcbf_eval(s.p, s.p_d, s.v_d, s.params, 1e-3);
    const double fd = fd_derivative(
        [&](double tau) {
          return lcbf_eval(s.p, s.p_d + tau * s.v_d, s.v_d, s.params, 1e-3)
              .value;
        },
        0.0);
    worst = std::max(
        worst, std::abs(ev.dt_partial - fd) / std::max(1.0, std::abs(fd)));
  }
  std::ostringstream detail;
  detail << "max scaled error " << worst;
  return {"lcbf_time_partial_fd", worst < 1e-5, detail.str()};
}

CheckResult check_scbf_gradient(const ValidationOptions& opts) {
  Rng rng(opts.seed + 2);
  std::uniform_real_distribution<double> radius_dist(0.1, 0.5);
  double worst = 0.0;
  for (int k = 0; k < opts.gradient_points; ++k) {
    const Vec3 p_i = random_vec3(rng, -5.0, 5.0);
    const Vec3 p_j = random_vec3(rng, -5.0, 5.0);
    const double s_i = radius_dist(rng), s_j = radius_dist(rng);
    const BarrierEval ev = scbf_eval(p_i, p_j, s_i, s_j);
    VecX grad(6);
    grad << ev.grad_i, ev.grad_j;
    const VecX fd = fd_gradient(
        [&](const VecX& x) {
          return scbf_eval(x.head<3>(), x.tail<3>(), s_i, s_j).value;
        },
        (VecX(6) << p_i, p_j).finished());
    worst = std::max(worst, scaled_error(grad, fd));
  }
  std::ostringstream detail;
  detail << "max scaled error " << worst;
  return {"scbf_gradient_fd", worst < 1e-8, detail.str()};
}

// Feasible-by-construction random QP instance: random rows made consistent
// with a point interior to the box.
struct QpInstance {
  ConstraintSystem cs;
  FilterConfig cfg;
  VecX u_nom;
};

QpInstance random_qp_instance(Rng& rng, int n_uavs) {
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_real_distribution<double> slack_dist(0.0, 2.0);

  QpInstance inst;
  inst.cfg.sigma = 2.0;
  const int n = 3 * n_uavs;
  const int q = n_uavs * (n_uavs + 1) / 2;

  VecX feasible(n);
  for (int k = 0; k < n; ++k) {
    feasible(k) = 0.8 * inst.cfg.sigma * unit(rng);
  }

  inst.cs.n_uavs = n_uavs;
  inst.cs.A = MatX::Zero(q, n);
  inst.cs.b = VecX::Zero(q);
  inst.cs.kind.assign(q, RowKind::Lcbf);
  inst.cs.row_i.assign(q, 0);
  inst.cs.row_j.assign(q, -1);
  inst.cs.bypassed.assign(q, 0);
  for (int r = 0; r < q; ++r) {
    for (int c = 0; c < n; ++c) {
      inst.cs.A(r, c) = unit(rng);
    }
    // A u >= -b feasible at `feasible` with the drawn slack.
    inst.cs.b(r) = -(inst.cs.A.row(r).dot(feasible) - slack_dist(rng));
  }
  inst.u_nom = VecX(n);
  for (int k = 0; k < n; ++k) {
    inst.u_nom(k) = 2.0 * inst.cfg.sigma * unit(rng);
  }
  return inst;
}

CheckResult check_qp_reference(const ValidationOptions& opts, double qp_tol,
                               const std::string& name) {
  Rng rng(opts.seed + 3);
  std::uniform_int_distribution<int> n_dist(1, 3);
  double worst_gap = 0.0;
  double worst_kkt = 0.0;
  for (int k = 0; k < opts.qp_instances; ++k) {
    QpInstance inst = random_qp_instance(rng, n_dist(rng));
    inst.cfg.qp_tol = qp_tol;
    const QpResult got = solve_qp(inst.u_nom, inst.cs, inst.cfg);
    if (!got.ok()) {
      return {name, false, "solver failed on a feasible instance"};
    }
    MatX c;
    VecX d;
    qp_constraint_rows(inst.cs, inst.cfg, c, d);
    const PolyhedronProjection ref =
        project_polyhedron_reference(inst.u_nom, c, d);
    if (!ref.converged) {
      return {name, false, "reference projection did not converge"};
    }
    worst_gap = std::max(worst_gap, (got.u - ref.u).cwiseAbs().maxCoeff());

    // KKT residuals of the solver's answer.
    const VecX stationarity =
        got.u - inst.u_nom - c.transpose() * got.lambda;
    worst_kkt = std::max(worst_kkt, stationarity.cwiseAbs().maxCoeff());
    for (int r = 0; r < c.rows(); ++r) {
      const double slack = c.row(r).dot(got.u) - d(r);
      worst_kkt = std::max(worst_kkt, std::abs(got.lambda(r) * slack));
      worst_kkt = std::max(worst_kkt, std::max(0.0, -got.lambda(r)));
    }
  }
  std::ostringstream detail;
  detail << "max solution gap " << worst_gap << ", max KKT residual "
         << worst_kkt;
  return {name, worst_gap < 1e-6 && worst_kkt < 1e-8, detail.str()};
}

CheckResult check_pair_index_bijectivity() {
  for (int n = 2; n <= 10; ++n) {
    std::set<int> seen;
    for (int i = 1; i < n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        seen.insert(pair_row_index(i, j, n));
      }
    }
    const int q = n * (n + 1) / 2;
    if (static_cast<int>(seen.size()) != q - n || *seen.begin() != n + 1 ||
        *seen.rbegin() != q) {
      return {"pair_index_bijectivity", false,
              "not a bijection for N = " + std::to_string(n)};
    }
  }
  return {"pair_index_bijectivity", true, "exhaustive over N in 2..10"};
}

CheckResult check_rotation_round_trip(const ValidationOptions& opts) {
  Rng rng(opts.seed + 4);
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const Vec3 v = random_vec3(rng, -10.0, 10.0);
    worst = std::max(worst, (vee(hat(v)) - v).norm());
    const Vec3 u = random_vec3(rng, -10.0, 10.0);
    worst = std::max(worst, (hat(v) * u - v.cross(u)).norm());
  }
  std::ostringstream detail;
  detail << "max residual " << worst;
  return {"rotation_round_trip", worst < 1e-12, detail.str()};
}

CheckResult check_shaping_round_trip(const ValidationOptions& opts) {
  Rng rng(opts.seed + 5);
  std::uniform_real_distribution<double> dist(0.05, 3.0);
  double worst_d = 0.0, worst_h = 0.0;
  for (int k = 0; k < 50; ++k) {
    const double d_star = dist(rng);
    const double ez_star = dist(rng);
    const LcbfParams params = shaping_from_peak(d_star, ez_star);
    const double d_hat = golden_section_max(
        [&](double d) { return lcbf_boundary(d, params); }, 0.0, 10.0 * d_star);
    worst_d = std::max(worst_d, std::abs(d_hat - d_star));
    worst_h = std::max(worst_h, std::abs(lcbf_boundary(d_hat, params) - ez_star));
  }
  std::ostringstream detail;
  detail << "max |d - d*| " << worst_d << ", max peak height error " << worst_h;
  return {"shaping_round_trip", worst_d < 1e-6 && worst_h < 1e-6, detail.str()};
}

}  // namespace

std::vector<CheckResult> run_validation(const ValidationOptions& opts) {
  std::vector<CheckResult> results;
  results.push_back(check_lcbf_gradient(opts));
  results.push_back(check_lcbf_time_partial(opts));
  results.push_back(check_scbf_gradient(opts));
  results.push_back(check_qp_reference(opts, opts.qp_tol, "qp_reference"));
  results.push_back(check_qp_reference(opts, 1e-12, "qp_reference_tight"));
  results.push_back(check_pair_index_bijectivity());
  results.push_back(check_rotation_round_trip(opts));
  results.push_back(check_shaping_round_trip(opts));
  return results;
}

}  // namespace uavland
