#include "uavland/qp.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace uavland {

void qp_constraint_rows(const ConstraintSystem& cs, const FilterConfig& cfg,
                        MatX& c_out, VecX& d_out) {
  const int n = cs.vars();
  const int q = cs.rows();
  c_out.resize(q + 2 * n, n);
  d_out.resize(q + 2 * n);
  c_out.topRows(q) = cs.A;
  d_out.head(q) = -cs.b;
  c_out.middleRows(q, n) = MatX::Identity(n, n);
  d_out.segment(q, n).setConstant(-cfg.sigma);
  c_out.bottomRows(n) = -MatX::Identity(n, n);
  d_out.tail(n).setConstant(-cfg.sigma);
}

std::string qp_row_name(const ConstraintSystem& cs, int row) {
  const int q = cs.rows();
  const int n = cs.vars();
  if (row < 0) {
    return "none";
  }
  if (row < q) {
    if (cs.kind[row] == RowKind::Lcbf) {
      return "h_l" + std::to_string(cs.row_i[row] + 1);
    }
    return "h_s" + std::to_string(cs.row_i[row] + 1) +
           std::to_string(cs.row_j[row] + 1);
  }
  const int k = row - q;
  if (k < n) {
    return "box_lo_u" + std::to_string(k + 1);
  }
  return "box_hi_u" + std::to_string(k - n + 1);
}

namespace {

// Step pair of the dual active-set iteration: z is the component of the
// incoming row orthogonal to the span of the active rows, r the change of
// the active multipliers per unit of the incoming one.
void step_directions(const MatX& c, const std::vector<int>& active,
                     const VecX& cv, VecX& z, VecX& r) {
  const int m = static_cast<int>(active.size());
  if (m == 0) {
    z = cv;
    r.resize(0);
    return;
  }
  MatX p(m, c.cols());
  for (int k = 0; k < m; ++k) {
    p.row(k) = c.row(active[k]);
  }
  const MatX gram = p * p.transpose();
  r = gram.ldlt().solve(p * cv);
  z = cv - p.transpose() * r;
}

}  // namespace

QpResult solve_qp(const VecX& u_nom, const ConstraintSystem& cs,
                  const FilterConfig& cfg) {
  if (!u_nom.allFinite() || !cs.A.allFinite() || !cs.b.allFinite()) {
    throw std::invalid_argument("solve_qp: non-finite input");
  }
  if (u_nom.size() != cs.vars()) {
    throw std::invalid_argument("solve_qp: u_nom size mismatch");
  }

  MatX c;
  VecX d;
  qp_constraint_rows(cs, cfg, c, d);
  const int m_total = static_cast<int>(c.rows());
  const double inf = std::numeric_limits<double>::infinity();

  QpResult res;
  res.u = u_nom;
  res.lambda = VecX::Zero(m_total);

  VecX u = u_nom;
  std::vector<int> active;
  std::vector<double> lam;
  std::vector<std::uint8_t> in_active(m_total, 0);

  auto finish_failure = [&](bool infeasible_flag) {
    res.u = u;
    res.infeasible = infeasible_flag;
    res.iteration_limit = !infeasible_flag;
    res.worst_violation = 0.0;
    for (int r = 0; r < m_total; ++r) {
      const double s = c.row(r).dot(u) - d(r);
      if (s < res.worst_violation) {
        res.worst_violation = s;
        res.worst_row = r;
      }
    }
    for (std::size_t k = 0; k < active.size(); ++k) {
      res.lambda(active[k]) = lam[k];
    }
    return res;
  };

  for (int iter = 0; iter < cfg.qp_max_iter; ++iter) {
    res.iterations = iter;

    // Most violated constraint; strict comparison keeps the lowest index on
    // ties, which makes the solve deterministic.
    int violated = -1;
    double worst = -cfg.qp_tol;
    for (int r = 0; r < m_total; ++r) {
      if (in_active[r]) {
        continue;
      }
      const double s = c.row(r).dot(u) - d(r);
      if (s < worst) {
        worst = s;
        violated = r;
      }
    }
    if (violated < 0) {
      res.u = u;
      res.optimal = true;
      for (std::size_t k = 0; k < active.size(); ++k) {
        res.lambda(active[k]) = lam[k];
      }
      return res;
    }

    const VecX cv = c.row(violated).transpose();
    double s_v = cv.dot(u) - d(violated);
    double lam_v = 0.0;

    // Bring the violated row into the active set, dropping blockers whose
    // multipliers would go negative along the way.
    const int inner_cap = m_total + cs.vars() + 2;
    bool added = false;
    for (int inner = 0; inner < inner_cap; ++inner) {
      VecX z, r;
      step_directions(c, active, cv, z, r);
      const double z2 = z.squaredNorm();

      if (z2 > 1e-14 * std::max(1.0, cv.squaredNorm())) {
        const double t_full = -s_v / z2;  // step making the row tight
        double t_block = inf;
        int blocker = -1;
        for (std::size_t k = 0; k < active.size(); ++k) {
          if (r(static_cast<int>(k)) > 1e-12) {
            const double cand = lam[k] / r(static_cast<int>(k));
            if (cand < t_block) {
              t_block = cand;
              blocker = static_cast<int>(k);
            }
          }
        }
        const double t = std::min(t_block, t_full);
        u += t * z;
        s_v += t * z2;
        for (std::size_t k = 0; k < active.size(); ++k) {
          lam[k] -= t * r(static_cast<int>(k));
        }
        lam_v += t;
        if (t_full <= t_block) {
          active.push_back(violated);
          lam.push_back(lam_v);
          in_active[violated] = 1;
          added = true;
          break;
        }
        in_active[active[blocker]] = 0;
        active.erase(active.begin() + blocker);
        lam.erase(lam.begin() + blocker);
      } else {
        // Incoming row is dependent on the active ones: pure dual step.
        double t_block = inf;
        int blocker = -1;
        for (std::size_t k = 0; k < active.size(); ++k) {
          if (r(static_cast<int>(k)) > 1e-12) {
            const double cand = lam[k] / r(static_cast<int>(k));
            if (cand < t_block) {
              t_block = cand;
              blocker = static_cast<int>(k);
            }
          }
        }
        if (blocker < 0) {
          // Dual ray: no feasible point exists.
          return finish_failure(true);
        }
        for (std::size_t k = 0; k < active.size(); ++k) {
          lam[k] -= t_block * r(static_cast<int>(k));
        }
        lam_v += t_block;
        in_active[active[blocker]] = 0;
        active.erase(active.begin() + blocker);
        lam.erase(lam.begin() + blocker);
      }
    }
    if (!added && !in_active[violated]) {
      return finish_failure(false);
    }
  }
  return finish_failure(false);
}

}  // namespace uavland
