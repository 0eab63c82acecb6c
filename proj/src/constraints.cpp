#include "uavland/constraints.hpp"

#include <stdexcept>
#include <utility>

namespace uavland {

namespace {
// Rows below this count are not worth forking threads for.
constexpr int kParallelRowThreshold = 64;
}  // namespace

void FilterConfig::validate() const {
  if (!(rho_l > 0.0 && rho_s > 0.0 && sigma > 0.0 && d_tol > 0.0 &&
        qp_tol > 0.0 && qp_max_iter > 0)) {
    throw std::invalid_argument("FilterConfig: all parameters must be positive");
  }
}

int pair_row_index(int i, int j, int n) {
  if (n < 2 || i < 1 || j <= i || j > n) {
    throw std::invalid_argument("pair_row_index: require 1 <= i < j <= N");
  }
  int tail = 0;
  for (int k = 1; k <= i - 1; ++k) {
    tail += n - k - 2;
  }
  return n + i + j - 2 + tail;
}

namespace {

void fill_row(ConstraintSystem& cs, int q,
              const std::vector<std::pair<int, int>>& pair_of,
              const std::vector<UavState>& states,
              const std::vector<UgvState>& targets,
              const std::vector<LcbfParams>& lcbf,
              const std::vector<double>& radii, const FilterConfig& cfg,
              const std::vector<std::uint8_t>& landed) {
  const int n = cs.n_uavs;
  if (q < n) {
    cs.kind[q] = RowKind::Lcbf;
    cs.row_i[q] = q;
    cs.row_j[q] = -1;
    if (landed[q]) {
      cs.b(q) = 1.0;
      cs.bypassed[q] = 1;
      return;
    }
    const BarrierEval ev =
        lcbf_eval(states[q].p, targets[q].p, targets[q].v, lcbf[q], cfg.d_tol);
    if (ev.near_axis) {
      // Inside the descent corridor the nominal controller applies directly.
      cs.b(q) = 1.0;
      cs.bypassed[q] = 1;
      return;
    }
    cs.A.block<1, 3>(q, 3 * q) = ev.grad_i.transpose();
    cs.b(q) = cfg.rho_l * ev.value + ev.dt_partial;
    return;
  }

  const auto [i, j] = pair_of[q - n];
  cs.kind[q] = RowKind::Scbf;
  cs.row_i[q] = i;
  cs.row_j[q] = j;
  const BarrierEval ev = scbf_eval(states[i].p, states[j].p, radii[i], radii[j]);
  cs.A.block<1, 3>(q, 3 * i) = ev.grad_i.transpose();
  cs.A.block<1, 3>(q, 3 * j) = ev.grad_j.transpose();
  // dt_partial is identically zero for sphere rows; kept for uniformity.
  cs.b(q) = cfg.rho_s * ev.value + ev.dt_partial;
}

}  // namespace

ConstraintSystem assemble_constraints(const std::vector<UavState>& states,
                                      const std::vector<UgvState>& targets,
                                      const std::vector<LcbfParams>& lcbf,
                                      const std::vector<double>& radii,
                                      const FilterConfig& cfg,
                                      const std::vector<std::uint8_t>& landed,
                                      ExecPolicy policy) {
  const int n = static_cast<int>(states.size());
  if (n < 1) {
    throw std::invalid_argument("assemble_constraints: need at least one UAV");
  }
  if (targets.size() != states.size() || lcbf.size() != states.size() ||
      radii.size() != states.size() || landed.size() != states.size()) {
    throw std::invalid_argument("assemble_constraints: inconsistent list sizes");
  }

  const int q_total = n * (n + 1) / 2;
  ConstraintSystem cs;
  cs.n_uavs = n;
  cs.A = MatX::Zero(q_total, 3 * n);
  cs.b = VecX::Zero(q_total);
  cs.kind.resize(q_total);
  cs.row_i.resize(q_total);
  cs.row_j.resize(q_total);
  cs.bypassed.assign(q_total, 0);

  // Pair occupying each sphere row, in the nu ordering.
  std::vector<std::pair<int, int>> pair_of(q_total - n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      pair_of[pair_row_index(i + 1, j + 1, n) - n - 1] = {i, j};
    }
  }

  const bool parallel =
      policy == ExecPolicy::Parallel ||
      (policy == ExecPolicy::Auto && q_total >= kParallelRowThreshold);

  if (parallel) {
#pragma omp parallel for schedule(static)
    for (int q = 0; q < q_total; ++q) {
      fill_row(cs, q, pair_of, states, targets, lcbf, radii, cfg, landed);
    }
  } else {
    for (int q = 0; q < q_total; ++q) {
      fill_row(cs, q, pair_of, states, targets, lcbf, radii, cfg, landed);
    }
  }
  return cs;
}

ConstraintSystem assemble_constraints_serial(
    const std::vector<UavState>& states, const std::vector<UgvState>& targets,
    const std::vector<LcbfParams>& lcbf, const std::vector<double>& radii,
    const FilterConfig& cfg, const std::vector<std::uint8_t>& landed) {
  return assemble_constraints(states, targets, lcbf, radii, cfg, landed,
                              ExecPolicy::Serial);
}

}  // namespace uavland
