#pragma once

#include <cstdint>
#include <vector>

#include "uavland/barriers.hpp"
#include "uavland/dynamics.hpp"
#include "uavland/types.hpp"

namespace uavland {

struct FilterConfig {
  double rho_l = 10.0;    // landing barrier class-K slope
  double rho_s = 10.0;    // sphere barrier class-K slope
  double sigma = 2.0;     // per-component input bound |u_k| <= sigma [m/s]
  double d_tol = 1e-3;    // near-axis guard radius [m]
  double qp_tol = 1e-8;   // KKT / feasibility tolerance
  int qp_max_iter = 200;

  void validate() const;
};

enum class RowKind : std::uint8_t { Lcbf, Scbf };

/// Stacked affine constraint system A u >= -b over the joint velocity input
/// u in R^{3N}. Rows 1..N hold the landing barrier of each vehicle in its own
/// 3-block; rows N+1..Q (Q = N(N+1)/2) hold one sphere barrier per pair, two
/// opposite 3-blocks each. At most 6 entries per row are nonzero.
struct ConstraintSystem {
  MatX A;                         // Q x 3N
  VecX b;                         // Q
  std::vector<RowKind> kind;      // per row
  std::vector<int> row_i;         // first vehicle of the row (0-based)
  std::vector<int> row_j;         // second vehicle, -1 for landing rows
  std::vector<std::uint8_t> bypassed;  // trivially satisfied rows (0 u >= -1)
  int n_uavs = 0;

  int rows() const { return static_cast<int>(A.rows()); }
  int vars() const { return static_cast<int>(A.cols()); }
};

/// Row of the pair (i, j) in the stacked system, all 1-based:
///   nu = N + i + j - 2 + sum_{k=1}^{i-1} (N - k - 2)
/// A bijection from {(i, j) : 1 <= i < j <= N} onto {N+1, ..., N(N+1)/2}.
/// Throws std::invalid_argument unless 1 <= i < j <= N.
int pair_row_index(int i, int j, int n);

enum class ExecPolicy { Auto, Serial, Parallel };

/// Builds the constraint system at one instant. targets[i] is the landing
/// pad state of vehicle i. Landing rows of landed vehicles and of vehicles
/// inside the near-axis guard are replaced by trivially satisfied rows
/// (zero row, b = 1); sphere rows are always kept. Row contents do not
/// depend on the execution policy; the parallel path writes disjoint rows
/// and is bit-identical to the serial one.
ConstraintSystem assemble_constraints(const std::vector<UavState>& states,
                                      const std::vector<UgvState>& targets,
                                      const std::vector<LcbfParams>& lcbf,
                                      const std::vector<double>& radii,
                                      const FilterConfig& cfg,
                                      const std::vector<std::uint8_t>& landed,
                                      ExecPolicy policy = ExecPolicy::Auto);

/// Always-serial reference used by tests and the benchmark.
ConstraintSystem assemble_constraints_serial(
    const std::vector<UavState>& states, const std::vector<UgvState>& targets,
    const std::vector<LcbfParams>& lcbf, const std::vector<double>& radii,
    const FilterConfig& cfg, const std::vector<std::uint8_t>& landed);

}  // namespace uavland
