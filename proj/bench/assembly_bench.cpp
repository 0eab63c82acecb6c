// Compares the serial reference constraint assembly against the
// OpenMP-parallel kernel over growing fleet sizes and verifies that both
// produce bit-identical systems.

#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#include <omp.h>

#include "uavland/constraints.hpp"

using namespace uavland;

namespace {

struct Instance {
  std::vector<UavState> states;
  std::vector<UgvState> targets;
  std::vector<LcbfParams> lcbf;
  std::vector<double> radii;
  std::vector<std::uint8_t> landed;
};

Instance make_instance(int n, std::mt19937& rng) {
  std::uniform_real_distribution<double> pos(-50.0, 50.0);
  std::uniform_real_distribution<double> vel(-0.3, 0.3);
  Instance inst;
  inst.states.resize(n);
  inst.targets.resize(n);
  inst.lcbf.assign(n, LcbfParams{});
  inst.radii.assign(n, 0.25);
  inst.landed.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    inst.states[i].p = Vec3(pos(rng), pos(rng), pos(rng) * 0.1 + 6.0);
    inst.targets[i].p = Vec3(pos(rng), pos(rng), 0.1);
    inst.targets[i].v = Vec3(vel(rng), vel(rng), 0.0);
  }
  return inst;
}

double time_assembly(const Instance& inst, const FilterConfig& cfg,
                     ExecPolicy policy, int reps) {
  using clock = std::chrono::high_resolution_clock;
  const auto t0 = clock::now();
  for (int r = 0; r < reps; ++r) {
    volatile double sink =
        assemble_constraints(inst.states, inst.targets, inst.lcbf, inst.radii,
                             cfg, inst.landed, policy)
            .b.sum();
    (void)sink;
  }
  const auto t1 = clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

}  // namespace

int main() {
  std::mt19937 rng(7);
  FilterConfig cfg;
  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("%6s %8s %12s %12s %9s %6s\n", "N", "rows", "serial[ms]",
              "parallel[ms]", "speedup", "equal");

  bool all_equal = true;
  for (const int n : {8, 16, 32, 64, 96}) {
    const Instance inst = make_instance(n, rng);
    const ConstraintSystem ref = assemble_constraints_serial(
        inst.states, inst.targets, inst.lcbf, inst.radii, cfg, inst.landed);
    const ConstraintSystem par =
        assemble_constraints(inst.states, inst.targets, inst.lcbf, inst.radii,
                             cfg, inst.landed, ExecPolicy::Parallel);
    const bool equal = ref.A == par.A && ref.b == par.b;
    all_equal = all_equal && equal;

    const int reps = n <= 32 ? 2000 : 500;
    const double ms_serial = time_assembly(inst, cfg, ExecPolicy::Serial, reps);
    const double ms_parallel =
        time_assembly(inst, cfg, ExecPolicy::Parallel, reps);
    std::printf("%6d %8d %12.4f %12.4f %8.2fx %6s\n", n, ref.rows(), ms_serial,
                ms_parallel, ms_serial / ms_parallel, equal ? "yes" : "NO");
  }
  if (!all_equal) {
    std::printf("ERROR: serial and parallel assemblies differ\n");
    return 1;
  }
  return 0;
}
