#include "uavland/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace uavland {

std::size_t SweepGrid::cells() const {
  if (names.empty()) {
    return 0;
  }
  std::size_t total = 1;
  for (const auto& v : values) {
    total *= v.size();
  }
  return total;
}

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t");
  if (begin == std::string::npos) {
    return "";
  }
  const auto end = s.find_last_not_of(" \t");
  return s.substr(begin, end - begin + 1);
}

}  // namespace

SweepGrid parse_grid(const std::string& spec) {
  SweepGrid grid;
  std::stringstream ss(spec);
  std::string clause;
  while (std::getline(ss, clause, ';')) {
    clause = trim(clause);
    if (clause.empty()) {
      continue;
    }
    const auto eq = clause.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("grid clause '" + clause +
                                  "' is not name=v1,v2,...");
    }
    const std::string name = trim(clause.substr(0, eq));
    std::vector<double> vals;
    std::stringstream vs(clause.substr(eq + 1));
    std::string item;
    while (std::getline(vs, item, ',')) {
      item = trim(item);
      if (item.empty()) {
        throw std::invalid_argument("empty value in grid clause '" + clause + "'");
      }
      vals.push_back(std::stod(item));
    }
    if (name.empty() || vals.empty()) {
      throw std::invalid_argument("malformed grid clause '" + clause + "'");
    }
    grid.names.push_back(name);
    grid.values.push_back(std::move(vals));
  }
  return grid;
}

std::string breach_reason(const SafetyMetrics& metrics, Fidelity fidelity) {
  if (metrics.halted) {
    return metrics.halt_reason.empty() ? "run halted" : metrics.halt_reason;
  }
  const double lcbf_floor = fidelity == Fidelity::Kinematic ? -1e-6 : -0.05;
  const double scbf_floor = fidelity == Fidelity::Kinematic ? 0.0 : -0.05;
  std::ostringstream msg;
  for (std::size_t r = 0; r < metrics.min_scbf.size(); ++r) {
    if (metrics.min_scbf[r] < scbf_floor) {
      msg << "pair barrier " << r << " dipped to " << metrics.min_scbf[r];
      return msg.str();
    }
  }
  for (std::size_t i = 0; i < metrics.min_lcbf_after_crossing.size(); ++i) {
    const double v = metrics.min_lcbf_after_crossing[i];
    if (!std::isnan(v) && v < lcbf_floor) {
      msg << "landing barrier " << (i + 1) << " dipped to " << v
          << " after crossing zero";
      return msg.str();
    }
  }
  return "";
}

std::vector<SweepCell> run_sweep(const ScenarioConfig& base,
                                 const SweepGrid& grid) {
  const std::size_t total = grid.cells();
  std::vector<SweepCell> cells(total);

#pragma omp parallel for schedule(dynamic)
  for (long long idx = 0; idx < static_cast<long long>(total); ++idx) {
    SweepCell& cell = cells[idx];
    cell.index = static_cast<std::size_t>(idx);
    std::size_t rest = static_cast<std::size_t>(idx);
    for (std::size_t p = 0; p < grid.names.size(); ++p) {
      const auto& vals = grid.values[p];
      cell.params.emplace_back(grid.names[p], vals[rest % vals.size()]);
      rest /= vals.size();
    }
    try {
      ScenarioConfig cfg = base;
      for (const auto& [name, value] : cell.params) {
        apply_param(cfg, name, value);
      }
      cfg.validate();
      const SimLog log = run_scenario(cfg);
      cell.metrics = safety_metrics(log);
      if (cell.metrics.halted) {
        cell.status = "infeasible";
        cell.detail = cell.metrics.halt_reason;
      } else {
        cell.detail = breach_reason(cell.metrics, cfg.fidelity);
        cell.status = cell.detail.empty() ? "ok" : "breach";
      }
    } catch (const std::exception& e) {
      cell.status = "error";
      cell.detail = e.what();
    }
  }
  return cells;
}

void write_sweep_summary(const std::vector<SweepCell>& cells,
                         const SweepGrid& grid, const std::string& path) {
  std::FILE* f = std::fopen(path.c_str(), "w");
  if (!f) {
    throw std::runtime_error("cannot open '" + path + "' for writing");
  }
  std::fputs("cell", f);
  for (const auto& name : grid.names) {
    std::fprintf(f, ",%s", name.c_str());
  }
  std::fputs(
      ",status,touchdown_last,min_lcbf_after_crossing,min_scbf,"
      "min_pair_distance,max_deviation\n",
      f);
  for (const auto& cell : cells) {
    std::fprintf(f, "%zu", cell.index);
    for (const auto& [name, value] : cell.params) {
      (void)name;
      std::fprintf(f, ",%.17g", value);
    }
    double touchdown_last = std::numeric_limits<double>::quiet_NaN();
    double min_lcbf = std::numeric_limits<double>::quiet_NaN();
    for (const double t : cell.metrics.touchdown_time) {
      if (std::isnan(t)) {
        touchdown_last = std::numeric_limits<double>::quiet_NaN();
        break;
      }
      touchdown_last = std::isnan(touchdown_last) ? t : std::max(touchdown_last, t);
    }
    for (const double v : cell.metrics.min_lcbf_after_crossing) {
      if (!std::isnan(v) && (std::isnan(min_lcbf) || v < min_lcbf)) {
        min_lcbf = v;
      }
    }
    std::fprintf(f, ",%s,%.17g,%.17g,%.17g,%.17g,%.17g\n", cell.status.c_str(),
                 touchdown_last, min_lcbf, cell.metrics.min_scbf_overall,
                 cell.metrics.min_pair_distance,
                 cell.metrics.max_filter_deviation);
  }
  std::fclose(f);
}

}  // namespace uavland
