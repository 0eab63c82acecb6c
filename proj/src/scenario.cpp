#include "uavland/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

namespace uavland {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) {
    return "";
  }
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

struct RawEntry {
  std::string value;
  int line = 0;
  mutable bool used = false;
};

class RawConfig {
 public:
  RawConfig(std::istream& in, const std::string& name) : name_(name) {
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      const auto hash = line.find('#');
      if (hash != std::string::npos) {
        line = line.substr(0, hash);
      }
      line = trim(line);
      if (line.empty()) {
        continue;
      }
      const auto eq = line.find('=');
      if (eq == std::string::npos) {
        fail(lineno, "expected 'key = value'");
      }
      const std::string key = trim(line.substr(0, eq));
      const std::string value = trim(line.substr(eq + 1));
      if (key.empty() || value.empty()) {
        fail(lineno, "empty key or value");
      }
      if (entries_.count(key)) {
        fail(lineno, "duplicate key '" + key + "'");
      }
      entries_[key] = RawEntry{value, lineno, false};
    }
  }

  [[noreturn]] void fail(int line, const std::string& what) const {
    std::ostringstream msg;
    msg << name_ << ":" << line << ": " << what;
    throw ScenarioError(msg.str());
  }

  bool has(const std::string& key) const { return entries_.count(key) > 0; }

  double get_double(const std::string& key, double fallback) const {
    auto it = entries_.find(key);
    if (it == entries_.end()) {
      return fallback;
    }
    it->second.used = true;
    return parse_double(it->second);
  }

  int get_int(const std::string& key, int fallback) const {
    const double v = get_double(key, static_cast<double>(fallback));
    if (v != std::floor(v)) {
      fail(line_of(key), "expected integer for '" + key + "'");
    }
    return static_cast<int>(v);
  }

  std::string get_string(const std::string& key, const std::string& fallback) const {
    auto it = entries_.find(key);
    if (it == entries_.end()) {
      return fallback;
    }
    it->second.used = true;
    return it->second.value;
  }

  std::vector<double> get_array(const std::string& key) const {
    auto it = entries_.find(key);
    if (it == entries_.end()) {
      fail(0, "missing required key '" + key + "'");
    }
    it->second.used = true;
    const std::string& raw = it->second.value;
    if (raw.size() < 2 || raw.front() != '[' || raw.back() != ']') {
      fail(it->second.line, "expected array literal [a, b, ...] for '" + key + "'");
    }
    std::vector<double> out;
    std::string body = raw.substr(1, raw.size() - 2);
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
      item = trim(item);
      if (item.empty()) {
        fail(it->second.line, "empty array element in '" + key + "'");
      }
      out.push_back(parse_scalar(item, it->second.line, key));
    }
    return out;
  }

  Vec3 get_vec3(const std::string& key, const Vec3& fallback) const {
    if (!has(key)) {
      return fallback;
    }
    const auto arr = get_array(key);
    if (arr.size() != 3) {
      fail(line_of(key), "'" + key + "' must have exactly 3 elements");
    }
    return Vec3(arr[0], arr[1], arr[2]);
  }

  int line_of(const std::string& key) const {
    auto it = entries_.find(key);
    return it == entries_.end() ? 0 : it->second.line;
  }

  void check_all_used() const {
    for (const auto& [key, entry] : entries_) {
      if (!entry.used) {
        fail(entry.line, "unknown key '" + key + "'");
      }
    }
  }

 private:
  double parse_double(const RawEntry& entry) const {
    return parse_scalar(entry.value, entry.line, "");
  }

  double parse_scalar(const std::string& text, int line,
                      const std::string& key) const {
    std::size_t pos = 0;
    double v = 0.0;
    try {
      v = std::stod(text, &pos);
    } catch (const std::exception&) {
      fail(line, "cannot parse number '" + text + "'" +
                     (key.empty() ? "" : " in '" + key + "'"));
    }
    if (pos != text.size()) {
      fail(line, "trailing characters after number '" + text + "'");
    }
    return v;
  }

  std::string name_;
  std::map<std::string, RawEntry> entries_;
};

UgvProgram parse_program(const RawConfig& raw, const std::string& prefix,
                         double t_start) {
  UgvProgram prog;
  prog.t_start = t_start;
  prog.p0 = raw.get_vec3(prefix + "p0", Vec3::Zero());
  const std::string kind = raw.get_string(prefix + "program", "static");
  if (kind == "static") {
    prog.kind = ProgramKind::Static;
  } else if (kind == "constant") {
    prog.kind = ProgramKind::Constant;
    prog.v_const = raw.get_vec3(prefix + "vel_const", Vec3::Zero());
  } else if (kind == "cosine") {
    prog.kind = ProgramKind::Cosine;
    prog.v_const = raw.get_vec3(prefix + "vel_const", Vec3::Zero());
    prog.v_amp = raw.get_vec3(prefix + "vel_amp", Vec3::Zero());
    prog.omega = raw.get_double(prefix + "vel_omega", 0.0);
  } else if (kind == "piecewise") {
    prog.kind = ProgramKind::Piecewise;
    const auto flat = raw.get_array(prefix + "segments");
    if (flat.empty() || flat.size() % 4 != 0) {
      raw.fail(raw.line_of(prefix + "segments"),
               "'" + prefix + "segments' must be groups of [t, vx, vy, vz]");
    }
    for (std::size_t k = 0; k + 3 < flat.size(); k += 4) {
      prog.segments.push_back(
          {flat[k], Vec3(flat[k + 1], flat[k + 2], flat[k + 3])});
    }
    if (prog.segments.front().t_start != t_start) {
      raw.fail(raw.line_of(prefix + "segments"),
               "first segment must start at the scenario start time");
    }
    for (std::size_t k = 1; k < prog.segments.size(); ++k) {
      if (prog.segments[k].t_start <= prog.segments[k - 1].t_start) {
        raw.fail(raw.line_of(prefix + "segments"),
                 "segment times must be strictly increasing");
      }
    }
  } else {
    raw.fail(raw.line_of(prefix + "program"),
             "unknown program kind '" + kind + "'");
  }
  return prog;
}

}  // namespace

ScenarioConfig parse_scenario(std::istream& in, const std::string& name) {
  RawConfig raw(in, name);

  ScenarioConfig cfg;
  cfg.name = name;
  cfg.n_uavs = raw.get_int("n_uavs", 0);
  if (cfg.n_uavs < 1) {
    raw.fail(raw.line_of("n_uavs"), "n_uavs must be at least 1");
  }

  cfg.t_final = raw.get_double("t_final", cfg.t_final);
  cfg.dt_outer = raw.get_double("dt_outer", cfg.dt_outer);
  cfg.dt_inner = raw.get_double("dt_inner", cfg.dt_inner);
  cfg.controller_on_time =
      raw.get_double("controller_on_time", cfg.controller_on_time);
  cfg.landing_tolerance =
      raw.get_double("landing_tolerance", cfg.landing_tolerance);
  cfg.psi_d = raw.get_double("psi_d", cfg.psi_d);

  const std::string fidelity = raw.get_string("fidelity", "kinematic");
  if (fidelity == "kinematic") {
    cfg.fidelity = Fidelity::Kinematic;
  } else if (fidelity == "full_dynamics" || fidelity == "full") {
    cfg.fidelity = Fidelity::FullDynamics;
  } else {
    raw.fail(raw.line_of("fidelity"), "unknown fidelity '" + fidelity + "'");
  }

  cfg.filter.sigma = raw.get_double("sigma", cfg.filter.sigma);
  cfg.filter.d_tol = raw.get_double("d_tol", cfg.filter.d_tol);
  cfg.filter.qp_tol = raw.get_double("qp_tol", cfg.filter.qp_tol);
  cfg.filter.qp_max_iter = raw.get_int("qp_max_iter", cfg.filter.qp_max_iter);
  cfg.filter.rho_l = raw.get_double("rho_l", cfg.filter.rho_l);
  cfg.filter.rho_s = raw.get_double("rho_s", cfg.filter.rho_s);

  cfg.gains.kp = raw.get_double("kp", cfg.gains.kp);
  cfg.gains.kv = raw.get_double("kv", cfg.gains.kv);
  cfg.gains.k1 = raw.get_double("k1", cfg.gains.k1);
  cfg.gains.k2 = raw.get_double("k2", cfg.gains.k2);

  cfg.a_k = raw.get_double("a_k", cfg.a_k);
  cfg.b_k = raw.get_double("b_k", cfg.b_k);
  cfg.m_k = raw.get_double("m_k", cfg.m_k);

  const double mass_default = raw.get_double("mass", 1.0);
  const Vec3 inertia_default =
      raw.get_vec3("inertia", Vec3(0.01, 0.01, 0.02));
  const double radius_default = raw.get_double("radius", 0.25);
  const double alpha_default = raw.get_double("alpha", 2.0);
  const double beta_default = raw.get_double("beta", 1.0);

  for (int i = 1; i <= cfg.n_uavs; ++i) {
    const std::string prefix = "uav" + std::to_string(i) + ".";
    UavSpec spec;
    spec.params.mass = raw.get_double(prefix + "mass", mass_default);
    const Vec3 inertia_diag =
        raw.get_vec3(prefix + "inertia", inertia_default);
    spec.params.inertia = inertia_diag.asDiagonal();
    spec.params.bounding_radius =
        raw.get_double(prefix + "radius", radius_default);
    spec.lcbf.alpha = raw.get_double(prefix + "alpha", alpha_default);
    spec.lcbf.beta = raw.get_double(prefix + "beta", beta_default);
    spec.carrier = raw.get_int(prefix + "carrier", i) - 1;
    spec.target = raw.get_int(prefix + "target", i) - 1;
    if (raw.has(prefix + "p0")) {
      spec.p0_override = raw.get_vec3(prefix + "p0", Vec3::Zero());
    }
    cfg.uavs.push_back(spec);
  }

  for (int i = 1; i <= cfg.n_uavs; ++i) {
    const std::string prefix = "ugv" + std::to_string(i) + ".";
    if (!raw.has(prefix + "p0")) {
      raw.fail(0, "missing required key '" + prefix + "p0'");
    }
    cfg.ugvs.push_back(parse_program(raw, prefix, cfg.t_start()));
  }

  raw.check_all_used();
  cfg.validate();
  return cfg;
}

ScenarioConfig load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ScenarioError("cannot open scenario file '" + path + "'");
  }
  return parse_scenario(in, path);
}

void ScenarioConfig::validate() const {
  if (n_uavs < 1 || static_cast<int>(uavs.size()) != n_uavs ||
      static_cast<int>(ugvs.size()) != n_uavs) {
    throw ScenarioError(name + ": vehicle counts are inconsistent");
  }
  if (!(dt_outer > 0.0) || !(dt_inner > 0.0) || dt_inner > dt_outer) {
    throw ScenarioError(name + ": require 0 < dt_inner <= dt_outer");
  }
  if (!(t_final > 0.0) || controller_on_time < 0.0) {
    throw ScenarioError(name +
                        ": require t_final > 0 and controller_on_time >= 0");
  }
  if (!(landing_tolerance > 0.0)) {
    throw ScenarioError(name + ": landing_tolerance must be positive");
  }
  filter.validate();
  if (!(gains.kp > 0.0 && gains.kv > 0.0 && gains.k1 > 0.0 && gains.k2 > 0.0)) {
    throw ScenarioError(name + ": all gains must be positive");
  }

  double max_radius_sum = 0.0;
  for (int i = 0; i < n_uavs; ++i) {
    try {
      uavs[i].params.validate();
    } catch (const std::exception& e) {
      throw ScenarioError(name + ": uav" + std::to_string(i + 1) + ": " +
                          e.what());
    }
    if (!(uavs[i].lcbf.alpha > 0.0 && uavs[i].lcbf.beta > 0.0)) {
      throw ScenarioError(name + ": uav" + std::to_string(i + 1) +
                          ": alpha and beta must be positive");
    }
    if (uavs[i].carrier < 0 || uavs[i].carrier >= n_uavs ||
        uavs[i].target < 0 || uavs[i].target >= n_uavs) {
      throw ScenarioError(name + ": uav" + std::to_string(i + 1) +
                          ": carrier/target out of range");
    }
    for (int j = i + 1; j < n_uavs; ++j) {
      max_radius_sum =
          std::max(max_radius_sum, uavs[i].params.bounding_radius +
                                       uavs[j].params.bounding_radius);
    }
  }

  // Pad speed bound: programs must stay strictly inside the input box.
  for (int i = 0; i < n_uavs; ++i) {
    const double bound = ugvs[i].speed_bound();
    if (bound >= filter.sigma) {
      std::ostringstream msg;
      msg << name << ": ugv" << (i + 1) << " velocity program peak speed "
          << bound << " m/s violates the pad speed bound (must stay below "
          << "sigma = " << filter.sigma << " m/s)";
      throw ScenarioError(msg.str());
    }
  }

  // Pad separation: every pad pair must stay further apart than the largest
  // bounding-radius sum, sampled on the simulation grid.
  if (n_uavs >= 2) {
    const int n_ticks =
        static_cast<int>(std::lround((t_final - t_start()) / dt_outer));
    for (int k = 0; k <= n_ticks; ++k) {
      const double t = t_start() + k * dt_outer;
      for (int i = 0; i < n_uavs; ++i) {
        for (int j = i + 1; j < n_uavs; ++j) {
          const double dist =
              (ugv_state_at(ugvs[i], t).p - ugv_state_at(ugvs[j], t).p).norm();
          if (dist <= max_radius_sum) {
            std::ostringstream msg;
            msg << name << ": ugv" << (i + 1) << " and ugv" << (j + 1)
                << " separation " << dist << " m at t = " << t
                << " s violates the pad separation invariant (must exceed "
                << max_radius_sum << " m, the largest bounding radius sum)";
            throw ScenarioError(msg.str());
          }
        }
      }
    }
  }
}

void apply_param(ScenarioConfig& cfg, const std::string& name, double value) {
  if (name == "alpha") {
    for (auto& u : cfg.uavs) u.lcbf.alpha = value;
  } else if (name == "beta") {
    for (auto& u : cfg.uavs) u.lcbf.beta = value;
  } else if (name == "rho_l") {
    cfg.filter.rho_l = value;
  } else if (name == "rho_s") {
    cfg.filter.rho_s = value;
  } else if (name == "rho") {
    cfg.filter.rho_l = value;
    cfg.filter.rho_s = value;
  } else if (name == "sigma") {
    cfg.filter.sigma = value;
  } else if (name == "kp") {
    cfg.gains.kp = value;
  } else if (name == "kv") {
    cfg.gains.kv = value;
  } else {
    throw ScenarioError("unknown sweep parameter '" + name + "'");
  }
}

}  // namespace uavland
