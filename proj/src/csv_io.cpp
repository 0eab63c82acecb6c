#include "uavland/csv_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace uavland {

namespace {

class CsvWriter {
 public:
  explicit CsvWriter(const std::string& path) : file_(std::fopen(path.c_str(), "w")) {
    if (!file_) {
      throw std::runtime_error("cannot open '" + path + "' for writing");
    }
  }
  ~CsvWriter() {
    if (file_) {
      std::fclose(file_);
    }
  }
  CsvWriter(const CsvWriter&) = delete;
  CsvWriter& operator=(const CsvWriter&) = delete;

  void raw(const char* text) { std::fputs(text, file_); }
  void number(double v) { std::fprintf(file_, "%.17g", v); }
  void integer(int v) { std::fprintf(file_, "%d", v); }
  void sep() { std::fputc(',', file_); }
  void end_row() { std::fputc('\n', file_); }

 private:
  std::FILE* file_;
};

double parse_double_field(const std::string& field, const std::string& path) {
  std::size_t pos = 0;
  const double v = std::stod(field, &pos);
  if (pos != field.size()) {
    throw std::runtime_error(path + ": malformed numeric field '" + field + "'");
  }
  return v;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string item;
  while (std::getline(ss, item, ',')) {
    out.push_back(item);
  }
  return out;
}

}  // namespace

void write_states_csv(const SimLog& log, const std::string& path) {
  CsvWriter w(path);
  w.raw("time,uav_id,px,py,pz,vx,vy,vz\n");
  for (const auto& tick : log.ticks) {
    for (int i = 0; i < log.n_uavs; ++i) {
      const UavState& s = tick.uavs[i];
      w.number(tick.t);
      w.sep();
      w.integer(i + 1);
      for (int c = 0; c < 3; ++c) {
        w.sep();
        w.number(s.p(c));
      }
      for (int c = 0; c < 3; ++c) {
        w.sep();
        w.number(s.v(c));
      }
      w.end_row();
    }
  }
}

void write_barriers_csv(const SimLog& log, const std::string& path) {
  CsvWriter w(path);
  w.raw("time,name,value\n");
  for (const auto& tick : log.ticks) {
    for (std::size_t r = 0; r < log.barrier_names.size(); ++r) {
      w.number(tick.t);
      w.sep();
      w.raw(log.barrier_names[r].c_str());
      w.sep();
      w.number(tick.h[r]);
      w.end_row();
    }
  }
}

void write_inputs_csv(const SimLog& log, const std::string& path) {
  CsvWriter w(path);
  w.raw("time,uav_id,unom_x,unom_y,unom_z,ustar_x,ustar_y,ustar_z\n");
  for (const auto& tick : log.ticks) {
    for (int i = 0; i < log.n_uavs; ++i) {
      w.number(tick.t);
      w.sep();
      w.integer(i + 1);
      for (int c = 0; c < 3; ++c) {
        w.sep();
        w.number(tick.u_nom(3 * i + c));
      }
      for (int c = 0; c < 3; ++c) {
        w.sep();
        w.number(tick.u_star(3 * i + c));
      }
      w.end_row();
    }
  }
}

void write_metrics_json(const SafetyMetrics& metrics, bool safe,
                        const std::string& breach_reason,
                        const std::string& path) {
  nlohmann::json j;
  j["safe"] = safe;
  j["breach_reason"] = breach_reason.empty()
                           ? nlohmann::json()
                           : nlohmann::json(breach_reason);
  j["halted"] = metrics.halted;
  j["halt_reason"] = metrics.halt_reason.empty()
                         ? nlohmann::json()
                         : nlohmann::json(metrics.halt_reason);
  j["all_landed"] = metrics.all_landed;
  j["touchdown_times"] = metrics.touchdown_time;
  j["min_lcbf_after_crossing"] = metrics.min_lcbf_after_crossing;
  j["min_scbf_per_pair"] = metrics.min_scbf;
  j["min_scbf"] = metrics.min_scbf_overall;
  j["min_pair_distance"] = metrics.min_pair_distance;
  j["max_filter_deviation"] = metrics.max_filter_deviation;

  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot open '" + path + "' for writing");
  }
  out << j.dump(2) << "\n";
}

std::vector<StateRow> read_states_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open '" + path + "'");
  }
  std::string line;
  if (!std::getline(in, line) || line != "time,uav_id,px,py,pz,vx,vy,vz") {
    throw std::runtime_error(path + ": unexpected states header");
  }
  std::vector<StateRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) {
      continue;
    }
    const auto fields = split_csv_line(line);
    if (fields.size() != 8) {
      throw std::runtime_error(path + ": expected 8 fields per states row");
    }
    StateRow row;
    row.t = parse_double_field(fields[0], path);
    row.uav = static_cast<int>(parse_double_field(fields[1], path));
    for (int c = 0; c < 3; ++c) {
      row.p(c) = parse_double_field(fields[2 + c], path);
      row.v(c) = parse_double_field(fields[5 + c], path);
    }
    rows.push_back(row);
  }
  return rows;
}

std::vector<BarrierRow> read_barriers_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open '" + path + "'");
  }
  std::string line;
  if (!std::getline(in, line) || line != "time,name,value") {
    throw std::runtime_error(path + ": unexpected barriers header");
  }
  std::vector<BarrierRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) {
      continue;
    }
    const auto fields = split_csv_line(line);
    if (fields.size() != 3) {
      throw std::runtime_error(path + ": expected 3 fields per barriers row");
    }
    rows.push_back({parse_double_field(fields[0], path), fields[1],
                    parse_double_field(fields[2], path)});
  }
  return rows;
}

}  // namespace uavland
