#include "kakeyalab/cli/csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "kakeyalab/error.hpp"

namespace kl::cli {

namespace {

std::string real(double v, const char* what) {
  if (!std::isfinite(v)) throw ConsistencyError(std::string("non-finite ") + what + " in CSV row");
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::string csv_row(const ExperimentRecord& r) {
  std::string s = r.run_id + "," + r.kind + "," + std::to_string(r.d) + "," + std::to_string(r.k) + ",";
  s += real(r.beta, "beta") + "," + real(r.delta, "delta") + "," + real(r.h, "h") + "," +
       real(r.rho, "rho") + ",";
  s += std::to_string(r.seed) + "," + r.metric_name + "," + real(r.metric_value, r.metric_name.c_str()) +
       "," + real(r.wall_ms, "wall_ms");
  return s;
}

void write_csv(std::ostream& out, const std::vector<ExperimentRecord>& records) {
  out << kCsvHeader << "\n";
  for (const auto& r : records) out << csv_row(r) << "\n";
}

void write_csv_file(const std::string& path, const std::vector<ExperimentRecord>& records) {
  std::ostringstream ss;
  write_csv(ss, records);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out << ss.str();
  if (!out) throw IoError("write failed: " + path);
}

std::vector<ExperimentRecord> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) throw IoError("missing or unexpected CSV header");
  std::vector<ExperimentRecord> out;
  int no = 1;
  while (std::getline(in, line)) {
    ++no;
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) f.push_back(cell);
    if (f.size() != 12) throw IoError("CSV line " + std::to_string(no) + ": expected 12 fields");
    try {
      ExperimentRecord r;
      r.run_id = f[0];
      r.kind = f[1];
      r.d = std::stoi(f[2]);
      r.k = std::stoi(f[3]);
      r.beta = std::stod(f[4]);
      r.delta = std::stod(f[5]);
      r.h = std::stod(f[6]);
      r.rho = std::stod(f[7]);
      r.seed = std::stoull(f[8]);
      r.metric_name = f[9];
      r.metric_value = std::stod(f[10]);
      r.wall_ms = std::stod(f[11]);
      out.push_back(r);
    } catch (const std::logic_error&) {
      throw IoError("CSV line " + std::to_string(no) + ": malformed field");
    }
  }
  return out;
}

std::vector<ExperimentRecord> read_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path);
  return read_csv(in);
}

}  // namespace kl::cli
