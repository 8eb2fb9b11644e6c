#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace kl::cli {

/// One CSV row: a single named measurement of a run.
struct ExperimentRecord {
  std::string run_id, kind;
  int d = 0, k = 0;
  double beta = 0.0, delta = 0.0, h = 0.0, rho = 0.0;
  std::uint64_t seed = 0;
  std::string metric_name;
  double metric_value = 0.0;
  double wall_ms = 0.0;
};

inline constexpr const char* kCsvHeader =
    "run_id,kind,d,k,beta,delta,h,rho,seed,metric_name,metric_value,wall_ms";

/// Reals use 17 significant digits. ConsistencyError on a non-finite field.
std::string csv_row(const ExperimentRecord& r);
void write_csv(std::ostream& out, const std::vector<ExperimentRecord>& records);
void write_csv_file(const std::string& path, const std::vector<ExperimentRecord>& records);
std::vector<ExperimentRecord> read_csv(std::istream& in);
std::vector<ExperimentRecord> read_csv_file(const std::string& path);

}  // namespace kl::cli
