#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace kl::cli {

/// One experiment. Keys, defaults and ranges are listed by config_keys().
struct ExperimentConfig {
  std::string kind;  // curved-kakeya | mlk | broadnarrow | boxdim | sharpness | lift | pipeline
  int d = 0;
  int k = 0;
  double beta = 1.0;
  std::vector<double> deltas;  // strictly decreasing dyadic scales
  double h_ratio = 4.0;        // h = delta / h_ratio, in {2, 4, 8}
  double rho = 0.0625;
  std::string family = "lines";  // lines | parabolas | geodesic-<chart> | file:<path>
  int tubes = 64;
  double bend = 1.0;
  std::uint64_t seed = 1;
  std::string out = "out";
  std::string geometry = "sphere";  // sharpness
  int depth = 6;                    // Cantor depth
  double spacing = 0x1p-5;          // sharpness sampling
  std::string fixture = "cantor";   // boxdim: cantor | segment | point
  std::string lift_set = "cantor";  // lift: line | cantor | circle
  double eps = 0.05;                // pipeline exponent loss
  double h_min = 0x1p-6, h_max = 0.5;  // box-counting window
  bool record_wall_time = false;

  /// Every key in sorted order with canonical values; the run id hashes it.
  std::string normalized() const;
  /// 16 hex digits of the FNV-1a hash of normalized().
  std::string run_id() const;
};

struct KeyDoc {
  std::string key, default_value, description;
};
const std::vector<KeyDoc>& config_keys();

/// Parses key=value lines ('#' starts a comment). Throws ValidationError
/// naming the line for unknown keys, malformed or out-of-range values.
ExperimentConfig validate_config(const std::string& text);
ExperimentConfig load_config(const std::string& path);

/// Parses "2^-j" or a decimal; ValidationError unless it is 2^-j, j >= 1.
double parse_dyadic(const std::string& text);

std::uint64_t fnv1a(const std::string& text);

}  // namespace kl::cli
