#pragma once

#include <string>
#include <vector>

#include "kakeyalab/cli/config.hpp"
#include "kakeyalab/cli/csv.hpp"
#include "kakeyalab/curves/curve_family.hpp"
#include "kakeyalab/deltasets/delta_set.hpp"
#include "kakeyalab/error.hpp"
#include "kakeyalab/raster/straight.hpp"
#include "kakeyalab/raster/tube_grid.hpp"
#include "kakeyalab/rng.hpp"

namespace kl::cli {

/// 0 success, 2 validation, 3 resource, 4 consistency.
int exit_code_for(ErrorKind kind);

/// Curve family from a builtin name (lines, parabolas, geodesic-<chart>)
/// over the given parameters, or the curves of file:<path>.
curves::CurveFamily make_family(const std::string& name, int d, const std::vector<curves::Param>& params,
                                double bend = 1.0);

/// (delta, 2(k-1) + beta)-set of parameters (y1, y2): Frostman extraction
/// from a Cantor(beta) segment times a 2(k-1)-cube, embedded in R^{2(d-1)}
/// along a fixed generic frame.
deltasets::DeltaSet generic_parameter_set(int d, int k, double beta, double delta);

std::vector<curves::Param> to_params(const deltasets::DeltaSet& set, int d);

/// k + 1 families of `count` straight tubes of radius delta along an
/// orthonormal frame, axes offset uniformly in [-4 delta, 4 delta].
std::vector<std::vector<raster::StraightTube>> orthogonal_tube_families(int d, int k, int count,
                                                                        double delta, Rng& rng);

/// Dispatches on config.kind. Identical configs give identical records
/// (wall_ms aside, which stays 0 unless record_wall_time).
std::vector<ExperimentRecord> run_experiment(const ExperimentConfig& config);

struct RunOutput {
  std::string run_id, csv_path, config_path;
  std::size_t rows = 0;
};

/// run_experiment, then <out>/<run_id>.csv and <out>/runs/<run_id>.cfg.
RunOutput run_and_write(const ExperimentConfig& config);

/// Replays <out>/runs/<run_id>.cfg and writes the grid of its finest scale
/// to <out>/grids/<run_id>.grid (and .dense when d = 2). Returns the paths.
std::vector<std::string> export_grid(const std::string& run_id, const std::string& out_dir);

struct FixtureDoc {
  std::string group, name, description;
};
const std::vector<FixtureDoc>& fixtures();

}  // namespace kl::cli
