#pragma once

#include <optional>
#include <vector>

#include "kakeyalab/deltasets/line_space.hpp"
#include "kakeyalab/deltasets/point_set.hpp"
#include "kakeyalab/raster/tube_grid.hpp"

namespace kl::dimension {

struct BoxCountRecord {
  std::vector<double> scales;               // dyadic sides, coarse to fine
  std::vector<std::uint64_t> counts;        // occupied cells per scale
  std::size_t fit_begin = 0, fit_end = 0;   // scales used by the fit
  double slope = 0.0;
  double intercept = 0.0;
  std::optional<double> r2;
  double residual_max = 0.0;
};

struct BoxCountOptions {
  /// Drop the coarsest and finest scale when at least five are available.
  bool trim_ends = true;
};

/// Occupied cells of the dyadic grids 2^{-j} Z^n (cells aligned at the
/// origin) for every dyadic side in [h_min, h_max], and the least-squares
/// slope of log N against log(1/h). InsufficientDataError below 3 scales.
BoxCountRecord box_dimension(const deltasets::PointSet& points, double h_min, double h_max,
                             const BoxCountOptions& opts = {});

/// Same on the centres of the occupied cells of a grid.
BoxCountRecord box_dimension(const raster::TubeGrid& grid, double h_min, double h_max,
                             const BoxCountOptions& opts = {});

/// Streaming counter over a fixed dyadic ladder; points are not stored.
/// Cells are keyed exactly (dimension <= 8, |index| < 2^15).
class BoxCounter {
 public:
  BoxCounter(int dim, double h_min, double h_max);
  void add(const double* x);
  std::size_t points() const { return points_; }
  BoxCountRecord finish(const BoxCountOptions& opts = {}) const;

 private:
  int dim_;
  std::vector<double> scales_;
  // Finest-scale cells only; coarser cells are exact halvings of these.
  mutable std::vector<unsigned __int128> keys_;
  std::size_t limit_ = std::size_t{1} << 22;
  std::size_t points_ = 0;
};

/// Number of occupied cells of side h.
std::uint64_t count_cells(const deltasets::PointSet& points, double h);

struct LiftOptions {
  double t0 = -1.0, t1 = 1.0;
  int samples = 512;
  double h_min = 0x1p-9, h_max = 0x1p-2;
};

struct LiftCheck {
  BoxCountRecord lines;  // A in the (x, v) coordinates
  BoxCountRecord lift;   // S(A): the sampled lines in R^{2d}
  double dim_a = 0.0, dim_sa = 0.0, difference = 0.0;
};

LiftCheck lift_dimension_check(const std::vector<deltasets::Line>& lines, const LiftOptions& opts = {});

}  // namespace kl::dimension
