#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "kakeyalab/raster/rasterize.hpp"
#include "kakeyalab/raster/tube_grid.hpp"

namespace kl::raster {

/// {x : |(x - a) . u| <= half_length, dist(x, a + R u) <= radius}.
struct StraightTube {
  Eigen::VectorXd a, u;
  double half_length = 1.0;
  double radius = 0.0;

  bool contains(const Eigen::VectorXd& x) const;
};

/// Sorted linear indices of the cells of side h over [-1, 1]^d whose centres
/// lie in the tube.
std::vector<std::uint64_t> straight_tube_cells(const StraightTube& tube, double h);

TubeGrid rasterize_straight(const std::vector<StraightTube>& tubes, double h,
                            const RasterOptions& opts = {});

/// Cells with the list of tubes containing them (CSR in grid order).
struct TubeIncidence {
  TubeGrid grid;
  std::vector<std::uint32_t> offsets;
  std::vector<std::uint32_t> tubes;
};

TubeIncidence straight_incidence(const std::vector<StraightTube>& tubes, int d, double h,
                                 const RasterOptions& opts = {});

}  // namespace kl::raster
