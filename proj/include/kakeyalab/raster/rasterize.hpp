#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <vector>

#include "kakeyalab/curves/curve_family.hpp"
#include "kakeyalab/raster/tube_grid.hpp"

namespace kl::raster {

inline constexpr std::uint64_t kDefaultCellBudget = std::uint64_t{1} << 28;

struct RasterOptions {
  std::uint64_t cell_budget = kDefaultCellBudget;
  const Mask* mask = nullptr;
};

inline double default_h(double delta) { return delta / 4.0; }

/// ResourceError (naming the smallest admissible dyadic h) when the full
/// grid of side h in dimension d exceeds `budget` cells.
void check_cell_budget(int d, double h, std::uint64_t budget);

/// Sum over `params` of the indicators of the curved tubes
/// {x : |x' - P_y(x_d)| <= delta}, sampled at cell centres.
TubeGrid rasterize_tubes(const curves::CurveFamily& family, const std::vector<std::size_t>& params,
                         double delta, double h, const RasterOptions& opts = {});

/// All curves of the family.
TubeGrid rasterize_family(const curves::CurveFamily& family, double delta, double h,
                          const RasterOptions& opts = {});

/// Rasterized volume of one tube.
double tube_measure(const curves::CurveFamily& family, std::size_t y, double delta, double h,
                    const RasterOptions& opts = {});

/// Tube-sum field split by direction class. cap_of(y, e) names the class of
/// tube y at a cell whose centre height gives tangent e.
struct AttributedGrid {
  TubeGrid grid;
  /// CSR over occupied cells in grid order: entries offsets[i] .. offsets[i+1].
  std::vector<std::uint32_t> offsets;
  std::vector<std::uint64_t> caps;
  std::vector<std::uint32_t> cap_counts;
};

using CapOf = std::function<std::uint64_t(std::size_t tube, const Eigen::VectorXd& tangent)>;

AttributedGrid rasterize_attributed(const curves::CurveFamily& family,
                                    const std::vector<std::size_t>& params, double delta, double h,
                                    const CapOf& cap_of, const RasterOptions& opts = {});

}  // namespace kl::raster
