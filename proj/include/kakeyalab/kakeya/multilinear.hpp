#pragma once

#include <vector>

#include "kakeyalab/raster/straight.hpp"

namespace kl::kakeya {

struct MultilinearResult {
  /// Grid value of ∫ (sum over tuples of prod chi_{T_j} |e(T_1) ∧ ... ∧ e(T_{k+1})|)^{1/k}.
  double integral = 0.0;
  /// integral / (delta^d prod_j (#T_j)^{1/k}).
  double normalized = 0.0;
  std::size_t cells = 0;  // cells where every family is present
};

/// k + 1 = families.size() families of straight tubes in R^d (k >= 1), on the
/// grid of side h. Cells count where their centre lies in the tubes.
MultilinearResult multilinear_kakeya_integral(const std::vector<std::vector<raster::StraightTube>>& families,
                                              double delta, double h,
                                              const raster::RasterOptions& opts = {});

/// Integral of (prod_j f_j)^{1/k} for k + 1 count fields on one lattice,
/// without direction weights, and its normalization by
/// delta^d prod (#family_j)^{1/k}.
MultilinearResult product_integral(const std::vector<raster::TubeGrid>& fields,
                                   const std::vector<std::size_t>& family_sizes, double delta);

}  // namespace kl::kakeya
