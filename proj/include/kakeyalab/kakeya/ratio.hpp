#pragma once

#include "kakeyalab/curves/curve_family.hpp"
#include "kakeyalab/deltasets/delta_set.hpp"
#include "kakeyalab/raster/rasterize.hpp"

namespace kl::kakeya {

struct RatioResult {
  double ratio = 0.0;
  double numerator = 0.0;     // ||sum chi_T||_p
  double volume_sum = 0.0;    // sum |T|, as grid mass
  double p = 0.0;             // infinity when p' = 1
  double p_prime = 0.0;       // k + beta
  double delta_factor = 0.0;  // delta^{(1-k)/p'}
  std::size_t tubes = 0;
};

struct RatioOptions {
  /// Run check_delta_s on A' with s = 2(k - 1) + beta first.
  bool verify_set = true;
  raster::RasterOptions raster;
};

/// ||sum chi_{T_y}||_p / (delta^{(1-k)/p'} (sum |T_y|)^{1/p}) over the curves
/// whose parameters (y1, y2) are the points of a_prime.
RatioResult curved_kakeya_ratio(const curves::CurveFamily& family,
                                const deltasets::DeltaSet& a_prime, double delta, int k,
                                double beta, double h, const RatioOptions& opts = {});

/// Same over explicit curve indices, without the set check.
RatioResult curved_kakeya_ratio(const curves::CurveFamily& family,
                                const std::vector<std::size_t>& curves, double delta, int k,
                                double beta, double h, const raster::RasterOptions& opts = {});

}  // namespace kl::kakeya
