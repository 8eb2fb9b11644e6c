#pragma once

#include <cstdint>
#include <optional>

#include "kakeyalab/curves/curve_family.hpp"

namespace kl::curves {

/// max over curves and a uniform c-grid of |P| + |P'| + |P''|.
double regularity_estimate(const CurveFamily& family, int c_grid_size);

struct TransversalityEstimate {
  /// Empty when every sampled pair was degenerate.
  std::optional<double> m_hat;
  std::size_t pairs_used = 0;
  std::size_t pairs_skipped = 0;
};

/// Minimum over sampled pairs of D(c) / D(c'), where
/// D(c) = |P_y(c) - P_y'(c)| + |e_y(c) - e_y'(c)|. The numerator heights and
/// denominator heights are two independent samples of size c_samples;
/// swap_roles exchanges them.
TransversalityEstimate transversality_estimate(const CurveFamily& family, int pair_samples,
                                               int c_samples, std::uint64_t seed,
                                               bool swap_roles = false);

/// Position-plus-direction separation D(c) of curves i and j.
double curve_separation(const CurveFamily& family, std::size_t i, std::size_t j, double c);

}  // namespace kl::curves
