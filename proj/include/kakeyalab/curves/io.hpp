#pragma once

#include <string>

#include "kakeyalab/columnar.hpp"
#include "kakeyalab/curves/curve_family.hpp"

namespace kl::curves {

/// One row per (curve, c-grid node): index, y1, y2, c, P(c), P'(c).
ColumnarTable family_to_table(const CurveFamily& family, int c_grid_size = 257);
/// Rebuilds a family of SampledProfile curves.
CurveFamily family_from_table(const ColumnarTable& table);

void write_family(const std::string& path, const CurveFamily& family, int c_grid_size = 257);
CurveFamily read_family(const std::string& path);

}  // namespace kl::curves
