#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "kakeyalab/deltasets/delta_set.hpp"

namespace kl::deltasets {

/// Union of cubes origin + delta [idx, idx + 1) with delta = 2^-k, each with
/// one representative point (the cube centre unless given).
struct DyadicCells {
  int dim = 0;
  double delta = 0.0;
  std::vector<double> origin;
  std::vector<std::int64_t> index;  // cells x dim
  std::optional<PointSet> representatives;
  /// Index of the input point each cell came from (from_points only).
  std::vector<std::size_t> source;

  std::size_t size() const { return dim == 0 ? 0 : index.size() / dim; }
  std::vector<double> center(std::size_t i) const;
  std::vector<double> representative(std::size_t i) const;

  /// Distinct cells containing the points, sorted lexicographically. With
  /// keep_points, the first point in each cell becomes its representative.
  static DyadicCells from_points(const PointSet& points, double delta, std::vector<double> origin,
                                 bool keep_points = false);
};

/// Bottom-up dyadic s-content: a leaf weighs delta^s and a cube of side l
/// weighs min(l^s, sum over its children).
double dyadic_content(const DyadicCells& cells, double s);

struct FrostmanResult {
  DeltaSet set;
  std::vector<std::size_t> cells;  // selected cell indices, in selection order
  double content = 0.0;            // dyadic_content
  /// #P / (content * delta^-s).
  double c_impl = 0.0;
};

/// Depth-first walk of the dyadic tree (children in lexicographic order)
/// that accepts a cell when every ancestor cube of side l holds fewer than
/// floor((l / delta)^s) selected points (skipped for s >= n) and adding its
/// representative keeps the set separated with open-ball counts
/// <= (r / delta)^s at every dyadic radius. The result always passes
/// check_delta_s.
FrostmanResult frostman_extract(const DyadicCells& cells, double s);

/// Throws DomainError unless delta = 2^-k for an integer k >= 0; returns k.
int dyadic_level(double delta);

}  // namespace kl::deltasets
