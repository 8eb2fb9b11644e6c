#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "kakeyalab/columnar.hpp"

namespace kl::deltasets {

/// Finite point cloud in R^n, stored row-major.
struct PointSet {
  int dim = 0;
  std::vector<double> coords;

  PointSet() = default;
  explicit PointSet(int n) : dim(n) {}
  PointSet(int n, std::vector<double> data);

  std::size_t size() const { return dim == 0 ? 0 : coords.size() / dim; }
  bool empty() const { return coords.empty(); }
  std::span<const double> operator[](std::size_t i) const { return {coords.data() + i * dim, std::size_t(dim)}; }
  void push(std::span<const double> p);
  double distance(std::size_t i, std::size_t j) const;
  /// Largest coordinate-wise extent times sqrt(n); an upper bound on the diameter.
  double diameter_bound() const;
};

double distance(std::span<const double> a, std::span<const double> b);

ColumnarTable points_to_table(const PointSet& points, const std::string& kind,
                              std::vector<std::pair<std::string, std::string>> meta = {});
PointSet points_from_table(const ColumnarTable& table);

}  // namespace kl::deltasets
