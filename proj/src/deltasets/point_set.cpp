#include "kakeyalab/deltasets/point_set.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "kakeyalab/error.hpp"

namespace kl::deltasets {

PointSet::PointSet(int n, std::vector<double> data) : dim(n), coords(std::move(data)) {
  if (n < 1 || coords.size() % n != 0) throw DomainError("point data does not match dimension");
}

void PointSet::push(std::span<const double> p) {
  if (static_cast<int>(p.size()) != dim) throw DomainError("point has the wrong dimension");
  coords.insert(coords.end(), p.begin(), p.end());
}

double distance(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double t = a[k] - b[k];
    s += t * t;
  }
  return std::sqrt(s);
}

double PointSet::distance(std::size_t i, std::size_t j) const {
  return deltasets::distance((*this)[i], (*this)[j]);
}

double PointSet::diameter_bound() const {
  if (size() < 2) return 0.0;
  double extent = 0.0;
  for (int k = 0; k < dim; ++k) {
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (std::size_t i = 0; i < size(); ++i) {
      lo = std::min(lo, (*this)[i][k]);
      hi = std::max(hi, (*this)[i][k]);
    }
    extent = std::max(extent, hi - lo);
  }
  return extent * std::sqrt(static_cast<double>(dim));
}

ColumnarTable points_to_table(const PointSet& points, const std::string& kind,
                              std::vector<std::pair<std::string, std::string>> meta) {
  ColumnarTable t;
  t.kind = kind;
  t.meta = std::move(meta);
  t.meta.emplace_back("n", std::to_string(points.dim));
  t.meta.emplace_back("points", std::to_string(points.size()));
  for (int k = 0; k < points.dim; ++k) t.columns.push_back("x" + std::to_string(k));
  t.values = points.coords;
  return t;
}

PointSet points_from_table(const ColumnarTable& table) {
  const int n = static_cast<int>(table.meta_int("n"));
  if (n < 1 || static_cast<int>(table.columns.size()) != n)
    throw ValidationError("point table column count does not match n");
  if (static_cast<long long>(table.rows()) != table.meta_int("points"))
    throw ValidationError("point table row count does not match the header");
  return PointSet(n, table.values);
}

}  // namespace kl::deltasets
