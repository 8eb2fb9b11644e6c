#pragma once

#include <optional>

#include "kakeyalab/deltasets/point_set.hpp"

namespace kl::deltasets {

/// Finite delta-separated set with non-concentration exponent s.
struct DeltaSet {
  PointSet points;
  double delta = 0.0;
  double s = 0.0;
};

struct BallWitness {
  std::size_t center = 0;  // index into the point set
  double radius = 0.0;
  std::size_t count = 0;
  double bound = 0.0;  // constant * (radius / delta)^s
};

struct DeltaCheck {
  bool ok = true;
  bool separated = true;
  /// Closest pair when separation fails.
  std::optional<std::pair<std::size_t, std::size_t>> close_pair;
  /// Ball with the largest count / bound ratio (null for an empty set).
  std::optional<BallWitness> witness;
  /// Factor lost by restricting centers to the points and radii to dyadic
  /// multiples of delta: 2^s.
  double slack = 1.0;
};

/// Relative tolerance on the separation test |p - q| >= delta.
inline constexpr double kSeparationTolerance = 1e-9;

/// Separation plus #{q : |q - x| < r} <= constant (r / delta)^s for x in the
/// set and r = delta 2^j up to the diameter. Balls are open.
DeltaCheck check_delta_s(const PointSet& points, double delta, double s, double constant = 1.0);

inline DeltaCheck check_delta_s(const DeltaSet& set, double constant = 1.0) {
  return check_delta_s(set.points, set.delta, set.s, constant);
}

/// Dyadic radii delta 2^j, j = 0.., ending with the first one >= diameter.
std::vector<double> dyadic_radii(double delta, double diameter);

ColumnarTable delta_set_to_table(const DeltaSet& set);
DeltaSet delta_set_from_table(const ColumnarTable& table);

}  // namespace kl::deltasets
