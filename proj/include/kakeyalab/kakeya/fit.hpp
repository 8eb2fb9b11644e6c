#pragma once

#include <optional>
#include <vector>

namespace kl::kakeya {

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  /// Absent when the responses have no variance.
  std::optional<double> r2;
  bool degenerate = false;
};

/// Ordinary least squares of y on x. Needs two distinct x values.
LinearFit least_squares(const std::vector<double>& x, const std::vector<double>& y);

struct ScaleRecord {
  double delta = 0.0;
  double ratio = 0.0;
};

/// Fit of log(ratio) against log(1/delta); the slope is the empirical
/// exponent loss. InsufficientDataError below three distinct scales.
LinearFit exponent_fit(const std::vector<ScaleRecord>& records);

}  // namespace kl::kakeya
