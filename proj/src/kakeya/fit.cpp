#include "kakeyalab/kakeya/fit.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "kakeyalab/error.hpp"

namespace kl::kakeya {

LinearFit least_squares(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) throw DomainError("least_squares: x and y differ in length");
  const std::size_t n = x.size();
  if (n < 2) throw InsufficientDataError("least_squares needs two points");
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = x[i] - mx, dy = y[i] - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (!(sxx > 0.0)) throw InsufficientDataError("least_squares needs two distinct x values");
  LinearFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double scale = 0.0;
  for (double v : y) scale = std::max(scale, std::abs(v));
  if (syy <= 1e-28 * std::max(1.0, scale * scale) * static_cast<double>(n)) {
    fit.degenerate = true;
    return fit;
  }
  double sse = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double e = y[i] - fit.intercept - fit.slope * x[i];
    sse += e * e;
  }
  fit.r2 = 1.0 - sse / syy;
  return fit;
}

LinearFit exponent_fit(const std::vector<ScaleRecord>& records) {
  std::set<double> scales;
  std::vector<double> x, y;
  for (const auto& r : records) {
    if (!(r.delta > 0.0) || !(r.ratio > 0.0))
      throw DomainError("exponent_fit needs positive delta and ratio");
    scales.insert(r.delta);
    x.push_back(std::log(1.0 / r.delta));
    y.push_back(std::log(r.ratio));
  }
  if (scales.size() < 3) throw InsufficientDataError("exponent_fit needs at least 3 distinct scales");
  return least_squares(x, y);
}

}  // namespace kl::kakeya
