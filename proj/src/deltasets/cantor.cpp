#include "kakeyalab/deltasets/cantor.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "kakeyalab/error.hpp"

namespace kl::deltasets {

double cantor_ratio(double beta) {
  if (!(beta >= 0.0 && beta <= 1.0)) throw DomainError("Cantor dimension must lie in [0, 1]");
  return beta == 0.0 ? 0.0 : std::pow(2.0, -1.0 / beta);
}

std::vector<double> cantor_points(double beta, int depth) {
  const double r = cantor_ratio(beta);
  if (depth < 0 || depth > 30) throw DomainError("Cantor depth must lie in [0, 30]");
  if (beta == 0.0) return {0.0};
  const std::uint64_t count = std::uint64_t{1} << depth;
  std::vector<double> out(count);

  const double inv = 1.0 / r;
  const double m = std::round(inv);
  const bool integral = std::abs(inv - m) < 1e-12 && std::pow(m, depth) < 9e15;
  if (integral) {
    // Endpoint = sum_i b_i (m - 1) m^(depth - i) / m^depth over branch bits b_i.
    const auto base = static_cast<std::uint64_t>(m);
    std::uint64_t denom = 1;
    for (int i = 0; i < depth; ++i) denom *= base;
    for (std::uint64_t w = 0; w < count; ++w) {
      std::uint64_t num = 0, scale = denom;
      for (int i = 1; i <= depth; ++i) {
        scale /= base;
        if ((w >> (depth - i)) & 1u) num += (base - 1) * scale;
      }
      out[w] = static_cast<double>(num) / static_cast<double>(denom);
    }
    return out;
  }
  for (std::uint64_t w = 0; w < count; ++w) {
    double x = 0.0, len = 1.0;
    for (int i = 1; i <= depth; ++i) {
      if ((w >> (depth - i)) & 1u) x += (1.0 - r) * len;
      len *= r;
    }
    out[w] = x;
  }
  std::sort(out.begin(), out.end());
  return out;
}

PointSet cantor_parameter_set(double beta, int depth, int ambient) {
  if (ambient < 1) throw DomainError("ambient dimension must be >= 1");
  PointSet p(ambient);
  std::vector<double> x(ambient, 0.0);
  for (double v : cantor_points(beta, depth)) {
    x[0] = v;
    p.push(x);
  }
  return p;
}

}  // namespace kl::deltasets
