#include <cmath>

#include "kakeyalab/simd/kernels.hpp"

namespace kl::simd {

namespace {

void accumulate_ball_row(const double* xs, std::size_t n, double center, double offset_sq,
                         double radius_sq, std::uint32_t* counts) {
  for (std::size_t i = 0; i < n; ++i) {
    const double w = xs[i] - center;
    const double d2 = w * w + offset_sq;
    counts[i] += d2 <= radius_sq ? 1u : 0u;
  }
}

void accumulate_segment_row(const double* xs, std::size_t n, double a0, double u0, double rest_sq,
                            double along_rest, double radius_sq, double half_length,
                            std::uint32_t* counts) {
  for (std::size_t i = 0; i < n; ++i) {
    const double w = xs[i] - a0;
    const double along = w * u0 + along_rest;
    const double d2 = (w * w + rest_sq) - along * along;
    counts[i] += (d2 <= radius_sq && std::fabs(along) <= half_length) ? 1u : 0u;
  }
}

void squared_distances(const double* const* coords, std::size_t dims, std::size_t n,
                       const double* center, double* out) {
  for (std::size_t i = 0; i < n; ++i) {
    const double w = coords[0][i] - center[0];
    out[i] = w * w;
  }
  for (std::size_t j = 1; j < dims; ++j) {
    const double* c = coords[j];
    const double cj = center[j];
    for (std::size_t i = 0; i < n; ++i) {
      const double w = c[i] - cj;
      out[i] = out[i] + w * w;
    }
  }
}

void quantize(const double* xs, std::size_t n, double origin, double inv_h, std::int32_t* out) {
  for (std::size_t i = 0; i < n; ++i)
    out[i] = static_cast<std::int32_t>(std::floor((xs[i] - origin) * inv_h));
}

}  // namespace

namespace detail {
const Kernels kScalarKernels = {
    accumulate_ball_row,
    accumulate_segment_row,
    squared_distances,
    quantize,
};
}  // namespace detail

}  // namespace kl::simd
