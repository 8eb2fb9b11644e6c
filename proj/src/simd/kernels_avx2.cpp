#include <cmath>

#include "kakeyalab/simd/kernels.hpp"

#if defined(__AVX2__)
#include <immintrin.h>
#endif

namespace kl::simd {

#if defined(__AVX2__)

namespace {

// Converts a lane mask of 4 doubles into 0/1 int32 lanes.
inline __m128i mask_to_ones(__m256d mask) {
  const __m256d ones = _mm256_and_pd(mask, _mm256_set1_pd(1.0));
  return _mm256_cvttpd_epi32(ones);
}

void accumulate_ball_row(const double* xs, std::size_t n, double center, double offset_sq,
                         double radius_sq, std::uint32_t* counts) {
  const __m256d c = _mm256_set1_pd(center);
  const __m256d off = _mm256_set1_pd(offset_sq);
  const __m256d r2 = _mm256_set1_pd(radius_sq);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d w = _mm256_sub_pd(_mm256_loadu_pd(xs + i), c);
    const __m256d d2 = _mm256_add_pd(_mm256_mul_pd(w, w), off);
    const __m128i inc = mask_to_ones(_mm256_cmp_pd(d2, r2, _CMP_LE_OQ));
    __m128i* dst = reinterpret_cast<__m128i*>(counts + i);
    _mm_storeu_si128(dst, _mm_add_epi32(_mm_loadu_si128(dst), inc));
  }
  for (; i < n; ++i) {
    const double w = xs[i] - center;
    const double d2 = w * w + offset_sq;
    counts[i] += d2 <= radius_sq ? 1u : 0u;
  }
}

void accumulate_segment_row(const double* xs, std::size_t n, double a0, double u0, double rest_sq,
                            double along_rest, double radius_sq, double half_length,
                            std::uint32_t* counts) {
  const __m256d va0 = _mm256_set1_pd(a0);
  const __m256d vu0 = _mm256_set1_pd(u0);
  const __m256d vrest = _mm256_set1_pd(rest_sq);
  const __m256d valong = _mm256_set1_pd(along_rest);
  const __m256d r2 = _mm256_set1_pd(radius_sq);
  const __m256d half = _mm256_set1_pd(half_length);
  const __m256d sign = _mm256_set1_pd(-0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d w = _mm256_sub_pd(_mm256_loadu_pd(xs + i), va0);
    const __m256d along = _mm256_add_pd(_mm256_mul_pd(w, vu0), valong);
    const __m256d d2 =
        _mm256_sub_pd(_mm256_add_pd(_mm256_mul_pd(w, w), vrest), _mm256_mul_pd(along, along));
    const __m256d in_r = _mm256_cmp_pd(d2, r2, _CMP_LE_OQ);
    const __m256d in_len = _mm256_cmp_pd(_mm256_andnot_pd(sign, along), half, _CMP_LE_OQ);
    const __m128i inc = mask_to_ones(_mm256_and_pd(in_r, in_len));
    __m128i* dst = reinterpret_cast<__m128i*>(counts + i);
    _mm_storeu_si128(dst, _mm_add_epi32(_mm_loadu_si128(dst), inc));
  }
  for (; i < n; ++i) {
    const double w = xs[i] - a0;
    const double along = w * u0 + along_rest;
    const double d2 = (w * w + rest_sq) - along * along;
    counts[i] += (d2 <= radius_sq && std::fabs(along) <= half_length) ? 1u : 0u;
  }
}

void squared_distances(const double* const* coords, std::size_t dims, std::size_t n,
                       const double* center, double* out) {
  const std::size_t nv = n - n % 4;
  {
    const __m256d c = _mm256_set1_pd(center[0]);
    for (std::size_t i = 0; i < nv; i += 4) {
      const __m256d w = _mm256_sub_pd(_mm256_loadu_pd(coords[0] + i), c);
      _mm256_storeu_pd(out + i, _mm256_mul_pd(w, w));
    }
    for (std::size_t i = nv; i < n; ++i) {
      const double w = coords[0][i] - center[0];
      out[i] = w * w;
    }
  }
  for (std::size_t j = 1; j < dims; ++j) {
    const double* src = coords[j];
    const __m256d c = _mm256_set1_pd(center[j]);
    for (std::size_t i = 0; i < nv; i += 4) {
      const __m256d w = _mm256_sub_pd(_mm256_loadu_pd(src + i), c);
      _mm256_storeu_pd(out + i, _mm256_add_pd(_mm256_loadu_pd(out + i), _mm256_mul_pd(w, w)));
    }
    for (std::size_t i = nv; i < n; ++i) {
      const double w = src[i] - center[j];
      out[i] = out[i] + w * w;
    }
  }
}

void quantize(const double* xs, std::size_t n, double origin, double inv_h, std::int32_t* out) {
  const __m256d o = _mm256_set1_pd(origin);
  const __m256d s = _mm256_set1_pd(inv_h);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d v = _mm256_floor_pd(_mm256_mul_pd(_mm256_sub_pd(_mm256_loadu_pd(xs + i), o), s));
    _mm_storeu_si128(reinterpret_cast<__m128i*>(out + i), _mm256_cvttpd_epi32(v));
  }
  for (; i < n; ++i) out[i] = static_cast<std::int32_t>(std::floor((xs[i] - origin) * inv_h));
}

}  // namespace

namespace detail {
const Kernels kAvx2Kernels = {
    accumulate_ball_row,
    accumulate_segment_row,
    squared_distances,
    quantize,
};
bool avx2_compiled() { return true; }
}  // namespace detail

#else

namespace detail {
// Never selected: is_supported(Isa::Avx2) is false in this build.
const Kernels kAvx2Kernels = {nullptr, nullptr, nullptr, nullptr};
bool avx2_compiled() { return false; }
}  // namespace detail

#endif

}  // namespace kl::simd
