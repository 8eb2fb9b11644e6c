#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

// Data-parallel inner loops. Each kernel has a scalar reference
// implementation and an AVX2 variant; the variant is chosen at runtime from
// the CPU features. Both variants perform the same IEEE operations in the
// same order (the project builds with -ffp-contract=off), so their outputs
// are bit-identical, which the equivalence tests check.

namespace kl::simd {

enum class Isa { Scalar, Avx2 };

const char* to_string(Isa isa);
std::optional<Isa> parse_isa(std::string_view name);

/// Best instruction set supported by this CPU and build.
Isa detected_isa();
bool is_supported(Isa isa);
/// Instruction set used by kernels(). Defaults to detected_isa().
Isa active_isa();
/// Throws DomainError when `isa` is not supported here.
void set_active_isa(Isa isa);

struct Kernels {
  /// counts[i] += ((xs[i] - center)^2 + offset_sq <= radius_sq)
  void (*accumulate_ball_row)(const double* xs, std::size_t n, double center, double offset_sq,
                              double radius_sq, std::uint32_t* counts);

  /// Membership in a straight tube along a grid row. With w = xs[i] - a0,
  /// along = w*u0 + along_rest and dist2 = w*w + rest_sq - along*along:
  /// counts[i] += (dist2 <= radius_sq && |along| <= half_length)
  void (*accumulate_segment_row)(const double* xs, std::size_t n, double a0, double u0,
                                 double rest_sq, double along_rest, double radius_sq,
                                 double half_length, std::uint32_t* counts);

  /// out[i] = sum_j (coords[j][i] - center[j])^2, coordinates in SoA layout.
  void (*squared_distances)(const double* const* coords, std::size_t dims, std::size_t n,
                            const double* center, double* out);

  /// out[i] = floor((xs[i] - origin) * inv_h), which must fit in int32.
  void (*quantize)(const double* xs, std::size_t n, double origin, double inv_h,
                   std::int32_t* out);
};

const Kernels& kernels();
const Kernels& kernels_for(Isa isa);

namespace detail {
extern const Kernels kScalarKernels;
extern const Kernels kAvx2Kernels;
bool avx2_compiled();
}  // namespace detail

}  // namespace kl::simd
