#pragma once

#include <cstdint>
#include <vector>

#include "kakeyalab/curves/curve_family.hpp"
#include "kakeyalab/raster/straight.hpp"

namespace kl::kakeya {

/// Cube of the delta^{1/2} decomposition with the straightened tubes of the
/// curves meeting it.
struct CubeInstance {
  Eigen::VectorXd lower;  // corner; the cube is lower + [0, side]^d
  double side = 0.0;
  /// tubes[j] and sources[j]: straight tubes of family j and their curves.
  std::vector<std::vector<raster::StraightTube>> tubes;
  std::vector<std::vector<std::size_t>> sources;
};

/// ceil(delta^{-1/2})^d cubes of side 2 delta^{1/2} from the corner
/// (-1, ..., -1). Each curved tube meeting a cube is replaced inside it by
/// the straight tube of radius (1 + C) delta tangent at the cube's centre
/// height (clamped to [-1, 1]).
std::vector<CubeInstance> curved_mlk_step(const std::vector<curves::CurveFamily>& families,
                                          double delta);

struct ContainmentReport {
  std::size_t checked = 0;
  std::size_t failed = 0;
  /// Largest distance to the straight axis over the checked points.
  double max_axis_distance = 0.0;
};

/// Samples points of T_y^delta ∩ Q over random (cube, tube) pairs and
/// checks that they lie in the straightened tube.
ContainmentReport check_containment(const std::vector<curves::CurveFamily>& families,
                                    const std::vector<CubeInstance>& cubes, double delta,
                                    std::size_t samples, std::uint64_t seed);

struct RecursionOptions {
  double h_ratio = 4.0;
  /// C'; 0 selects (10 + C)^{2d}.
  double c_prime = 0.0;
  int transversality_tuples = 2000;
  std::size_t containment_samples = 0;
  std::uint64_t seed = 1;
};

struct RecursionTrace {
  std::vector<double> scales;     // delta, (10 + C) delta^{1/2}, ...
  std::vector<double> constants;  // measured C_Curved per level
  double rho = 0.0;
  double min_sampled_wedge = 1.0;
  int iterations = 0;
  double depth_limit = 0.0;  // 2 log log(1/delta) + 1
  double bound = 0.0;        // (C' / rho)^{2 log log(1/delta)}
  bool bound_holds = false;
  ContainmentReport containment;  // at the finest level
};

/// Scale ladder delta_{i+1} = (10 + C) delta_i^{1/2}, continued while
/// delta_i < e^{-2} and kept below 1.
std::vector<double> recursion_ladder(double delta, double C);

/// C_Curved(delta_i) = ∫ prod_j (sum chi_{T_y^{delta_i}})^{1/k} /
/// (delta_i^d prod (#A_j)^{1/k}) per level, k + 1 = families.size(). Throws
/// TransversalityError when a sampled tuple has wedge below rho^k.
RecursionTrace curved_mlk_recursion(const std::vector<curves::CurveFamily>& families, double delta,
                                    double rho, const RecursionOptions& opts = {});

}  // namespace kl::kakeya
