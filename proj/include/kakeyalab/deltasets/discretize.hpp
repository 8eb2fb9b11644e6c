#pragma once

#include <Eigen/Dense>
#include <memory>
#include <vector>

#include "kakeyalab/curves/curve_family.hpp"
#include "kakeyalab/deltasets/delta_set.hpp"
#include "kakeyalab/deltasets/kd_tree.hpp"
#include "kakeyalab/raster/tube_grid.hpp"

namespace kl::deltasets {

/// Balls of radius 2^-k for several levels k.
struct DyadicCover {
  struct Level {
    int k = 0;
    PointSet centers;
  };
  int dim = 0;
  std::vector<Level> levels;

  /// sum_k 2^{-k t} #B_k.
  double weighted_sum(double t) const;
};

/// Union of closed balls, usable as a raster mask.
class BallUnion {
 public:
  BallUnion(PointSet centers, double radius);

  bool contains(const double* x) const;
  std::size_t size() const { return centers_->size(); }
  double radius() const { return radius_; }
  const PointSet& centers() const { return *centers_; }
  raster::Mask mask(std::string id) const;

 private:
  std::shared_ptr<const PointSet> centers_;
  std::shared_ptr<const KdTree> tree_;
  double radius_;
};

struct DiscretizeOptions {
  /// Height samples per curve when measuring covered mass (at least
  /// 16 * 2^k for the finest level).
  int c_samples = 4096;
  double h_ratio = 4.0;
};

struct DiscretizeResult {
  /// Selected parameters (y1, y2) in R^{2(d-1)}, a (delta, s)-set.
  DeltaSet a_prime;
  std::vector<std::size_t> curves;  // family indices of a_prime, same order
  int k1 = 0;
  double delta = 0.0;
  double s = 0.0;  // 2(k-1) + beta - eps
  BallUnion s_prime;
  /// Level chosen per curve and the mass it captured.
  std::vector<int> level_of_curve;
  std::vector<double> captured_mass;
  /// #A' / (k1^-2 delta^-s).
  double count_constant = 0.0;
  /// min over A' of |T_y ∩ S'| / (k1^-2 delta^{d-1}).
  double intersection_constant = 0.0;
  /// ||sum chi_T||_{L^1(S')} / (#A' k1^-2 delta^{d-1}).
  double mass_constant = 0.0;
  double frostman_c_impl = 0.0;
};

/// Scale selection, level pigeonholing, Frostman extraction and the doubled
/// cover S' for the union of the family's curves. k is the plane dimension
/// of the estimate (s = 2(k-1) + beta - eps). Throws PipelineError naming a
/// curve whose covered heights total less than 1.
DiscretizeResult discretize_union(const curves::CurveFamily& family, const DyadicCover& cover,
                                  double alpha, double beta, int k, double eps,
                                  const DiscretizeOptions& opts = {});

}  // namespace kl::deltasets
