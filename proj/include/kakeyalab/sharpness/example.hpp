#pragma once

#include <Eigen/Dense>
#include <functional>
#include <string>
#include <vector>

#include "kakeyalab/deltasets/point_set.hpp"
#include "kakeyalab/dimension/box_count.hpp"

namespace kl::sharpness {

using Sink = std::function<void(const double*)>;

struct SamplingSpec {
  /// Target spacing of the samples along every continuous direction.
  double spacing = 0x1p-5;
  /// Sphere only: keep base points within this angle of e_k (0 keeps all).
  double patch = 0.0;
  /// Sphere with k = 2: keep tangent directions within this angle of a
  /// fixed tangent field (0 keeps the whole circle).
  double direction_patch = 0.0;
};

/// Sampled invariant set E (points (x, u) with u a unit tangent) and its
/// projection pi(E), produced on demand.
struct SharpnessExample {
  std::string geometry;
  int d = 0, k = 0;
  double beta = 0.0;
  int depth = 0;
  std::vector<double> params;  // the Cantor parameter set A
  int base_dim = 0;            // coordinates of a pi(E) point
  int lift_dim = 0;            // coordinates of an E point (x then u)
  std::function<void(const Sink&)> base;
  std::function<void(const Sink&)> lift;

  deltasets::PointSet base_sample() const;
  deltasets::PointSet lift_sample() const;
  dimension::BoxCountRecord base_dimension(double h_min, double h_max,
                                           const dimension::BoxCountOptions& opts = {}) const;
  dimension::BoxCountRecord lift_dimension(double h_min, double h_max,
                                           const dimension::BoxCountOptions& opts = {}) const;
};

/// k + beta and 2(k - 1) + 1 + beta.
inline double base_target(int k, double beta) { return k + beta; }
inline double lift_target(int k, double beta) { return 2.0 * (k - 1) + 1.0 + beta; }

/// Rotation by theta in the plane of coordinates k, k + 1 of R^{d+1}
/// (0-based), identity elsewhere.
Eigen::MatrixXd sphere_rotation(double theta, int d, int k);

/// The (d - k + 1) x (d - k + 1) block of sphere_rotation.
Eigen::MatrixXd sphere_block(double theta, int d, int k);

/// Great k-spheres S^k_theta = R_theta(S^k) ⊂ S^d ⊂ R^{d+1}, theta in
/// (pi/3) A - pi/6, where S^k spans coordinates 0..k.
SharpnessExample sphere_example(int d, int k, double beta, int depth, const SamplingSpec& spec = {});

/// Upper half-space, height coordinate d-1: vertical k-planes spanned by
/// e_0..e_{k-2} and e_{d-1}, translated by t e_{k-1}, t in A. Window:
/// horizontal coordinates in [-1, 1], height in [1, 2].
SharpnessExample hyperbolic_example(int d, int k, double beta, int depth, const SamplingSpec& spec = {});

/// Hyperbolic geodesic through x with direction u, inside a vertical plane.
struct HalfSpaceGeodesic {
  bool vertical = false;
  Eigen::VectorXd center;  // on the boundary {x_{d-1} = 0}; unset when vertical
  double radius = 0.0;
  Eigen::VectorXd at(double s) const;  // vertical: foot + s e_{d-1}; else angle s
  Eigen::VectorXd foot;                // vertical lines only
  Eigen::VectorXd axis;                // unit horizontal direction of the semicircle
};
HalfSpaceGeodesic half_space_geodesic(const Eigen::VectorXd& x, const Eigen::VectorXd& u);

/// Lines inside R^k x {t e_k}, t in A, with the window [0, 1]^k.
SharpnessExample euclidean_example(int d, int k, double beta, int depth, const SamplingSpec& spec = {});

/// Quasi-uniform sample of S^k (k = 1, 2) in R^{k+1}.
std::vector<Eigen::VectorXd> sphere_lattice(int k, double spacing);
/// Unit tangent directions at x of S^k (two for k = 1, a circle for k = 2).
std::vector<Eigen::VectorXd> tangent_directions(const Eigen::VectorXd& x, double spacing,
                                               double half_arc = 0.0);

}  // namespace kl::sharpness
