#pragma once

#include <Eigen/Dense>
#include <vector>

#include "kakeyalab/curves/curve_family.hpp"
#include "kakeyalab/curves/metric_chart.hpp"

namespace kl::curves {

struct ShootingOptions {
  double shoot_tol = 1e-8;
  int rk4_steps = 256;
  int max_iter = 50;
  /// Size of the c-grid on which the reparametrized profile is stored.
  int c_grid_size = 257;
  double regularity_bound = 4.0;
};

/// Geodesic sampled at the RK4 nodes t_n = n / steps, t in [0, 1].
struct Geodesic {
  std::vector<Eigen::VectorXd> x, v;
  double residual = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// Integrates the geodesic equation from (x0, v0) over t in [0, 1].
Geodesic integrate_geodesic(const MetricChart& chart, const Eigen::VectorXd& x0,
                            const Eigen::VectorXd& v0, int steps);

/// Shoots from (y1, -1) to (y2, 1). Never throws on non-convergence; check
/// `converged`.
Geodesic shoot_geodesic(const MetricChart& chart, const Param& y, const ShootingOptions& opts);

struct GeodesicFamily {
  CurveFamily family;
  std::vector<double> residuals;
  /// Non-horizontal ratio max |dx'/dt| / |dx_d/dt| per curve.
  std::vector<double> k_hat;
  std::vector<int> iterations;
  double k_hat_max = 0.0;
};

/// Geodesics between the faces {x_d = -1} and {x_d = 1} of the chart,
/// reparametrized by x_d. Throws ConvergenceError if any pair fails and
/// NonHorizontalError if x_d is not increasing along a geodesic.
GeodesicFamily geodesic_chart_family(const MetricChart& chart, const std::vector<Param>& endpoints,
                                     const ShootingOptions& opts = {});

}  // namespace kl::curves
