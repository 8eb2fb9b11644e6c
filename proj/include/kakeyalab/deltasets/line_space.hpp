#pragma once

#include <Eigen/Dense>
#include <vector>

#include "kakeyalab/deltasets/point_set.hpp"

namespace kl::deltasets {

/// A line {x + t v} with |v| = 1 and x orthogonal to v.
struct Line {
  Eigen::VectorXd x, v;
};

/// (x - <x, v> v, v).
Line line_space_project(const Eigen::VectorXd& x, const Eigen::VectorXd& v);

/// Points (x + t v, v) in R^{2d} for each line and t on a uniform grid of
/// `samples` values in [t0, t1]. Throws ValidationError unless |v| = 1 and
/// |<x, v>| <= 1e-10.
PointSet line_space_lift(const std::vector<Line>& lines, double t0, double t1, int samples);

/// The (x, v) pairs themselves as points of R^{2d}.
PointSet line_space_points(const std::vector<Line>& lines);

}  // namespace kl::deltasets
