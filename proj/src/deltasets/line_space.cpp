#include "kakeyalab/deltasets/line_space.hpp"

#include <cmath>
#include <string>

#include "kakeyalab/error.hpp"

namespace kl::deltasets {

Line line_space_project(const Eigen::VectorXd& x, const Eigen::VectorXd& v) {
  if (x.size() != v.size()) throw DomainError("line point and direction differ in dimension");
  if (std::abs(v.norm() - 1.0) > 1e-10) throw DomainError("line direction must be a unit vector");
  return {x - x.dot(v) * v, v};
}

namespace {

void check_line(const Line& l, std::size_t i) {
  if (l.x.size() != l.v.size() || l.x.size() < 1)
    throw ValidationError("line " + std::to_string(i) + " has inconsistent dimensions");
  if (std::abs(l.v.norm() - 1.0) > 1e-10)
    throw ValidationError("line " + std::to_string(i) + " direction is not a unit vector");
  if (std::abs(l.x.dot(l.v)) > 1e-10)
    throw ValidationError("line " + std::to_string(i) + " base point is not orthogonal to v");
}

}  // namespace

PointSet line_space_lift(const std::vector<Line>& lines, double t0, double t1, int samples) {
  if (samples < 1) throw DomainError("line lift needs at least one sample");
  if (lines.empty()) return PointSet(1);
  const int d = static_cast<int>(lines[0].x.size());
  PointSet out(2 * d);
  std::vector<double> p(2 * d);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const Line& l = lines[i];
    check_line(l, i);
    if (l.x.size() != d) throw ValidationError("lines differ in dimension");
    for (int s = 0; s < samples; ++s) {
      const double t = samples == 1 ? t0 : t0 + (t1 - t0) * s / (samples - 1);
      for (int k = 0; k < d; ++k) {
        p[k] = l.x[k] + t * l.v[k];
        p[d + k] = l.v[k];
      }
      out.push(p);
    }
  }
  return out;
}

PointSet line_space_points(const std::vector<Line>& lines) {
  if (lines.empty()) return PointSet(1);
  const int d = static_cast<int>(lines[0].x.size());
  PointSet out(2 * d);
  std::vector<double> p(2 * d);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    check_line(lines[i], i);
    for (int k = 0; k < d; ++k) {
      p[k] = lines[i].x[k];
      p[d + k] = lines[i].v[k];
    }
    out.push(p);
  }
  return out;
}

}  // namespace kl::deltasets
