#include "kakeyalab/sharpness/example.hpp"

#include <cmath>
#include <numbers>

#include "kakeyalab/error.hpp"

namespace kl::sharpness {

deltasets::PointSet SharpnessExample::base_sample() const {
  deltasets::PointSet p(base_dim);
  base([&](const double* x) { p.coords.insert(p.coords.end(), x, x + base_dim); });
  return p;
}

deltasets::PointSet SharpnessExample::lift_sample() const {
  deltasets::PointSet p(lift_dim);
  lift([&](const double* x) { p.coords.insert(p.coords.end(), x, x + lift_dim); });
  return p;
}

dimension::BoxCountRecord SharpnessExample::base_dimension(double h_min, double h_max,
                                                           const dimension::BoxCountOptions& opts) const {
  dimension::BoxCounter bc(base_dim, h_min, h_max);
  base([&](const double* x) { bc.add(x); });
  return bc.finish(opts);
}

dimension::BoxCountRecord SharpnessExample::lift_dimension(double h_min, double h_max,
                                                           const dimension::BoxCountOptions& opts) const {
  dimension::BoxCounter bc(lift_dim, h_min, h_max);
  lift([&](const double* x) { bc.add(x); });
  return bc.finish(opts);
}

std::vector<Eigen::VectorXd> sphere_lattice(int k, double spacing) {
  std::vector<Eigen::VectorXd> out;
  if (k == 1) {
    const int n = static_cast<int>(std::ceil(2.0 * std::numbers::pi / spacing));
    for (int i = 0; i < n; ++i) {
      const double t = 2.0 * std::numbers::pi * i / n;
      Eigen::VectorXd v(2);
      v << std::cos(t), std::sin(t);
      out.push_back(v);
    }
  } else if (k == 2) {
    const int n = static_cast<int>(std::ceil(4.0 * std::numbers::pi / (spacing * spacing)));
    const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
    for (int i = 0; i < n; ++i) {
      const double z = 1.0 - (2.0 * i + 1.0) / n;
      const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
      const double phi = golden * i;
      Eigen::VectorXd v(3);
      v << r * std::cos(phi), r * std::sin(phi), z;
      out.push_back(v);
    }
  } else {
    throw DomainError("sphere_lattice supports k = 1 and k = 2");
  }
  return out;
}

std::vector<Eigen::VectorXd> tangent_directions(const Eigen::VectorXd& x, double spacing,
                                               double half_arc) {
  std::vector<Eigen::VectorXd> out;
  if (x.size() == 2) {
    Eigen::VectorXd t(2);
    t << -x[1], x[0];
    out.push_back(t);
    out.push_back(-t);
    return out;
  }
  if (x.size() != 3) throw DomainError("tangent_directions supports S^1 and S^2");
  const Eigen::Vector3d p = x;
  const Eigen::Vector3d e = std::abs(p[0]) < 0.9 ? Eigen::Vector3d::UnitX() : Eigen::Vector3d::UnitY();
  const Eigen::Vector3d a = e.cross(p).normalized();
  const Eigen::Vector3d b = p.cross(a);
  const int m = static_cast<int>(std::ceil(2.0 * std::numbers::pi / spacing));
  for (int i = 0; i < m; ++i) {
    double t = 2.0 * std::numbers::pi * i / m;
    if (t > std::numbers::pi) t -= 2.0 * std::numbers::pi;
    if (half_arc > 0.0 && std::abs(t) > half_arc) continue;
    out.push_back(std::cos(t) * a + std::sin(t) * b);
  }
  return out;
}

}  // namespace kl::sharpness
