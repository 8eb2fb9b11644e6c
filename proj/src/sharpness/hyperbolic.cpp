#include <cmath>
#include <numbers>

#include "kakeyalab/deltasets/cantor.hpp"
#include "kakeyalab/error.hpp"
#include "kakeyalab/sharpness/example.hpp"

namespace kl::sharpness {

Eigen::VectorXd HalfSpaceGeodesic::at(double s) const {
  if (vertical) {
    Eigen::VectorXd x = foot;
    x[x.size() - 1] = s;
    return x;
  }
  Eigen::VectorXd x = center + radius * std::cos(s) * axis;
  x[x.size() - 1] = radius * std::sin(s);
  return x;
}

HalfSpaceGeodesic half_space_geodesic(const Eigen::VectorXd& x, const Eigen::VectorXd& u) {
  const Eigen::Index d = x.size();
  if (u.size() != d || !(x[d - 1] > 0.0)) throw DomainError("geodesic needs a point of the half-space");
  HalfSpaceGeodesic g;
  Eigen::VectorXd w = u;
  w[d - 1] = 0.0;
  const double wn = w.norm();
  if (wn <= 1e-14 * u.norm()) {
    g.vertical = true;
    g.foot = x;
    g.foot[d - 1] = 0.0;
    return g;
  }
  // Centre c = x_h + lambda axis on the boundary with <x - c, u> = 0.
  g.axis = w / wn;
  const double lambda = x[d - 1] * u[d - 1] / wn;
  Eigen::VectorXd c = x;
  c[d - 1] = 0.0;
  c += lambda * g.axis;
  g.center = c;
  g.radius = (x - c).norm();
  return g;
}

SharpnessExample hyperbolic_example(int d, int k, double beta, int depth, const SamplingSpec& spec) {
  if (k < 1 || k > d - 1) throw DomainError("hyperbolic_example needs 1 <= k <= d-1");
  if (k > 2) throw DomainError("hyperbolic_example samples k <= 2");
  SharpnessExample ex;
  ex.geometry = "hyperbolic";
  ex.d = d;
  ex.k = k;
  ex.beta = beta;
  ex.depth = depth;
  ex.params = deltasets::cantor_points(beta, depth);
  ex.base_dim = d;
  ex.lift_dim = 2 * d;
  const int nh = static_cast<int>(std::ceil(2.0 / spec.spacing)) + 1;  // horizontal [-1, 1]
  const int nz = static_cast<int>(std::ceil(1.0 / spec.spacing)) + 1;  // height [1, 2]
  // In-plane unit directions: vertical for k = 1, else a circle in (e_0, e_{d-1}).
  std::vector<std::pair<double, double>> dirs;
  if (k == 1) {
    dirs = {{0.0, 1.0}, {0.0, -1.0}};
  } else {
    const int m = static_cast<int>(std::ceil(2.0 * std::numbers::pi / spec.spacing));
    for (int i = 0; i < m; ++i)
      dirs.emplace_back(std::cos(2.0 * std::numbers::pi * i / m), std::sin(2.0 * std::numbers::pi * i / m));
  }
  const auto params = ex.params;
  auto grid = [=](double t, const std::function<void(double*)>& f) {
    std::vector<double> x(d, 0.0);
    x[k - 1] = t;
    const int nx = k == 2 ? nh : 1;
    for (int iz = 0; iz < nz; ++iz)
      for (int ix = 0; ix < nx; ++ix) {
        if (k == 2) x[0] = -1.0 + 2.0 * ix / (nh - 1);
        x[d - 1] = 1.0 + static_cast<double>(iz) / (nz - 1);
        f(x.data());
      }
  };
  ex.base = [=](const Sink& sink) {
    for (double t : params) grid(t, [&](double* x) { sink(x); });
  };
  ex.lift = [=](const Sink& sink) {
    std::vector<double> y(2 * d, 0.0);
    for (double t : params)
      grid(t, [&](double* x) {
        for (int j = 0; j < d; ++j) y[j] = x[j];
        for (const auto& [a, b] : dirs) {
          y[d + 0] = 0.0;
          if (k == 2) y[d + 0] = a;
          y[2 * d - 1] = b;
          sink(y.data());
        }
      });
  };
  return ex;
}

}  // namespace kl::sharpness
