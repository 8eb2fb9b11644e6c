#include "kakeyalab/curves/geodesic.hpp"

#include <cmath>
#include <string>

#include "kakeyalab/error.hpp"

namespace kl::curves {

namespace {

Eigen::VectorXd to_point(const std::vector<double>& h, double c) {
  Eigen::VectorXd x(h.size() + 1);
  for (std::size_t i = 0; i < h.size(); ++i) x[i] = h[i];
  x[h.size()] = c;
  return x;
}

void rk4_step(const MetricChart& chart, Eigen::VectorXd& x, Eigen::VectorXd& v, double dt) {
  const Eigen::VectorXd k1x = v, k1v = chart.geodesic_acceleration(x, v);
  const Eigen::VectorXd x2 = x + 0.5 * dt * k1x, v2 = v + 0.5 * dt * k1v;
  const Eigen::VectorXd k2x = v2, k2v = chart.geodesic_acceleration(x2, v2);
  const Eigen::VectorXd x3 = x + 0.5 * dt * k2x, v3 = v + 0.5 * dt * k2v;
  const Eigen::VectorXd k3x = v3, k3v = chart.geodesic_acceleration(x3, v3);
  const Eigen::VectorXd x4 = x + dt * k3x, v4 = v + dt * k3v;
  const Eigen::VectorXd k4x = v4, k4v = chart.geodesic_acceleration(x4, v4);
  x += dt / 6 * (k1x + 2 * k2x + 2 * k3x + k4x);
  v += dt / 6 * (k1v + 2 * k2v + 2 * k3v + k4v);
}

Eigen::VectorXd endpoint(const MetricChart& chart, const Eigen::VectorXd& x0,
                         const Eigen::VectorXd& v0, int steps) {
  Eigen::VectorXd x = x0, v = v0;
  for (int n = 0; n < steps; ++n) rk4_step(chart, x, v, 1.0 / steps);
  return x;
}

// Cubic Hermite on [0, w] with values p0, p1 and slopes m0, m1, at u in [0, 1].
double hermite(double p0, double m0, double p1, double m1, double w, double u) {
  const double u2 = u * u, u3 = u2 * u;
  return (2 * u3 - 3 * u2 + 1) * p0 + (u3 - 2 * u2 + u) * w * m0 + (-2 * u3 + 3 * u2) * p1 +
         (u3 - u2) * w * m1;
}

double hermite_slope(double p0, double m0, double p1, double m1, double w, double u) {
  const double u2 = u * u;
  return ((6 * u2 - 6 * u) * p0 + (-6 * u2 + 6 * u) * p1) / w + (3 * u2 - 4 * u + 1) * m0 +
         (3 * u2 - 2 * u) * m1;
}

}  // namespace

Geodesic integrate_geodesic(const MetricChart& chart, const Eigen::VectorXd& x0,
                            const Eigen::VectorXd& v0, int steps) {
  Geodesic g;
  g.x.reserve(steps + 1);
  g.v.reserve(steps + 1);
  const double dt = 1.0 / steps;
  Eigen::VectorXd x = x0, v = v0;
  g.x.push_back(x);
  g.v.push_back(v);
  for (int n = 0; n < steps; ++n) {
    rk4_step(chart, x, v, dt);
    g.x.push_back(x);
    g.v.push_back(v);
  }
  return g;
}

Geodesic shoot_geodesic(const MetricChart& chart, const Param& y, const ShootingOptions& opts) {
  const int d = chart.dim();
  const Eigen::VectorXd start = to_point(y.y1, -1.0), target = to_point(y.y2, 1.0);
  Eigen::VectorXd v = target - start;
  Eigen::VectorXd f = endpoint(chart, start, v, opts.rk4_steps) - target;
  int iter = 0;
  while (f.norm() > opts.shoot_tol && iter < opts.max_iter) {
    ++iter;
    Eigen::MatrixXd jac(d, d);
    const double eta = 1e-7 * std::max(1.0, v.norm());
    for (int j = 0; j < d; ++j) {
      Eigen::VectorXd w = v;
      w[j] += eta;
      jac.col(j) = (endpoint(chart, start, w, opts.rk4_steps) - target - f) / eta;
    }
    const Eigen::VectorXd step = jac.partialPivLu().solve(-f);
    double lambda = 1.0;
    for (int halvings = 0; halvings < 10; ++halvings, lambda *= 0.5) {
      const Eigen::VectorXd w = v + lambda * step;
      const Eigen::VectorXd fw = endpoint(chart, start, w, opts.rk4_steps) - target;
      if (fw.norm() < f.norm() || halvings == 9) {
        v = w;
        f = fw;
        break;
      }
    }
  }
  Geodesic g = integrate_geodesic(chart, start, v, opts.rk4_steps);
  g.residual = f.norm();
  g.iterations = iter;
  g.converged = g.residual <= opts.shoot_tol;
  return g;
}

GeodesicFamily geodesic_chart_family(const MetricChart& chart, const std::vector<Param>& endpoints,
                                     const ShootingOptions& opts) {
  const int d = chart.dim();
  const int m = d - 1;
  if (opts.c_grid_size < 2 || opts.rk4_steps < 1)
    throw DomainError("shooting needs rk4_steps >= 1 and c_grid_size >= 2");
  for (const auto& y : endpoints) {
    if (static_cast<int>(y.y1.size()) != m || static_cast<int>(y.y2.size()) != m)
      throw DomainError("endpoint pair has the wrong dimension");
    for (int i = 0; i < m; ++i)
      if (std::abs(y.y1[i]) > 1.0 || std::abs(y.y2[i]) > 1.0)
        throw DomainError("endpoint pair outside the chart faces");
  }
  chart.validate();

  const std::size_t n = endpoints.size();
  std::vector<Geodesic> geos(n);
#pragma omp parallel for schedule(static)
  for (std::size_t i = 0; i < n; ++i) geos[i] = shoot_geodesic(chart, endpoints[i], opts);

  std::string failed;
  for (std::size_t i = 0; i < n; ++i)
    if (!geos[i].converged) failed += (failed.empty() ? "" : ",") + std::to_string(i);
  if (!failed.empty()) throw ConvergenceError("shooting did not converge for curves " + failed);

  GeodesicFamily out{CurveFamily(d, opts.regularity_bound), {}, {}, {}, 0.0};
  const int grid_n = opts.c_grid_size;
  std::vector<double> grid(grid_n);
  for (int j = 0; j < grid_n; ++j) grid[j] = j == grid_n - 1 ? 1.0 : -1.0 + 2.0 * j / (grid_n - 1);

  for (std::size_t i = 0; i < n; ++i) {
    const Geodesic& g = geos[i];
    const std::size_t nodes = g.x.size();
    double k_hat = 0.0;
    for (std::size_t s = 0; s < nodes; ++s) {
      const double vd = g.v[s][m];
      if (!(vd > 0.0) || (s > 0 && !(g.x[s][m] > g.x[s - 1][m])))
        throw NonHorizontalError("last coordinate is not increasing along geodesic " +
                                 std::to_string(i));
      k_hat = std::max(k_hat, g.v[s].head(m).norm() / vd);
    }
    std::vector<Eigen::VectorXd> acc(nodes);
    for (std::size_t s = 0; s < nodes; ++s) acc[s] = chart.geodesic_acceleration(g.x[s], g.v[s]);

    const double w = 1.0 / (nodes - 1);
    std::vector<double> values(grid_n * m), slopes(grid_n * m);
    std::size_t seg = 0;
    for (int j = 0; j < grid_n; ++j) {
      const double c = grid[j];
      while (seg + 2 < nodes && g.x[seg + 1][m] < c) ++seg;
      // Solve x_d(t) = c on the segment; the Hermite cubic in t is monotone.
      const double p0 = g.x[seg][m], p1 = g.x[seg + 1][m];
      const double m0 = g.v[seg][m], m1 = g.v[seg + 1][m];
      double u = (c - p0) / (p1 - p0);
      for (int it = 0; it < 30; ++it) {
        const double r = hermite(p0, m0, p1, m1, w, u) - c;
        const double dr = hermite_slope(p0, m0, p1, m1, w, u) * w;
        const double du = r / dr;
        u -= du;
        if (std::abs(du) < 1e-15) break;
      }
      std::vector<double> vel(d);
      for (int k = 0; k < d; ++k)
        vel[k] = hermite(g.v[seg][k], acc[seg][k], g.v[seg + 1][k], acc[seg + 1][k], w, u);
      const double vd = vel[m];
      for (int k = 0; k < m; ++k) {
        values[j * m + k] =
            hermite(g.x[seg][k], g.v[seg][k], g.x[seg + 1][k], g.v[seg + 1][k], w, u);
        slopes[j * m + k] = vel[k] / vd;
      }
    }
    out.family.add(endpoints[i],
                   std::make_shared<SampledProfile>(m, grid, std::move(values), std::move(slopes)));
    out.residuals.push_back(g.residual);
    out.k_hat.push_back(k_hat);
    out.iterations.push_back(g.iterations);
    out.k_hat_max = std::max(out.k_hat_max, k_hat);
  }
  return out;
}

}  // namespace kl::curves
