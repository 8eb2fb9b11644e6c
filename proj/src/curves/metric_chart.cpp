#include "kakeyalab/curves/metric_chart.hpp"

#include <cmath>

#include "kakeyalab/error.hpp"

namespace kl::curves {

MetricChart::MetricChart(int d, std::string name, MetricFn metric, ChristoffelFn christoffel)
    : d_(d), name_(std::move(name)), g_(std::move(metric)), gamma_(std::move(christoffel)) {
  if (d_ < 2 || !g_) throw DomainError("metric chart needs d >= 2 and a metric");
}

void MetricChart::christoffel(const Eigen::VectorXd& x,
                              std::vector<Eigen::MatrixXd>& gamma) const {
  gamma.assign(d_, Eigen::MatrixXd::Zero(d_, d_));
  if (gamma_) {
    gamma_(x, gamma);
    return;
  }
  const double step = 1e-5;
  std::vector<Eigen::MatrixXd> dg(d_);  // dg[l] = d g / d x_l
  for (int l = 0; l < d_; ++l) {
    Eigen::VectorXd a = x, b = x;
    a[l] += step;
    b[l] -= step;
    dg[l] = (g_(a) - g_(b)) / (2 * step);
  }
  const Eigen::MatrixXd ginv = g_(x).inverse();
  for (int k = 0; k < d_; ++k)
    for (int i = 0; i < d_; ++i)
      for (int j = 0; j < d_; ++j) {
        double s = 0.0;
        for (int l = 0; l < d_; ++l)
          s += ginv(k, l) * (dg[i](j, l) + dg[j](i, l) - dg[l](i, j));
        gamma[k](i, j) = 0.5 * s;
      }
}

Eigen::VectorXd MetricChart::geodesic_acceleration(const Eigen::VectorXd& x,
                                                   const Eigen::VectorXd& v) const {
  std::vector<Eigen::MatrixXd> gamma;
  christoffel(x, gamma);
  Eigen::VectorXd a(d_);
  for (int k = 0; k < d_; ++k) a[k] = -v.dot(gamma[k] * v);
  return a;
}

double MetricChart::validate(int per_axis) const {
  if (per_axis < 2) throw DomainError("metric validation needs at least 2 points per axis");
  long total = 1;
  for (int i = 0; i < d_; ++i) total *= per_axis;
  double lo = INFINITY;
  Eigen::VectorXd x(d_);
  for (long idx = 0; idx < total; ++idx) {
    long r = idx;
    for (int i = 0; i < d_; ++i) {
      x[i] = -1.0 + 2.0 * static_cast<double>(r % per_axis) / (per_axis - 1);
      r /= per_axis;
    }
    const Eigen::MatrixXd g = g_(x);
    if ((g - g.transpose()).cwiseAbs().maxCoeff() > 1e-12 * (1.0 + g.cwiseAbs().maxCoeff()))
      throw DomainError("metric '" + name_ + "' is not symmetric");
    const double ev = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(g).eigenvalues().minCoeff();
    if (!(ev > 0.0)) throw DomainError("metric '" + name_ + "' is not positive definite");
    lo = std::min(lo, ev);
  }
  return lo;
}

MetricChart MetricChart::euclidean(int d) {
  return MetricChart(
      d, "euclidean", [d](const Eigen::VectorXd&) { return Eigen::MatrixXd::Identity(d, d); },
      [](const Eigen::VectorXd&, std::vector<Eigen::MatrixXd>&) {});
}

MetricChart MetricChart::hyperbolic(int d, double height) {
  if (!(height > 1.0)) throw DomainError("hyperbolic chart needs height > 1");
  auto metric = [d, height](const Eigen::VectorXd& x) {
    const double h = x[0] + height;
    return Eigen::MatrixXd(Eigen::MatrixXd::Identity(d, d) / (h * h));
  };
  // Conformal factor e^{2f}, f = -log(x_0 + height):
  // Gamma^k_ij = delta_ik f_j + delta_jk f_i - delta_ij f_k, and only f_0 != 0.
  auto gamma = [d, height](const Eigen::VectorXd& x, std::vector<Eigen::MatrixXd>& out) {
    const double f0 = -1.0 / (x[0] + height);
    for (int k = 0; k < d; ++k)
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
          double v = 0.0;
          if (i == k && j == 0) v += f0;
          if (j == k && i == 0) v += f0;
          if (i == j && k == 0) v -= f0;
          out[k](i, j) = v;
        }
  };
  return MetricChart(d, "hyperbolic", metric, gamma);
}

MetricChart MetricChart::perturbed(int d, double amplitude) {
  if (!(std::abs(amplitude) < 1.0)) throw DomainError("perturbation amplitude must be < 1");
  auto metric = [d, amplitude](const Eigen::VectorXd& x) {
    const double phi = std::exp(-x.squaredNorm());
    Eigen::MatrixXd g = (1.0 + amplitude * phi) * Eigen::MatrixXd::Identity(d, d);
    g(0, d - 1) += 0.5 * amplitude * phi;
    g(d - 1, 0) += 0.5 * amplitude * phi;
    return g;
  };
  return MetricChart(d, "perturbed", metric);
}

}  // namespace kl::curves
