#pragma once

#include <Eigen/Dense>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace kl::curves {

/// Riemannian metric on a coordinate chart containing [-1, 1]^d.
class MetricChart {
 public:
  using MetricFn = std::function<Eigen::MatrixXd(const Eigen::VectorXd&)>;
  /// Fills gamma[k](i, j) = Gamma^k_ij(x).
  using ChristoffelFn =
      std::function<void(const Eigen::VectorXd&, std::vector<Eigen::MatrixXd>&)>;

  MetricChart(int d, std::string name, MetricFn metric, ChristoffelFn christoffel = {});

  int dim() const { return d_; }
  const std::string& name() const { return name_; }
  Eigen::MatrixXd metric(const Eigen::VectorXd& x) const { return g_(x); }
  /// Closed form when supplied, otherwise central differences of g.
  void christoffel(const Eigen::VectorXd& x, std::vector<Eigen::MatrixXd>& gamma) const;
  /// a^k = -Gamma^k_ij v^i v^j.
  Eigen::VectorXd geodesic_acceleration(const Eigen::VectorXd& x, const Eigen::VectorXd& v) const;

  /// Smallest eigenvalue of g over a grid of `per_axis`^d points of [-1, 1]^d.
  /// Throws DomainError if g is not symmetric positive definite there.
  double validate(int per_axis = 5) const;

  static MetricChart euclidean(int d);
  /// Upper half-space metric |dx|^2 / (x_0 + height)^2, i.e. hyperbolic space
  /// with the boundary at x_0 = -height.
  static MetricChart hyperbolic(int d, double height = 3.0);
  /// (1 + a phi) I + a phi (e_0 e_{d-1}^T + e_{d-1} e_0^T) / 2 with the bump
  /// phi(x) = exp(-|x|^2).
  static MetricChart perturbed(int d, double amplitude = 0.1);

 private:
  int d_;
  std::string name_;
  MetricFn g_;
  ChristoffelFn gamma_;
};

}  // namespace kl::curves
