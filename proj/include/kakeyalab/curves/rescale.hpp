#pragma once

#include <Eigen/Dense>
#include <memory>
#include <vector>

#include "kakeyalab/curves/curve_family.hpp"

namespace kl::curves {

/// Narrow-case rescaling data: the slab J = c_J +- rho / (2000 C), the
/// direction u = e(tau~), and the horizontal centre x0' of the slab.
struct RescaleContext {
  double c_J = 0.0;
  Eigen::VectorXd direction;  // unit, last component > 0
  double rho = 0.0;
  double C = 1.0;
  Eigen::VectorXd center;  // R^{d-1}

  RescaleContext(double c_J, Eigen::VectorXd direction, double rho, double C,
                 Eigen::VectorXd center);

  int dim() const { return static_cast<int>(direction.size()); }
  double half_width() const { return rho / (2000.0 * C); }
  bool in_slab(double c) const { return std::abs(c - c_J) <= half_width(); }

  /// The linear map fixing R^{d-1} x {0} and sending `direction` to e_d.
  Eigen::VectorXd shear(const Eigen::VectorXd& v) const;
  Eigen::VectorXd unshear(const Eigen::VectorXd& v) const;
  Eigen::MatrixXd shear_matrix() const;
  /// 1 / u_d.
  double shear_determinant() const { return 1.0 / direction[dim() - 1]; }
  /// A_rho: rho^-2 on horizontal coordinates, 2000 C / rho on the last.
  Eigen::VectorXd scale(const Eigen::VectorXd& v) const;
  /// x -> A_rho psi (x - (center, c_J)).
  Eigen::VectorXd map_point(const Eigen::VectorXd& x) const;
};

/// P~(c) = rho^-2 [P(c_J + u_d s) - x0' - s u'], s = rho c / (2000 C): the
/// horizontal profile of the image of the curve under map_point.
class RescaledProfile final : public Profile {
 public:
  RescaledProfile(std::shared_ptr<const Profile> base, const RescaleContext& ctx);

  int dim() const override { return base_->dim(); }
  void value(double c, std::span<double> out) const override;
  bool analytic() const override { return true; }
  void derivative(double c, std::span<double> out) const override;
  void second_derivative(double c, std::span<double> out) const override;

 private:
  double source_height(double c) const;

  std::shared_ptr<const Profile> base_;
  double c_J_, rho_, ud_, step_;  // step_ = rho / (2000 C)
  std::vector<double> up_, center_;
};

struct RescaleResult {
  CurveFamily family;
  double new_delta = 0.0;
  /// Original indices of the rescaled curves, in family order.
  std::vector<std::size_t> source;
};

/// Rescales the curves `subset` of `family`. Each must have its tangent at
/// c_J within 2 rho of ctx.direction. new_delta = delta / rho^2; values above 1
/// raise DomainError (rescale too coarse).
RescaleResult parabolic_rescale(const CurveFamily& family, const std::vector<std::size_t>& subset,
                                const RescaleContext& ctx, double delta);

}  // namespace kl::curves
