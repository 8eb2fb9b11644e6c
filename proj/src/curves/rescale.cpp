#include "kakeyalab/curves/rescale.hpp"

#include <cmath>
#include <string>

#include "kakeyalab/error.hpp"

namespace kl::curves {

RescaleContext::RescaleContext(double c_J_, Eigen::VectorXd direction_, double rho_, double C_,
                               Eigen::VectorXd center_)
    : c_J(c_J_), direction(std::move(direction_)), rho(rho_), C(C_), center(std::move(center_)) {
  const int d = dim();
  if (d < 2 || center.size() != d - 1) throw DomainError("rescale context dimension mismatch");
  if (!(rho > 0.0 && rho < 1.0) || !(C >= 1.0)) throw DomainError("rescale needs 0 < rho < 1, C >= 1");
  if (std::abs(direction.norm() - 1.0) > 1e-10 || !(direction[d - 1] > 0.0))
    throw DomainError("rescale direction must be a unit vector with positive last component");
  if (c_J - half_width() < -1.0 || c_J + half_width() > 1.0)
    throw DomainError("rescale slab leaves [-1, 1]");
}

Eigen::VectorXd RescaleContext::shear(const Eigen::VectorXd& v) const {
  const int m = dim() - 1;
  const double t = v[m] / direction[m];
  Eigen::VectorXd out(m + 1);
  out.head(m) = v.head(m) - t * direction.head(m);
  out[m] = t;
  return out;
}

Eigen::VectorXd RescaleContext::unshear(const Eigen::VectorXd& v) const {
  const int m = dim() - 1;
  Eigen::VectorXd out(m + 1);
  out.head(m) = v.head(m) + v[m] * direction.head(m);
  out[m] = v[m] * direction[m];
  return out;
}

Eigen::MatrixXd RescaleContext::shear_matrix() const {
  const int d = dim();
  Eigen::MatrixXd a = Eigen::MatrixXd::Identity(d, d);
  a.col(d - 1).head(d - 1) = -direction.head(d - 1) / direction[d - 1];
  a(d - 1, d - 1) = 1.0 / direction[d - 1];
  return a;
}

Eigen::VectorXd RescaleContext::scale(const Eigen::VectorXd& v) const {
  const int m = dim() - 1;
  Eigen::VectorXd out(m + 1);
  out.head(m) = v.head(m) / (rho * rho);
  out[m] = v[m] / half_width();
  return out;
}

Eigen::VectorXd RescaleContext::map_point(const Eigen::VectorXd& x) const {
  const int m = dim() - 1;
  Eigen::VectorXd v = x;
  v.head(m) -= center;
  v[m] -= c_J;
  return scale(shear(v));
}

RescaledProfile::RescaledProfile(std::shared_ptr<const Profile> base, const RescaleContext& ctx)
    : base_(std::move(base)), c_J_(ctx.c_J), rho_(ctx.rho),
      ud_(ctx.direction[ctx.dim() - 1]), step_(ctx.half_width()) {
  const int m = ctx.dim() - 1;
  if (base_->dim() != m) throw DomainError("rescaled profile dimension mismatch");
  up_.assign(ctx.direction.data(), ctx.direction.data() + m);
  center_.assign(ctx.center.data(), ctx.center.data() + m);
}

double RescaledProfile::source_height(double c) const { return c_J_ + ud_ * step_ * c; }

void RescaledProfile::value(double c, std::span<double> out) const {
  base_->value(source_height(c), out);
  const double s = step_ * c;
  for (int i = 0; i < dim(); ++i) out[i] = (out[i] - center_[i] - s * up_[i]) / (rho_ * rho_);
}

void RescaledProfile::derivative(double c, std::span<double> out) const {
  base_->derivative(source_height(c), out);
  for (int i = 0; i < dim(); ++i) out[i] = step_ * (ud_ * out[i] - up_[i]) / (rho_ * rho_);
}

void RescaledProfile::second_derivative(double c, std::span<double> out) const {
  base_->second_derivative(source_height(c), out);
  const double f = step_ * ud_;
  for (int i = 0; i < dim(); ++i) out[i] = f * f * out[i] / (rho_ * rho_);
}

RescaleResult parabolic_rescale(const CurveFamily& family, const std::vector<std::size_t>& subset,
                                const RescaleContext& ctx, double delta) {
  const int d = family.ambient_dim();
  if (ctx.dim() != d) throw DomainError("rescale context dimension does not match the family");
  if (!(delta > 0.0)) throw DomainError("rescale needs delta > 0");
  const double new_delta = delta / (ctx.rho * ctx.rho);
  if (new_delta > 1.0)
    throw DomainError("rescale too coarse: delta / rho^2 = " + std::to_string(new_delta));

  RescaleResult out{CurveFamily(d, family.regularity_bound()), new_delta, {}};
  for (std::size_t i : subset) {
    const double gap = (family.tangent(i, ctx.c_J) - ctx.direction).norm();
    if (gap > 2.0 * ctx.rho)
      throw DomainError("curve " + std::to_string(i) + " has tangent outside the doubled cap");
    auto p = std::make_shared<RescaledProfile>(family.profile_ptr(i), ctx);
    Param z;
    z.y1.resize(d - 1);
    z.y2.resize(d - 1);
    p->value(-1.0, z.y1);
    p->value(1.0, z.y2);
    out.family.add(std::move(z), std::move(p));
    out.source.push_back(i);
  }
  return out;
}

}  // namespace kl::curves
