#include "kakeyalab/curves/curve_family.hpp"

#include <cmath>
#include <string>

#include "kakeyalab/error.hpp"

namespace kl::curves {

namespace {

void check_c(double c) {
  if (!(c >= -1.0 && c <= 1.0))
    throw DomainError("curve parameter c=" + std::to_string(c) + " outside [-1, 1]");
}

}  // namespace

CurveFamily::CurveFamily(int ambient_dim, double regularity_bound)
    : d_(ambient_dim), bound_(regularity_bound) {
  if (d_ < 2) throw DomainError("curve families need ambient dimension >= 2");
}

std::size_t CurveFamily::add(Param y, std::shared_ptr<const Profile> profile) {
  const std::size_t m = static_cast<std::size_t>(d_ - 1);
  if (y.y1.size() != m || y.y2.size() != m)
    throw DomainError("curve endpoint has the wrong dimension");
  if (!profile || profile->dim() != d_ - 1)
    throw DomainError("profile dimension does not match the family");
  params_.push_back(std::move(y));
  profiles_.push_back(std::move(profile));
  return params_.size() - 1;
}

std::size_t CurveFamily::index_of(const Param& y) const {
  for (std::size_t i = 0; i < params_.size(); ++i)
    if (params_[i] == y) return i;
  throw UnknownParameterError("parameter is not in the family");
}

Eigen::VectorXd CurveFamily::horizontal(std::size_t i, double c) const {
  check_c(c);
  Eigen::VectorXd p(d_ - 1);
  profile(i).value(c, {p.data(), static_cast<std::size_t>(d_ - 1)});
  return p;
}

Eigen::VectorXd CurveFamily::eval(std::size_t i, double c) const {
  Eigen::VectorXd x(d_);
  x.head(d_ - 1) = horizontal(i, c);
  x[d_ - 1] = c;
  return x;
}

Eigen::VectorXd CurveFamily::slope(std::size_t i, double c) const {
  check_c(c);
  Eigen::VectorXd p(d_ - 1);
  profile(i).derivative(c, {p.data(), static_cast<std::size_t>(d_ - 1)});
  return p;
}

Eigen::VectorXd CurveFamily::curvature(std::size_t i, double c) const {
  check_c(c);
  Eigen::VectorXd p(d_ - 1);
  profile(i).second_derivative(c, {p.data(), static_cast<std::size_t>(d_ - 1)});
  return p;
}

Eigen::VectorXd CurveFamily::tangent(std::size_t i, double c) const {
  Eigen::VectorXd t(d_);
  t.head(d_ - 1) = slope(i, c);
  t[d_ - 1] = 1.0;
  return t / t.norm();
}

Eigen::VectorXd eval_curve(const CurveFamily& family, const Param& y, double c) {
  check_c(c);
  return family.eval(y, c);
}

Eigen::VectorXd tangent_direction(const CurveFamily& family, const Param& y, double c) {
  check_c(c);
  return family.tangent(y, c);
}

CurveFamily line_family(int d, const std::vector<Param>& params, double regularity_bound) {
  CurveFamily f(d, regularity_bound);
  for (const auto& y : params) f.add(y, line_profile(y.y1, y.y2));
  return f;
}

CurveFamily parabola_family(int d, const std::vector<Param>& params, double bend,
                            double regularity_bound) {
  CurveFamily f(d, regularity_bound);
  for (const auto& y : params) f.add(y, parabola_profile(y.y1, y.y2, bend));
  return f;
}

double endpoint_residual(const CurveFamily& family) {
  double worst = 0.0;
  const int m = family.ambient_dim() - 1;
  for (std::size_t i = 0; i < family.size(); ++i) {
    const Eigen::VectorXd a = family.horizontal(i, -1.0), b = family.horizontal(i, 1.0);
    const Param& y = family.param(i);
    for (int j = 0; j < m; ++j) {
      worst = std::max(worst, std::abs(a[j] - y.y1[j]));
      worst = std::max(worst, std::abs(b[j] - y.y2[j]));
    }
  }
  return worst;
}

}  // namespace kl::curves
