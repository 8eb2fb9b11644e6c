#include "kakeyalab/curves/profiles.hpp"

#include <algorithm>
#include <cmath>

#include "kakeyalab/error.hpp"

namespace kl::curves {

namespace {

// Stencils stay inside [-1, 1]; near an end they become one-sided.
void fd_first(const Profile& p, double c, std::span<double> out) {
  const int m = p.dim();
  const double h = kFirstDerivativeStep;
  std::vector<double> a(m), b(m), e(m);
  if (c - h >= -1.0 && c + h <= 1.0) {
    p.value(c + h, a);
    p.value(c - h, b);
    for (int i = 0; i < m; ++i) out[i] = (a[i] - b[i]) / (2 * h);
    return;
  }
  const double s = c - h < -1.0 ? 1.0 : -1.0;
  p.value(c, a);
  p.value(c + s * h, b);
  p.value(c + 2 * s * h, e);
  for (int i = 0; i < m; ++i) out[i] = s * (-3 * a[i] + 4 * b[i] - e[i]) / (2 * h);
}

void fd_second(const Profile& p, double c, std::span<double> out) {
  const int m = p.dim();
  const double h = kSecondDerivativeStep;
  std::vector<double> f0(m), f1(m), f2(m), f3(m);
  if (c - h >= -1.0 && c + h <= 1.0) {
    p.value(c - h, f0);
    p.value(c, f1);
    p.value(c + h, f2);
    for (int i = 0; i < m; ++i) out[i] = (f0[i] - 2 * f1[i] + f2[i]) / (h * h);
    return;
  }
  const double s = c - h < -1.0 ? 1.0 : -1.0;
  p.value(c, f0);
  p.value(c + s * h, f1);
  p.value(c + 2 * s * h, f2);
  p.value(c + 3 * s * h, f3);
  for (int i = 0; i < m; ++i) out[i] = (2 * f0[i] - 5 * f1[i] + 4 * f2[i] - f3[i]) / (h * h);
}

}  // namespace

void Profile::derivative(double c, std::span<double> out) const { fd_first(*this, c, out); }

void Profile::second_derivative(double c, std::span<double> out) const {
  fd_second(*this, c, out);
}

PolynomialProfile::PolynomialProfile(std::vector<std::vector<double>> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw DomainError("polynomial profile needs at least one coordinate");
}

void PolynomialProfile::value(double c, std::span<double> out) const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    double acc = 0.0;
    for (auto it = coeffs_[i].rbegin(); it != coeffs_[i].rend(); ++it) acc = acc * c + *it;
    out[i] = acc;
  }
}

void PolynomialProfile::derivative(double c, std::span<double> out) const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const auto& a = coeffs_[i];
    double acc = 0.0;
    for (std::size_t j = a.size(); j-- > 1;) acc = acc * c + static_cast<double>(j) * a[j];
    out[i] = acc;
  }
}

void PolynomialProfile::second_derivative(double c, std::span<double> out) const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const auto& a = coeffs_[i];
    double acc = 0.0;
    for (std::size_t j = a.size(); j-- > 2;)
      acc = acc * c + static_cast<double>(j * (j - 1)) * a[j];
    out[i] = acc;
  }
}

FunctionProfile::FunctionProfile(int dim, Fn value, Fn derivative, Fn second_derivative)
    : dim_(dim), value_(std::move(value)), d1_(std::move(derivative)),
      d2_(std::move(second_derivative)) {
  if (dim_ < 1 || !value_) throw DomainError("function profile needs a value callable");
}

void FunctionProfile::derivative(double c, std::span<double> out) const {
  if (d1_)
    d1_(c, out);
  else
    Profile::derivative(c, out);
}

void FunctionProfile::second_derivative(double c, std::span<double> out) const {
  if (d2_)
    d2_(c, out);
  else
    Profile::second_derivative(c, out);
}

SampledProfile::SampledProfile(int dim, std::vector<double> c_grid, std::vector<double> values,
                               std::vector<double> slopes)
    : dim_(dim), grid_(std::move(c_grid)), values_(std::move(values)), slopes_(std::move(slopes)) {
  const std::size_t n = grid_.size();
  if (dim_ < 1 || n < 2) throw DomainError("sampled profile needs at least two grid points");
  if (values_.size() != n * dim_ || slopes_.size() != n * dim_)
    throw DomainError("sampled profile arrays do not match the grid size");
  for (std::size_t i = 1; i < n; ++i)
    if (!(grid_[i] > grid_[i - 1])) throw DomainError("sampled profile grid must increase");
}

std::size_t SampledProfile::locate(double c) const {
  auto it = std::upper_bound(grid_.begin(), grid_.end(), c);
  std::size_t j = it == grid_.begin() ? 0 : static_cast<std::size_t>(it - grid_.begin()) - 1;
  return std::min(j, grid_.size() - 2);
}

void SampledProfile::value(double c, std::span<double> out) const {
  const std::size_t j = locate(c);
  const double w = grid_[j + 1] - grid_[j];
  const double t = (c - grid_[j]) / w;
  const double t2 = t * t, t3 = t2 * t;
  const double h00 = 2 * t3 - 3 * t2 + 1, h10 = t3 - 2 * t2 + t;
  const double h01 = -2 * t3 + 3 * t2, h11 = t3 - t2;
  for (int i = 0; i < dim_; ++i) {
    const double p0 = values_[j * dim_ + i], p1 = values_[(j + 1) * dim_ + i];
    const double m0 = slopes_[j * dim_ + i], m1 = slopes_[(j + 1) * dim_ + i];
    out[i] = h00 * p0 + h10 * w * m0 + h01 * p1 + h11 * w * m1;
  }
}

void SampledProfile::derivative(double c, std::span<double> out) const {
  const std::size_t j = locate(c);
  const double w = grid_[j + 1] - grid_[j];
  const double t = (c - grid_[j]) / w;
  const double t2 = t * t;
  const double d00 = 6 * t2 - 6 * t, d10 = 3 * t2 - 4 * t + 1;
  const double d01 = -6 * t2 + 6 * t, d11 = 3 * t2 - 2 * t;
  for (int i = 0; i < dim_; ++i) {
    const double p0 = values_[j * dim_ + i], p1 = values_[(j + 1) * dim_ + i];
    const double m0 = slopes_[j * dim_ + i], m1 = slopes_[(j + 1) * dim_ + i];
    out[i] = (d00 * p0 + d01 * p1) / w + d10 * m0 + d11 * m1;
  }
}

void SampledProfile::second_derivative(double c, std::span<double> out) const {
  const std::size_t j = locate(c);
  const double w = grid_[j + 1] - grid_[j];
  const double t = (c - grid_[j]) / w;
  const double s00 = 12 * t - 6, s10 = 6 * t - 4, s01 = -12 * t + 6, s11 = 6 * t - 2;
  for (int i = 0; i < dim_; ++i) {
    const double p0 = values_[j * dim_ + i], p1 = values_[(j + 1) * dim_ + i];
    const double m0 = slopes_[j * dim_ + i], m1 = slopes_[(j + 1) * dim_ + i];
    out[i] = (s00 * p0 + s01 * p1) / (w * w) + (s10 * m0 + s11 * m1) / w;
  }
}

std::shared_ptr<const Profile> constant_profile(std::vector<double> value) {
  std::vector<std::vector<double>> coeffs;
  for (double v : value) coeffs.push_back({v});
  return std::make_shared<PolynomialProfile>(std::move(coeffs));
}

std::shared_ptr<const Profile> line_profile(std::span<const double> y1, std::span<const double> y2) {
  if (y1.size() != y2.size()) throw DomainError("line endpoints differ in dimension");
  std::vector<std::vector<double>> coeffs;
  for (std::size_t i = 0; i < y1.size(); ++i)
    coeffs.push_back({(y1[i] + y2[i]) / 2, (y2[i] - y1[i]) / 2});
  return std::make_shared<PolynomialProfile>(std::move(coeffs));
}

std::shared_ptr<const Profile> parabola_profile(std::span<const double> y1,
                                                std::span<const double> y2, double bend) {
  if (y1.size() != y2.size()) throw DomainError("parabola endpoints differ in dimension");
  std::vector<std::vector<double>> coeffs;
  for (std::size_t i = 0; i < y1.size(); ++i)
    coeffs.push_back({(y1[i] + y2[i]) / 2 - bend / 2, (y2[i] - y1[i]) / 2, bend / 2});
  return std::make_shared<PolynomialProfile>(std::move(coeffs));
}

}  // namespace kl::curves
