#pragma once

#include <functional>
#include <memory>
#include <span>
#include <vector>

namespace kl::curves {

/// Finite-difference steps used when a profile has no closed-form derivative.
inline constexpr double kFirstDerivativeStep = 1e-4;
inline constexpr double kSecondDerivativeStep = 1e-3;

/// Horizontal profile c -> P(c) in R^m (m = d - 1) of a curve parametrized by
/// its last coordinate, c in [-1, 1].
class Profile {
 public:
  virtual ~Profile() = default;

  virtual int dim() const = 0;
  virtual void value(double c, std::span<double> out) const = 0;
  /// Exact derivatives available (otherwise finite differences are used).
  virtual bool analytic() const { return false; }
  virtual void derivative(double c, std::span<double> out) const;
  virtual void second_derivative(double c, std::span<double> out) const;
};

/// P_i(c) = sum_j coeffs[i][j] c^j.
class PolynomialProfile final : public Profile {
 public:
  explicit PolynomialProfile(std::vector<std::vector<double>> coeffs);

  int dim() const override { return static_cast<int>(coeffs_.size()); }
  void value(double c, std::span<double> out) const override;
  bool analytic() const override { return true; }
  void derivative(double c, std::span<double> out) const override;
  void second_derivative(double c, std::span<double> out) const override;

  const std::vector<std::vector<double>>& coefficients() const { return coeffs_; }

 private:
  std::vector<std::vector<double>> coeffs_;
};

/// Profile from callables. Missing derivative callables fall back to
/// finite differences.
class FunctionProfile final : public Profile {
 public:
  using Fn = std::function<void(double, std::span<double>)>;

  FunctionProfile(int dim, Fn value, Fn derivative = {}, Fn second_derivative = {});

  int dim() const override { return dim_; }
  void value(double c, std::span<double> out) const override { value_(c, out); }
  bool analytic() const override { return static_cast<bool>(d1_) && static_cast<bool>(d2_); }
  void derivative(double c, std::span<double> out) const override;
  void second_derivative(double c, std::span<double> out) const override;

 private:
  int dim_;
  Fn value_, d1_, d2_;
};

/// Piecewise cubic Hermite profile through samples on an increasing c-grid.
class SampledProfile final : public Profile {
 public:
  /// values and slopes are grid-major: values[n * dim + i].
  SampledProfile(int dim, std::vector<double> c_grid, std::vector<double> values,
                 std::vector<double> slopes);

  int dim() const override { return dim_; }
  void value(double c, std::span<double> out) const override;
  bool analytic() const override { return true; }
  void derivative(double c, std::span<double> out) const override;
  void second_derivative(double c, std::span<double> out) const override;

  const std::vector<double>& c_grid() const { return grid_; }

 private:
  std::size_t locate(double c) const;

  int dim_;
  std::vector<double> grid_, values_, slopes_;
};

std::shared_ptr<const Profile> constant_profile(std::vector<double> value);
/// Straight segment from (y1, -1) to (y2, 1).
std::shared_ptr<const Profile> line_profile(std::span<const double> y1, std::span<const double> y2);
/// Line through the endpoints plus bend * (c^2 - 1) / 2 added to every
/// coordinate, which keeps the endpoints fixed.
std::shared_ptr<const Profile> parabola_profile(std::span<const double> y1,
                                                std::span<const double> y2, double bend);

}  // namespace kl::curves
