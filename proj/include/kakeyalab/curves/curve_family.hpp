#pragma once

#include <Eigen/Dense>
#include <memory>
#include <optional>
#include <vector>

#include "kakeyalab/curves/profiles.hpp"

namespace kl::curves {

/// Curve parameter y = (y1, y2): the curve joins (y1, -1) to (y2, 1).
struct Param {
  std::vector<double> y1, y2;

  bool operator==(const Param&) const = default;
};

/// Finite family of curves c -> (P_y(c), c) in R^d, c in [-1, 1].
class CurveFamily {
 public:
  CurveFamily(int ambient_dim, double regularity_bound);

  int ambient_dim() const { return d_; }
  std::size_t size() const { return params_.size(); }
  double regularity_bound() const { return bound_; }
  void set_regularity_bound(double c) { bound_ = c; }
  std::optional<double> transversality_constant() const { return m_; }
  void set_transversality_constant(std::optional<double> m) { m_ = m; }

  /// Appends a curve and returns its index.
  std::size_t add(Param y, std::shared_ptr<const Profile> profile);

  const Param& param(std::size_t i) const { return params_.at(i); }
  const Profile& profile(std::size_t i) const { return *profiles_.at(i); }
  std::shared_ptr<const Profile> profile_ptr(std::size_t i) const { return profiles_.at(i); }

  /// Index of y, or UnknownParameterError.
  std::size_t index_of(const Param& y) const;

  Eigen::VectorXd eval(std::size_t i, double c) const;
  Eigen::VectorXd eval(const Param& y, double c) const { return eval(index_of(y), c); }
  /// Horizontal part P_y(c) only.
  Eigen::VectorXd horizontal(std::size_t i, double c) const;
  Eigen::VectorXd slope(std::size_t i, double c) const;
  Eigen::VectorXd curvature(std::size_t i, double c) const;
  /// Unit tangent (P'(c), 1) / |(P'(c), 1)|.
  Eigen::VectorXd tangent(std::size_t i, double c) const;
  Eigen::VectorXd tangent(const Param& y, double c) const { return tangent(index_of(y), c); }

 private:
  int d_;
  double bound_;
  std::optional<double> m_;
  std::vector<Param> params_;
  std::vector<std::shared_ptr<const Profile>> profiles_;
};

Eigen::VectorXd eval_curve(const CurveFamily& family, const Param& y, double c);
Eigen::VectorXd tangent_direction(const CurveFamily& family, const Param& y, double c);

/// Straight segments joining each endpoint pair.
CurveFamily line_family(int d, const std::vector<Param>& params, double regularity_bound = 4.0);
/// Parabolic arcs with a common bend (see parabola_profile).
CurveFamily parabola_family(int d, const std::vector<Param>& params, double bend,
                            double regularity_bound = 4.0);

/// Largest violation of P_y(-1) = y1, P_y(1) = y2 over the family.
double endpoint_residual(const CurveFamily& family);

}  // namespace kl::curves
