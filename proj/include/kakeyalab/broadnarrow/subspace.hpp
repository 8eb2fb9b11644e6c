#pragma once

#include <Eigen/Dense>
#include <vector>

namespace kl::broadnarrow {

/// k-dimensional subspace of R^d with an orthonormal basis (columns).
struct Subspace {
  Eigen::MatrixXd basis;

  int ambient() const { return static_cast<int>(basis.rows()); }
  int dim() const { return static_cast<int>(basis.cols()); }

  /// Orthonormalizes the vectors (two Gram-Schmidt passes), dropping those
  /// within tol of the span of the previous ones.
  static Subspace span(int d, const std::vector<Eigen::VectorXd>& vectors, double tol = 1e-12);

  Eigen::VectorXd project(const Eigen::VectorXd& u) const;
  /// |u - proj_H u|; equals |H ∧ u| for unit u.
  double distance(const Eigen::VectorXd& u) const;
  /// Padded to dimension k with standard basis vectors orthogonalized
  /// against the current span.
  Subspace completed(int k) const;
  /// max |B^T B - I|.
  double orthonormality_error() const;
};

/// tau ⊂ N_rho(H), tested at the cap centre: dist <= rho - cap_radius.
inline bool cap_inside(const Subspace& h, const Eigen::VectorXd& center, double cap_radius, double rho) {
  return h.distance(center) <= rho - cap_radius;
}

}  // namespace kl::broadnarrow
