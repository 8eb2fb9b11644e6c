#pragma once

#include <Eigen/Dense>
#include <vector>

namespace kl::kakeya {

/// |u_1 ∧ ... ∧ u_m| = sqrt(det(<u_i, u_j>)) for unit vectors in R^d,
/// m <= d. Evaluated as |prod diag R| of a Householder QR of [u_1 ... u_m],
/// which equals the Gram square root without the loss of the square root
/// near degenerate tuples.
double wedge_volume(const std::vector<Eigen::VectorXd>& u);

/// Same for the columns of a d x m matrix.
double wedge_volume(const Eigen::MatrixXd& columns);

}  // namespace kl::kakeya
