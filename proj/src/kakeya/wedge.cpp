#include "kakeyalab/kakeya/wedge.hpp"

#include <cmath>

#include "kakeyalab/error.hpp"

namespace kl::kakeya {

double wedge_volume(const Eigen::MatrixXd& u) {
  const auto d = u.rows(), m = u.cols();
  if (m < 1) throw DomainError("wedge_volume needs at least one vector");
  if (m > d) throw DomainError("wedge_volume: more vectors than the dimension");
  for (Eigen::Index j = 0; j < m; ++j)
    if (std::abs(u.col(j).norm() - 1.0) > 1e-10) throw DomainError("wedge_volume needs unit vectors");
  const Eigen::HouseholderQR<Eigen::MatrixXd> qr(u);
  const Eigen::MatrixXd& r = qr.matrixQR();
  double v = 1.0;
  for (Eigen::Index j = 0; j < m; ++j) v *= std::abs(r(j, j));
  return std::min(v, 1.0);
}

double wedge_volume(const std::vector<Eigen::VectorXd>& u) {
  if (u.empty()) throw DomainError("wedge_volume needs at least one vector");
  Eigen::MatrixXd a(u[0].size(), static_cast<Eigen::Index>(u.size()));
  for (std::size_t j = 0; j < u.size(); ++j) {
    if (u[j].size() != a.rows()) throw DomainError("wedge_volume vectors differ in dimension");
    a.col(static_cast<Eigen::Index>(j)) = u[j];
  }
  return wedge_volume(a);
}

}  // namespace kl::kakeya
