#include "kakeyalab/broadnarrow/subspace.hpp"

#include "kakeyalab/error.hpp"

namespace kl::broadnarrow {

Subspace Subspace::span(int d, const std::vector<Eigen::VectorXd>& vectors, double tol) {
  std::vector<Eigen::VectorXd> q;
  for (const auto& v : vectors) {
    if (v.size() != d) throw DomainError("vector has the wrong dimension");
    Eigen::VectorXd w = v;
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& b : q) w -= b.dot(w) * b;
    const double n = w.norm();
    if (n > tol * std::max(1.0, v.norm())) q.push_back(w / n);
  }
  Subspace s;
  s.basis.resize(d, static_cast<Eigen::Index>(q.size()));
  for (std::size_t j = 0; j < q.size(); ++j) s.basis.col(static_cast<Eigen::Index>(j)) = q[j];
  return s;
}

Eigen::VectorXd Subspace::project(const Eigen::VectorXd& u) const {
  if (basis.cols() == 0) return Eigen::VectorXd::Zero(u.size());
  return basis * (basis.transpose() * u);
}

double Subspace::distance(const Eigen::VectorXd& u) const { return (u - project(u)).norm(); }

Subspace Subspace::completed(int k) const {
  const int d = ambient();
  if (k > d) throw DomainError("subspace dimension exceeds the ambient dimension");
  if (dim() >= k) return *this;
  std::vector<Eigen::VectorXd> v;
  for (int j = 0; j < dim(); ++j) v.push_back(basis.col(j));
  for (int a = 0; a < d && static_cast<int>(v.size()) < k; ++a) {
    const std::size_t before = v.size();
    v.push_back(Eigen::VectorXd::Unit(d, a));
    Subspace t = span(d, v, 1e-8);
    if (t.dim() == static_cast<int>(v.size())) {
      v.clear();
      for (int j = 0; j < t.dim(); ++j) v.push_back(t.basis.col(j));
    } else {
      v.resize(before);
    }
  }
  return span(d, v);
}

double Subspace::orthonormality_error() const {
  if (basis.cols() == 0) return 0.0;
  const Eigen::MatrixXd g = basis.transpose() * basis -
                            Eigen::MatrixXd::Identity(basis.cols(), basis.cols());
  return g.cwiseAbs().maxCoeff();
}

}  // namespace kl::broadnarrow
