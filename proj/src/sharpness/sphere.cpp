#include <cmath>
#include <numbers>

#include "kakeyalab/deltasets/cantor.hpp"
#include "kakeyalab/error.hpp"
#include "kakeyalab/sharpness/example.hpp"

namespace kl::sharpness {

Eigen::MatrixXd sphere_block(double theta, int d, int k) {
  Eigen::MatrixXd g = Eigen::MatrixXd::Identity(d - k + 1, d - k + 1);
  g(0, 0) = std::cos(theta);
  g(0, 1) = -std::sin(theta);
  g(1, 0) = std::sin(theta);
  g(1, 1) = std::cos(theta);
  return g;
}

Eigen::MatrixXd sphere_rotation(double theta, int d, int k) {
  if (k < 1 || k > d - 1) throw DomainError("sphere_rotation needs 1 <= k <= d-1");
  Eigen::MatrixXd r = Eigen::MatrixXd::Identity(d + 1, d + 1);
  r.block(k, k, d - k + 1, d - k + 1) = sphere_block(theta, d, k);
  return r;
}

SharpnessExample sphere_example(int d, int k, double beta, int depth, const SamplingSpec& spec) {
  if (k < 1 || k > d - 1) throw DomainError("sphere_example needs 1 <= k <= d-1");
  if (k > 2) throw DomainError("sphere_example samples k <= 2");
  SharpnessExample ex;
  ex.geometry = "sphere";
  ex.d = d;
  ex.k = k;
  ex.beta = beta;
  ex.depth = depth;
  for (double t : deltasets::cantor_points(beta, depth))
    ex.params.push_back(t * std::numbers::pi / 3.0 - std::numbers::pi / 6.0);
  ex.base_dim = d + 1;
  ex.lift_dim = 2 * (d + 1);
  auto lattice = sphere_lattice(k, spec.spacing);
  if (spec.patch > 0.0)
    std::erase_if(lattice, [&](const Eigen::VectorXd& x) { return x[k] < std::cos(spec.patch); });
  const double spacing = spec.spacing;
  const double arc = spec.direction_patch;
  const auto params = ex.params;
  // R_theta only mixes coordinates k and k+1, and S^k has x_{k+1} = 0.
  auto place = [d, k](const Eigen::VectorXd& x, double c, double s, double* out) {
    for (int j = 0; j <= d; ++j) out[j] = 0.0;
    for (int j = 0; j < k; ++j) out[j] = x[j];
    out[k] = c * x[k];
    out[k + 1] = s * x[k];
  };
  ex.base = [=](const Sink& sink) {
    std::vector<double> y(d + 1);
    for (double th : params) {
      const double c = std::cos(th), s = std::sin(th);
      for (const auto& x : lattice) {
        place(x, c, s, y.data());
        sink(y.data());
      }
    }
  };
  ex.lift = [=](const Sink& sink) {
    std::vector<double> y(2 * (d + 1));
    for (double th : params) {
      const double c = std::cos(th), s = std::sin(th);
      for (const auto& x : lattice) {
        place(x, c, s, y.data());
        for (const auto& v : tangent_directions(x, spacing, arc)) {
          place(v, c, s, y.data() + d + 1);
          sink(y.data());
        }
      }
    }
  };
  return ex;
}

}  // namespace kl::sharpness
