#include <cmath>
#include <numbers>

#include "kakeyalab/deltasets/cantor.hpp"
#include "kakeyalab/error.hpp"
#include "kakeyalab/sharpness/example.hpp"

namespace kl::sharpness {

SharpnessExample euclidean_example(int d, int k, double beta, int depth, const SamplingSpec& spec) {
  if (k < 1 || k > d - 1) throw DomainError("euclidean_example needs 1 <= k <= d-1");
  if (k > 2) throw DomainError("euclidean_example samples k <= 2");
  SharpnessExample ex;
  ex.geometry = "euclidean";
  ex.d = d;
  ex.k = k;
  ex.beta = beta;
  ex.depth = depth;
  ex.params = deltasets::cantor_points(beta, depth);
  ex.base_dim = d;
  ex.lift_dim = 2 * d;
  const int n = static_cast<int>(std::ceil(1.0 / spec.spacing)) + 1;
  std::vector<Eigen::VectorXd> dirs;
  if (k == 1) {
    dirs = {Eigen::VectorXd::Ones(1), -Eigen::VectorXd::Ones(1)};
  } else {
    const int m = static_cast<int>(std::ceil(2.0 * std::numbers::pi / spec.spacing));
    for (int i = 0; i < m; ++i) {
      Eigen::VectorXd v(2);
      v << std::cos(2.0 * std::numbers::pi * i / m), std::sin(2.0 * std::numbers::pi * i / m);
      dirs.push_back(v);
    }
  }
  const auto params = ex.params;
  // Visits the window grid of one plane.
  auto grid = [=](double t, const std::function<void(double*)>& f) {
    std::vector<double> x(d, 0.0);
    x[k] = t;
    std::vector<int> idx(k, 0);
    while (true) {
      for (int j = 0; j < k; ++j) x[j] = static_cast<double>(idx[j]) / (n - 1);
      f(x.data());
      int j = 0;
      while (j < k && ++idx[j] == n) idx[j++] = 0;
      if (j == k) break;
    }
  };
  ex.base = [=](const Sink& sink) {
    for (double t : params) grid(t, [&](double* x) { sink(x); });
  };
  ex.lift = [=](const Sink& sink) {
    std::vector<double> y(2 * d, 0.0);
    for (double t : params)
      grid(t, [&](double* x) {
        for (int j = 0; j < d; ++j) y[j] = x[j];
        for (const auto& v : dirs) {
          for (int j = 0; j < k; ++j) y[d + j] = v[j];
          sink(y.data());
        }
      });
  };
  return ex;
}

}  // namespace kl::sharpness
