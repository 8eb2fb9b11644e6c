#include "kakeyalab/curves/diagnostics.hpp"

#include <algorithm>
#include <limits>

#include "kakeyalab/error.hpp"
#include "kakeyalab/rng.hpp"

namespace kl::curves {

double regularity_estimate(const CurveFamily& family, int c_grid_size) {
  if (c_grid_size < 3) throw DomainError("regularity_estimate needs c_grid_size >= 3");
  double worst = 0.0;
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (int n = 0; n < c_grid_size; ++n) {
      const double c = n == c_grid_size - 1 ? 1.0 : -1.0 + 2.0 * n / (c_grid_size - 1);
      const double v = family.horizontal(i, c).norm() + family.slope(i, c).norm() +
                       family.curvature(i, c).norm();
      worst = std::max(worst, v);
    }
  }
  return worst;
}

double curve_separation(const CurveFamily& family, std::size_t i, std::size_t j, double c) {
  return (family.horizontal(i, c) - family.horizontal(j, c)).norm() +
         (family.tangent(i, c) - family.tangent(j, c)).norm();
}

TransversalityEstimate transversality_estimate(const CurveFamily& family, int pair_samples,
                                               int c_samples, std::uint64_t seed,
                                               bool swap_roles) {
  if (family.size() < 2) throw DomainError("transversality_estimate needs at least two curves");
  if (pair_samples < 1 || c_samples < 1)
    throw DomainError("transversality_estimate needs positive sample counts");
  Rng rng(seed);
  Rng c_rng = rng.split(0), pair_rng = rng.split(1);
  std::vector<double> num(c_samples), den(c_samples);
  for (auto& c : num) c = c_rng.uniform(-1.0, 1.0);
  for (auto& c : den) c = c_rng.uniform(-1.0, 1.0);
  if (swap_roles) std::swap(num, den);

  TransversalityEstimate out;
  double best = std::numeric_limits<double>::infinity();
  const auto n = static_cast<std::uint64_t>(family.size());
  for (int s = 0; s < pair_samples; ++s) {
    std::size_t i = pair_rng.below(n);
    std::size_t j = pair_rng.below(n - 1);
    if (j >= i) ++j;
    if (i > j) std::swap(i, j);
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    for (double c : num) lo = std::min(lo, curve_separation(family, i, j, c));
    for (double c : den) hi = std::max(hi, curve_separation(family, i, j, c));
    if (hi < 1e-12) {
      ++out.pairs_skipped;
      continue;
    }
    ++out.pairs_used;
    best = std::min(best, lo / hi);
  }
  if (out.pairs_used > 0) out.m_hat = best;
  return out;
}

}  // namespace kl::curves
