#include "kakeyalab/kakeya/ratio.hpp"

#include <cmath>
#include <limits>

#include "kakeyalab/error.hpp"

namespace kl::kakeya {

RatioResult curved_kakeya_ratio(const curves::CurveFamily& family,
                                const std::vector<std::size_t>& curves, double delta, int k,
                                double beta, double h, const raster::RasterOptions& opts) {
  const int d = family.ambient_dim();
  if (!(beta >= 0.0 && beta <= 1.0)) throw DomainError("beta must lie in [0, 1]");
  if (k < 1 || k > d - 1) throw DomainError("k must lie in [1, d-1]");
  RatioResult r;
  r.tubes = curves.size();
  r.p_prime = k + beta;
  r.p = r.p_prime == 1.0 ? std::numeric_limits<double>::infinity() : r.p_prime / (r.p_prime - 1.0);
  r.delta_factor = std::pow(delta, (1.0 - k) / r.p_prime);
  const raster::TubeGrid grid = raster::rasterize_tubes(family, curves, delta, h, opts);
  r.numerator = raster::lp_norm(grid, r.p);
  r.volume_sum = grid.mass();
  const double vol = std::isinf(r.p) ? 1.0 : std::pow(r.volume_sum, 1.0 / r.p);
  r.ratio = r.volume_sum > 0.0 ? r.numerator / (r.delta_factor * vol) : 0.0;
  return r;
}

RatioResult curved_kakeya_ratio(const curves::CurveFamily& family,
                                const deltasets::DeltaSet& a_prime, double delta, int k,
                                double beta, double h, const RatioOptions& opts) {
  const int d = family.ambient_dim();
  if (!(beta >= 0.0 && beta <= 1.0)) throw DomainError("beta must lie in [0, 1]");
  if (k < 1 || k > d - 1) throw DomainError("k must lie in [1, d-1]");
  if (a_prime.points.dim != 2 * (d - 1))
    throw DomainError("parameter set must live in R^{2(d-1)}");
  if (opts.verify_set) {
    const double s = 2.0 * (k - 1) + beta;
    if (!deltasets::check_delta_s(a_prime.points, a_prime.delta, s).ok)
      throw ValidationError("parameter set is not a (delta, 2(k-1)+beta)-set");
  }
  std::vector<std::size_t> curves;
  curves.reserve(a_prime.points.size());
  for (std::size_t i = 0; i < a_prime.points.size(); ++i) {
    const auto p = a_prime.points[i];
    curves::Param y;
    y.y1.assign(p.begin(), p.begin() + (d - 1));
    y.y2.assign(p.begin() + (d - 1), p.end());
    curves.push_back(family.index_of(y));
  }
  return curved_kakeya_ratio(family, curves, delta, k, beta, h, opts.raster);
}

}  // namespace kl::kakeya
