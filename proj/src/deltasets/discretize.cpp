#include "kakeyalab/deltasets/discretize.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "kakeyalab/deltasets/frostman.hpp"
#include "kakeyalab/error.hpp"
#include "kakeyalab/raster/rasterize.hpp"

namespace kl::deltasets {

double DyadicCover::weighted_sum(double t) const {
  double s = 0.0;
  for (const auto& l : levels) s += std::pow(2.0, -l.k * t) * static_cast<double>(l.centers.size());
  return s;
}

BallUnion::BallUnion(PointSet centers, double radius)
    : centers_(std::make_shared<const PointSet>(std::move(centers))), radius_(radius) {
  tree_ = std::make_shared<const KdTree>(*centers_);
}

bool BallUnion::contains(const double* x) const {
  if (centers_->empty()) return false;
  double dist = 0.0;
  tree_->nearest({x, static_cast<std::size_t>(centers_->dim)}, static_cast<std::size_t>(-1), &dist);
  return dist <= radius_;
}

raster::Mask BallUnion::mask(std::string id) const {
  BallUnion copy = *this;
  return {std::move(id), [copy](const double* x) { return copy.contains(x); }};
}

DiscretizeResult discretize_union(const curves::CurveFamily& family, const DyadicCover& cover,
                                  double alpha, double beta, int k, double eps,
                                  const DiscretizeOptions& opts) {
  const int d = family.ambient_dim();
  if (family.size() == 0) throw DomainError("discretize_union needs a nonempty family");
  if (cover.dim != d || cover.levels.empty()) throw DomainError("cover does not match the family");
  if (k < 1 || k > d - 1 || !(beta >= 0.0 && beta <= 1.0) || !(eps >= 0.0))
    throw DomainError("discretize_union needs 1 <= k <= d-1, beta in [0, 1], eps >= 0");
  const double weighted = cover.weighted_sum(alpha + eps);
  if (weighted > 1.0 + 1e-12)
    throw DomainError("cover violates the weighted ball-count bound (sum = " + std::to_string(weighted) + ")");
  for (std::size_t i = 1; i < cover.levels.size(); ++i)
    if (cover.levels[i].k <= cover.levels[i - 1].k) throw DomainError("cover levels must increase");

  const std::size_t L = cover.levels.size();
  std::vector<std::unique_ptr<KdTree>> trees;
  for (const auto& l : cover.levels) trees.push_back(std::make_unique<KdTree>(l.centers));
  const int finest = cover.levels.back().k;
  const int samples = std::max(opts.c_samples, 16 << std::min(finest, 20));

  // Covered height measure per curve and level; mass on the last coordinate
  // bounds the 1-content of the covered arc from below.
  const std::size_t n = family.size();
  std::vector<double> mu(n * L, 0.0);
#pragma omp parallel for schedule(static)
  for (std::size_t y = 0; y < n; ++y) {
    for (int i = 0; i < samples; ++i) {
      const double c = -1.0 + (i + 0.5) * (2.0 / samples);
      const Eigen::VectorXd x = family.eval(y, c);
      for (std::size_t l = 0; l < L; ++l) {
        if (cover.levels[l].centers.empty()) continue;
        double dist = 0.0;
        trees[l]->nearest({x.data(), static_cast<std::size_t>(d)}, static_cast<std::size_t>(-1), &dist);
        if (dist <= std::ldexp(1.0, -cover.levels[l].k)) mu[y * L + l] += 2.0 / samples;
      }
    }
  }

  DiscretizeResult out{DeltaSet{}, {}, 0, 0.0, 0.0, BallUnion(PointSet(d), 0.0), {}, {}, 0, 0, 0, 0};
  out.level_of_curve.resize(n);
  out.captured_mass.resize(n);
  for (std::size_t y = 0; y < n; ++y) {
    double total = 0.0;
    for (std::size_t l = 0; l < L; ++l) total += mu[y * L + l];
    if (total < 1.0)
      throw PipelineError("curve " + std::to_string(y) + " has covered height mass " +
                          std::to_string(total) + " < 1; the cover does not cover it");
    std::size_t best = 0;
    for (std::size_t l = 1; l < L; ++l) {
      const double ka = cover.levels[l].k, kb = cover.levels[best].k;
      if (mu[y * L + l] * ka * ka > mu[y * L + best] * kb * kb) best = l;
    }
    out.level_of_curve[y] = static_cast<int>(best);
    out.captured_mass[y] = mu[y * L + best];
  }

  const int m = d - 1;
  out.s = 2.0 * (k - 1) + beta - eps;
  std::vector<double> origin(2 * m, -1.0);
  auto param_points = [&](std::size_t level, std::vector<std::size_t>& ids) {
    PointSet pts(2 * m);
    ids.clear();
    for (std::size_t y = 0; y < n; ++y) {
      if (out.level_of_curve[y] != static_cast<int>(level)) continue;
      std::vector<double> p(family.param(y).y1);
      p.insert(p.end(), family.param(y).y2.begin(), family.param(y).y2.end());
      pts.push(p);
      ids.push_back(y);
    }
    return pts;
  };

  std::size_t chosen = 0;
  double best_score = -1.0;
  std::vector<std::size_t> ids;
  for (std::size_t l = 0; l < L; ++l) {
    const PointSet pts = param_points(l, ids);
    if (pts.empty()) continue;
    const double delta = std::ldexp(1.0, -cover.levels[l].k);
    const double kk = cover.levels[l].k;
    const double score = dyadic_content(DyadicCells::from_points(pts, delta, origin), out.s) * kk * kk;
    if (score > best_score) {
      best_score = score;
      chosen = l;
    }
  }

  out.k1 = cover.levels[chosen].k;
  out.delta = std::ldexp(1.0, -out.k1);
  const PointSet pts = param_points(chosen, ids);
  const DyadicCells cells = DyadicCells::from_points(pts, out.delta, origin, true);
  const FrostmanResult fr = frostman_extract(cells, out.s);
  out.a_prime = fr.set;
  out.frostman_c_impl = fr.c_impl;
  for (std::size_t c : fr.cells) out.curves.push_back(ids[cells.source[c]]);

  out.s_prime = BallUnion(cover.levels[chosen].centers, 2.0 * out.delta);
  const raster::Mask mask = out.s_prime.mask("S'");
  raster::RasterOptions ro;
  ro.mask = &mask;
  const double h = out.delta / opts.h_ratio;
  const double k1sq = static_cast<double>(out.k1) * out.k1;
  const double unit = std::pow(out.delta, d - 1) / k1sq;
  double min_inter = INFINITY;
  for (std::size_t y : out.curves)
    min_inter = std::min(min_inter, raster::tube_measure(family, y, out.delta, h, ro));
  const double mass = raster::rasterize_tubes(family, out.curves, out.delta, h, ro).mass();
  const double count = static_cast<double>(out.curves.size());
  out.count_constant = count * k1sq * std::pow(out.delta, out.s);
  out.intersection_constant = min_inter / unit;
  out.mass_constant = mass / (count * unit);
  return out;
}

}  // namespace kl::deltasets
