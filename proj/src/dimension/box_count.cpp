#include "kakeyalab/dimension/box_count.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "kakeyalab/error.hpp"
#include "kakeyalab/kakeya/fit.hpp"

namespace kl::dimension {

std::uint64_t count_cells(const deltasets::PointSet& points, double h) {
  const std::size_t n = points.size();
  const int dim = points.dim;
  if (n == 0) return 0;
  std::vector<std::int64_t> key(n * dim);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i)
    for (int k = 0; k < dim; ++k)
      key[i * dim + k] = static_cast<std::int64_t>(std::floor(points.coords[i * dim + k] / h));
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  auto less = [&](std::size_t a, std::size_t b) {
    return std::lexicographical_compare(key.begin() + a * dim, key.begin() + (a + 1) * dim,
                                        key.begin() + b * dim, key.begin() + (b + 1) * dim);
  };
  std::sort(order.begin(), order.end(), less);
  std::uint64_t distinct = 1;
  for (std::size_t i = 1; i < n; ++i)
    if (less(order[i - 1], order[i])) ++distinct;
  return distinct;
}

namespace {

std::vector<double> dyadic_ladder(double h_min, double h_max) {
  if (!(h_min > 0.0 && h_max >= h_min)) throw DomainError("box_dimension needs 0 < h_min <= h_max");
  std::vector<double> scales;
  const int e = static_cast<int>(std::floor(std::log2(h_max) + 1e-12));
  for (double h = std::ldexp(1.0, e); h >= h_min * (1 - 1e-12); h /= 2) scales.push_back(h);
  if (scales.size() < 3) throw InsufficientDataError("box_dimension needs at least 3 dyadic scales");
  return scales;
}

void fit_record(BoxCountRecord& rec, const BoxCountOptions& opts) {
  rec.fit_begin = 0;
  rec.fit_end = rec.scales.size();
  if (opts.trim_ends && rec.scales.size() >= 5) {
    rec.fit_begin = 1;
    rec.fit_end = rec.scales.size() - 1;
  }
  std::vector<double> x, y;
  for (std::size_t i = rec.fit_begin; i < rec.fit_end; ++i) {
    x.push_back(std::log(1.0 / rec.scales[i]));
    y.push_back(std::log(static_cast<double>(rec.counts[i])));
  }
  const auto fit = kakeya::least_squares(x, y);
  rec.slope = fit.slope;
  rec.intercept = fit.intercept;
  rec.r2 = fit.r2;
  for (std::size_t i = 0; i < x.size(); ++i)
    rec.residual_max = std::max(rec.residual_max, std::abs(y[i] - fit.intercept - fit.slope * x[i]));
}

}  // namespace

BoxCountRecord box_dimension(const deltasets::PointSet& points, double h_min, double h_max,
                             const BoxCountOptions& opts) {
  if (points.empty()) throw InsufficientDataError("box_dimension needs a nonempty point set");
  BoxCountRecord rec;
  rec.scales = dyadic_ladder(h_min, h_max);
  for (double h : rec.scales) rec.counts.push_back(count_cells(points, h));
  fit_record(rec, opts);
  return rec;
}

BoxCounter::BoxCounter(int dim, double h_min, double h_max)
    : dim_(dim), scales_(dyadic_ladder(h_min, h_max)) {
  if (dim < 1 || dim > 8) throw DomainError("BoxCounter supports dimensions 1 to 8");
}

void BoxCounter::add(const double* x) {
  ++points_;
  const double h = scales_.back();
  unsigned __int128 key = 0;
  for (int k = 0; k < dim_; ++k) {
    const double q = std::floor(x[k] / h);
    if (!(std::abs(q) < 32768.0)) throw DomainError("BoxCounter cell index out of range");
    key = (key << 16) | static_cast<std::uint16_t>(static_cast<std::int64_t>(q) + 32768);
  }
  keys_.push_back(key);
  if (keys_.size() >= limit_) {
    std::sort(keys_.begin(), keys_.end());
    keys_.erase(std::unique(keys_.begin(), keys_.end()), keys_.end());
    limit_ = std::max(limit_, 2 * keys_.size());
  }
}

BoxCountRecord BoxCounter::finish(const BoxCountOptions& opts) const {
  if (points_ == 0) throw InsufficientDataError("box_dimension needs a nonempty point set");
  BoxCountRecord rec;
  rec.scales = scales_;
  std::sort(keys_.begin(), keys_.end());
  keys_.erase(std::unique(keys_.begin(), keys_.end()), keys_.end());
  rec.counts.resize(scales_.size());
  // floor(x / 2h) = floor(floor(x / h) / 2) for integer cell indices, so each
  // level is the halving of the next finer one.
  std::vector<unsigned __int128> level = keys_;
  for (int s = static_cast<int>(scales_.size()) - 1; s >= 0; --s) {
    if (s + 1 < static_cast<int>(scales_.size())) {
      for (auto& key : level) {
        unsigned __int128 out = 0;
        for (int k = dim_ - 1; k >= 0; --k) {
          const std::int64_t q = static_cast<std::int64_t>((key >> (16 * k)) & 0xffff) - 32768;
          out = (out << 16) | static_cast<std::uint16_t>((q >> 1) + 32768);
        }
        key = out;
      }
      std::sort(level.begin(), level.end());
      level.erase(std::unique(level.begin(), level.end()), level.end());
    }
    rec.counts[s] = level.size();
  }
  fit_record(rec, opts);
  return rec;
}

BoxCountRecord box_dimension(const raster::TubeGrid& grid, double h_min, double h_max,
                             const BoxCountOptions& opts) {
  deltasets::PointSet pts(grid.dim());
  std::vector<double> c(grid.dim());
  for (auto lin : grid.indices()) {
    grid.center(lin, c.data());
    pts.push(c);
  }
  return box_dimension(pts, h_min, h_max, opts);
}

LiftCheck lift_dimension_check(const std::vector<deltasets::Line>& lines, const LiftOptions& opts) {
  LiftCheck out;
  out.lines = box_dimension(deltasets::line_space_points(lines), opts.h_min, opts.h_max);
  out.lift = box_dimension(deltasets::line_space_lift(lines, opts.t0, opts.t1, opts.samples),
                           opts.h_min, opts.h_max);
  out.dim_a = out.lines.slope;
  out.dim_sa = out.lift.slope;
  out.difference = out.dim_sa - out.dim_a;
  return out;
}

}  // namespace kl::dimension
