#include "kakeyalab/raster/straight.hpp"

#include <algorithm>
#include <cmath>

#include "kakeyalab/error.hpp"
#include "kakeyalab/simd/kernels.hpp"

namespace kl::raster {

bool StraightTube::contains(const Eigen::VectorXd& x) const {
  const Eigen::VectorXd w = x - a;
  const double along = w.dot(u);
  return std::abs(along) <= half_length && w.squaredNorm() - along * along <= radius * radius;
}

std::vector<std::uint64_t> straight_tube_cells(const StraightTube& t, double h) {
  const int d = static_cast<int>(t.a.size());
  if (d < 1 || t.u.size() != d) throw DomainError("straight tube dimension mismatch");
  if (std::abs(t.u.norm() - 1.0) > 1e-10) throw DomainError("straight tube direction must be unit");
  const TubeGrid frame(d, h);
  const std::int64_t n = frame.per_axis();
  std::vector<double> xs(n);
  for (std::int64_t i = 0; i < n; ++i) xs[i] = -1.0 + (static_cast<double>(i) + 0.5) * h;

  // Bounding box of the tube, as cell index ranges.
  std::vector<std::int64_t> lo(d), hi(d);
  for (int k = 0; k < d; ++k) {
    const double reach = t.half_length * std::abs(t.u[k]) + t.radius;
    lo[k] = std::max<std::int64_t>(0, static_cast<std::int64_t>(std::floor((t.a[k] - reach + 1.0) / h - 0.5)) - 1);
    hi[k] = std::min<std::int64_t>(n - 1, static_cast<std::int64_t>(std::ceil((t.a[k] + reach + 1.0) / h - 0.5)) + 1);
    if (lo[k] > hi[k]) return {};
  }

  const simd::Kernels& kern = simd::kernels();
  const double r2 = t.radius * t.radius;
  const double u0 = t.u[0];
  const double quad = 1.0 - u0 * u0;
  std::vector<std::uint32_t> row(n, 0u);
  std::vector<std::uint64_t> out;
  std::vector<std::int64_t> idx(lo.begin(), lo.end());
  while (true) {
    double rest = 0.0, along_rest = 0.0;
    for (int k = 1; k < d; ++k) {
      const double w = xs[idx[k]] - t.a[k];
      rest += w * w;
      along_rest += w * t.u[k];
    }
    // Conservative x_0 window from the quadratic and the length constraint;
    // the kernel makes the exact decision.
    double wlo = xs[lo[0]] - t.a[0], whi = xs[hi[0]] - t.a[0];
    bool empty = false;
    if (quad > 1e-12) {
      const double b = -2.0 * u0 * along_rest;
      const double c = rest - along_rest * along_rest - r2;
      const double disc = b * b - 4.0 * quad * c;
      if (disc < -1e-12) {
        empty = true;
      } else {
        const double root = std::sqrt(std::max(disc, 0.0));
        wlo = std::max(wlo, (-b - root) / (2.0 * quad));
        whi = std::min(whi, (-b + root) / (2.0 * quad));
      }
    }
    if (std::abs(u0) > 1e-12) {
      double e1 = (-t.half_length - along_rest) / u0, e2 = (t.half_length - along_rest) / u0;
      if (e1 > e2) std::swap(e1, e2);
      wlo = std::max(wlo, e1);
      whi = std::min(whi, e2);
    }
    if (!empty && wlo <= whi + 2.0 * h) {
      const std::int64_t i0 = std::max(lo[0], static_cast<std::int64_t>(std::floor((t.a[0] + wlo + 1.0) / h - 0.5)) - 1);
      const std::int64_t i1 = std::min(hi[0], static_cast<std::int64_t>(std::ceil((t.a[0] + whi + 1.0) / h - 0.5)) + 1);
      if (i0 <= i1) {
        const auto len = static_cast<std::size_t>(i1 - i0 + 1);
        kern.accumulate_segment_row(xs.data() + i0, len, t.a[0], u0, rest, along_rest, r2,
                                    t.half_length, row.data() + i0);
        std::uint64_t base = 0;
        for (int k = d - 1; k >= 1; --k) base = base * static_cast<std::uint64_t>(n) + idx[k];
        base *= static_cast<std::uint64_t>(n);
        for (std::int64_t i = i0; i <= i1; ++i)
          if (row[i]) {
            out.push_back(base + static_cast<std::uint64_t>(i));
            row[i] = 0;
          }
      }
    }
    int k = 1;
    for (; k < d; ++k) {
      if (++idx[k] <= hi[k]) break;
      idx[k] = lo[k];
    }
    if (k >= d) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

TubeGrid rasterize_straight(const std::vector<StraightTube>& tubes, double h,
                            const RasterOptions& opts) {
  if (tubes.empty()) throw DomainError("rasterize_straight needs at least one tube");
  const int d = static_cast<int>(tubes[0].a.size());
  return straight_incidence(tubes, d, h, opts).grid;
}

TubeIncidence straight_incidence(const std::vector<StraightTube>& tubes, int d, double h,
                                 const RasterOptions& opts) {
  check_cell_budget(d, h, opts.cell_budget);
  TubeIncidence out{TubeGrid(d, h, opts.mask ? opts.mask->id : ""), {0}, {}};
  std::vector<std::vector<std::uint64_t>> cells(tubes.size());
#pragma omp parallel for schedule(static)
  for (std::size_t i = 0; i < tubes.size(); ++i) cells[i] = straight_tube_cells(tubes[i], h);

  std::vector<std::pair<std::uint64_t, std::uint32_t>> pairs;
  for (std::size_t i = 0; i < tubes.size(); ++i)
    for (std::uint64_t c : cells[i]) pairs.emplace_back(c, static_cast<std::uint32_t>(i));
  std::sort(pairs.begin(), pairs.end());
  std::vector<double> x(d);
  for (std::size_t i = 0; i < pairs.size();) {
    const std::uint64_t lin = pairs[i].first;
    const std::size_t start = i;
    for (; i < pairs.size() && pairs[i].first == lin; ++i) {}
    if (opts.mask) {
      out.grid.center(lin, x.data());
      if (!opts.mask->contains(x.data())) continue;
    }
    for (std::size_t j = start; j < i; ++j) out.tubes.push_back(pairs[j].second);
    out.grid.append(lin, static_cast<std::uint32_t>(i - start));
    out.offsets.push_back(static_cast<std::uint32_t>(out.tubes.size()));
  }
  return out;
}

}  // namespace kl::raster
