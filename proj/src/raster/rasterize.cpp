#include "kakeyalab/raster/rasterize.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "kakeyalab/error.hpp"
#include "kakeyalab/simd/kernels.hpp"

namespace kl::raster {

void check_cell_budget(int d, double h, std::uint64_t budget) {
  const double n = std::round(2.0 / h);
  if (std::pow(n, d) <= static_cast<double>(budget)) return;
  double need = h;
  while (std::pow(std::round(2.0 / need), d) > static_cast<double>(budget)) need *= 2.0;
  char buf[160];
  std::snprintf(buf, sizeof buf, "grid of side h=%.6g in d=%d exceeds the %llu-cell budget; need h >= %.6g",
                h, d, static_cast<unsigned long long>(budget), need);
  throw ResourceError(buf);
}

namespace {

struct Segment {
  std::uint64_t start;
  std::uint32_t length;
};

// One x_d row of the grid: a dense plane over the first d-1 coordinates.
class RowPlane {
 public:
  RowPlane(int d, std::int64_t n, double h)
      : m_(d - 1), n_(n), h_(h), counts_(static_cast<std::size_t>(std::pow(n, d - 1)), 0u),
        xs_(n) {
    for (std::int64_t i = 0; i < n; ++i) xs_[i] = -1.0 + (static_cast<double>(i) + 0.5) * h;
  }

  // Adds the disc {x' : |x' - p| <= delta}.
  void add_ball(const double* p, double delta) {
    const simd::Kernels& kern = simd::kernels();
    std::vector<std::int64_t> lo(m_), hi(m_);
    for (int k = 0; k < m_; ++k) {
      lo[k] = std::max<std::int64_t>(0, static_cast<std::int64_t>(std::floor((p[k] - delta + 1.0) / h_ - 0.5)) - 1);
      hi[k] = std::min<std::int64_t>(n_ - 1, static_cast<std::int64_t>(std::ceil((p[k] + delta + 1.0) / h_ - 0.5)) + 1);
      if (lo[k] > hi[k]) return;
    }
    const double r2 = delta * delta;
    std::vector<std::int64_t> idx(lo.begin(), lo.end());
    while (true) {
      double off = 0.0;
      std::uint64_t base = 0, stride = 1;
      for (int k = 1; k < m_; ++k) {
        const double w = xs_[idx[k]] - p[k];
        off += w * w;
      }
      for (int k = 0; k < m_; ++k) {
        base += static_cast<std::uint64_t>(k == 0 ? lo[0] : idx[k]) * stride;
        stride *= static_cast<std::uint64_t>(n_);
      }
      if (off <= r2) {
        const auto len = static_cast<std::size_t>(hi[0] - lo[0] + 1);
        kern.accumulate_ball_row(xs_.data() + lo[0], len, p[0], off, r2, counts_.data() + base);
        segments_.push_back({base, static_cast<std::uint32_t>(len)});
      }
      int k = 1;
      for (; k < m_; ++k) {
        if (++idx[k] <= hi[k]) break;
        idx[k] = lo[k];
      }
      if (k >= m_) break;
    }
  }

  // Emits nonzero cells of the plane in increasing order and clears them.
  template <class Emit>
  void drain(Emit&& emit) {
    std::sort(segments_.begin(), segments_.end(),
              [](const Segment& a, const Segment& b) { return a.start < b.start; });
    std::uint64_t cursor = 0;
    for (const Segment& s : segments_) {
      const std::uint64_t begin = std::max(cursor, s.start), end = s.start + s.length;
      for (std::uint64_t i = begin; i < end; ++i) {
        if (counts_[i] != 0) {
          emit(i, counts_[i]);
          counts_[i] = 0;
        }
      }
      cursor = std::max(cursor, end);
    }
    segments_.clear();
  }

  std::uint64_t plane_size() const { return counts_.size(); }

 private:
  int m_;
  std::int64_t n_;
  double h_;
  std::vector<std::uint32_t> counts_;
  std::vector<double> xs_;
  std::vector<Segment> segments_;
};

void check_inputs(const curves::CurveFamily& family, const std::vector<std::size_t>& params,
                  double delta, double h, const RasterOptions& opts) {
  if (!(delta > 0.0)) throw DomainError("tube radius must be positive");
  if (!(h <= delta / 2.0)) throw DomainError("grid side must satisfy h <= delta / 2");
  for (std::size_t y : params)
    if (y >= family.size()) throw UnknownParameterError("tube index " + std::to_string(y) + " out of range");
  check_cell_budget(family.ambient_dim(), h, opts.cell_budget);
}

double row_height(std::int64_t row, double h) { return -1.0 + (static_cast<double>(row) + 0.5) * h; }

}  // namespace

TubeGrid rasterize_tubes(const curves::CurveFamily& family, const std::vector<std::size_t>& params,
                         double delta, double h, const RasterOptions& opts) {
  check_inputs(family, params, delta, h, opts);
  const int d = family.ambient_dim();
  TubeGrid grid(d, h, opts.mask ? opts.mask->id : "");
  const std::int64_t n = grid.per_axis();
  if (params.empty()) return grid;

  std::vector<std::vector<std::pair<std::uint64_t, std::uint32_t>>> rows(n);
#pragma omp parallel
  {
    RowPlane plane(d, n, h);
    std::vector<double> p(d - 1), x(d);
#pragma omp for schedule(static)
    for (std::int64_t r = 0; r < n; ++r) {
      const double c = row_height(r, h);
      for (std::size_t y : params) {
        family.profile(y).value(c, p);
        plane.add_ball(p.data(), delta);
      }
      const std::uint64_t offset = static_cast<std::uint64_t>(r) * plane.plane_size();
      plane.drain([&](std::uint64_t i, std::uint32_t cnt) {
        if (opts.mask) {
          grid.center(offset + i, x.data());
          if (!opts.mask->contains(x.data())) return;
        }
        rows[r].emplace_back(offset + i, cnt);
      });
    }
  }
  for (const auto& row : rows)
    for (const auto& [lin, cnt] : row) grid.append(lin, cnt);
  return grid;
}

TubeGrid rasterize_family(const curves::CurveFamily& family, double delta, double h,
                          const RasterOptions& opts) {
  std::vector<std::size_t> all(family.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return rasterize_tubes(family, all, delta, h, opts);
}

double tube_measure(const curves::CurveFamily& family, std::size_t y, double delta, double h,
                    const RasterOptions& opts) {
  return rasterize_tubes(family, {y}, delta, h, opts).mass();
}

AttributedGrid rasterize_attributed(const curves::CurveFamily& family,
                                    const std::vector<std::size_t>& params, double delta, double h,
                                    const CapOf& cap_of, const RasterOptions& opts) {
  check_inputs(family, params, delta, h, opts);
  const int d = family.ambient_dim();
  AttributedGrid out{TubeGrid(d, h, opts.mask ? opts.mask->id : ""), {0}, {}, {}};
  const std::int64_t n = out.grid.per_axis();
  if (params.empty()) return out;

  struct Entry {
    std::uint64_t lin, cap;
    std::uint32_t count;
  };
  std::vector<std::vector<Entry>> rows(n);
#pragma omp parallel
  {
    RowPlane plane(d, n, h);
    std::vector<double> p(d - 1), x(d);
    std::vector<std::pair<std::uint64_t, std::size_t>> order;
#pragma omp for schedule(static)
    for (std::int64_t r = 0; r < n; ++r) {
      const double c = row_height(r, h);
      order.clear();
      for (std::size_t y : params) order.emplace_back(cap_of(y, family.tangent(y, c)), y);
      std::stable_sort(order.begin(), order.end(),
                       [](const auto& a, const auto& b) { return a.first < b.first; });
      const std::uint64_t offset = static_cast<std::uint64_t>(r) * plane.plane_size();
      for (std::size_t g = 0; g < order.size();) {
        const std::uint64_t cap = order[g].first;
        for (; g < order.size() && order[g].first == cap; ++g) {
          family.profile(order[g].second).value(c, p);
          plane.add_ball(p.data(), delta);
        }
        plane.drain([&](std::uint64_t i, std::uint32_t cnt) {
          if (opts.mask) {
            out.grid.center(offset + i, x.data());
            if (!opts.mask->contains(x.data())) return;
          }
          rows[r].push_back({offset + i, cap, cnt});
        });
      }
      std::sort(rows[r].begin(), rows[r].end(), [](const Entry& a, const Entry& b) {
        return a.lin != b.lin ? a.lin < b.lin : a.cap < b.cap;
      });
    }
  }
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size();) {
      const std::uint64_t lin = row[i].lin;
      std::uint32_t total = 0;
      for (; i < row.size() && row[i].lin == lin; ++i) {
        out.caps.push_back(row[i].cap);
        out.cap_counts.push_back(row[i].count);
        total += row[i].count;
      }
      out.grid.append(lin, total);
      out.offsets.push_back(static_cast<std::uint32_t>(out.caps.size()));
    }
  }
  return out;
}

}  // namespace kl::raster
