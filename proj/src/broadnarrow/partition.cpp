#include "kakeyalab/broadnarrow/partition.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "kakeyalab/error.hpp"

namespace kl::broadnarrow {

BroadNarrowPartition partition_broad_narrow(const raster::AttributedGrid& grid, const CapCover& caps,
                                            double rho, int k, const PartitionOptions& opts) {
  const std::size_t n = grid.grid.occupied();
  if (grid.offsets.size() != n + 1) throw DomainError("attributed grid is inconsistent");
  BroadNarrowPartition out;
  out.labels.assign(n, kOutside);
  out.tuple_of.assign(n, -1);
  out.planes.resize(n);
  std::vector<std::vector<std::uint64_t>> cell_tuple(n);
  std::vector<double> retained(n, 1.0);

#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
    if (grid.grid.counts()[i] == 0) continue;
    std::vector<CapCount> counts;
    for (std::uint32_t e = grid.offsets[i]; e < grid.offsets[i + 1]; ++e)
      counts.push_back({grid.caps[e], grid.cap_counts[e]});
    const auto sig = significant_caps(counts);
    const auto ph = dyadic_pigeonhole(sig);
    std::uint64_t total = 0;
    for (const auto& c : counts) total += c.count;
    retained[i] = total ? double(ph.retained) / double(total) : 1.0;
    std::vector<Eigen::VectorXd> centers;
    for (const auto& c : ph.caps) centers.push_back(caps.center(c.cap));
    const auto r = bg_dichotomy(centers, caps.radius(), rho, k, opts.dichotomy);
    if (r.kind == Case::Broad) {
      out.labels[i] = kBroad;
      std::vector<std::uint64_t> t;
      for (auto j : r.tuple) t.push_back(ph.caps[j].cap);
      std::sort(t.begin(), t.end());
      cell_tuple[i] = std::move(t);
    } else {
      out.labels[i] = kNarrow;
      out.planes[i] = r.h;
    }
  }

  const double cell = grid.grid.cell_volume();
  std::map<std::vector<std::uint64_t>, std::int64_t> ids;
  std::vector<double> mass;
  for (std::size_t i = 0; i < n; ++i) {
    out.min_retained = std::min(out.min_retained, retained[i]);
    if (out.labels[i] == kNarrow) ++out.narrow;
    if (out.labels[i] != kBroad) continue;
    ++out.broad;
    auto [it, fresh] = ids.emplace(cell_tuple[i], static_cast<std::int64_t>(out.tuples.size()));
    if (fresh) {
      out.tuples.push_back(cell_tuple[i]);
      mass.push_back(0.0);
    }
    out.tuple_of[i] = it->second;
    const double f = std::pow(static_cast<double>(grid.grid.counts()[i]), opts.p) * cell;
    mass[it->second] += f;
    out.broad_mass += f;
  }
  for (std::size_t t = 0; t < mass.size(); ++t)
    if (out.chosen < 0 || mass[t] > mass[out.chosen]) out.chosen = static_cast<std::int64_t>(t);
  if (out.chosen >= 0) out.chosen_mass = mass[out.chosen];
  out.pigeonhole_holds =
      out.broad_mass <= static_cast<double>(out.tuples.size()) * out.chosen_mass * (1.0 + 1e-12);
  return out;
}

std::uint64_t caps_meeting(const CapCover& cover, const Subspace& h, double rho, std::uint64_t max_scan) {
  if (cover.size() > max_scan) throw ResourceError("cap cover too large to scan");
  std::uint64_t n = 0;
  for (std::uint64_t id = 0; id < cover.size(); ++id)
    n += h.distance(cover.center(id)) <= rho + cover.radius();
  return n;
}

}  // namespace kl::broadnarrow
