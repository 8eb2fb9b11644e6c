#include "kakeyalab/kakeya/multilinear.hpp"

#include <cmath>
#include <map>

#include "kakeyalab/error.hpp"
#include "kakeyalab/kakeya/wedge.hpp"
#include "kakeyalab/reduce.hpp"

namespace kl::kakeya {

namespace {

// Direction class per tube: tubes with bit-identical directions share one.
std::vector<std::uint32_t> direction_classes(const std::vector<raster::StraightTube>& tubes,
                                             std::vector<Eigen::VectorXd>& dirs) {
  std::map<std::vector<double>, std::uint32_t> ids;
  std::vector<std::uint32_t> cls(tubes.size());
  for (std::size_t i = 0; i < tubes.size(); ++i) {
    std::vector<double> key(tubes[i].u.data(), tubes[i].u.data() + tubes[i].u.size());
    auto [it, fresh] = ids.emplace(key, static_cast<std::uint32_t>(dirs.size()));
    if (fresh) dirs.push_back(tubes[i].u);
    cls[i] = it->second;
  }
  return cls;
}

// Cells present in every grid, as per-grid positions.
std::vector<std::vector<std::size_t>> common_cells(const std::vector<const raster::TubeGrid*>& g) {
  const std::size_t m = g.size();
  std::vector<std::vector<std::size_t>> pos(m);
  std::vector<std::size_t> it(m, 0);
  while (true) {
    std::uint64_t hi = 0;
    bool done = false;
    for (std::size_t j = 0; j < m; ++j) {
      if (it[j] >= g[j]->occupied()) {
        done = true;
        break;
      }
      hi = std::max(hi, g[j]->indices()[it[j]]);
    }
    if (done) break;
    bool all = true;
    for (std::size_t j = 0; j < m; ++j) {
      while (it[j] < g[j]->occupied() && g[j]->indices()[it[j]] < hi) ++it[j];
      if (it[j] >= g[j]->occupied()) return pos;
      if (g[j]->indices()[it[j]] != hi) all = false;
    }
    if (!all) continue;
    for (std::size_t j = 0; j < m; ++j) pos[j].push_back(it[j]++);
  }
  return pos;
}

}  // namespace

MultilinearResult multilinear_kakeya_integral(const std::vector<std::vector<raster::StraightTube>>& families,
                                              double delta, double h,
                                              const raster::RasterOptions& opts) {
  if (families.size() < 2) throw DomainError("multilinear integral needs at least two families");
  const int k = static_cast<int>(families.size()) - 1;
  int d = -1;
  for (const auto& f : families) {
    if (f.empty()) throw DomainError("multilinear integral needs nonempty families");
    for (const auto& t : f) {
      if (d < 0) d = static_cast<int>(t.a.size());
      if (t.a.size() != d || t.u.size() != d) throw DomainError("tubes differ in dimension");
    }
  }
  if (k + 1 > d) throw DomainError("more families than the dimension");

  const std::size_t m = families.size();
  std::vector<raster::TubeIncidence> inc;
  std::vector<std::vector<std::uint32_t>> cls(m);
  std::vector<std::vector<Eigen::VectorXd>> dirs(m);
  for (std::size_t j = 0; j < m; ++j) {
    inc.push_back(raster::straight_incidence(families[j], d, h, opts));
    cls[j] = direction_classes(families[j], dirs[j]);
  }
  std::vector<const raster::TubeGrid*> grids;
  for (auto& i : inc) grids.push_back(&i.grid);
  const auto pos = common_cells(grids);
  const std::size_t cells = pos[0].size();
  const double vol = std::pow(h, d);

  // Wedges of direction-class tuples, computed once.
  std::map<std::vector<std::uint32_t>, double> wedge_cache;
  auto class_counts = [&](std::size_t j, std::size_t cell) {
    std::map<std::uint32_t, std::uint32_t> c;
    const auto& I = inc[j];
    const std::size_t p = pos[j][cell];
    for (std::uint32_t t = I.offsets[p]; t < I.offsets[p + 1]; ++t) ++c[cls[j][I.tubes[t]]];
    return std::vector<std::pair<std::uint32_t, std::uint32_t>>(c.begin(), c.end());
  };
  std::vector<double> values(cells);
  for (std::size_t cell = 0; cell < cells; ++cell) {
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> per(m);
    for (std::size_t j = 0; j < m; ++j) per[j] = class_counts(j, cell);
    double sum = 0.0;
    std::vector<std::size_t> choice(m, 0);
    std::vector<std::uint32_t> key(m);
    while (true) {
      double weight = 1.0;
      for (std::size_t j = 0; j < m; ++j) {
        key[j] = per[j][choice[j]].first;
        weight *= per[j][choice[j]].second;
      }
      auto it = wedge_cache.find(key);
      if (it == wedge_cache.end()) {
        std::vector<Eigen::VectorXd> u(m);
        for (std::size_t j = 0; j < m; ++j) u[j] = dirs[j][key[j]];
        it = wedge_cache.emplace(key, wedge_volume(u)).first;
      }
      sum += weight * it->second;
      std::size_t j = 0;
      for (; j < m; ++j) {
        if (++choice[j] < per[j].size()) break;
        choice[j] = 0;
      }
      if (j == m) break;
    }
    values[cell] = sum;
  }
  MultilinearResult out;
  out.cells = cells;
  out.integral = vol * ordered_sum(cells, [&](std::size_t i) { return std::pow(values[i], 1.0 / k); });
  double denom = std::pow(delta, d);
  for (const auto& f : families) denom *= std::pow(static_cast<double>(f.size()), 1.0 / k);
  out.normalized = out.integral / denom;
  return out;
}

MultilinearResult product_integral(const std::vector<raster::TubeGrid>& fields,
                                   const std::vector<std::size_t>& family_sizes, double delta) {
  if (fields.size() < 2 || family_sizes.size() != fields.size())
    throw DomainError("product integral needs matching fields and sizes");
  const int k = static_cast<int>(fields.size()) - 1;
  const int d = fields[0].dim();
  for (const auto& f : fields)
    if (f.dim() != d || f.h() != fields[0].h()) throw DomainError("fields differ in lattice");
  std::vector<const raster::TubeGrid*> grids;
  for (const auto& f : fields) grids.push_back(&f);
  const auto pos = common_cells(grids);
  MultilinearResult out;
  out.cells = pos[0].size();
  out.integral = fields[0].cell_volume() * ordered_sum(out.cells, [&](std::size_t i) {
    double prod = 1.0;
    for (std::size_t j = 0; j < fields.size(); ++j) prod *= fields[j].counts()[pos[j][i]];
    return std::pow(prod, 1.0 / k);
  });
  double denom = std::pow(delta, d);
  for (std::size_t s : family_sizes) denom *= std::pow(static_cast<double>(s), 1.0 / k);
  out.normalized = out.integral / denom;
  return out;
}

}  // namespace kl::kakeya
