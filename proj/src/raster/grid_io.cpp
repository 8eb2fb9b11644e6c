#include "kakeyalab/raster/grid_io.hpp"

#include <fstream>
#include <ostream>

#include "kakeyalab/error.hpp"

namespace kl::raster {

ColumnarTable grid_to_table(const TubeGrid& grid, const std::vector<int>* labels) {
  if (labels && labels->size() != grid.occupied())
    throw DomainError("label count does not match the occupied cells");
  ColumnarTable t;
  t.kind = "tube-grid";
  t.meta = {{"d", std::to_string(grid.dim())},
            {"h", format_real(grid.h())},
            {"mask", grid.mask_id().empty() ? "none" : grid.mask_id()},
            {"cells", std::to_string(grid.occupied())}};
  for (int k = 0; k < grid.dim(); ++k) t.columns.push_back("i" + std::to_string(k));
  t.columns.push_back("count");
  if (labels) t.columns.push_back("label");
  t.integer_column.assign(t.columns.size(), true);
  for (std::size_t i = 0; i < grid.occupied(); ++i) {
    for (auto c : grid.coords(grid.indices()[i])) t.values.push_back(static_cast<double>(c));
    t.values.push_back(grid.counts()[i]);
    if (labels) t.values.push_back((*labels)[i]);
  }
  return t;
}

TubeGrid grid_from_table(const ColumnarTable& t) {
  if (t.kind != "tube-grid") throw ValidationError("expected a tube-grid table, got " + t.kind);
  const int d = static_cast<int>(t.meta_int("d"));
  const std::string mask = t.meta_value("mask");
  TubeGrid g(d, t.meta_double("h"), mask == "none" ? "" : mask);
  if (t.columns.size() < static_cast<std::size_t>(d + 1)) throw ValidationError("tube-grid has too few columns");
  std::vector<std::pair<std::uint64_t, std::uint32_t>> pairs;
  std::vector<std::int64_t> c(d);
  for (std::size_t r = 0; r < t.rows(); ++r) {
    for (int k = 0; k < d; ++k) {
      c[k] = static_cast<std::int64_t>(t.at(r, k));
      if (c[k] < 0 || c[k] >= g.per_axis()) throw ValidationError("tube-grid cell outside the extent");
    }
    pairs.emplace_back(g.linear(c), static_cast<std::uint32_t>(t.at(r, d)));
  }
  return TubeGrid::from_pairs(d, g.h(), std::move(pairs), g.mask_id());
}

void write_grid(const std::string& path, const TubeGrid& grid, const std::vector<int>* labels) {
  write_columnar_file(path, grid_to_table(grid, labels));
}

TubeGrid read_grid(const std::string& path) { return grid_from_table(read_columnar_file(path)); }

void write_dense(std::ostream& out, const TubeGrid& grid) {
  if (grid.dim() != 2) throw DomainError("dense export is only defined for d = 2");
  const std::int64_t n = grid.per_axis();
  out << "#dense n=" << n << " h=" << format_real(grid.h()) << '\n';
  std::size_t next = 0;
  const auto& idx = grid.indices();
  for (std::int64_t j = 0; j < n; ++j) {
    for (std::int64_t i = 0; i < n; ++i) {
      const std::uint64_t lin = static_cast<std::uint64_t>(j * n + i);
      std::uint32_t v = 0;
      if (next < idx.size() && idx[next] == lin) v = grid.counts()[next++];
      out << (i ? " " : "") << v;
    }
    out << '\n';
  }
}

void write_dense_file(const std::string& path, const TubeGrid& grid) {
  std::ofstream f(path);
  if (!f) throw IoError("cannot open " + path + " for writing");
  write_dense(f, grid);
}

}  // namespace kl::raster
