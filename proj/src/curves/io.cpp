#include "kakeyalab/curves/io.hpp"

#include "kakeyalab/error.hpp"

namespace kl::curves {

ColumnarTable family_to_table(const CurveFamily& family, int c_grid_size) {
  if (c_grid_size < 2) throw DomainError("curve export needs c_grid_size >= 2");
  const int d = family.ambient_dim(), m = d - 1;
  ColumnarTable t;
  t.kind = "curve-family";
  t.meta = {{"d", std::to_string(d)},
            {"curves", std::to_string(family.size())},
            {"C", format_real(family.regularity_bound())},
            {"cgrid", std::to_string(c_grid_size)}};
  if (auto mh = family.transversality_constant()) t.meta.emplace_back("m", format_real(*mh));
  t.columns.push_back("curve");
  for (const char* name : {"y1_", "y2_"})
    for (int i = 0; i < m; ++i) t.columns.push_back(name + std::to_string(i));
  t.columns.push_back("c");
  for (const char* name : {"P_", "dP_"})
    for (int i = 0; i < m; ++i) t.columns.push_back(name + std::to_string(i));
  t.integer_column.assign(t.columns.size(), false);
  t.integer_column[0] = true;

  for (std::size_t k = 0; k < family.size(); ++k) {
    const Param& y = family.param(k);
    for (int j = 0; j < c_grid_size; ++j) {
      const double c = j == c_grid_size - 1 ? 1.0 : -1.0 + 2.0 * j / (c_grid_size - 1);
      t.values.push_back(static_cast<double>(k));
      t.values.insert(t.values.end(), y.y1.begin(), y.y1.end());
      t.values.insert(t.values.end(), y.y2.begin(), y.y2.end());
      t.values.push_back(c);
      const Eigen::VectorXd p = family.horizontal(k, c), dp = family.slope(k, c);
      t.values.insert(t.values.end(), p.data(), p.data() + m);
      t.values.insert(t.values.end(), dp.data(), dp.data() + m);
    }
  }
  return t;
}

CurveFamily family_from_table(const ColumnarTable& t) {
  if (t.kind != "curve-family") throw ValidationError("expected a curve-family table, got " + t.kind);
  const int d = static_cast<int>(t.meta_int("d"));
  const long long curves = t.meta_int("curves");
  const long long grid_n = t.meta_int("cgrid");
  const int m = d - 1;
  if (d < 2 || grid_n < 2 || curves < 0) throw ValidationError("curve-family header out of range");
  const std::size_t width = 1 + 4 * static_cast<std::size_t>(m) + 1;
  if (t.columns.size() != width) throw ValidationError("curve-family column count mismatch");
  if (t.rows() != static_cast<std::size_t>(curves * grid_n))
    throw ValidationError("curve-family row count does not match the header");

  CurveFamily family(d, t.meta_double("C"));
  for (const auto& [k, v] : t.meta)
    if (k == "m") family.set_transversality_constant(t.meta_double("m"));
  for (long long k = 0; k < curves; ++k) {
    Param y;
    const std::size_t r0 = static_cast<std::size_t>(k * grid_n);
    if (t.at(r0, 0) != static_cast<double>(k)) throw ValidationError("curve rows out of order");
    for (int i = 0; i < m; ++i) {
      y.y1.push_back(t.at(r0, 1 + i));
      y.y2.push_back(t.at(r0, 1 + m + i));
    }
    std::vector<double> grid, values, slopes;
    for (long long j = 0; j < grid_n; ++j) {
      const std::size_t r = r0 + static_cast<std::size_t>(j);
      if (t.at(r, 0) != static_cast<double>(k)) throw ValidationError("curve rows out of order");
      grid.push_back(t.at(r, 1 + 2 * m));
      for (int i = 0; i < m; ++i) values.push_back(t.at(r, 2 + 2 * m + i));
      for (int i = 0; i < m; ++i) slopes.push_back(t.at(r, 2 + 3 * m + i));
    }
    family.add(std::move(y), std::make_shared<SampledProfile>(m, std::move(grid), std::move(values),
                                                              std::move(slopes)));
  }
  return family;
}

void write_family(const std::string& path, const CurveFamily& family, int c_grid_size) {
  write_columnar_file(path, family_to_table(family, c_grid_size));
}

CurveFamily read_family(const std::string& path) {
  return family_from_table(read_columnar_file(path));
}

}  // namespace kl::curves
