#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "kakeyalab/columnar.hpp"
#include "kakeyalab/raster/tube_grid.hpp"

namespace kl::raster {

/// Sparse export: one row (i_0, ..., i_{d-1}, count[, label]) per occupied
/// cell. Labels, when given, align with the occupied cells.
ColumnarTable grid_to_table(const TubeGrid& grid, const std::vector<int>* labels = nullptr);
TubeGrid grid_from_table(const ColumnarTable& table);

void write_grid(const std::string& path, const TubeGrid& grid, const std::vector<int>* labels = nullptr);
TubeGrid read_grid(const std::string& path);

/// Dense matrix for d = 2: a `#dense` header line with n and h, then n lines
/// (x_1 index increasing) of n counts (x_0 index increasing).
void write_dense(std::ostream& out, const TubeGrid& grid);
void write_dense_file(const std::string& path, const TubeGrid& grid);

}  // namespace kl::raster
