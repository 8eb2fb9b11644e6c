#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace kl {

/// Versioned columnar text format shared by curve families, delta sets and
/// sampled point clouds:
///
///   #kakeyalab-columnar v1
///   #kind <name>
///   #meta key=value key=value ...
///   #columns name name ...
///   <row>            (whitespace separated, one per line)
///
/// Real columns are written with 17 significant digits; integer columns are
/// written as plain integers.
struct ColumnarTable {
  std::string kind;
  std::vector<std::pair<std::string, std::string>> meta;
  std::vector<std::string> columns;
  std::vector<bool> integer_column;  // same length as columns; empty means all real
  std::vector<double> values;        // row-major, rows * columns.size()

  std::size_t rows() const { return columns.empty() ? 0 : values.size() / columns.size(); }
  double at(std::size_t row, std::size_t col) const { return values[row * columns.size() + col]; }
  const std::string& meta_value(const std::string& key) const;
  double meta_double(const std::string& key) const;
  long long meta_int(const std::string& key) const;
};

inline constexpr const char* kColumnarMagic = "#kakeyalab-columnar v1";

/// 17 significant digits, fixed scientific layout.
std::string format_real(double v);

void write_columnar(std::ostream& out, const ColumnarTable& table);
ColumnarTable read_columnar(std::istream& in);

void write_columnar_file(const std::string& path, const ColumnarTable& table);
ColumnarTable read_columnar_file(const std::string& path);

}  // namespace kl
