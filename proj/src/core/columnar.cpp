#include "kakeyalab/columnar.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "kakeyalab/error.hpp"

namespace kl {

const std::string& ColumnarTable::meta_value(const std::string& key) const {
  for (const auto& [k, v] : meta)
    if (k == key) return v;
  throw ValidationError("columnar table has no meta key '" + key + "'");
}

double ColumnarTable::meta_double(const std::string& key) const {
  const std::string& v = meta_value(key);
  try {
    return std::stod(v);
  } catch (const std::exception&) {
    throw ValidationError("meta key '" + key + "' is not a number: " + v);
  }
}

long long ColumnarTable::meta_int(const std::string& key) const {
  const std::string& v = meta_value(key);
  try {
    return std::stoll(v);
  } catch (const std::exception&) {
    throw ValidationError("meta key '" + key + "' is not an integer: " + v);
  }
}

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

void write_columnar(std::ostream& out, const ColumnarTable& table) {
  out << kColumnarMagic << '\n';
  out << "#kind " << table.kind << '\n';
  out << "#meta";
  for (const auto& [k, v] : table.meta) out << ' ' << k << '=' << v;
  out << '\n';
  out << "#columns";
  for (const auto& c : table.columns) out << ' ' << c;
  out << '\n';
  const std::size_t ncol = table.columns.size();
  const std::size_t nrow = table.rows();
  std::string line;
  for (std::size_t r = 0; r < nrow; ++r) {
    line.clear();
    for (std::size_t c = 0; c < ncol; ++c) {
      if (c) line += ' ';
      const double v = table.values[r * ncol + c];
      if (!table.integer_column.empty() && table.integer_column[c])
        line += std::to_string(static_cast<long long>(std::llround(v)));
      else
        line += format_real(v);
    }
    line += '\n';
    out << line;
  }
}

ColumnarTable read_columnar(std::istream& in) {
  ColumnarTable t;
  std::string line;
  if (!std::getline(in, line) || line != kColumnarMagic)
    throw ValidationError("not a kakeyalab columnar file (bad magic line)");
  std::size_t lineno = 1;
  bool have_columns = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream ls(line.substr(1));
      std::string tag;
      ls >> tag;
      if (tag == "kind") {
        ls >> t.kind;
      } else if (tag == "meta") {
        std::string kv;
        while (ls >> kv) {
          const auto eq = kv.find('=');
          if (eq == std::string::npos)
            throw ValidationError("line " + std::to_string(lineno) + ": malformed meta entry '" + kv + "'");
          t.meta.emplace_back(kv.substr(0, eq), kv.substr(eq + 1));
        }
      } else if (tag == "columns") {
        std::string c;
        while (ls >> c) t.columns.push_back(c);
        have_columns = true;
      }
      continue;
    }
    if (!have_columns)
      throw ValidationError("line " + std::to_string(lineno) + ": data row before #columns");
    std::istringstream ls(line);
    std::size_t n = 0;
    std::string tok;
    while (ls >> tok) {
      try {
        t.values.push_back(std::stod(tok));
      } catch (const std::exception&) {
        throw ValidationError("line " + std::to_string(lineno) + ": bad number '" + tok + "'");
      }
      ++n;
    }
    if (n != t.columns.size())
      throw ValidationError("line " + std::to_string(lineno) + ": expected " +
                            std::to_string(t.columns.size()) + " values, got " + std::to_string(n));
  }
  return t;
}

void write_columnar_file(const std::string& path, const ColumnarTable& table) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  write_columnar(out, table);
}

ColumnarTable read_columnar_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  return read_columnar(in);
}

}  // namespace kl
