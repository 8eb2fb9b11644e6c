#include "kakeyalab/deltasets/frostman.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_map>

#include "kakeyalab/error.hpp"

namespace kl::deltasets {

namespace {

struct KeyHash {
  std::size_t operator()(const std::vector<std::int64_t>& v) const {
    std::uint64_t h = 1469598103934665603ull;
    for (std::int64_t x : v) {
      h ^= static_cast<std::uint64_t>(x);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

template <class V>
using CubeMap = std::unordered_map<std::vector<std::int64_t>, V, KeyHash>;

std::vector<std::int64_t> ancestor(const DyadicCells& c, std::size_t i, int level) {
  std::vector<std::int64_t> a(c.index.begin() + i * c.dim, c.index.begin() + (i + 1) * c.dim);
  for (auto& x : a) x >>= level;
  return a;
}

// Smallest level at which all cells share one ancestor.
int root_level(const DyadicCells& c) {
  int level = 0;
  while (true) {
    bool same = true;
    const auto a0 = ancestor(c, 0, level);
    for (std::size_t i = 1; i < c.size() && same; ++i) same = ancestor(c, i, level) == a0;
    if (same) return level;
    ++level;
  }
}

std::int64_t floor_index(double x, double origin, double side) {
  return static_cast<std::int64_t>(std::floor((x - origin) / side));
}

double dist2(const std::vector<double>& a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double t = a[k] - b[k];
    s += t * t;
  }
  return s;
}

}  // namespace

int dyadic_level(double delta) {
  if (!(delta > 0.0) || delta > 1.0) throw DomainError("delta must lie in (0, 1]");
  int e = 0;
  const double m = std::frexp(delta, &e);
  if (m != 0.5) throw DomainError("delta must be a power of two");
  return 1 - e;
}

std::vector<double> DyadicCells::center(std::size_t i) const {
  std::vector<double> x(dim);
  for (int k = 0; k < dim; ++k)
    x[k] = origin[k] + (static_cast<double>(index[i * dim + k]) + 0.5) * delta;
  return x;
}

std::vector<double> DyadicCells::representative(std::size_t i) const {
  if (!representatives) return center(i);
  const auto p = (*representatives)[i];
  return {p.begin(), p.end()};
}

DyadicCells DyadicCells::from_points(const PointSet& points, double delta,
                                     std::vector<double> origin, bool keep_points) {
  dyadic_level(delta);
  if (static_cast<int>(origin.size()) != points.dim) throw DomainError("origin dimension mismatch");
  const int n = points.dim;
  CubeMap<std::size_t> first;
  std::vector<std::vector<std::int64_t>> keys;
  std::vector<std::size_t> owner;
  for (std::size_t i = 0; i < points.size(); ++i) {
    std::vector<std::int64_t> key(n);
    for (int k = 0; k < n; ++k) key[k] = floor_index(points[i][k], origin[k], delta);
    if (first.emplace(key, keys.size()).second) {
      keys.push_back(std::move(key));
      owner.push_back(i);
    }
  }
  std::vector<std::size_t> order(keys.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });

  DyadicCells c;
  c.dim = n;
  c.delta = delta;
  c.origin = std::move(origin);
  if (keep_points) c.representatives = PointSet(n);
  for (std::size_t o : order) {
    c.index.insert(c.index.end(), keys[o].begin(), keys[o].end());
    c.source.push_back(owner[o]);
    if (keep_points) c.representatives->push(points[owner[o]]);
  }
  return c;
}

double dyadic_content(const DyadicCells& cells, double s) {
  if (cells.size() == 0) return 0.0;
  const int top = root_level(cells);
  CubeMap<double> level;
  for (std::size_t i = 0; i < cells.size(); ++i) level[ancestor(cells, i, 0)] = std::pow(cells.delta, s);
  for (int j = 1; j <= top; ++j) {
    const double cap = std::pow(cells.delta * std::ldexp(1.0, j), s);
    // Sum children in a fixed order so the result does not depend on hashing.
    std::vector<std::pair<std::vector<std::int64_t>, double>> items(level.begin(), level.end());
    std::sort(items.begin(), items.end());
    CubeMap<double> up;
    for (auto& [key, h] : items) {
      auto parent = key;
      for (auto& x : parent) x >>= 1;
      up[parent] += h;
    }
    for (auto& [key, h] : up) h = std::min(h, cap);
    level = std::move(up);
  }
  return level.begin()->second;
}

FrostmanResult frostman_extract(const DyadicCells& cells, double s) {
  if (cells.size() == 0) throw DomainError("frostman_extract needs a nonempty cell set");
  if (!(s >= 0.0)) throw DomainError("frostman_extract needs s >= 0");
  const double delta = cells.delta;
  dyadic_level(delta);
  const int n = cells.dim;
  const std::size_t total = cells.size();
  const int top = root_level(cells);

  // Dyadic tree order: compare ancestors from the root down.
  std::vector<std::size_t> order(total);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const std::int64_t* ia = &cells.index[a * n];
    const std::int64_t* ib = &cells.index[b * n];
    for (int j = top; j >= 0; --j)
      for (int k = 0; k < n; ++k)
        if ((ia[k] >> j) != (ib[k] >> j)) return (ia[k] >> j) < (ib[k] >> j);
    return a < b;
  });

  const bool use_capacity = s < static_cast<double>(n);
  std::vector<CubeMap<std::uint64_t>> used(top + 1);

  // Radii whose bound can still be reached by a subset of the cells.
  std::vector<double> radii, bounds;
  for (int j = 0;; ++j) {
    const double b = std::pow(std::ldexp(1.0, j), s);
    if (b >= static_cast<double>(total) && j > 0) break;
    radii.push_back(delta * std::ldexp(1.0, j));
    bounds.push_back(b);
  }
  const std::size_t levels = radii.size();
  const double sep = delta * (1.0 - kSeparationTolerance);

  PointSet chosen(n);
  std::vector<std::uint32_t> ball_count;  // chosen x levels
  std::vector<CubeMap<std::vector<std::uint32_t>>> grid(levels);
  std::vector<std::size_t> picked;

  std::vector<std::int64_t> cube(n);
  std::vector<std::uint32_t> nbrs;
  for (std::size_t cell : order) {
    if (use_capacity) {
      bool room = true;
      for (int j = 1; j <= top && room; ++j) {
        const double cap = std::floor(std::pow(std::ldexp(1.0, j), s));
        auto it = used[j].find(ancestor(cells, cell, j));
        const double have = it == used[j].end() ? 0.0 : static_cast<double>(it->second);
        room = have < cap;
      }
      if (!room) continue;
    }
    const std::vector<double> p = cells.representative(cell);

    bool accept = true;
    std::vector<std::vector<std::uint32_t>> found(levels);
    for (std::size_t j = 0; j < levels && accept; ++j) {
      const double r = radii[j], r2 = r * r;
      for (int k = 0; k < n; ++k) cube[k] = floor_index(p[k], cells.origin[k], r);
      nbrs.clear();
      std::vector<std::int64_t> probe(n);
      long combos = 1;
      for (int k = 0; k < n; ++k) combos *= 3;
      for (long m = 0; m < combos; ++m) {
        long t = m;
        for (int k = 0; k < n; ++k) {
          probe[k] = cube[k] + (t % 3) - 1;
          t /= 3;
        }
        auto it = grid[j].find(probe);
        if (it == grid[j].end()) continue;
        for (std::uint32_t q : it->second) {
          const double d2 = dist2(p, chosen[q]);
          if (j == 0 && d2 < sep * sep) accept = false;
          if (d2 < r2) nbrs.push_back(q);
        }
      }
      if (!accept) break;
      if (static_cast<double>(nbrs.size() + 1) > bounds[j]) accept = false;
      for (std::uint32_t q : nbrs)
        if (static_cast<double>(ball_count[q * levels + j] + 1) > bounds[j]) accept = false;
      found[j] = nbrs;
    }
    if (!accept) continue;

    const auto id = static_cast<std::uint32_t>(chosen.size());
    chosen.push(p);
    picked.push_back(cell);
    ball_count.resize(ball_count.size() + levels);
    for (std::size_t j = 0; j < levels; ++j) {
      ball_count[id * levels + j] = static_cast<std::uint32_t>(found[j].size() + 1);
      for (std::uint32_t q : found[j]) ++ball_count[q * levels + j];
      for (int k = 0; k < n; ++k) cube[k] = floor_index(p[k], cells.origin[k], radii[j]);
      grid[j][cube].push_back(id);
    }
    if (use_capacity)
      for (int j = 1; j <= top; ++j) ++used[j][ancestor(cells, cell, j)];
  }

  FrostmanResult out;
  out.set = DeltaSet{std::move(chosen), delta, s};
  out.cells = std::move(picked);
  out.content = dyadic_content(cells, s);
  out.c_impl = static_cast<double>(out.set.points.size()) / (out.content * std::pow(delta, -s));
  return out;
}

}  // namespace kl::deltasets
