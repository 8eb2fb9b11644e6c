#include "kakeyalab/raster/tube_grid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "kakeyalab/error.hpp"

namespace kl::raster {

TubeGrid::TubeGrid(int d, double h, std::string mask_id)
    : d_(d), h_(h), n_(0), mask_id_(std::move(mask_id)) {
  if (d < 1) throw DomainError("grid dimension must be >= 1");
  if (!(h > 0.0) || h > 2.0) throw DomainError("grid side must lie in (0, 2]");
  const double n = 2.0 / h;
  if (n != std::floor(n)) throw DomainError("grid side must divide [-1, 1]");
  n_ = static_cast<std::int64_t>(n);
}

double TubeGrid::cell_volume() const { return std::pow(h_, d_); }

std::uint32_t TubeGrid::at(std::uint64_t lin) const {
  auto it = std::lower_bound(index_.begin(), index_.end(), lin);
  if (it == index_.end() || *it != lin) return 0;
  return count_[it - index_.begin()];
}

std::vector<std::int64_t> TubeGrid::coords(std::uint64_t lin) const {
  std::vector<std::int64_t> c(d_);
  for (int k = 0; k < d_; ++k) {
    c[k] = static_cast<std::int64_t>(lin % static_cast<std::uint64_t>(n_));
    lin /= static_cast<std::uint64_t>(n_);
  }
  return c;
}

std::uint64_t TubeGrid::linear(const std::vector<std::int64_t>& c) const {
  std::uint64_t lin = 0;
  for (int k = d_ - 1; k >= 0; --k) lin = lin * static_cast<std::uint64_t>(n_) + c[k];
  return lin;
}

void TubeGrid::center(std::uint64_t lin, double* out) const {
  for (int k = 0; k < d_; ++k) {
    out[k] = -1.0 + (static_cast<double>(lin % static_cast<std::uint64_t>(n_)) + 0.5) * h_;
    lin /= static_cast<std::uint64_t>(n_);
  }
}

std::uint32_t TubeGrid::max_count() const {
  std::uint32_t m = 0;
  for (auto c : count_) m = std::max(m, c);
  return m;
}

double TubeGrid::mass() const {
  std::uint64_t total = 0;
  for (auto c : count_) total += c;
  return static_cast<double>(total) * cell_volume();
}

void TubeGrid::append(std::uint64_t lin, std::uint32_t count) {
  if (!index_.empty() && lin <= index_.back())
    throw ConsistencyError("grid cells must be appended in increasing order");
  if (count == 0) return;
  index_.push_back(lin);
  count_.push_back(count);
}

TubeGrid TubeGrid::from_pairs(int d, double h,
                              std::vector<std::pair<std::uint64_t, std::uint32_t>> pairs,
                              std::string mask_id) {
  std::sort(pairs.begin(), pairs.end());
  TubeGrid g(d, h, std::move(mask_id));
  for (std::size_t i = 0; i < pairs.size();) {
    std::uint64_t lin = pairs[i].first, sum = 0;
    for (; i < pairs.size() && pairs[i].first == lin; ++i) sum += pairs[i].second;
    g.append(lin, static_cast<std::uint32_t>(sum));
  }
  return g;
}

TubeGrid TubeGrid::restricted(const Mask& mask) const {
  TubeGrid g(d_, h_, mask.id);
  std::vector<double> x(d_);
  for (std::size_t i = 0; i < index_.size(); ++i) {
    center(index_[i], x.data());
    if (mask.contains(x.data())) g.append(index_[i], count_[i]);
  }
  return g;
}

double lp_norm(const TubeGrid& grid, double p) {
  if (!(p >= 1.0)) throw DomainError("lp_norm needs p >= 1");
  if (std::isinf(p)) return static_cast<double>(grid.max_count());
  std::map<std::uint32_t, std::uint64_t> hist;
  for (auto c : grid.counts()) ++hist[c];
  double sum = 0.0;
  for (const auto& [c, k] : hist) sum += static_cast<double>(k) * std::pow(static_cast<double>(c), p);
  return std::pow(sum * grid.cell_volume(), 1.0 / p);
}

TubeGrid add(const TubeGrid& a, const TubeGrid& b) {
  if (a.dim() != b.dim() || a.h() != b.h()) throw DomainError("grids differ in lattice");
  TubeGrid g(a.dim(), a.h(), a.mask_id());
  std::size_t i = 0, j = 0;
  const auto& ia = a.indices();
  const auto& ib = b.indices();
  while (i < ia.size() || j < ib.size()) {
    if (j == ib.size() || (i < ia.size() && ia[i] < ib[j])) {
      g.append(ia[i], a.counts()[i]);
      ++i;
    } else if (i == ia.size() || ib[j] < ia[i]) {
      g.append(ib[j], b.counts()[j]);
      ++j;
    } else {
      g.append(ia[i], a.counts()[i] + b.counts()[j]);
      ++i;
      ++j;
    }
  }
  return g;
}

}  // namespace kl::raster
