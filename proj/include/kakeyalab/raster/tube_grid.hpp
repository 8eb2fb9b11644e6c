#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace kl::raster {

/// Cell subset given by a predicate on cell centres.
struct Mask {
  std::string id;
  std::function<bool(const double* center)> contains;
};

/// Sparse integer field on the uniform grid of side h over [-1, 1]^d.
/// Cell (i_0, ..., i_{d-1}) has centre -1 + (i_k + 1/2) h and linear index
/// i_0 + n (i_1 + n (...)), so the last coordinate varies slowest.
class TubeGrid {
 public:
  TubeGrid(int d, double h, std::string mask_id = "");

  int dim() const { return d_; }
  double h() const { return h_; }
  std::int64_t per_axis() const { return n_; }
  double cell_volume() const;
  const std::string& mask_id() const { return mask_id_; }

  std::size_t occupied() const { return index_.size(); }
  const std::vector<std::uint64_t>& indices() const { return index_; }
  const std::vector<std::uint32_t>& counts() const { return count_; }

  /// Count at a linear index (0 when absent).
  std::uint32_t at(std::uint64_t lin) const;
  std::vector<std::int64_t> coords(std::uint64_t lin) const;
  std::uint64_t linear(const std::vector<std::int64_t>& coords) const;
  void center(std::uint64_t lin, double* out) const;
  std::uint32_t max_count() const;
  /// sum of counts times h^d.
  double mass() const;

  /// Appends a cell; linear indices must be strictly increasing.
  void append(std::uint64_t lin, std::uint32_t count);
  /// Builds from unsorted (index, count) pairs, summing duplicates.
  static TubeGrid from_pairs(int d, double h, std::vector<std::pair<std::uint64_t, std::uint32_t>> pairs,
                             std::string mask_id = "");

  TubeGrid restricted(const Mask& mask) const;

 private:
  int d_;
  double h_;
  std::int64_t n_;
  std::string mask_id_;
  std::vector<std::uint64_t> index_;
  std::vector<std::uint32_t> count_;
};

/// (sum count^p h^d)^(1/p); p = infinity gives the largest count. The sum is
/// taken over a histogram of counts in increasing order.
double lp_norm(const TubeGrid& grid, double p);

/// Pointwise sum of two grids on the same lattice.
TubeGrid add(const TubeGrid& a, const TubeGrid& b);

}  // namespace kl::raster
