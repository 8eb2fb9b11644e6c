#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "kakeyalab/deltasets/point_set.hpp"

namespace kl::deltasets {

/// Static k-d tree over a PointSet (which must outlive the tree). Ball tests
/// compare squared distances.
class KdTree {
 public:
  explicit KdTree(const PointSet& points, int leaf_size = 16);

  /// #{q : |q - x| < r}.
  std::size_t count_open_ball(std::span<const double> x, double r) const;
  /// Calls f(index) for every q with |q - x| < r (open) or <= r (closed).
  void for_each_in_ball(std::span<const double> x, double r, bool closed,
                        const std::function<void(std::size_t)>& f) const;
  /// Nearest point other than `exclude` (pass SIZE_MAX to exclude nothing);
  /// returns SIZE_MAX for an empty set.
  std::size_t nearest(std::span<const double> x, std::size_t exclude, double* dist = nullptr) const;

 private:
  struct Node {
    std::uint32_t begin, end;
    std::int32_t left = -1, right = -1;
  };

  std::int32_t build(std::uint32_t begin, std::uint32_t end);
  double min_dist2(std::int32_t node, std::span<const double> x) const;
  double max_dist2(std::int32_t node, std::span<const double> x) const;

  const PointSet& pts_;
  int leaf_size_;
  std::vector<std::uint32_t> perm_;
  std::vector<Node> nodes_;
  std::vector<double> lo_, hi_;  // node bounding boxes, nodes x dim
};

}  // namespace kl::deltasets
