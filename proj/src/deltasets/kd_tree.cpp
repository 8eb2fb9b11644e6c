#include "kakeyalab/deltasets/kd_tree.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace kl::deltasets {

KdTree::KdTree(const PointSet& points, int leaf_size) : pts_(points), leaf_size_(leaf_size) {
  perm_.resize(points.size());
  std::iota(perm_.begin(), perm_.end(), 0u);
  if (!perm_.empty()) build(0, static_cast<std::uint32_t>(perm_.size()));
}

std::int32_t KdTree::build(std::uint32_t begin, std::uint32_t end) {
  const int n = pts_.dim;
  const auto id = static_cast<std::int32_t>(nodes_.size());
  nodes_.push_back({begin, end});
  lo_.resize(lo_.size() + n, std::numeric_limits<double>::infinity());
  hi_.resize(hi_.size() + n, -std::numeric_limits<double>::infinity());
  for (std::uint32_t i = begin; i < end; ++i)
    for (int k = 0; k < n; ++k) {
      const double v = pts_[perm_[i]][k];
      lo_[id * n + k] = std::min(lo_[id * n + k], v);
      hi_[id * n + k] = std::max(hi_[id * n + k], v);
    }
  if (static_cast<int>(end - begin) <= leaf_size_) return id;
  int axis = 0;
  double widest = -1.0;
  for (int k = 0; k < n; ++k)
    if (hi_[id * n + k] - lo_[id * n + k] > widest) {
      widest = hi_[id * n + k] - lo_[id * n + k];
      axis = k;
    }
  if (widest <= 0.0) return id;  // all points coincide
  const std::uint32_t mid = begin + (end - begin) / 2;
  std::nth_element(perm_.begin() + begin, perm_.begin() + mid, perm_.begin() + end,
                   [&](std::uint32_t a, std::uint32_t b) {
                     const double va = pts_[a][axis], vb = pts_[b][axis];
                     return va < vb || (va == vb && a < b);
                   });
  const std::int32_t l = build(begin, mid);
  const std::int32_t r = build(mid, end);
  nodes_[id].left = l;
  nodes_[id].right = r;
  return id;
}

double KdTree::min_dist2(std::int32_t node, std::span<const double> x) const {
  const int n = pts_.dim;
  double s = 0.0;
  for (int k = 0; k < n; ++k) {
    double t = 0.0;
    if (x[k] < lo_[node * n + k]) t = lo_[node * n + k] - x[k];
    else if (x[k] > hi_[node * n + k]) t = x[k] - hi_[node * n + k];
    s += t * t;
  }
  return s;
}

double KdTree::max_dist2(std::int32_t node, std::span<const double> x) const {
  const int n = pts_.dim;
  double s = 0.0;
  for (int k = 0; k < n; ++k) {
    const double t = std::max(x[k] - lo_[node * n + k], hi_[node * n + k] - x[k]);
    s += t * t;
  }
  return s;
}

namespace {

double dist2(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double t = a[k] - b[k];
    s += t * t;
  }
  return s;
}

}  // namespace

std::size_t KdTree::count_open_ball(std::span<const double> x, double r) const {
  if (nodes_.empty()) return 0;
  const double r2 = r * r;
  std::size_t count = 0;
  std::vector<std::int32_t> stack{0};
  while (!stack.empty()) {
    const std::int32_t id = stack.back();
    stack.pop_back();
    if (min_dist2(id, x) >= r2) continue;
    const Node& nd = nodes_[id];
    // max_dist2 is computed from the box, so it can only overestimate the
    // distance of any contained point; the shortcut never miscounts.
    if (max_dist2(id, x) < r2) {
      count += nd.end - nd.begin;
      continue;
    }
    if (nd.left < 0) {
      for (std::uint32_t i = nd.begin; i < nd.end; ++i)
        if (dist2(pts_[perm_[i]], x) < r2) ++count;
      continue;
    }
    stack.push_back(nd.right);
    stack.push_back(nd.left);
  }
  return count;
}

void KdTree::for_each_in_ball(std::span<const double> x, double r, bool closed,
                              const std::function<void(std::size_t)>& f) const {
  if (nodes_.empty()) return;
  const double r2 = r * r;
  std::vector<std::int32_t> stack{0};
  while (!stack.empty()) {
    const std::int32_t id = stack.back();
    stack.pop_back();
    const double md = min_dist2(id, x);
    if (closed ? md > r2 : md >= r2) continue;
    const Node& nd = nodes_[id];
    if (nd.left < 0) {
      for (std::uint32_t i = nd.begin; i < nd.end; ++i) {
        const double d2 = dist2(pts_[perm_[i]], x);
        if (closed ? d2 <= r2 : d2 < r2) f(perm_[i]);
      }
      continue;
    }
    stack.push_back(nd.right);
    stack.push_back(nd.left);
  }
}

std::size_t KdTree::nearest(std::span<const double> x, std::size_t exclude, double* dist) const {
  std::size_t best = std::numeric_limits<std::size_t>::max();
  double best2 = std::numeric_limits<double>::infinity();
  if (nodes_.empty()) return best;
  std::vector<std::int32_t> stack{0};
  while (!stack.empty()) {
    const std::int32_t id = stack.back();
    stack.pop_back();
    if (min_dist2(id, x) > best2) continue;
    const Node& nd = nodes_[id];
    if (nd.left < 0) {
      for (std::uint32_t i = nd.begin; i < nd.end; ++i) {
        const std::size_t q = perm_[i];
        if (q == exclude) continue;
        const double d2 = dist2(pts_[q], x);
        if (d2 < best2 || (d2 == best2 && q < best)) {
          best2 = d2;
          best = q;
        }
      }
      continue;
    }
    const bool left_first = min_dist2(nd.left, x) <= min_dist2(nd.right, x);
    stack.push_back(left_first ? nd.right : nd.left);
    stack.push_back(left_first ? nd.left : nd.right);
  }
  if (dist && best != std::numeric_limits<std::size_t>::max()) *dist = std::sqrt(best2);
  return best;
}

}  // namespace kl::deltasets
