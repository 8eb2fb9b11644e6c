#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

namespace kl::broadnarrow {

inline constexpr double kDefaultOverlapBound = 32.0;

/// Deterministic cover of S^{d-1} by closed caps of angular radius r.
/// d = 2: ceil(2 pi / r) equally spaced arcs of length r. d >= 3: centres of
/// an equiangular grid on each face of [-1, 1]^d (face coordinate
/// tan(pi t / 4)), projected to the sphere; for d = 4 the cell corners are
/// added as a second sublattice unless a plain grid is smaller. Caps are
/// never stored.
class CapCover {
 public:
  /// ResourceError when there would be more than max_caps caps.
  static CapCover build(int d, double r, std::uint64_t max_caps = std::uint64_t{1} << 62,
                        std::size_t net_size = 20000, double overlap_bound = kDefaultOverlapBound);

  int dim() const { return d_; }
  double radius() const { return r_; }
  std::uint64_t size() const { return size_; }
  std::int64_t per_face() const { return m_; }

  Eigen::VectorXd center(std::uint64_t id) const;
  bool contains(std::uint64_t id, const Eigen::VectorXd& u) const;
  /// A cap containing the unit vector u.
  std::uint64_t cap_of(const Eigen::VectorXd& u) const;
  /// Every cap containing u, ascending.
  std::vector<std::uint64_t> caps_containing(const Eigen::VectorXd& u) const;

  /// Largest number of caps containing a point of the test net.
  int overlap() const { return overlap_; }
  std::size_t net_size() const { return net_; }

 private:
  CapCover() = default;
  std::uint64_t face_block() const { return block_; }
  Eigen::VectorXd face_point(int face, const std::vector<double>& g) const;
  void scan_face(int face, const Eigen::VectorXd& u, std::vector<std::uint64_t>& out) const;

  int d_ = 0;
  double r_ = 0.0;
  double chord_ = 0.0;  // 2 sin(r/2)
  std::int64_t m_ = 0;
  bool corners_ = false;
  std::uint64_t block_ = 0;
  std::uint64_t size_ = 0;
  int overlap_ = 0;
  std::size_t net_ = 0;
};

/// |S^{d-1}| / |B^{d-1}|: cap count per r^{-(d-1)} of an ideal cover.
double area_constant(int d);

}  // namespace kl::broadnarrow
