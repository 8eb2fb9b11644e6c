#include "kakeyalab/broadnarrow/cap_cover.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "kakeyalab/error.hpp"
#include "kakeyalab/rng.hpp"

namespace kl::broadnarrow {

namespace {

using u128 = unsigned __int128;

u128 ipow(u128 b, int e) {
  u128 r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

double angle(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  return 2.0 * std::asin(std::min(1.0, (a - b).norm() / 2.0));
}

// Equiangular face coordinates: t in [-1, 1] maps to g = tan(pi t / 4).
double warp(double t) { return std::tan(std::numbers::pi / 4.0 * t); }
double unwarp(double g) { return 4.0 / std::numbers::pi * std::atan(g); }

Eigen::VectorXd sphere_point(int n, const double* t) {
  Eigen::VectorXd v(n + 1);
  v[0] = 1.0;
  for (int k = 0; k < n; ++k) v[k + 1] = warp(t[k]);
  return v.normalized();
}

// Largest angle between a cell's centre and its corners, over every cell of
// an m-grid on one face.
double cell_angular_radius(int n, std::int64_t m) {
  const double side = 2.0 / static_cast<double>(m);
  double worst = 0.0;
  std::vector<std::int64_t> idx(n, 0);
  std::vector<double> t(n);
  while (true) {
    for (int k = 0; k < n; ++k) t[k] = -1.0 + (idx[k] + 0.5) * side;
    const Eigen::VectorXd c = sphere_point(n, t.data());
    for (int mask = 0; mask < (1 << n); ++mask) {
      for (int k = 0; k < n; ++k) t[k] = -1.0 + (idx[k] + ((mask >> k) & 1)) * side;
      worst = std::max(worst, angle(c, sphere_point(n, t.data())));
    }
    int k = 0;
    while (k < n && ++idx[k] == m) idx[k++] = 0;
    if (k == n) break;
  }
  return worst;
}

// Largest operator norm of the Jacobian of t -> sphere point over a face,
// sampled on a grid with a small safety margin.
double face_lipschitz(int n) {
  const int steps = n == 2 ? 200 : 40;
  double worst = 0.0;
  std::vector<int> idx(n, 0);
  std::vector<double> t(n), tp(n);
  const double eps = 1e-6;
  while (true) {
    for (int k = 0; k < n; ++k) t[k] = -1.0 + 2.0 * idx[k] / steps;
    Eigen::MatrixXd jac(n + 1, n);
    const Eigen::VectorXd base = sphere_point(n, t.data());
    for (int k = 0; k < n; ++k) {
      tp = t;
      tp[k] += eps;
      jac.col(k) = (sphere_point(n, tp.data()) - base) / eps;
    }
    worst = std::max(worst, Eigen::JacobiSVD<Eigen::MatrixXd>(jac).singularValues()[0]);
    int k = 0;
    while (k < n && ++idx[k] == steps + 1) idx[k++] = 0;
    if (k == n) break;
  }
  return worst * 1.02;
}

}  // namespace

double area_constant(int d) {
  // |S^{d-1}| = 2 pi^{d/2} / Gamma(d/2), |B^{d-1}| = pi^{(d-1)/2} / Gamma((d+1)/2).
  const double pi = std::numbers::pi;
  const double sphere = 2.0 * std::pow(pi, d / 2.0) / std::tgamma(d / 2.0);
  const double ball = std::pow(pi, (d - 1) / 2.0) / std::tgamma((d + 1) / 2.0);
  return sphere / ball;
}

CapCover CapCover::build(int d, double r, std::uint64_t max_caps, std::size_t net_size,
                         double overlap_bound) {
  if (d < 2) throw DomainError("cap covers need d >= 2");
  if (!(r > 0.0 && r < 1.0)) throw DomainError("cap radius must lie in (0, 1)");
  CapCover cv;
  cv.d_ = d;
  cv.r_ = r;
  // Arcs in d = 2 have length r, so consecutive arcs overlap at most pairwise.
  cv.chord_ = 2.0 * std::sin((d == 2 ? r / 2.0 : r) / 2.0);
  const int n = d - 1;
  u128 total = 0;
  if (d == 2) {
    const double q = 2.0 * std::numbers::pi / r;
    const double m = std::ceil(q - 1e-12 * q);
    if (m > static_cast<double>(max_caps)) throw ResourceError("cap cover too large");
    cv.m_ = static_cast<std::int64_t>(m);
    total = static_cast<u128>(cv.m_);
  } else {
    cv.corners_ = n == 3;
    // Cube centres cover within sqrt(n)/m of the t-grid, adding corners within sqrt(5)/(2m).
    const double lip = face_lipschitz(n);
    const double bound = lip * (cv.corners_ ? std::sqrt(5.0) / (2.0 * r) : std::sqrt(double(n)) / r);
    if (bound > 1e15) throw ResourceError("cap radius too small for the cap budget");
    std::int64_t m = static_cast<std::int64_t>(std::ceil(bound));
    // Coarse caps: a plain grid may beat the bound, and beats the corner
    // lattice whenever t^n <= m^n + (m+1)^n.
    const std::int64_t limit = cv.corners_ ? std::min<std::int64_t>(24, (5 * m) / 4) : std::min<std::int64_t>(m, 64);
    for (std::int64_t t = 1; t <= limit; ++t)
      if (cell_angular_radius(n, t) <= r) {
        m = t;
        cv.corners_ = false;
        break;
      }
    cv.m_ = m;
    u128 block = ipow(static_cast<u128>(m), n);
    if (cv.corners_) block += ipow(static_cast<u128>(m + 1), n);
    total = block * static_cast<u128>(2 * d);
    if (total > static_cast<u128>(max_caps))
      throw ResourceError("cap cover of radius " + std::to_string(r) + " in d=" + std::to_string(d) +
                          " exceeds the cap budget");
    cv.block_ = static_cast<std::uint64_t>(block);
  }
  cv.size_ = static_cast<std::uint64_t>(total);

  // Test net: random directions plus the coordinate axes and cube diagonals.
  std::vector<Eigen::VectorXd> net;
  for (int a = 0; a < d; ++a)
    for (int s = -1; s <= 1; s += 2) {
      Eigen::VectorXd e = Eigen::VectorXd::Zero(d);
      e[a] = s;
      net.push_back(e);
    }
  for (int mask = 0; mask < (1 << d); ++mask) {
    Eigen::VectorXd e(d);
    for (int a = 0; a < d; ++a) e[a] = (mask >> a) & 1 ? -1.0 : 1.0;
    net.push_back(e.normalized());
  }
  Rng rng(0x6361707320ULL + static_cast<std::uint64_t>(d));
  while (net.size() < net_size) {
    Eigen::VectorXd e(d);
    for (int a = 0; a < d; ++a) e[a] = rng.normal();
    if (e.norm() > 1e-9) net.push_back(e.normalized());
  }
  cv.net_ = net.size();
  int worst = 0;
  for (const auto& u : net) {
    const auto caps = cv.caps_containing(u);
    if (caps.empty()) throw ConsistencyError("cap cover leaves a net point uncovered");
    worst = std::max(worst, static_cast<int>(caps.size()));
  }
  cv.overlap_ = worst;
  if (worst > overlap_bound)
    throw ConsistencyError("cap cover overlap " + std::to_string(worst) + " exceeds the bound");
  return cv;
}

Eigen::VectorXd CapCover::face_point(int face, const std::vector<double>& g) const {
  const int a = face / 2;
  Eigen::VectorXd v(d_);
  v[a] = face % 2 ? -1.0 : 1.0;
  for (int k = 0, j = 0; k < d_; ++k)
    if (k != a) v[k] = warp(g[j++]);
  return v.normalized();
}

Eigen::VectorXd CapCover::center(std::uint64_t id) const {
  if (id >= size_) throw DomainError("cap index out of range");
  if (d_ == 2) {
    const double t = 2.0 * std::numbers::pi * static_cast<double>(id) / static_cast<double>(m_);
    Eigen::VectorXd v(2);
    v << std::cos(t), std::sin(t);
    return v;
  }
  const int n = d_ - 1;
  const int face = static_cast<int>(id / block_);
  std::uint64_t local = id % block_;
  const double side = 2.0 / static_cast<double>(m_);
  const std::uint64_t first = static_cast<std::uint64_t>(ipow(static_cast<u128>(m_), n));
  std::vector<double> g(n);
  if (local < first) {
    for (int k = 0; k < n; ++k) {
      g[k] = -1.0 + (static_cast<double>(local % m_) + 0.5) * side;
      local /= m_;
    }
  } else {
    local -= first;
    const std::uint64_t b = static_cast<std::uint64_t>(m_ + 1);
    for (int k = 0; k < n; ++k) {
      g[k] = -1.0 + static_cast<double>(local % b) * side;
      local /= b;
    }
  }
  return face_point(face, g);
}

bool CapCover::contains(std::uint64_t id, const Eigen::VectorXd& u) const {
  return (center(id) - u).norm() <= chord_;
}

void CapCover::scan_face(int face, const Eigen::VectorXd& u, std::vector<std::uint64_t>& out) const {
  const int n = d_ - 1;
  const int a = face / 2;
  const double s = face % 2 ? -1.0 : 1.0;
  const double ua = s * u[a];
  if (ua <= 0.0) return;
  const double side = 2.0 / static_cast<double>(m_);
  std::vector<double> g;
  for (int k = 0; k < d_; ++k)
    if (k != a) g.push_back(u[k] / ua);
  // |P - Q| <= |P| |Q| sin(angle) on the face plane.
  const double pn = 1.0 / ua;
  const double reach = pn * std::sqrt(double(n + 1)) * std::sin(std::min(r_, std::numbers::pi / 2));
  for (int k = 0; k < n; ++k)
    if (g[k] < -1.0 - reach || g[k] > 1.0 + reach) return;
  std::vector<double> tlo(n), thi(n);
  for (int k = 0; k < n; ++k) {
    tlo[k] = unwarp(g[k] - reach);
    thi[k] = unwarp(g[k] + reach);
  }
  const std::uint64_t first = static_cast<std::uint64_t>(ipow(static_cast<u128>(m_), n));
  for (int lattice = 0; lattice < (corners_ ? 2 : 1); ++lattice) {
    const std::int64_t count = lattice == 0 ? m_ : m_ + 1;
    const double offset = lattice == 0 ? 0.5 : 0.0;
    std::vector<std::int64_t> lo(n), hi(n);
    for (int k = 0; k < n; ++k) {
      lo[k] = std::max<std::int64_t>(0, static_cast<std::int64_t>(std::floor((tlo[k] + 1.0) / side - offset)));
      hi[k] = std::min<std::int64_t>(count - 1,
                                     static_cast<std::int64_t>(std::ceil((thi[k] + 1.0) / side - offset)));
      if (lo[k] > hi[k]) goto next_lattice;
    }
    {
      std::vector<std::int64_t> idx = lo;
      std::vector<double> q(n);
      while (true) {
        std::uint64_t local = 0, mult = 1;
        for (int k = 0; k < n; ++k) {
          q[k] = -1.0 + (static_cast<double>(idx[k]) + offset) * side;
          local += static_cast<std::uint64_t>(idx[k]) * mult;
          mult *= static_cast<std::uint64_t>(count);
        }
        if ((face_point(face, q) - u).norm() <= chord_)
          out.push_back(static_cast<std::uint64_t>(face) * block_ + (lattice ? first : 0) + local);
        int k = 0;
        while (k < n && idx[k] == hi[k]) {
          idx[k] = lo[k];
          ++k;
        }
        if (k == n) break;
        ++idx[k];
      }
    }
  next_lattice:;
  }
}

std::vector<std::uint64_t> CapCover::caps_containing(const Eigen::VectorXd& u) const {
  if (u.size() != d_) throw DomainError("direction has the wrong dimension");
  std::vector<std::uint64_t> out;
  if (d_ == 2) {
    const double step = 2.0 * std::numbers::pi / static_cast<double>(m_);
    double t = std::atan2(u[1], u[0]);
    if (t < 0) t += 2.0 * std::numbers::pi;
    const auto base = static_cast<std::int64_t>(std::floor(t / step));
    const auto w = static_cast<std::int64_t>(std::ceil(r_ / step)) + 1;
    for (std::int64_t i = base - w; i <= base + w + 1; ++i) {
      const std::int64_t j = ((i % m_) + m_) % m_;
      if (contains(static_cast<std::uint64_t>(j), u)) out.push_back(static_cast<std::uint64_t>(j));
    }
  } else if (size_ <= 4096) {
    for (std::uint64_t id = 0; id < size_; ++id)
      if (contains(id, u)) out.push_back(id);
  } else {
    for (int f = 0; f < 2 * d_; ++f) scan_face(f, u, out);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::uint64_t CapCover::cap_of(const Eigen::VectorXd& u) const {
  if (u.size() != d_) throw DomainError("direction has the wrong dimension");
  if (d_ == 2) {
    const double step = 2.0 * std::numbers::pi / static_cast<double>(m_);
    double t = std::atan2(u[1], u[0]);
    if (t < 0) t += 2.0 * std::numbers::pi;
    const auto j = static_cast<std::uint64_t>(std::llround(t / step)) % static_cast<std::uint64_t>(m_);
    if (contains(j, u)) return j;
  } else {
    const int n = d_ - 1;
    int a = 0;
    for (int k = 1; k < d_; ++k)
      if (std::abs(u[k]) > std::abs(u[a])) a = k;
    const int face = 2 * a + (u[a] < 0 ? 1 : 0);
    const double ua = std::abs(u[a]);
    const double side = 2.0 / static_cast<double>(m_);
    std::vector<std::int64_t> cell(n);
    std::vector<double> g(n);
    for (int k = 0, j = 0; k < d_; ++k)
      if (k != a) {
        g[j] = unwarp(u[k] / ua);
        cell[j] = std::clamp<std::int64_t>(static_cast<std::int64_t>(std::floor((g[j] + 1.0) / side)), 0, m_ - 1);
        ++j;
      }
    std::uint64_t best = 0;
    double best_dist = 1e300;
    std::uint64_t local = 0, mult = 1;
    std::vector<double> q(n);
    for (int k = 0; k < n; ++k) {
      q[k] = -1.0 + (cell[k] + 0.5) * side;
      local += static_cast<std::uint64_t>(cell[k]) * mult;
      mult *= static_cast<std::uint64_t>(m_);
    }
    best = static_cast<std::uint64_t>(face) * block_ + local;
    best_dist = (face_point(face, q) - u).norm();
    if (corners_) {
      const std::uint64_t first = static_cast<std::uint64_t>(ipow(static_cast<u128>(m_), n));
      for (int mask = 0; mask < (1 << n); ++mask) {
        std::uint64_t loc = 0, mul = 1;
        for (int k = 0; k < n; ++k) {
          const std::int64_t c = cell[k] + ((mask >> k) & 1);
          q[k] = -1.0 + static_cast<double>(c) * side;
          loc += static_cast<std::uint64_t>(c) * mul;
          mul *= static_cast<std::uint64_t>(m_ + 1);
        }
        const double dist = (face_point(face, q) - u).norm();
        if (dist < best_dist) {
          best_dist = dist;
          best = static_cast<std::uint64_t>(face) * block_ + first + loc;
        }
      }
    }
    if (best_dist <= chord_) return best;
  }
  const auto all = caps_containing(u);
  if (all.empty()) throw ConsistencyError("direction lies in no cap");
  return all.front();
}

}  // namespace kl::broadnarrow
