#include "kakeyalab/broadnarrow/dichotomy.hpp"

#include <cmath>
#include <map>
#include <string>

#include "kakeyalab/error.hpp"
#include "kakeyalab/kakeya/wedge.hpp"

namespace kl::broadnarrow {

using i128 = __int128;

std::vector<CapCount> significant_caps(const std::vector<CapCount>& counts) {
  std::vector<CapCount> present;
  i128 total = 0;
  for (const auto& c : counts)
    if (c.count > 0) {
      present.push_back(c);
      total += c.count;
    }
  const i128 caps = static_cast<i128>(present.size());
  std::vector<CapCount> out;
  for (const auto& c : present)
    if (1000 * caps * static_cast<i128>(c.count) >= total) out.push_back(c);
  return out;
}

Pigeonhole dyadic_pigeonhole(const std::vector<CapCount>& significant) {
  Pigeonhole ph;
  std::map<int, std::uint64_t> mass;
  for (const auto& c : significant) {
    if (c.count == 0) continue;
    ph.total += c.count;
    mass[63 - __builtin_clzll(c.count)] += c.count;
  }
  if (mass.empty()) return ph;
  int best = mass.begin()->first;
  for (const auto& [lvl, m] : mass)
    if (m >= mass[best]) best = lvl;
  ph.level = best;
  ph.retained = mass[best];
  for (const auto& c : significant)
    if (c.count > 0 && 63 - __builtin_clzll(c.count) == best) ph.caps.push_back(c);
  return ph;
}

double fine_cap_radius(int d, double rho) { return std::pow(rho, d) / (1000.0 * d); }

namespace {

double tuple_wedge(const std::vector<Eigen::VectorXd>& centers, const std::vector<std::size_t>& t) {
  std::vector<Eigen::VectorXd> u;
  for (auto i : t) u.push_back(centers[i]);
  return kakeya::wedge_volume(u);
}

std::size_t count_inside(const Subspace& h, const std::vector<Eigen::VectorXd>& centers,
                         double cap_radius, double rho) {
  std::size_t n = 0;
  for (const auto& c : centers) n += cap_inside(h, c, cap_radius, rho);
  return n;
}

// Best (k+1)-tuple by wedge, lowest lexicographic on ties.
std::pair<std::vector<std::size_t>, double> best_tuple(const std::vector<Eigen::VectorXd>& centers,
                                                       int m) {
  const std::size_t n = centers.size();
  std::vector<std::size_t> t(m), best;
  for (int i = 0; i < m; ++i) t[i] = i;
  double best_w = -1.0;
  if (n < static_cast<std::size_t>(m)) return {best, best_w};
  while (true) {
    const double w = tuple_wedge(centers, t);
    if (w > best_w) {
      best_w = w;
      best = t;
    }
    int i = m - 1;
    while (i >= 0 && t[i] == n - m + i) --i;
    if (i < 0) break;
    ++t[i];
    for (int j = i + 1; j < m; ++j) t[j] = t[j - 1] + 1;
  }
  return {best, best_w};
}

}  // namespace

void verify_certificate(const DichotomyResult& r, const std::vector<Eigen::VectorXd>& centers,
                        double cap_radius, double rho, int k) {
  const double floor_w = 0.999 * std::pow(rho, k);
  if (r.kind == Case::Broad) {
    if (r.tuple.size() != static_cast<std::size_t>(k + 1))
      throw ConsistencyError("broad certificate has the wrong tuple size");
    for (auto i : r.tuple)
      if (i >= centers.size()) throw ConsistencyError("broad certificate names a missing cap");
    const double w = tuple_wedge(centers, r.tuple);
    if (!(w >= floor_w))
      throw ConsistencyError("broad certificate wedge " + std::to_string(w) + " below the floor");
  } else {
    if (r.h.dim() != k || r.h.orthonormality_error() > 1e-10)
      throw ConsistencyError("narrow certificate plane is not an orthonormal k-plane");
    const std::size_t inside = count_inside(r.h, centers, cap_radius, rho);
    if (inside != r.inside || 2 * inside < centers.size())
      throw ConsistencyError("narrow certificate holds fewer than half the caps");
  }
}

DichotomyResult bg_dichotomy(const std::vector<Eigen::VectorXd>& centers, double cap_radius,
                             double rho, int k, const DichotomyOptions& opts) {
  if (centers.empty()) throw DomainError("bg_dichotomy needs a nonempty cap set");
  const int d = static_cast<int>(centers[0].size());
  if (k < 1 || k > d - 1) throw DomainError("bg_dichotomy needs 1 <= k <= d-1");
  if (!(rho > 0.0 && rho <= 1.0)) throw DomainError("bg_dichotomy needs 0 < rho <= 1");
  // Greedy picks sit at distance > rho - r from the span, so the wedge is at
  // least (rho - r)^k >= (1 - k r / rho) rho^k.
  if (cap_radius < 0.0 || cap_radius > rho / (1000.0 * k))
    throw DomainError("bg_dichotomy needs cap radius <= rho / (1000 k)");
  DichotomyResult r;
  r.total = centers.size();
  const double floor_w = 0.999 * std::pow(rho, k);

  if (centers.size() <= opts.exhaustive_limit) {
    auto [t, w] = best_tuple(centers, k + 1);
    if (!t.empty() && w >= floor_w) {
      r.kind = Case::Broad;
      r.tuple = t;
      r.wedge = w;
      r.exhaustive = true;
      verify_certificate(r, centers, cap_radius, rho, k);
      return r;
    }
  }

  std::vector<std::size_t> chosen{0};
  std::vector<Eigen::VectorXd> span_vecs{centers[0]};
  while (true) {
    const Subspace h = Subspace::span(d, span_vecs);
    const std::size_t inside = count_inside(h, centers, cap_radius, rho);
    if (2 * inside >= centers.size()) {
      r.kind = Case::Narrow;
      r.tuple = chosen;
      r.h = h.completed(k);
      r.inside = count_inside(r.h, centers, cap_radius, rho);
      break;
    }
    std::size_t pick = centers.size();
    double best = -1.0;
    for (std::size_t i = 0; i < centers.size(); ++i) {
      if (cap_inside(h, centers[i], cap_radius, rho)) continue;
      std::vector<std::size_t> t = chosen;
      t.push_back(i);
      const double w = tuple_wedge(centers, t);
      if (w > best) {
        best = w;
        pick = i;
      }
    }
    chosen.push_back(pick);
    span_vecs.push_back(centers[pick]);
    if (chosen.size() == static_cast<std::size_t>(k + 1)) {
      r.kind = Case::Broad;
      r.tuple = chosen;
      r.wedge = best;
      break;
    }
  }
  verify_certificate(r, centers, cap_radius, rho, k);
  return r;
}

}  // namespace kl::broadnarrow
