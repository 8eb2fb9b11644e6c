#include "kakeyalab/kakeya/recursion.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "kakeyalab/error.hpp"
#include "kakeyalab/kakeya/multilinear.hpp"
#include "kakeyalab/kakeya/wedge.hpp"
#include "kakeyalab/raster/rasterize.hpp"
#include "kakeyalab/rng.hpp"

namespace kl::kakeya {

namespace {

// Distance from a horizontal point to the box lower' + [0, side]^{d-1}.
double box_distance(const Eigen::VectorXd& p, const Eigen::VectorXd& lower, double side) {
  double s = 0.0;
  for (Eigen::Index k = 0; k < p.size(); ++k) {
    double t = 0.0;
    if (p[k] < lower[k]) t = lower[k] - p[k];
    else if (p[k] > lower[k] + side) t = p[k] - lower[k] - side;
    s += t * t;
  }
  return std::sqrt(s);
}

bool in_cube(const Eigen::VectorXd& x, const CubeInstance& q) {
  for (Eigen::Index k = 0; k < x.size(); ++k)
    if (x[k] < q.lower[k] || x[k] > q.lower[k] + q.side) return false;
  return true;
}

double largest_dyadic_at_most(double x) {
  int e = 0;
  std::frexp(x, &e);
  return std::ldexp(1.0, e - 1);
}

}  // namespace

std::vector<CubeInstance> curved_mlk_step(const std::vector<curves::CurveFamily>& families,
                                          double delta) {
  if (families.empty()) throw DomainError("curved_mlk_step needs at least one family");
  if (!(delta > 0.0 && delta < 1.0)) throw DomainError("curved_mlk_step needs 0 < delta < 1");
  const int d = families[0].ambient_dim();
  for (const auto& f : families)
    if (f.ambient_dim() != d) throw DomainError("families differ in dimension");
  const double side = 2.0 * std::sqrt(delta);
  const auto per = static_cast<std::int64_t>(std::ceil(1.0 / std::sqrt(delta) - 1e-12));
  std::int64_t total = 1;
  for (int k = 0; k < d; ++k) total *= per;

  std::vector<CubeInstance> cubes(static_cast<std::size_t>(total));
  const int probes = 16;
#pragma omp parallel for schedule(static)
  for (std::int64_t q = 0; q < total; ++q) {
    CubeInstance& cube = cubes[q];
    cube.side = side;
    cube.lower.resize(d);
    std::int64_t r = q;
    for (int k = 0; k < d; ++k) {
      cube.lower[k] = -1.0 + static_cast<double>(r % per) * side;
      r /= per;
    }
    const double z0 = std::max(-1.0, cube.lower[d - 1]);
    const double z1 = std::min(1.0, cube.lower[d - 1] + side);
    const double mid = std::clamp(cube.lower[d - 1] + side / 2, -1.0, 1.0);
    cube.tubes.resize(families.size());
    cube.sources.resize(families.size());
    if (z0 > z1) continue;
    const Eigen::VectorXd lower_h = cube.lower.head(d - 1);
    for (std::size_t j = 0; j < families.size(); ++j) {
      const auto& fam = families[j];
      const double C = fam.regularity_bound();
      const double slack = delta + C * (z1 - z0) / probes;
      for (std::size_t y = 0; y < fam.size(); ++y) {
        bool meets = false;
        for (int p = 0; p <= probes && !meets; ++p) {
          const double c = z0 + (z1 - z0) * p / probes;
          meets = box_distance(fam.horizontal(y, c), lower_h, side) <= slack;
        }
        if (!meets) continue;
        raster::StraightTube t;
        t.a = fam.eval(y, mid);
        t.u = fam.tangent(y, mid);
        t.half_length = 2.0 * std::sqrt(static_cast<double>(d)) * side;
        t.radius = (1.0 + C) * delta;
        cube.tubes[j].push_back(std::move(t));
        cube.sources[j].push_back(y);
      }
    }
  }
  return cubes;
}

ContainmentReport check_containment(const std::vector<curves::CurveFamily>& families,
                                    const std::vector<CubeInstance>& cubes, double delta,
                                    std::size_t samples, std::uint64_t seed) {
  ContainmentReport rep;
  std::vector<std::pair<std::size_t, std::size_t>> slots;  // (cube, family) with tubes
  for (std::size_t q = 0; q < cubes.size(); ++q)
    for (std::size_t j = 0; j < cubes[q].tubes.size(); ++j)
      if (!cubes[q].tubes[j].empty()) slots.emplace_back(q, j);
  if (slots.empty() || samples == 0) return rep;
  const int d = families[0].ambient_dim();
  Rng rng(seed);
  std::size_t attempts = 0;
  const std::size_t max_attempts = samples * 200;
  while (rep.checked < samples && attempts < max_attempts) {
    ++attempts;
    const auto [q, j] = slots[rng.below(slots.size())];
    const CubeInstance& cube = cubes[q];
    const std::size_t t = rng.below(cube.tubes[j].size());
    const std::size_t y = cube.sources[j][t];
    const double z0 = std::max(-1.0, cube.lower[d - 1]);
    const double z1 = std::min(1.0, cube.lower[d - 1] + cube.side);
    const double c = rng.uniform(z0, z1);
    Eigen::VectorXd w(d - 1);
    do {
      for (int k = 0; k < d - 1; ++k) w[k] = rng.uniform(-delta, delta);
    } while (w.norm() > delta);
    Eigen::VectorXd x(d);
    x.head(d - 1) = families[j].horizontal(y, c) + w;
    x[d - 1] = c;
    if (!in_cube(x, cube)) continue;
    const raster::StraightTube& tube = cube.tubes[j][t];
    ++rep.checked;
    if (!tube.contains(x)) ++rep.failed;
    const Eigen::VectorXd v = x - tube.a;
    const double along = v.dot(tube.u);
    rep.max_axis_distance =
        std::max(rep.max_axis_distance, std::sqrt(std::max(0.0, v.squaredNorm() - along * along)));
  }
  return rep;
}

std::vector<double> recursion_ladder(double delta, double C) {
  if (!(delta > 0.0 && delta < 1.0)) throw DomainError("recursion ladder needs 0 < delta < 1");
  std::vector<double> ladder{delta};
  const double stop = std::exp(-2.0);
  while (ladder.back() < stop) {
    const double next = (10.0 + C) * std::sqrt(ladder.back());
    if (!(next < 1.0)) break;
    ladder.push_back(next);
  }
  return ladder;
}

RecursionTrace curved_mlk_recursion(const std::vector<curves::CurveFamily>& families, double delta,
                                    double rho, const RecursionOptions& opts) {
  if (families.size() < 2) throw DomainError("curved recursion needs at least two families");
  if (!(rho > 0.0 && rho <= 1.0)) throw DomainError("curved recursion needs 0 < rho <= 1");
  if (!(delta < std::exp(-2.0))) throw DomainError("curved recursion needs delta < e^-2");
  const int d = families[0].ambient_dim();
  const int k = static_cast<int>(families.size()) - 1;
  if (k + 1 > d) throw DomainError("more families than the dimension");
  double C = 1.0;
  for (const auto& f : families) {
    if (f.ambient_dim() != d || f.size() == 0) throw DomainError("families must be nonempty and share d");
    C = std::max(C, f.regularity_bound());
  }

  RecursionTrace tr;
  tr.rho = rho;
  const double floor_wedge = std::pow(rho, k);
  Rng rng(opts.seed);
  Rng pick = rng.split(0);
  for (int t = 0; t < opts.transversality_tuples; ++t) {
    const double c = pick.uniform(-1.0, 1.0);
    std::vector<Eigen::VectorXd> u;
    std::string name;
    for (const auto& f : families) {
      const std::size_t y = pick.below(f.size());
      u.push_back(f.tangent(y, c));
      name += (name.empty() ? "" : ",") + std::to_string(y);
    }
    const double w = wedge_volume(u);
    tr.min_sampled_wedge = std::min(tr.min_sampled_wedge, w);
    if (w < floor_wedge)
      throw TransversalityError("tuple (" + name + ") at c=" + std::to_string(c) + " has wedge " +
                                std::to_string(w) + " below rho^k=" + std::to_string(floor_wedge));
  }

  tr.scales = recursion_ladder(delta, C);
  tr.iterations = static_cast<int>(tr.scales.size()) - 1;
  const double loglog = std::log(std::log(1.0 / delta));
  tr.depth_limit = 2.0 * loglog + 1.0;
  for (double s : tr.scales) {
    const double h = largest_dyadic_at_most(s / opts.h_ratio);
    std::vector<raster::TubeGrid> fields;
    std::vector<std::size_t> sizes;
    for (const auto& f : families) {
      fields.push_back(raster::rasterize_family(f, s, h));
      sizes.push_back(f.size());
    }
    tr.constants.push_back(product_integral(fields, sizes, s).normalized);
  }
  const double c_prime = opts.c_prime > 0.0 ? opts.c_prime : std::pow(10.0 + C, 2.0 * d);
  tr.bound = std::pow(c_prime / rho, 2.0 * loglog);
  tr.bound_holds = tr.constants.front() <= tr.bound;
  if (opts.containment_samples > 0) {
    const auto cubes = curved_mlk_step(families, delta);
    tr.containment = check_containment(families, cubes, delta, opts.containment_samples, rng.split(1).next());
  }
  return tr;
}

}  // namespace kl::kakeya
