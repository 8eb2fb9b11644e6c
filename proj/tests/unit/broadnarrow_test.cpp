#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "kakeyalab/broadnarrow/cap_cover.hpp"
#include "kakeyalab/broadnarrow/dichotomy.hpp"
#include "kakeyalab/broadnarrow/partition.hpp"
#include "kakeyalab/broadnarrow/subspace.hpp"
#include "kakeyalab/curves/curve_family.hpp"
#include "kakeyalab/error.hpp"
#include "oracles.hpp"

using namespace kl;
using namespace kl::broadnarrow;
using curves::Param;

namespace {

Eigen::VectorXd to_eigen(const oracle::Vec& v) { return Eigen::Map<const Eigen::VectorXd>(v.data(), v.size()); }

Eigen::VectorXd unit(std::initializer_list<double> xs) {
  Eigen::VectorXd v(xs.size());
  int i = 0;
  for (double x : xs) v[i++] = x;
  return v.normalized();
}

raster::AttributedGrid attributed(const curves::CurveFamily& f, const CapCover& cover, double delta, double h) {
  std::vector<std::size_t> all(f.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return raster::rasterize_attributed(f, all, delta, h, [&](std::size_t, const Eigen::VectorXd& e) {
    return cover.cap_of(e);
  });
}

}  // namespace

TEST_SUITE("broadnarrow") {

TEST_CASE("circle covers are equally spaced arcs") {
  for (double r : {0.5, 0.1, 0.01}) {
    const auto c = CapCover::build(2, r);
    CHECK(c.size() == static_cast<std::uint64_t>(std::ceil(2 * std::numbers::pi / r)));
    CHECK(c.overlap() <= 2);
    CHECK(c.center(0).norm() == doctest::Approx(1.0));
  }
}

TEST_CASE("cover sizes stay within a factor 8 of the ideal count") {
  for (int d = 2; d <= 4; ++d)
    for (double r : {0.3, 0.1}) {
      const auto c = CapCover::build(d, r);
      const double ideal = std::pow(r, -(d - 1)) * area_constant(d);
      CHECK(static_cast<double>(c.size()) <= 8 * ideal);
      CHECK(static_cast<double>(c.size()) >= ideal / 8);
      CHECK(c.overlap() <= kDefaultOverlapBound);
    }
}

TEST_CASE("coarse caps give a small cover") {
  for (int d = 2; d <= 3; ++d) {
    const auto c = CapCover::build(d, 0.99);
    CHECK(c.size() <= 20u);
    CHECK(c.size() >= 2u);
  }
  CHECK_THROWS_AS(CapCover::build(3, 1e-4, 1000), ResourceError);
}

TEST_CASE("every direction lies in the cap it is assigned") {
  std::mt19937_64 g(5);
  for (int d = 2; d <= 4; ++d)
    for (double r : {0.3, 0.05}) {
      const auto c = CapCover::build(d, r);
      CHECK(c.overlap() <= kDefaultOverlapBound);
      for (int t = 0; t < 500; ++t) {
        const Eigen::VectorXd u = to_eigen(oracle::random_unit(g, d));
        const auto id = c.cap_of(u);
        REQUIRE(id < c.size());
        CHECK(c.contains(id, u));
        CHECK(std::acos(std::clamp(c.center(id).dot(u), -1.0, 1.0)) <= r * (1 + 1e-9));
        const auto all = c.caps_containing(u);
        CHECK(std::find(all.begin(), all.end(), id) != all.end());
        CHECK(std::is_sorted(all.begin(), all.end()));
        CHECK(all.size() <= static_cast<std::size_t>(c.overlap()) + 4);
      }
    }
}

TEST_CASE("significant caps by exact counting") {
  std::vector<CapCount> uniform;
  for (std::uint64_t i = 0; i < 100; ++i) uniform.push_back({i, 7});
  CHECK(significant_caps(uniform).size() == 100);

  // 1000 caps with count 1 and one with 999: 1001 caps, total 1999.
  std::vector<CapCount> skew{{0, 999}};
  for (std::uint64_t i = 1; i <= 1000; ++i) skew.push_back({i, 1});
  const auto s = significant_caps(skew);
  CHECK(s.size() == 1001);

  std::vector<CapCount> heavy{{0, 1000000}, {1, 1}, {2, 0}};
  const auto h = significant_caps(heavy);
  REQUIRE(h.size() == 1);
  CHECK(h[0] == CapCount{0, 1000000});
  CHECK(significant_caps({}).empty());
}

TEST_CASE("dyadic pigeonhole keeps the heaviest class") {
  const auto p = dyadic_pigeonhole({{0, 8}, {1, 8}, {2, 1}});
  CHECK(p.level == 3);
  CHECK(p.caps.size() == 2);
  CHECK(p.retained == 16);
  CHECK(p.total == 17);

  std::vector<CapCount> geo;
  for (std::uint64_t j = 0; j < 6; ++j) geo.push_back({j, std::uint64_t{1} << j});
  const auto q = dyadic_pigeonhole(geo);
  CHECK(q.level == 5);
  CHECK(q.caps.size() == 1);
  CHECK(q.fraction() >= 1.0 / 6);

  // Ties go to the higher class.
  const auto t = dyadic_pigeonhole({{0, 2}, {1, 2}, {2, 4}});
  CHECK(t.level == 2);
}

TEST_CASE("dichotomy examples") {
  const double rho = 0.5;
  const auto one = bg_dichotomy({unit({1, 0, 0})}, 1e-5, rho, 2);
  CHECK(one.kind == Case::Narrow);
  CHECK(one.inside == 1);
  CHECK(one.h.dim() == 2);

  const std::vector<Eigen::VectorXd> basis{unit({1, 0, 0}), unit({0, 1, 0}), unit({0, 0, 1})};
  const auto b = bg_dichotomy(basis, 1e-5, rho, 2);
  CHECK(b.kind == Case::Broad);
  CHECK(b.wedge == doctest::Approx(1.0));
  CHECK_NOTHROW(verify_certificate(b, basis, 1e-5, rho, 2));

  std::vector<Eigen::VectorXd> near;
  for (int i = 0; i < 10; ++i) near.push_back(unit({1, 0.01 * i, -0.005 * i}));
  const auto n = bg_dichotomy(near, 1e-5, rho, 1);
  CHECK(n.kind == Case::Narrow);
  CHECK(2 * n.inside >= n.total);
  for (const auto& u : near) CHECK(n.h.distance(u) <= rho);
  CHECK_NOTHROW(verify_certificate(n, near, 1e-5, rho, 1));

  CHECK_THROWS_AS(bg_dichotomy(basis, 1e-3, rho, 2), DomainError);
  CHECK_THROWS_AS(bg_dichotomy(basis, 1e-6, rho, 3), DomainError);
  CHECK_THROWS_AS(bg_dichotomy({}, 1e-6, rho, 1), DomainError);
  CHECK(fine_cap_radius(3, 0.5) == doctest::Approx(0.125 / 3000));
}

TEST_CASE("dichotomy agrees with exhaustive search on small sets") {
  std::mt19937_64 g(8);
  for (int t = 0; t < 600; ++t) {
    const int d = 2 + t % 3;
    const int k = 1 + static_cast<int>(g() % (d - 1));
    const double rho = std::uniform_real_distribution<double>(0.05, 0.9)(g);
    const std::size_t m = 1 + g() % 12;
    // Half the sets are clustered near a random k-plane.
    const bool clustered = t % 2 == 0;
    std::vector<oracle::Vec> pts;
    std::vector<oracle::Vec> plane;
    for (int j = 0; j < k; ++j) plane.push_back(oracle::random_unit(g, d));
    for (std::size_t i = 0; i < m; ++i) {
      oracle::Vec u = oracle::random_unit(g, d);
      if (clustered) {
        oracle::Vec v(d, 0.0);
        std::normal_distribution<double> z;
        for (int j = 0; j < k; ++j)
          for (int c = 0; c < d; ++c) v[c] += z(g) * plane[j][c];
        for (int c = 0; c < d; ++c) v[c] += 0.05 * rho * u[c];
        const double nn = oracle::norm(v);
        for (double& x : v) x /= nn;
        u = v;
      }
      pts.push_back(u);
    }
    std::vector<Eigen::VectorXd> centers;
    for (const auto& p : pts) centers.push_back(to_eigen(p));
    const double r = fine_cap_radius(d, rho);
    const double floor = 0.999 * std::pow(rho, k);
    const double best = oracle::best_tuple_wedge(pts, k);
    const auto res = bg_dichotomy(centers, r, rho, k);
    if (std::abs(best - floor) < 1e-9) continue;
    CHECK((res.kind == Case::Broad) == (best >= floor));
    if (res.kind == Case::Broad) CHECK(res.wedge >= floor);
    CHECK_NOTHROW(verify_certificate(res, centers, r, rho, k));
  }
}

TEST_CASE("parallel lines are narrow everywhere") {
  const double rho = 0.5, delta = 1.0 / 16;
  const auto cover = CapCover::build(2, fine_cap_radius(2, rho));
  std::vector<Param> ps;
  for (int i = 0; i < 6; ++i) ps.push_back(Param{{-0.6 + 0.2 * i}, {-0.4 + 0.2 * i}});
  const auto f = curves::line_family(2, ps);
  const auto ag = attributed(f, cover, delta, delta / 4);
  const auto part = partition_broad_narrow(ag, cover, rho, 1);
  CHECK(part.broad == 0);
  CHECK(part.narrow == ag.grid.occupied());
  CHECK(part.chosen == -1);
  CHECK(part.pigeonhole_holds);
}

TEST_CASE("crossing lines are broad where they meet") {
  const double rho = 0.5, delta = 1.0 / 16;
  const auto cover = CapCover::build(2, fine_cap_radius(2, rho));
  const auto f = curves::line_family(2, {Param{{-0.5}, {0.5}}, Param{{0.5}, {-0.5}}});
  const auto ag = attributed(f, cover, delta, delta / 4);
  const auto part = partition_broad_narrow(ag, cover, rho, 1);
  CHECK(part.broad > 0);
  CHECK(part.narrow > 0);
  CHECK(part.broad + part.narrow == ag.grid.occupied());
  CHECK(part.tuples.size() == 1);
  CHECK(part.chosen == 0);
  CHECK(part.chosen_mass == doctest::Approx(part.broad_mass));
  CHECK(part.pigeonhole_holds);
  for (std::size_t i = 0; i < ag.grid.occupied(); ++i) {
    CHECK(part.labels[i] != kOutside);
    if (part.labels[i] == kBroad) {
      CHECK(ag.grid.counts()[i] == 2);
      double x[2];
      ag.grid.center(ag.grid.indices()[i], x);
      CHECK(std::abs(x[0]) <= 2 * delta);
    }
  }
}

TEST_CASE("many transversal lines keep the pigeonhole bound") {
  const double rho = 0.3, delta = 1.0 / 16;
  const auto cover = CapCover::build(2, fine_cap_radius(2, rho));
  std::mt19937_64 g(4);
  std::uniform_real_distribution<double> u(-0.8, 0.8);
  std::vector<Param> ps;
  for (int i = 0; i < 20; ++i) ps.push_back(Param{{u(g)}, {u(g)}});
  const auto f = curves::line_family(2, ps);
  const auto ag = attributed(f, cover, delta, delta / 4);
  const auto part = partition_broad_narrow(ag, cover, rho, 1);
  CHECK(part.pigeonhole_holds);
  CHECK(part.broad + part.narrow == ag.grid.occupied());
  CHECK(part.min_retained > 0.0);
  if (!part.tuples.empty()) CHECK(part.broad_mass <= part.tuples.size() * part.chosen_mass * (1 + 1e-12));
}

TEST_CASE("caps meeting a plane neighbourhood") {
  const auto cover = CapCover::build(2, 0.01);
  const auto h = Subspace::span(2, {Eigen::Vector2d(1, 0)});
  // Angles with |sin| <= rho + r on the circle, two arcs.
  const double rho = 0.2;
  const double frac = 4 * std::asin(rho + 0.01) / (2 * std::numbers::pi);
  CHECK(static_cast<double>(caps_meeting(cover, h, rho)) ==
        doctest::Approx(frac * cover.size()).epsilon(0.05));
  CHECK_THROWS_AS(caps_meeting(cover, h, rho, 10), ResourceError);
}

TEST_CASE("subspace operations") {
  const auto s = Subspace::span(3, {Eigen::Vector3d(1, 1, 0), Eigen::Vector3d(2, 2, 0), Eigen::Vector3d(0, 0, 3)});
  CHECK(s.dim() == 2);
  CHECK(s.orthonormality_error() < 1e-14);
  CHECK(s.distance(Eigen::Vector3d(1, -1, 0).normalized()) == doctest::Approx(1.0));
  CHECK(s.distance(Eigen::Vector3d(0, 0, 1)) == doctest::Approx(0.0).epsilon(1e-14));
  const auto c = Subspace::span(4, {Eigen::Vector4d(1, 0, 0, 0)}).completed(3);
  CHECK(c.dim() == 3);
  CHECK(c.orthonormality_error() < 1e-14);
  CHECK(cap_inside(s, Eigen::Vector3d(0, 0, 1), 0.01, 0.1));
  CHECK_FALSE(cap_inside(s, Eigen::Vector3d(1, -1, 0).normalized(), 0.01, 0.5));
}

}  // TEST_SUITE
