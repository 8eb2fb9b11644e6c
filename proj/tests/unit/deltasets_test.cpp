#include <doctest.h>

#include <cmath>
#include <numbers>

#include "kakeyalab/curves/curve_family.hpp"
#include "kakeyalab/deltasets/cantor.hpp"
#include "kakeyalab/deltasets/delta_set.hpp"
#include "kakeyalab/deltasets/discretize.hpp"
#include "kakeyalab/deltasets/frostman.hpp"
#include "kakeyalab/deltasets/kd_tree.hpp"
#include "kakeyalab/deltasets/line_space.hpp"
#include "kakeyalab/dimension/box_count.hpp"
#include "kakeyalab/error.hpp"
#include "kakeyalab/raster/rasterize.hpp"
#include "kakeyalab/rng.hpp"
#include "oracles.hpp"

using namespace kl;
using namespace kl::deltasets;

namespace {

PointSet grid_2d(double delta) {
  PointSet p(2);
  const int n = static_cast<int>(std::lround(1.0 / delta));
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) p.push(std::vector<double>{i * delta, j * delta});
  return p;
}

PointSet random_points(Rng& r, int n, std::size_t count, double lo, double hi) {
  PointSet p(n);
  std::vector<double> x(n);
  for (std::size_t i = 0; i < count; ++i) {
    for (double& c : x) c = r.uniform(lo, hi);
    p.push(x);
  }
  return p;
}

}  // namespace

TEST_SUITE("deltasets") {

TEST_CASE("check_delta_s: single point, grid and a close pair") {
  PointSet one(2);
  one.push(std::vector<double>{0.3, 0.4});
  CHECK(check_delta_s(one, 0.1, 0.0).ok);
  CHECK(check_delta_s(one, 0.1, 1.7).ok);

  const double delta = 0.125;
  const PointSet g = grid_2d(delta);
  CHECK(check_delta_s(g, delta, 2.0, 4.0).ok);
  // Brute force over all centres and dyadic radii with the same constant.
  double worst = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (double r : dyadic_radii(delta, 2.0)) {
      std::size_t c = 0;
      for (std::size_t j = 0; j < g.size(); ++j)
        if (g.distance(i, j) < r) ++c;
      worst = std::max(worst, c / std::pow(r / delta, 2.0));
    }
  CHECK(worst <= 4.0);
  CHECK(check_delta_s(g, delta, 2.0, worst).ok);
  CHECK_FALSE(check_delta_s(g, delta, 2.0, worst * 0.99).ok);

  PointSet pair(1);
  pair.push(std::vector<double>{0.0});
  pair.push(std::vector<double>{0.05});
  const auto bad = check_delta_s(pair, 0.1, 1.0);
  CHECK_FALSE(bad.ok);
  CHECK_FALSE(bad.separated);
  REQUIRE(bad.close_pair.has_value());
}

TEST_CASE("check_delta_s on an empty set is vacuously true") {
  const auto r = check_delta_s(PointSet(3), 0.1, 1.0);
  CHECK(r.ok);
  CHECK_FALSE(r.witness.has_value());
}

TEST_CASE("check_delta_s reports the worst ball and the 2^s slack") {
  PointSet p(1);
  for (int i = 0; i < 8; ++i) p.push(std::vector<double>{i * 0.1});
  const auto r = check_delta_s(p, 0.1, 0.5);
  CHECK_FALSE(r.ok);
  CHECK(r.separated);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->count > r.witness->bound);
  CHECK(r.slack == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("kd-tree ball counts agree with brute force") {
  Rng r(3);
  const PointSet p = random_points(r, 3, 500, -1, 1);
  const KdTree tree(p);
  for (int t = 0; t < 200; ++t) {
    std::vector<double> x{r.uniform(-1, 1), r.uniform(-1, 1), r.uniform(-1, 1)};
    const double rad = r.uniform(0, 0.6);
    std::size_t open = 0, closed = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      const double dd = distance(p[i], x);
      open += dd < rad;
      closed += dd <= rad;
    }
    CHECK(tree.count_open_ball(x, rad) == open);
    std::size_t seen = 0;
    tree.for_each_in_ball(x, rad, true, [&](std::size_t) { ++seen; });
    CHECK(seen == closed);
    double nd = 0.0;
    const std::size_t nn = tree.nearest(x, static_cast<std::size_t>(-1), &nd);
    double best = 1e300;
    for (std::size_t i = 0; i < p.size(); ++i) best = std::min(best, distance(p[i], x));
    CHECK(nd == best);
    CHECK(distance(p[nn], x) == best);
  }
}

TEST_CASE("frostman on a full line of cells keeps at least half the maximal net") {
  PointSet pts(1);
  for (int i = 0; i < 16; ++i) pts.push(std::vector<double>{(i + 0.5) / 16.0});
  const auto cells = DyadicCells::from_points(pts, 1.0 / 16, {0.0});
  const auto fr = frostman_extract(cells, 1.0);
  CHECK(check_delta_s(fr.set).ok);
  // The largest delta-separated subset of [0, 1] has 17 points.
  CHECK(fr.set.points.size() >= 8);
  CHECK(fr.c_impl >= 0.25);
}

TEST_CASE("frostman on a single cell returns one point") {
  PointSet pts(2);
  pts.push(std::vector<double>{0.3, 0.7});
  const auto fr = frostman_extract(DyadicCells::from_points(pts, 0.25, {0.0, 0.0}), 1.5);
  CHECK(fr.set.points.size() == 1);
  CHECK(fr.content == doctest::Approx(std::pow(0.25, 1.5)));
}

TEST_CASE("frostman on middle-thirds Cantor cells") {
  const double beta = std::log(2.0) / std::log(3.0);
  const PointSet c = cantor_parameter_set(beta, 5);
  const double delta = 0x1p-8;
  const auto cells = DyadicCells::from_points(c, delta, {0.0}, true);
  CHECK(cells.size() == 32);
  const auto fr = frostman_extract(cells, beta);
  CHECK(check_delta_s(fr.set).ok);
  CHECK(fr.c_impl >= std::pow(2.0, -2 * beta));
  CHECK(fr.set.points.size() >= fr.c_impl * fr.content * std::pow(delta, -beta) - 1e-9);
  CHECK(fr.set.points.size() >= 16);
}

TEST_CASE("frostman with s >= n returns the full net") {
  Rng r(8);
  const PointSet p = random_points(r, 1, 40, 0, 1);
  const auto cells = DyadicCells::from_points(p, 1.0 / 64, {0.0}, true);
  const auto fr = frostman_extract(cells, 1.5);
  CHECK(check_delta_s(fr.set).ok);
  CHECK(fr.set.points.size() >= cells.size() / 2);
}

TEST_CASE("frostman is close to a brute-force maximal (delta, s)-set at delta = 1/8") {
  Rng r(99);
  for (int trial = 0; trial < 12; ++trial) {
    const int n = 1 + trial % 2;
    const double s = n == 1 ? 0.5 + 0.25 * (trial % 3) : 1.0 + 0.5 * (trial % 3);
    const PointSet p = random_points(r, n, n == 1 ? 10 : 18, 0, 1);
    const auto cells = DyadicCells::from_points(p, 0.125, std::vector<double>(n, 0.0));
    const auto fr = frostman_extract(cells, s);
    REQUIRE(check_delta_s(fr.set).ok);
    std::vector<oracle::Vec> reps;
    for (std::size_t i = 0; i < cells.size(); ++i) reps.push_back(cells.representative(i));
    const std::size_t best = oracle::max_delta_s_subset(reps, 0.125, s, 1.0);
    CHECK(fr.set.points.size() <= best);
    CHECK(static_cast<double>(fr.set.points.size()) >= std::pow(2.0, -2 * s) * best);
  }
}

TEST_CASE("dyadic content is bounded by the point count and the root cap") {
  Rng r(12);
  const PointSet p = random_points(r, 2, 300, 0, 1);
  const auto cells = DyadicCells::from_points(p, 1.0 / 32, {0.0, 0.0});
  for (double s : {0.5, 1.0, 1.5, 2.0}) {
    const double h = dyadic_content(cells, s);
    CHECK(h > 0.0);
    CHECK(h <= cells.size() * std::pow(1.0 / 32, s) + 1e-12);
    CHECK(h <= 1.0 + 1e-12);
  }
}

TEST_CASE("dyadic_level accepts only powers of two") {
  CHECK(dyadic_level(0.125) == 3);
  CHECK(dyadic_level(1.0) == 0);
  CHECK_THROWS_AS(dyadic_level(0.3), DomainError);
}

TEST_CASE("cantor parameter sets") {
  const PointSet zero = cantor_parameter_set(0.0, 6);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0][0] == 0.0);

  const auto full = cantor_points(1.0, 4);
  REQUIRE(full.size() == 16);
  for (int i = 0; i < 16; ++i) CHECK(full[i] == i / 16.0);

  const double beta = std::log(2.0) / std::log(3.0);
  const auto mt = cantor_points(beta, 5);
  REQUIRE(mt.size() == 32);
  // Left endpoints: sums of 2 * 3^-j over a subset of j = 1..5.
  for (int m = 0; m < 32; ++m) {
    double x = 0.0;
    for (int j = 0; j < 5; ++j)
      if (m & (1 << (4 - j))) x += 2.0 / std::pow(3.0, j + 1);
    CHECK(mt[m] == doctest::Approx(x).epsilon(1e-15));
  }
  const auto deep = cantor_parameter_set(beta, 8);
  const auto box = dimension::box_dimension(deep, 0x1p-10, 0x1p-2);
  CHECK(box.slope == doctest::Approx(beta).epsilon(0.1 / beta));
  CHECK_THROWS_AS(cantor_parameter_set(1.5, 3), DomainError);
}

TEST_CASE("line space projection and lift") {
  Eigen::VectorXd v(2), x(2);
  v << 1.0, 0.0;
  x << 1.0, 1.0;
  const Line l = line_space_project(x, v);
  CHECK(l.x[0] == 0.0);
  CHECK(l.x[1] == 1.0);
  CHECK(line_space_project(v, v).x.norm() == 0.0);
  const Line again = line_space_project(l.x, l.v);
  CHECK((again.x - l.x).norm() == 0.0);

  Eigen::VectorXd up(2), origin = Eigen::VectorXd::Zero(2);
  up << 0.0, 1.0;
  const PointSet s = line_space_lift({Line{origin, up}}, -1.0, 1.0, 9);
  REQUIRE(s.size() == 9);
  for (std::size_t i = 0; i < s.size(); ++i) {
    CHECK(s[i][0] == 0.0);
    CHECK(s[i][1] == doctest::Approx(-1.0 + i * 0.25));
    CHECK(s[i][2] == 0.0);
    CHECK(s[i][3] == 1.0);
  }
  CHECK_THROWS_AS(line_space_lift({Line{x, v}}, 0, 1, 3), ValidationError);
}

TEST_CASE("lift cardinality and t = 0 projection identity") {
  Rng r(4);
  std::vector<Line> lines;
  for (int i = 0; i < 20; ++i) {
    const double a = r.uniform(0, 2 * std::numbers::pi);
    Eigen::VectorXd v(2), x(2);
    v << std::cos(a), std::sin(a);
    x << -v[1], v[0];
    x *= r.uniform(-1, 1);
    lines.push_back(Line{x, v});
  }
  CHECK(line_space_lift(lines, -1, 1, 33).size() == 20 * 33);
  const PointSet mid = line_space_lift(lines, 0.0, 0.0, 1);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const Line back = line_space_project(Eigen::Map<const Eigen::VectorXd>(mid[i].data(), 2),
                                         Eigen::Map<const Eigen::VectorXd>(mid[i].data() + 2, 2));
    CHECK((back.x - lines[i].x).norm() < 1e-15);
    CHECK((back.v - lines[i].v).norm() == 0.0);
  }
}

TEST_CASE("the lift map is Lipschitz on sampled pairs") {
  Rng r(6);
  const double R = 1.0;
  for (int t = 0; t < 2000; ++t) {
    const Eigen::VectorXd x = Eigen::VectorXd::Random(3) * R / std::sqrt(3.0);
    const Eigen::VectorXd y = Eigen::VectorXd::Random(3) * R / std::sqrt(3.0);
    Eigen::VectorXd v(3), w(3);
    for (int i = 0; i < 3; ++i) {
      v[i] = r.normal();
      w[i] = r.normal();
    }
    v.normalize();
    w.normalize();
    const Line a = line_space_project(x, v), b = line_space_project(y, w);
    const double lhs = (a.x - b.x).norm() + (a.v - b.v).norm();
    CHECK(lhs <= 2 * (x - y).norm() + (2 * R + 1) * (v - w).norm() + 1e-12);
  }
}

TEST_CASE("delta sets round-trip through the columnar format") {
  Rng r(1);
  DeltaSet s{random_points(r, 2, 10, 0, 1), 0.01, 0.7};
  const DeltaSet back = delta_set_from_table(delta_set_to_table(s));
  CHECK(back.delta == s.delta);
  CHECK(back.s == s.s);
  CHECK(back.points.coords == s.points.coords);
}

TEST_CASE("discretize_union on a line covered at one level") {
  using curves::Param;
  const auto fam = curves::line_family(2, {Param{{0.0}, {0.0}}});
  DyadicCover cover;
  cover.dim = 2;
  PointSet c(2);
  for (int i = 0; i <= 64; ++i) c.push(std::vector<double>{0.0, -1.0 + i / 32.0});
  cover.levels.push_back({5, c});
  const auto r = discretize_union(fam, cover, 1.25, 1.0, 1, 0.05);
  CHECK(r.k1 == 5);
  CHECK(r.curves == std::vector<std::size_t>{0});
  CHECK(r.a_prime.points.size() == 1);
  const raster::Mask m = r.s_prime.mask("S'");
  raster::RasterOptions ro;
  ro.mask = &m;
  const double h = r.delta / 4;
  CHECK(raster::tube_measure(fam, 0, r.delta, h, ro) == raster::tube_measure(fam, 0, r.delta, h));
  CHECK(r.intersection_constant > 0.0);
}

TEST_CASE("discretize_union pigeonholes to the level carrying every curve") {
  using curves::Param;
  std::vector<Param> ps;
  for (int i = 0; i < 8; ++i) ps.push_back(Param{{-0.7 + 0.2 * i}, {-0.7 + 0.2 * i}});
  const auto fam = curves::line_family(2, ps);
  DyadicCover cover;
  cover.dim = 2;
  PointSet coarse(2);
  coarse.push(std::vector<double>{0.9, 0.9});
  PointSet fine(2);
  for (const auto& p : ps)
    for (int i = 0; i <= 64; ++i) fine.push(std::vector<double>{p.y1[0], -1.0 + i / 32.0});
  cover.levels.push_back({3, coarse});
  cover.levels.push_back({5, fine});
  const double alpha = 1.9;
  CHECK(cover.weighted_sum(alpha + 0.05) <= 1.0);
  const auto r = discretize_union(fam, cover, alpha, 1.0, 1, 0.05);
  CHECK(r.k1 == 5);
  CHECK(check_delta_s(r.a_prime).ok);
  CHECK(r.count_constant > 0.0);
  CHECK(r.intersection_constant > 0.0);
  CHECK(r.mass_constant >= r.intersection_constant - 1e-12);
}

TEST_CASE("discretize_union names an uncovered curve") {
  using curves::Param;
  const auto fam = curves::line_family(2, {Param{{0.0}, {0.0}}, Param{{0.8}, {0.8}}});
  DyadicCover cover;
  cover.dim = 2;
  PointSet c(2);
  for (int i = 0; i <= 64; ++i) c.push(std::vector<double>{0.0, -1.0 + i / 32.0});
  cover.levels.push_back({5, c});
  CHECK_THROWS_AS(discretize_union(fam, cover, 1.25, 1.0, 1, 0.05), PipelineError);
}

}  // TEST_SUITE
