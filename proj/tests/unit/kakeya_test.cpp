#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "kakeyalab/curves/curve_family.hpp"
#include "kakeyalab/deltasets/delta_set.hpp"
#include "kakeyalab/error.hpp"
#include "kakeyalab/kakeya/fit.hpp"
#include "kakeyalab/kakeya/multilinear.hpp"
#include "kakeyalab/kakeya/ratio.hpp"
#include "kakeyalab/kakeya/recursion.hpp"
#include "kakeyalab/kakeya/wedge.hpp"
#include "kakeyalab/raster/rasterize.hpp"
#include "kakeyalab/rng.hpp"
#include "oracles.hpp"

using namespace kl;
using namespace kl::kakeya;
using curves::Param;

namespace {

Eigen::VectorXd to_eigen(const oracle::Vec& v) { return Eigen::Map<const Eigen::VectorXd>(v.data(), v.size()); }

raster::StraightTube axis_tube(int d, int axis, double radius, const Eigen::VectorXd& offset) {
  raster::StraightTube t;
  t.a = offset;
  t.u = Eigen::VectorXd::Unit(d, axis);
  t.half_length = 1.0;
  t.radius = radius;
  return t;
}

// Lines through (a, 0) with slope s = +-1 in d = 2: tangents (+-1, 1)/sqrt 2.
curves::CurveFamily slope_family(double s, int n, double spread) {
  std::vector<Param> ps;
  for (int i = 0; i < n; ++i) {
    const double a = -spread + 2 * spread * (i + 0.5) / n;
    ps.push_back(Param{{a - s}, {a + s}});
  }
  return curves::line_family(2, ps);
}

}  // namespace

TEST_SUITE("kakeya") {

TEST_CASE("wedge volume examples") {
  Eigen::MatrixXd id = Eigen::MatrixXd::Identity(4, 3);
  CHECK(wedge_volume(id) == doctest::Approx(1.0).epsilon(1e-15));
  const Eigen::VectorXd e1 = Eigen::VectorXd::Unit(3, 0);
  CHECK(wedge_volume(std::vector<Eigen::VectorXd>{e1, Eigen::VectorXd::Unit(3, 1), e1}) <= 1e-12);
  Eigen::VectorXd diag(2);
  diag << 1.0, 1.0;
  diag.normalize();
  CHECK(wedge_volume(std::vector<Eigen::VectorXd>{Eigen::VectorXd::Unit(2, 0), diag}) ==
        doctest::Approx(std::sqrt(2.0) / 2).epsilon(1e-15));
  CHECK_THROWS_AS(wedge_volume(std::vector<Eigen::VectorXd>{e1, e1, e1, e1}), DomainError);
  CHECK_THROWS_AS(wedge_volume(std::vector<Eigen::VectorXd>{2 * e1}), DomainError);
}

TEST_CASE("wedge volume agrees with the orthonormalized-determinant oracle") {
  std::mt19937_64 g(1);
  for (int t = 0; t < 2000; ++t) {
    const int d = 2 + t % 3;
    const int m = 1 + static_cast<int>(g() % d);
    std::vector<oracle::Vec> u;
    std::vector<Eigen::VectorXd> e;
    for (int j = 0; j < m; ++j) {
      u.push_back(oracle::random_unit(g, d));
      e.push_back(to_eigen(u.back()));
    }
    const double w = wedge_volume(e);
    CHECK(std::abs(w - oracle::wedge(u)) <= 1e-10);
    // Permutation symmetry and monotonicity under removal.
    std::reverse(e.begin(), e.end());
    CHECK(std::abs(wedge_volume(e) - w) <= 1e-12);
    if (m > 1) {
      e.pop_back();
      CHECK(wedge_volume(e) >= w - 1e-12);
    }
  }
}

TEST_CASE("three orthogonal axis tubes: integral equals the core volume") {
  const double delta = 0.125, h = delta / 8;
  std::vector<std::vector<raster::StraightTube>> fams;
  for (int a = 0; a < 3; ++a) fams.push_back({axis_tube(3, a, delta, Eigen::VectorXd::Zero(3))});
  const auto r = multilinear_kakeya_integral(fams, delta, h);
  const double mc = oracle::monte_carlo_volume(3, -delta, delta, 2000000, [&](const oracle::Vec& x) {
    return std::hypot(x[1], x[2]) <= delta && std::hypot(x[0], x[2]) <= delta && std::hypot(x[0], x[1]) <= delta;
  }, 5);
  CHECK(mc == doctest::Approx(8 * (2 - std::sqrt(2.0)) * std::pow(delta, 3)).epsilon(0.02));
  CHECK(r.integral == doctest::Approx(mc).epsilon(0.10));
  CHECK(r.normalized == doctest::Approx(r.integral / std::pow(delta, 3)));
}

TEST_CASE("parallel families have zero multilinear integral") {
  const double delta = 0.125;
  std::vector<std::vector<raster::StraightTube>> fams(3);
  for (int j = 0; j < 3; ++j) {
    Eigen::VectorXd off = Eigen::VectorXd::Zero(3);
    off[0] = 0.05 * j;
    fams[j].push_back(axis_tube(3, 2, delta, off));
  }
  const auto r = multilinear_kakeya_integral(fams, delta, delta / 4);
  CHECK(r.integral == 0.0);
  CHECK(r.cells > 0);
}

TEST_CASE("duplicating every family scales the integral by 2^{(k+1)/k}") {
  Rng rng(3);
  const double delta = 0.125;
  std::vector<std::vector<raster::StraightTube>> fams(3), twice(3);
  for (int a = 0; a < 3; ++a)
    for (int i = 0; i < 4; ++i) {
      Eigen::VectorXd off(3);
      for (int c = 0; c < 3; ++c) off[c] = c == a ? 0.0 : rng.uniform(-0.3, 0.3);
      fams[a].push_back(axis_tube(3, a, delta, off));
      twice[a].push_back(fams[a].back());
      twice[a].push_back(fams[a].back());
    }
  const auto r1 = multilinear_kakeya_integral(fams, delta, delta / 4);
  const auto r2 = multilinear_kakeya_integral(twice, delta, delta / 4);
  CHECK(r1.integral > 0.0);
  CHECK(r2.integral == doctest::Approx(std::pow(2.0, 1.5) * r1.integral).epsilon(1e-12));
  // The normalization divides the duplication back out.
  CHECK(r2.normalized == doctest::Approx(r1.normalized).epsilon(1e-12));
}

TEST_CASE("an axis permutation of all tubes leaves the integral unchanged") {
  Rng rng(4);
  const double delta = 0.125;
  std::vector<std::vector<raster::StraightTube>> fams(3), perm(3);
  for (int a = 0; a < 3; ++a)
    for (int i = 0; i < 3; ++i) {
      raster::StraightTube t;
      t.a = Eigen::Vector3d(rng.uniform(-0.2, 0.2), rng.uniform(-0.2, 0.2), rng.uniform(-0.2, 0.2));
      t.u = Eigen::Vector3d(rng.normal(), rng.normal(), rng.normal()).normalized();
      t.radius = delta;
      fams[a].push_back(t);
      raster::StraightTube p = t;
      p.a = Eigen::Vector3d(t.a[2], t.a[0], t.a[1]);
      p.u = Eigen::Vector3d(t.u[2], t.u[0], t.u[1]);
      perm[a].push_back(p);
    }
  const auto r1 = multilinear_kakeya_integral(fams, delta, delta / 4);
  const auto r2 = multilinear_kakeya_integral(perm, delta, delta / 4);
  CHECK(r2.integral == doctest::Approx(r1.integral).epsilon(1e-9));
}

TEST_CASE("product_integral without weights") {
  const auto f = curves::line_family(2, {Param{{0.0}, {0.0}}});
  const auto g = raster::rasterize_family(f, 0.125, 1.0 / 32);
  const auto r = product_integral({g, g}, {1, 1}, 0.125);
  CHECK(r.integral == doctest::Approx(g.mass()));
}

TEST_CASE("curved_mlk_step cube count and straight-line families") {
  const double delta = 1.0 / 64;
  const auto fam = slope_family(1.0, 5, 0.4);
  const auto cubes = curved_mlk_step({fam}, delta);
  CHECK(cubes.size() == 64);  // ceil(8)^2
  for (const auto& q : cubes) {
    CHECK(q.side == doctest::Approx(0.25));
    for (std::size_t t = 0; t < q.tubes[0].size(); ++t) {
      const auto& tube = q.tubes[0][t];
      CHECK((tube.u - fam.tangent(q.sources[0][t], 0.0)).norm() < 1e-14);
      CHECK(tube.radius == doctest::Approx((1 + fam.regularity_bound()) * delta));
    }
  }
  const auto rep = check_containment({fam}, cubes, delta, 2000, 3);
  CHECK(rep.checked == 2000);
  CHECK(rep.failed == 0);
  CHECK(rep.max_axis_distance <= delta / std::sqrt(2.0) * (1 + 1e-9) + 1e-15);
}

TEST_CASE("parabola tube points lie in the straightened tubes") {
  const double delta = 0x1p-8;
  std::vector<Param> ps;
  for (int i = 0; i < 6; ++i) ps.push_back(Param{{-0.4 + 0.15 * i}, {0.3 - 0.1 * i}});
  const auto fam = curves::parabola_family(2, ps, 1.0);
  const auto cubes = curved_mlk_step({fam}, delta);
  CHECK(cubes.size() == 256);
  const auto rep = check_containment({fam}, cubes, delta, 5000, 11);
  CHECK(rep.checked == 5000);
  CHECK(rep.failed == 0);
  CHECK(rep.max_axis_distance <= (1 + fam.regularity_bound()) * delta);
}

TEST_CASE("recursion ladder length and depth bound") {
  const double delta = 0x1p-8;
  const auto ladder = recursion_ladder(delta, 4.0);
  CHECK(static_cast<double>(ladder.size()) <= 2 * std::log(std::log(256.0)) + 1);
  for (std::size_t i = 1; i < ladder.size(); ++i) {
    CHECK(ladder[i] > ladder[i - 1]);
    CHECK(ladder[i] < 1.0);
  }
  CHECK(2 * std::log(std::log(256.0)) + 1 == doctest::Approx(4.43).epsilon(0.01));
}

TEST_CASE("curved recursion on orthogonal line families") {
  const auto a = slope_family(1.0, 6, 0.3), b = slope_family(-1.0, 6, 0.3);
  RecursionOptions opts;
  opts.containment_samples = 1000;
  const auto tr = curved_mlk_recursion({a, b}, 0x1p-8, 0.5, opts);
  CHECK(tr.iterations + 1 == static_cast<int>(tr.scales.size()));
  CHECK(tr.iterations <= tr.depth_limit);
  CHECK(tr.min_sampled_wedge == doctest::Approx(1.0));
  for (std::size_t i = 1; i < tr.constants.size(); ++i) {
    const double q = tr.constants[i] / tr.constants[i - 1];
    CHECK(q <= 4.0);
    CHECK(q >= 0.25);
  }
  CHECK(tr.bound_holds);
  CHECK(tr.containment.failed == 0);
}

TEST_CASE("single-tube families: the level constant is the core area") {
  const auto a = slope_family(1.0, 1, 0.0), b = slope_family(-1.0, 1, 0.0);
  RecursionOptions opts;
  opts.h_ratio = 32.0;
  const auto tr = curved_mlk_recursion({a, b}, 0x1p-8, 0.5, opts);
  int checked = 0;
  for (std::size_t i = 0; i < tr.scales.size(); ++i) {
    const double s = tr.scales[i];
    if (s > 0.25) continue;
    // Horizontal slices |x -+ c| <= s meet in a square of area 2 s^2.
    CHECK(tr.constants[i] == doctest::Approx(2.0).epsilon(0.10));
    ++checked;
  }
  CHECK(checked >= 1);
}

TEST_CASE("parallel families fail the transversality check") {
  const auto a = slope_family(1.0, 4, 0.3), b = slope_family(1.0, 4, 0.2);
  CHECK_THROWS_AS(curved_mlk_recursion({a, b}, 0x1p-8, 0.5), TransversalityError);
  CHECK_THROWS_AS(curved_mlk_recursion({a}, 0x1p-8, 0.5), DomainError);
  CHECK_THROWS_AS(curved_mlk_recursion({a, b}, 0.5, 0.5), DomainError);
}

TEST_CASE("curved kakeya ratio examples") {
  const double delta = 1.0 / 32, h = delta / 4;
  const auto one = curves::line_family(2, {Param{{0.1}, {-0.2}}});
  const auto r1 = curved_kakeya_ratio(one, std::vector<std::size_t>{0}, delta, 1, 1.0, h);
  CHECK(r1.p == 2.0);
  CHECK(r1.ratio == doctest::Approx(1.0).epsilon(1e-12));

  std::vector<Param> ps;
  for (int i = 0; i < 8; ++i) ps.push_back(Param{{-0.8 + 0.2 * i}, {-0.8 + 0.2 * i}});
  const auto par = curves::line_family(2, ps);
  std::vector<std::size_t> all(8);
  for (std::size_t i = 0; i < 8; ++i) all[i] = i;
  const auto r2 = curved_kakeya_ratio(par, all, delta, 1, 1.0, h);
  CHECK(r2.ratio == 1.0);

  const auto cross = curves::line_family(2, {Param{{-0.5}, {0.5}}, Param{{0.5}, {-0.5}}, Param{{0.0}, {0.0}}});
  const auto r3 = curved_kakeya_ratio(cross, std::vector<std::size_t>{0, 1, 2}, delta, 1, 0.0, h);
  CHECK(std::isinf(r3.p));
  CHECK(r3.ratio == 3.0);
  CHECK(r3.delta_factor == 1.0);
}

TEST_CASE("disjoint tubes with k = 2 have ratio at most 1") {
  const double delta = 1.0 / 16;
  std::vector<Param> ps;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) ps.push_back(Param{{-0.6 + 0.6 * i, -0.6 + 0.6 * j}, {-0.6 + 0.6 * i, -0.6 + 0.6 * j}});
  const auto fam = curves::line_family(3, ps);
  std::vector<std::size_t> all(ps.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  for (double beta : {0.0, 0.5, 1.0}) {
    const auto r = curved_kakeya_ratio(fam, all, delta, 2, beta, delta / 4);
    CHECK(r.ratio <= 1.0 + 1e-12);
    CHECK(r.ratio == doctest::Approx(std::pow(delta, 1.0 / (2 + beta))).epsilon(1e-12));
  }
}

TEST_CASE("curved kakeya ratio validates its inputs") {
  const auto fam = curves::line_family(2, {Param{{0.0}, {0.0}}, Param{{0.01}, {0.01}}});
  CHECK_THROWS_AS(curved_kakeya_ratio(fam, std::vector<std::size_t>{0}, 0.0625, 1, 1.5, 1.0 / 64), DomainError);
  CHECK_THROWS_AS(curved_kakeya_ratio(fam, std::vector<std::size_t>{0}, 0.0625, 2, 1.0, 1.0 / 64), DomainError);
  deltasets::DeltaSet close;
  close.points = deltasets::PointSet(2, {0.0, 0.0, 0.01, 0.01});
  close.delta = 0.0625;
  close.s = 1.0;
  CHECK_THROWS_AS(curved_kakeya_ratio(fam, close, 0.0625, 1, 1.0, 1.0 / 64), ValidationError);
  deltasets::DeltaSet ok;
  ok.points = deltasets::PointSet(2, {0.0, 0.0});
  ok.delta = 0.0625;
  ok.s = 1.0;
  CHECK(curved_kakeya_ratio(fam, ok, 0.0625, 1, 1.0, 1.0 / 64).tubes == 1);
}

TEST_CASE("least squares and exponent fits") {
  const auto flat = exponent_fit({{0.5, 2.0}, {0.25, 2.0}, {0.125, 2.0}});
  CHECK(flat.slope == doctest::Approx(0.0));
  CHECK(flat.degenerate);
  CHECK_FALSE(flat.r2.has_value());

  std::vector<ScaleRecord> pw;
  for (int j = 2; j <= 9; ++j) {
    const double d = std::ldexp(1.0, -j);
    pw.push_back({d, std::pow(1.0 / d, 0.5)});
  }
  const auto fit = exponent_fit(pw);
  CHECK(std::abs(fit.slope - 0.5) <= 1e-12);
  REQUIRE(fit.r2.has_value());
  CHECK(*fit.r2 == doctest::Approx(1.0));

  CHECK_THROWS_AS(exponent_fit({{0.5, 1.0}, {0.25, 2.0}}), InsufficientDataError);
  CHECK_THROWS_AS(exponent_fit({{0.5, 1.0}, {0.5, 2.0}, {0.25, 2.0}}), InsufficientDataError);
  CHECK_THROWS_AS(exponent_fit({{0.5, 1.0}, {0.25, -2.0}, {0.125, 2.0}}), DomainError);

  const auto ls = least_squares({0, 1, 2, 3}, {1, 3, 5, 7});
  CHECK(ls.slope == doctest::Approx(2.0));
  CHECK(ls.intercept == doctest::Approx(1.0));
  CHECK(oracle::slope({0, 1, 2, 3}, {1, 3, 5, 7}) == doctest::Approx(ls.slope));
}

}  // TEST_SUITE
