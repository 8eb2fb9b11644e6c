#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <numbers>
#include <sstream>

#include "kakeyalab/curves/curve_family.hpp"
#include "kakeyalab/error.hpp"
#include "kakeyalab/raster/grid_io.hpp"
#include "kakeyalab/raster/rasterize.hpp"
#include "kakeyalab/raster/straight.hpp"
#include "kakeyalab/raster/tube_grid.hpp"
#include "kakeyalab/rng.hpp"
#include "oracles.hpp"

using namespace kl;
using namespace kl::raster;
using curves::Param;

TEST_SUITE("raster") {

TEST_CASE("a vertical tube in d = 2 has area 4 delta") {
  const auto f = curves::line_family(2, {Param{{0.1}, {0.1}}});
  const double delta = 0.125, h = 1.0 / 32;
  const double area = tube_measure(f, 0, delta, h);
  CHECK(area == doctest::Approx(0.5).epsilon(0.05));
  const TubeGrid g = rasterize_family(f, delta, h);
  CHECK(lp_norm(g, 1.0) == doctest::Approx(area));
}

TEST_CASE("empty parameter lists give an empty grid") {
  const auto f = curves::line_family(2, {Param{{0.1}, {0.1}}});
  const TubeGrid g = rasterize_tubes(f, {}, 0.125, 1.0 / 32);
  CHECK(g.occupied() == 0);
  CHECK(lp_norm(g, 1.0) == 0.0);
  CHECK(lp_norm(g, 2.0) == 0.0);
  CHECK(lp_norm(g, INFINITY) == 0.0);
  const curves::CurveFamily none(2, 4.0);
  CHECK(rasterize_family(none, 0.125, 1.0 / 32).mass() == 0.0);
}

TEST_CASE("counts add over tubes") {
  const auto f = curves::line_family(2, {Param{{-0.5}, {-0.5}}, Param{{0.5}, {0.5}}, Param{{0.5}, {0.5}}});
  const double delta = 0.125, h = 1.0 / 32;
  CHECK(rasterize_tubes(f, {0, 1}, delta, h).max_count() == 1);
  CHECK(rasterize_tubes(f, {1, 2}, delta, h).max_count() == 2);
}

TEST_CASE("lp norms: single tube, copies and crossing strips") {
  const double delta = 0.0625, h = delta / 8;
  const auto f = curves::line_family(2, {Param{{-0.5}, {0.5}}, Param{{0.5}, {-0.5}}});
  const TubeGrid one = rasterize_tubes(f, {0}, delta, h);
  CHECK(lp_norm(one, 1.0) == doctest::Approx(one.mass()));
  CHECK(lp_norm(one, INFINITY) == 1.0);

  const TubeGrid three = rasterize_tubes(f, {0, 0, 0}, delta, h);
  for (double p : {1.0, 1.5, 2.0, 3.0}) CHECK(lp_norm(three, p) == doctest::Approx(3.0 * lp_norm(one, p)).epsilon(1e-12));

  // Strips |x - a c| <= delta with a = +-1/2: |T| = 4 delta, |T1 ∩ T2| = 4 delta^2.
  const TubeGrid both = rasterize_tubes(f, {0, 1}, delta, h);
  const double expect = 4 * delta + 4 * delta + 2 * 4 * delta * delta;
  const double n2 = lp_norm(both, 2.0);
  CHECK(n2 * n2 == doctest::Approx(expect).epsilon(0.10));
  CHECK_THROWS_AS(lp_norm(both, 0.5), DomainError);
}

TEST_CASE("tube volume in d = 3 against a Monte Carlo oracle") {
  const auto f = curves::line_family(3, {Param{{0.2, -0.3}, {0.2, -0.3}}});
  const double delta = 0.125;
  const double mc = oracle::monte_carlo_volume(3, -1.0, 1.0, 2000000, [&](const oracle::Vec& x) {
    return std::hypot(x[0] - 0.2, x[1] + 0.3) <= delta;
  }, 17);
  CHECK(mc == doctest::Approx(2 * std::numbers::pi * delta * delta).epsilon(0.05));
  const double grid = tube_measure(f, 0, delta, delta / 4);
  CHECK(grid == doctest::Approx(mc).epsilon(0.10));
  const double half = tube_measure(f, 0, delta / 2, delta / 8);
  CHECK(half / grid == doctest::Approx(0.25).epsilon(0.15));
}

TEST_CASE("curved tube volume matches its analytic area") {
  const auto f = curves::parabola_family(2, {Param{{-0.3}, {0.2}}}, 0.6);
  const double delta = 0.0625;
  // Horizontal width 2 delta at every height, height range 2.
  CHECK(tube_measure(f, 0, delta, delta / 4) == doctest::Approx(4 * delta).epsilon(0.15));
}

TEST_CASE("enlarging delta never decreases a count") {
  Rng r(3);
  std::vector<Param> ps;
  for (int i = 0; i < 10; ++i) ps.push_back(Param{{r.uniform(-0.8, 0.8)}, {r.uniform(-0.8, 0.8)}});
  const auto f = curves::parabola_family(2, ps, 0.4);
  const double h = 1.0 / 128;
  const TubeGrid small = rasterize_family(f, 1.0 / 32, h);
  const TubeGrid large = rasterize_family(f, 1.0 / 16, h);
  for (std::size_t i = 0; i < small.occupied(); ++i) CHECK(large.at(small.indices()[i]) >= small.counts()[i]);
}

TEST_CASE("refining h does not increase the volume error of a slanted tube") {
  const auto f = curves::line_family(2, {Param{{-0.31}, {0.37}}});
  const double delta = 1.0 / 16;
  const double exact = 4 * delta;  // horizontal width times height
  const double e2 = std::abs(tube_measure(f, 0, delta, delta / 2) - exact);
  const double e8 = std::abs(tube_measure(f, 0, delta, delta / 8) - exact);
  CHECK(e8 <= e2 + 1e-12);
}

TEST_CASE("rasterization is independent of parameter order") {
  Rng r(5);
  std::vector<Param> ps;
  for (int i = 0; i < 30; ++i)
    ps.push_back(Param{{r.uniform(-0.8, 0.8), r.uniform(-0.8, 0.8)}, {r.uniform(-0.8, 0.8), r.uniform(-0.8, 0.8)}});
  const auto f = curves::parabola_family(3, ps, 0.3);
  std::vector<std::size_t> fwd, rev;
  for (std::size_t i = 0; i < f.size(); ++i) fwd.push_back(i);
  rev.assign(fwd.rbegin(), fwd.rend());
  const TubeGrid a = rasterize_tubes(f, fwd, 0.125, 1.0 / 32);
  const TubeGrid b = rasterize_tubes(f, rev, 0.125, 1.0 / 32);
  CHECK(a.indices() == b.indices());
  CHECK(a.counts() == b.counts());
}

TEST_CASE("restriction to a mask never increases the norm") {
  const auto f = curves::line_family(2, {Param{{-0.5}, {0.5}}, Param{{0.5}, {-0.5}}});
  const TubeGrid g = rasterize_family(f, 0.0625, 1.0 / 64);
  const Mask upper{"upper", [](const double* x) { return x[1] > 0.2; }};
  const TubeGrid r = g.restricted(upper);
  CHECK(r.mask_id() == "upper");
  CHECK(r.occupied() < g.occupied());
  for (double p : {1.0, 2.0, double(INFINITY)}) CHECK(lp_norm(r, p) <= lp_norm(g, p));
  RasterOptions ro;
  ro.mask = &upper;
  const TubeGrid direct = rasterize_family(f, 0.0625, 1.0 / 64, ro);
  CHECK(direct.indices() == r.indices());
}

TEST_CASE("the cell budget raises a resource error naming h") {
  CHECK_THROWS_AS(check_cell_budget(3, 0x1p-10, kDefaultCellBudget), ResourceError);
  CHECK_NOTHROW(check_cell_budget(3, 0x1p-8, kDefaultCellBudget));
  try {
    check_cell_budget(2, 0x1p-15, kDefaultCellBudget);
    FAIL("expected a resource error");
  } catch (const ResourceError& e) {
    CHECK(std::string(e.what()).find("h") != std::string::npos);
  }
  const auto f = curves::line_family(2, {Param{{0.0}, {0.0}}});
  CHECK_THROWS_AS(rasterize_family(f, 0.125, 0.125), DomainError);
}

TEST_CASE("grid coordinates and linear indices agree") {
  const TubeGrid g(3, 0.25);
  CHECK(g.per_axis() == 8);
  const std::vector<std::int64_t> c{1, 5, 7};
  const auto lin = g.linear(c);
  CHECK(lin == 1 + 8 * (5 + 8 * 7));
  CHECK(g.coords(lin) == c);
  double x[3];
  g.center(lin, x);
  CHECK(x[0] == -1 + 1.5 * 0.25);
  CHECK(x[2] == -1 + 7.5 * 0.25);
}

TEST_CASE("grid add and from_pairs sum duplicates") {
  TubeGrid a = TubeGrid::from_pairs(2, 0.5, {{3, 1}, {1, 2}, {3, 4}});
  CHECK(a.indices() == std::vector<std::uint64_t>{1, 3});
  CHECK(a.counts() == std::vector<std::uint32_t>{2, 5});
  TubeGrid b = TubeGrid::from_pairs(2, 0.5, {{0, 1}, {3, 1}});
  const TubeGrid c = add(a, b);
  CHECK(c.indices() == std::vector<std::uint64_t>{0, 1, 3});
  CHECK(c.counts() == std::vector<std::uint32_t>{1, 2, 6});
  CHECK_THROWS_AS(add(a, TubeGrid(2, 0.25)), DomainError);
  CHECK_THROWS_AS(a.append(2, 1), ConsistencyError);
}

TEST_CASE("straight tubes rasterize by centre membership") {
  Rng r(8);
  for (int t = 0; t < 10; ++t) {
    StraightTube tube;
    tube.a = Eigen::Vector3d(r.uniform(-0.3, 0.3), r.uniform(-0.3, 0.3), r.uniform(-0.3, 0.3));
    tube.u = Eigen::Vector3d(r.normal(), r.normal(), r.normal()).normalized();
    tube.half_length = r.uniform(0.3, 1.0);
    tube.radius = r.uniform(0.05, 0.2);
    const double h = 0.0625;
    const auto cells = straight_tube_cells(tube, h);
    const TubeGrid g(3, h);
    std::vector<std::uint64_t> brute;
    for (std::uint64_t lin = 0; lin < 32 * 32 * 32; ++lin) {
      Eigen::VectorXd x(3);
      g.center(lin, x.data());
      if (tube.contains(x)) brute.push_back(lin);
    }
    CHECK(cells == brute);
  }
}

TEST_CASE("straight incidence lists every tube at every cell") {
  std::vector<StraightTube> tubes;
  for (int i = 0; i < 3; ++i) {
    StraightTube t;
    t.a = Eigen::Vector3d::Zero();
    t.u = Eigen::Vector3d::Unit(i);
    t.radius = 0.2;
    tubes.push_back(t);
  }
  const auto inc = straight_incidence(tubes, 3, 0.0625);
  const TubeGrid g = rasterize_straight(tubes, 0.0625);
  CHECK(inc.grid.indices() == g.indices());
  for (std::size_t i = 0; i < g.occupied(); ++i) CHECK(inc.offsets[i + 1] - inc.offsets[i] == g.counts()[i]);
  CHECK(g.max_count() == 3);
}

TEST_CASE("attributed rasterization splits counts by class") {
  Rng r(2);
  std::vector<Param> ps;
  for (int i = 0; i < 12; ++i) ps.push_back(Param{{r.uniform(-0.8, 0.8)}, {r.uniform(-0.8, 0.8)}});
  const auto f = curves::line_family(2, ps);
  std::vector<std::size_t> all;
  for (std::size_t i = 0; i < f.size(); ++i) all.push_back(i);
  const CapOf by_sign = [](std::size_t, const Eigen::VectorXd& e) { return e[0] >= 0 ? 1u : 0u; };
  const auto ag = rasterize_attributed(f, all, 0.0625, 1.0 / 64, by_sign);
  const TubeGrid plain = rasterize_tubes(f, all, 0.0625, 1.0 / 64);
  CHECK(ag.grid.indices() == plain.indices());
  CHECK(ag.grid.counts() == plain.counts());
  for (std::size_t i = 0; i < plain.occupied(); ++i) {
    std::uint32_t s = 0;
    for (auto j = ag.offsets[i]; j < ag.offsets[i + 1]; ++j) {
      s += ag.cap_counts[j];
      CHECK(ag.caps[j] <= 1u);
    }
    CHECK(s == plain.counts()[i]);
  }
}

TEST_CASE("sparse and dense grid exports") {
  const auto f = curves::line_family(2, {Param{{-0.5}, {0.5}}, Param{{0.5}, {-0.5}}});
  const TubeGrid g = rasterize_family(f, 0.125, 1.0 / 32);
  std::vector<int> labels(g.occupied());
  for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = static_cast<int>(i % 3);
  const ColumnarTable t = grid_to_table(g, &labels);
  CHECK(t.rows() == g.occupied());
  CHECK(t.columns.back() == "label");
  const TubeGrid back = grid_from_table(t);
  CHECK(back.indices() == g.indices());
  CHECK(back.counts() == g.counts());
  CHECK(back.h() == g.h());

  const auto path = (std::filesystem::temp_directory_path() / "kl_grid_test.grid").string();
  write_grid(path, g);
  const TubeGrid file = read_grid(path);
  std::filesystem::remove(path);
  CHECK(file.counts() == g.counts());

  std::stringstream ss;
  write_dense(ss, g);
  std::string header;
  std::getline(ss, header);
  CHECK(header.rfind("#dense", 0) == 0);
  std::uint64_t total = 0, occupied = 0;
  for (int row = 0; row < 64; ++row)
    for (int col = 0; col < 64; ++col) {
      std::uint64_t v;
      ss >> v;
      total += v;
      occupied += v > 0;
    }
  std::uint64_t expect = 0;
  for (auto c : g.counts()) expect += c;
  CHECK(total == expect);
  CHECK(occupied == g.occupied());
}

}  // TEST_SUITE
