#include <doctest.h>

#include <cmath>
#include <numbers>

#include "kakeyalab/deltasets/cantor.hpp"
#include "kakeyalab/dimension/box_count.hpp"
#include "kakeyalab/error.hpp"
#include "kakeyalab/rng.hpp"
#include "oracles.hpp"

using namespace kl;
using namespace kl::dimension;
using deltasets::PointSet;

namespace {

const double kCantorDim = std::log(2.0) / std::log(3.0);

PointSet segment(int n, int dim) {
  PointSet p(dim);
  std::vector<double> x(dim, 0.0);
  for (int i = 0; i < n; ++i) {
    x[0] = (i + 0.5) / n;
    p.push(x);
  }
  return p;
}

std::vector<deltasets::Line> lift_set(const std::string& kind, int d) {
  std::vector<deltasets::Line> lines;
  const Eigen::VectorXd up = Eigen::VectorXd::Unit(d, d - 1);
  if (kind == "line") {
    lines.push_back({Eigen::VectorXd::Zero(d), up});
  } else if (kind == "cantor") {
    for (double t : deltasets::cantor_points(kCantorDim, 7)) {
      Eigen::VectorXd x = Eigen::VectorXd::Zero(d);
      x[0] = t;
      lines.push_back({x, up});
    }
  } else {
    const int n = 2048;
    for (int i = 0; i < n; ++i) {
      Eigen::VectorXd v = Eigen::VectorXd::Zero(d);
      v[0] = std::cos(2 * std::numbers::pi * i / n);
      v[1] = std::sin(2 * std::numbers::pi * i / n);
      lines.push_back({Eigen::VectorXd::Zero(d), v});
    }
  }
  return lines;
}

}  // namespace

TEST_SUITE("dimension") {

TEST_CASE("a single point has dimension 0") {
  const PointSet p(2, {0.3, 0.7});
  const auto r = box_dimension(p, 0x1p-10, 0x1p-1);
  CHECK(r.slope == doctest::Approx(0.0).epsilon(1e-12));
  for (auto c : r.counts) CHECK(c == 1);
}

TEST_CASE("points on a segment have dimension 1") {
  const auto r = box_dimension(segment(1000, 2), 0x1p-8, 0x1p-1);
  CHECK(std::abs(r.slope - 1.0) <= 0.15);
  CHECK(r.scales.size() == 8);
  CHECK(r.fit_begin == 1);
  CHECK(r.fit_end == 7);
  REQUIRE(r.r2.has_value());
  CHECK(*r.r2 > 0.99);
}

TEST_CASE("middle-thirds Cantor set") {
  const auto p = deltasets::cantor_parameter_set(kCantorDim, 8);
  const auto r = box_dimension(p, 0x1p-12, 0x1p-1);
  CHECK(std::abs(r.slope - 0.6309) <= 0.1);
}

TEST_CASE("box counting needs three scales") {
  const PointSet p(1, {0.1, 0.2});
  CHECK_THROWS_AS(box_dimension(p, 0.25, 0.5), InsufficientDataError);
  CHECK_NOTHROW(box_dimension(p, 0.125, 0.5));
}

TEST_CASE("counts are monotone across dyadic refinements") {
  Rng rng(6);
  PointSet p(3);
  for (int i = 0; i < 3000; ++i) {
    const double x[3] = {rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform() * rng.uniform()};
    p.push(x);
  }
  const auto r = box_dimension(p, 0x1p-7, 0x1p-1);
  for (std::size_t i = 1; i < r.counts.size(); ++i) {
    CHECK(r.counts[i] >= r.counts[i - 1]);
    CHECK(r.counts[i] <= 8 * r.counts[i - 1]);
    CHECK(r.scales[i] == r.scales[i - 1] / 2);
    CHECK(count_cells(p, r.scales[i]) == r.counts[i]);
  }
}

TEST_CASE("a product with a segment adds one") {
  const auto c = deltasets::cantor_points(kCantorDim, 7);
  PointSet base(2), prod(2);
  for (double x : c) {
    const double a[2] = {x, 0.0};
    base.push(a);
    for (int j = 0; j < 512; ++j) {
      const double b[2] = {x, (j + 0.5) / 512};
      prod.push(b);
    }
  }
  const auto r0 = box_dimension(base, 0x1p-8, 0x1p-1);
  const auto r1 = box_dimension(prod, 0x1p-8, 0x1p-1);
  CHECK(r1.slope - r0.slope == doctest::Approx(1.0).epsilon(0.05));
  for (std::size_t i = 0; i < r0.counts.size(); ++i) CHECK(r1.counts[i] >= r0.counts[i]);
}

TEST_CASE("counts grow with the set") {
  Rng rng(2);
  PointSet a(2), b(2);
  for (int i = 0; i < 500; ++i) {
    const double x[2] = {rng.uniform(), rng.uniform()};
    a.push(x);
    b.push(x);
    const double y[2] = {rng.uniform(-1, 0), rng.uniform()};
    b.push(y);
  }
  for (double h : {0.5, 0.125, 1.0 / 64}) CHECK(count_cells(b, h) >= count_cells(a, h));
}

TEST_CASE("streaming counter matches the batch count") {
  Rng rng(9);
  PointSet p(2);
  BoxCounter bc(2, 0x1p-9, 0x1p-1);
  for (int i = 0; i < 5000; ++i) {
    const double t = rng.uniform();
    const double x[2] = {t, t * t - 0.5};
    p.push(x);
    bc.add(x);
  }
  CHECK(bc.points() == 5000);
  const auto s = bc.finish();
  const auto r = box_dimension(p, 0x1p-9, 0x1p-1);
  CHECK(s.counts == r.counts);
  CHECK(s.slope == r.slope);
  CHECK(s.slope == doctest::Approx(oracle::slope(
      [&] { oracle::Vec v; for (std::size_t i = s.fit_begin; i < s.fit_end; ++i) v.push_back(-std::log(s.scales[i])); return v; }(),
      [&] { oracle::Vec v; for (std::size_t i = s.fit_begin; i < s.fit_end; ++i) v.push_back(std::log(double(s.counts[i]))); return v; }())));
}

TEST_CASE("ends are kept on request") {
  const auto r = box_dimension(segment(1000, 1), 0x1p-8, 0x1p-1, BoxCountOptions{false});
  CHECK(r.fit_begin == 0);
  CHECK(r.fit_end == r.scales.size());
}

TEST_CASE("lifting lines to line space adds one dimension") {
  LiftOptions lo;
  lo.h_min = 0x1p-7;
  lo.h_max = 0x1p-1;
  lo.samples = 4 * 128 + 1;
  for (const char* kind : {"line", "cantor", "circle"}) {
    CAPTURE(kind);
    const auto r = lift_dimension_check(lift_set(kind, 3), lo);
    CHECK(std::abs(r.difference - 1.0) <= 0.2);
    CHECK(r.difference == doctest::Approx(r.dim_sa - r.dim_a));
  }
  const auto line = lift_dimension_check(lift_set("line", 2), lo);
  CHECK(line.dim_a == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("lift rejects lines that are not in normal form") {
  Eigen::VectorXd x(2), v(2);
  x << 1.0, 0.0;
  v << 1.0, 0.0;
  CHECK_THROWS_AS(lift_dimension_check({{x, v}}), ValidationError);
}

}  // TEST_SUITE
