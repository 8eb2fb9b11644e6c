#include <doctest.h>

#include <cmath>
#include <cstring>
#include <sstream>
#include <vector>

#include "kakeyalab/columnar.hpp"
#include "kakeyalab/error.hpp"
#include "kakeyalab/reduce.hpp"
#include "kakeyalab/rng.hpp"
#include "kakeyalab/simd/kernels.hpp"

using namespace kl;

TEST_SUITE("core") {

TEST_CASE("rng streams are reproducible and splits are independent of consumption") {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
  Rng c(42);
  const Rng s0 = Rng(42).split(3);
  for (int i = 0; i < 17; ++i) c.next();
  Rng s1 = c.split(3);
  Rng s0c = s0;
  for (int i = 0; i < 10; ++i) CHECK(s0c.next() == s1.next());
  CHECK(Rng(42).split(3).next() != Rng(42).split(4).next());
}

TEST_CASE("rng distributions stay in range") {
  Rng r(7);
  double mean = 0.0, sq = 0.0;
  const int n = 20000;
  for (int i = 0; i < n; ++i) {
    const double u = r.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    CHECK(r.below(5) < 5u);
    const double z = r.normal();
    mean += z;
    sq += z * z;
  }
  CHECK(std::abs(mean / n) < 0.05);
  CHECK(std::abs(sq / n - 1.0) < 0.05);
}

TEST_CASE("ordered_sum matches a sequential block sum") {
  const std::size_t n = 100003;
  auto f = [](std::size_t i) { return 1.0 / (1.0 + static_cast<double>(i)); };
  double expect = 0.0;
  for (std::size_t b = 0; b < n; b += 4096) {
    double s = 0.0;
    for (std::size_t i = b; i < std::min(n, b + 4096); ++i) s += f(i);
    expect += s;
  }
  CHECK(ordered_sum(n, f) == expect);
  CHECK(ordered_sum(0, f) == 0.0);
}

TEST_CASE("columnar tables round-trip exactly") {
  ColumnarTable t;
  t.kind = "sample";
  t.meta = {{"n", "2"}, {"delta", "0.125"}};
  t.columns = {"i", "x"};
  t.integer_column = {true, false};
  t.values = {0, 0.1, 1, -1.0 / 3.0, 2, 1e-300};
  std::stringstream ss;
  write_columnar(ss, t);
  CHECK(ss.str().rfind(kColumnarMagic, 0) == 0);
  const ColumnarTable back = read_columnar(ss);
  CHECK(back.kind == "sample");
  CHECK(back.meta_int("n") == 2);
  CHECK(back.meta_double("delta") == 0.125);
  REQUIRE(back.rows() == 3);
  for (std::size_t i = 0; i < t.values.size(); ++i) CHECK(back.values[i] == t.values[i]);
  CHECK_THROWS_AS(back.meta_value("missing"), ValidationError);
}

TEST_CASE("columnar reader rejects a bad magic line") {
  std::stringstream ss("#something else\n#kind x\n#meta\n#columns a\n1\n");
  CHECK_THROWS_AS(read_columnar(ss), Error);
}

TEST_CASE("error kinds carry names") {
  const ValidationError e("bad");
  CHECK(e.kind() == ErrorKind::Validation);
  CHECK(std::string(to_string(ErrorKind::Resource)).size() > 0);
}

}  // TEST_SUITE

TEST_SUITE("simd") {

namespace {

std::vector<double> random_row(Rng& r, std::size_t n, double lo, double hi) {
  std::vector<double> v(n);
  for (double& x : v) x = r.uniform(lo, hi);
  return v;
}

}  // namespace

TEST_CASE("isa names parse and the scalar table is always available") {
  CHECK(simd::parse_isa("scalar") == simd::Isa::Scalar);
  CHECK(simd::parse_isa("avx2") == simd::Isa::Avx2);
  CHECK_FALSE(simd::parse_isa("neon").has_value());
  CHECK(simd::is_supported(simd::Isa::Scalar));
  const simd::Isa before = simd::active_isa();
  simd::set_active_isa(simd::Isa::Scalar);
  CHECK(&simd::kernels() == &simd::kernels_for(simd::Isa::Scalar));
  simd::set_active_isa(before);
  if (!simd::is_supported(simd::Isa::Avx2)) CHECK_THROWS_AS(simd::set_active_isa(simd::Isa::Avx2), DomainError);
}

TEST_CASE("avx2 kernels are bit-identical to the scalar reference") {
  if (!simd::is_supported(simd::Isa::Avx2)) {
    MESSAGE("AVX2 not available; equivalence skipped");
    return;
  }
  const auto& s = simd::kernels_for(simd::Isa::Scalar);
  const auto& v = simd::kernels_for(simd::Isa::Avx2);
  Rng r(2024);
  // Lengths cover empty rows, pure tails and full vectors.
  for (std::size_t n : {0u, 1u, 3u, 4u, 5u, 7u, 8u, 31u, 64u, 257u, 1000u}) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto xs = random_row(r, n, -1.0, 1.0);
      const double center = r.uniform(-1, 1), off = r.uniform(0, 0.01), rad = r.uniform(0, 0.05);
      std::vector<std::uint32_t> c1(n, 3), c2(n, 3);
      s.accumulate_ball_row(xs.data(), n, center, off, rad, c1.data());
      v.accumulate_ball_row(xs.data(), n, center, off, rad, c2.data());
      CHECK(c1 == c2);

      const double a0 = r.uniform(-1, 1), u0 = r.uniform(-1, 1), rest = r.uniform(0, 0.02),
                   along = r.uniform(-0.5, 0.5), hl = r.uniform(0.1, 1.0);
      std::fill(c1.begin(), c1.end(), 0);
      std::fill(c2.begin(), c2.end(), 0);
      s.accumulate_segment_row(xs.data(), n, a0, u0, rest, along, rad, hl, c1.data());
      v.accumulate_segment_row(xs.data(), n, a0, u0, rest, along, rad, hl, c2.data());
      CHECK(c1 == c2);

      for (std::size_t dims : {1u, 2u, 3u, 5u}) {
        std::vector<std::vector<double>> cols;
        std::vector<const double*> ptr;
        std::vector<double> ctr(dims);
        for (std::size_t j = 0; j < dims; ++j) {
          cols.push_back(random_row(r, n, -2, 2));
          ptr.push_back(cols.back().data());
          ctr[j] = r.uniform(-1, 1);
        }
        std::vector<double> o1(n), o2(n);
        s.squared_distances(ptr.data(), dims, n, ctr.data(), o1.data());
        v.squared_distances(ptr.data(), dims, n, ctr.data(), o2.data());
        CHECK(std::memcmp(o1.data(), o2.data(), n * sizeof(double)) == 0);
      }

      std::vector<std::int32_t> q1(n), q2(n);
      const double inv_h = std::ldexp(1.0, static_cast<int>(r.below(12)));
      s.quantize(xs.data(), n, -1.0, inv_h, q1.data());
      v.quantize(xs.data(), n, -1.0, inv_h, q2.data());
      CHECK(q1 == q2);
    }
  }
}

TEST_CASE("quantize floors negative offsets") {
  const auto& s = simd::kernels_for(simd::Isa::Scalar);
  const double xs[] = {-1.5, -1.0, -0.999, 0.0, 0.25};
  std::int32_t q[5];
  s.quantize(xs, 5, -1.0, 4.0, q);
  CHECK(q[0] == -2);
  CHECK(q[1] == 0);
  CHECK(q[2] == 0);
  CHECK(q[3] == 4);
  CHECK(q[4] == 5);
}

TEST_CASE("ball row kernel counts the closed ball") {
  const auto& s = simd::kernels();
  const double xs[] = {0.0, 0.5, 1.0, 1.5};
  std::uint32_t c[4] = {0, 0, 0, 0};
  s.accumulate_ball_row(xs, 4, 0.5, 0.0, 0.25, c);
  CHECK(c[0] == 1);
  CHECK(c[1] == 1);
  CHECK(c[2] == 1);
  CHECK(c[3] == 0);
}

}  // TEST_SUITE
