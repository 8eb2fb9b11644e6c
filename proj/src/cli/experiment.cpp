#include "kakeyalab/cli/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <set>

#include "kakeyalab/broadnarrow/partition.hpp"
#include "kakeyalab/curves/geodesic.hpp"
#include "kakeyalab/curves/io.hpp"
#include "kakeyalab/curves/metric_chart.hpp"
#include "kakeyalab/deltasets/cantor.hpp"
#include "kakeyalab/deltasets/discretize.hpp"
#include "kakeyalab/deltasets/frostman.hpp"
#include "kakeyalab/dimension/box_count.hpp"
#include "kakeyalab/kakeya/fit.hpp"
#include "kakeyalab/kakeya/multilinear.hpp"
#include "kakeyalab/kakeya/ratio.hpp"
#include "kakeyalab/raster/grid_io.hpp"
#include "kakeyalab/raster/rasterize.hpp"
#include "kakeyalab/sharpness/example.hpp"

namespace kl::cli {

namespace fs = std::filesystem;

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Resource: return 3;
    case ErrorKind::Consistency: return 4;
    default: return 2;
  }
}

curves::CurveFamily make_family(const std::string& name, int d, const std::vector<curves::Param>& params,
                                double bend) {
  if (name == "lines") return curves::line_family(d, params);
  if (name == "parabolas") return curves::parabola_family(d, params, bend);
  if (name.rfind("file:", 0) == 0) return curves::read_family(name.substr(5));
  if (name == "geodesic-euclidean")
    return curves::geodesic_chart_family(curves::MetricChart::euclidean(d), params).family;
  if (name == "geodesic-hyperbolic")
    return curves::geodesic_chart_family(curves::MetricChart::hyperbolic(d), params).family;
  if (name == "geodesic-perturbed")
    return curves::geodesic_chart_family(curves::MetricChart::perturbed(d), params).family;
  throw ValidationError("unknown family '" + name + "'");
}

namespace {

// Orthonormal frame of R^D whose first vector is the main parameter
// direction (1, ..., 1, -0.8, ..., -0.8) with mild per-coordinate weights.
std::vector<Eigen::VectorXd> parameter_frame(int d) {
  const int D = 2 * (d - 1);
  std::vector<Eigen::VectorXd> raw;
  Eigen::VectorXd v0(D);
  for (int i = 0; i < D; ++i) v0[i] = (i < d - 1 ? 1.0 : -0.8) * (1.0 + 0.1 * (i % (d - 1)));
  raw.push_back(v0);
  for (int j = 1; j < D; ++j) {
    Eigen::VectorXd v(D);
    for (int i = 0; i < D; ++i) v[i] = std::cos(1.3 * (i + 1) * (j + 1) + 0.4 * j);
    raw.push_back(v);
  }
  std::vector<Eigen::VectorXd> q;
  for (auto v : raw) {
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& b : q) v -= b.dot(v) * b;
    q.push_back(v.normalized());
  }
  return q;
}

int cantor_depth_for(double beta, double target) {
  if (beta == 0.0) return 0;
  const double r = deltasets::cantor_ratio(beta);
  int depth = 0;
  double len = 1.0;
  while (len > target && depth < 20) {
    len *= r;
    ++depth;
  }
  return depth;
}

deltasets::PointSet cantor_segment_points(int d, double beta, int depth, double spacing, int extra_dims) {
  const int D = 2 * (d - 1);
  const auto frame = parameter_frame(d);
  Eigen::VectorXd base = Eigen::VectorXd::Zero(D);
  for (int i = d - 1; i < D; ++i) base[i] = 0.1;
  const auto ts = deltasets::cantor_points(beta, depth);
  const int nw = extra_dims > 0 ? static_cast<int>(std::floor(0.5 / spacing)) + 1 : 1;
  deltasets::PointSet pts(D);
  std::vector<int> idx(extra_dims, 0);
  std::vector<double> p(D);
  for (double t : ts) {
    std::fill(idx.begin(), idx.end(), 0);
    while (true) {
      Eigen::VectorXd x = base + (t - 0.5) * frame[0];
      for (int j = 0; j < extra_dims; ++j) x += (-0.25 + idx[j] * spacing) * frame[1 + j];
      for (int i = 0; i < D; ++i) p[i] = x[i];
      pts.push(p);
      int j = 0;
      while (j < extra_dims && ++idx[j] == nw) idx[j++] = 0;
      if (j == extra_dims) break;
    }
  }
  return pts;
}

}  // namespace

deltasets::DeltaSet generic_parameter_set(int d, int k, double beta, double delta) {
  if (k < 1 || k > d - 1) throw DomainError("generic_parameter_set needs 1 <= k <= d-1");
  const int D = 2 * (d - 1);
  const auto pts = cantor_segment_points(d, beta, cantor_depth_for(beta, delta / 4), delta / 2, 2 * (k - 1));
  const auto cells = deltasets::DyadicCells::from_points(pts, delta, std::vector<double>(D, -1.0), true);
  return deltasets::frostman_extract(cells, 2.0 * (k - 1) + beta).set;
}

std::vector<curves::Param> to_params(const deltasets::DeltaSet& set, int d) {
  std::vector<curves::Param> out;
  for (std::size_t i = 0; i < set.points.size(); ++i) {
    const auto p = set.points[i];
    curves::Param y;
    y.y1.assign(p.begin(), p.begin() + (d - 1));
    y.y2.assign(p.begin() + (d - 1), p.end());
    out.push_back(std::move(y));
  }
  return out;
}

std::vector<std::vector<raster::StraightTube>> orthogonal_tube_families(int d, int k, int count,
                                                                        double delta, Rng& rng) {
  std::vector<std::vector<raster::StraightTube>> fams(k + 1);
  for (int j = 0; j <= k; ++j)
    for (int t = 0; t < count; ++t) {
      raster::StraightTube tube;
      tube.u = Eigen::VectorXd::Unit(d, j);
      tube.a = Eigen::VectorXd::Zero(d);
      for (int i = 0; i < d; ++i)
        if (i != j) tube.a[i] = rng.uniform(-4.0 * delta, 4.0 * delta);
      tube.half_length = 1.0;
      tube.radius = delta;
      fams[j].push_back(std::move(tube));
    }
  return fams;
}

namespace {

struct Emitter {
  const ExperimentConfig& cfg;
  std::string id;
  std::vector<ExperimentRecord> rows;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  void restart() { start = std::chrono::steady_clock::now(); }
  void operator()(const std::string& name, double value, double delta = 0.0, double h = 0.0) {
    ExperimentRecord r;
    r.run_id = id;
    r.kind = cfg.kind;
    r.d = cfg.d;
    r.k = cfg.k;
    r.beta = cfg.beta;
    r.delta = delta;
    r.h = h;
    r.rho = cfg.rho;
    r.seed = cfg.seed;
    r.metric_name = name;
    r.metric_value = value;
    if (cfg.record_wall_time)
      r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    rows.push_back(std::move(r));
  }
};

void run_curved_kakeya(const ExperimentConfig& c, Emitter& emit) {
  std::vector<kakeya::ScaleRecord> scales;
  for (double delta : c.deltas) {
    emit.restart();
    const double h = delta / c.h_ratio;
    kakeya::RatioResult r;
    if (c.family.rfind("file:", 0) == 0) {
      const auto fam = make_family(c.family, c.d, {});
      std::vector<std::size_t> all(fam.size());
      std::iota(all.begin(), all.end(), 0);
      r = kakeya::curved_kakeya_ratio(fam, all, delta, c.k, c.beta, h);
    } else {
      const auto a = generic_parameter_set(c.d, c.k, c.beta, delta);
      const auto fam = make_family(c.family, c.d, to_params(a, c.d), c.bend);
      r = kakeya::curved_kakeya_ratio(fam, a, delta, c.k, c.beta, h);
    }
    emit("tubes", static_cast<double>(r.tubes), delta, h);
    emit("numerator", r.numerator, delta, h);
    emit("volume_sum", r.volume_sum, delta, h);
    emit("delta_factor", r.delta_factor, delta, h);
    emit("p_prime", r.p_prime, delta, h);
    emit("ratio", r.ratio, delta, h);
    scales.push_back({delta, r.ratio});
  }
  if (scales.size() >= 3) {
    const auto fit = kakeya::exponent_fit(scales);
    emit("exponent_fit_slope", fit.slope);
    emit("exponent_fit_intercept", fit.intercept);
    if (fit.r2) emit("exponent_fit_r2", *fit.r2);
    emit("exponent_fit_degenerate", fit.degenerate ? 1.0 : 0.0);
  }
}

void run_mlk(const ExperimentConfig& c, Emitter& emit) {
  const Rng root(c.seed);
  double lo = 1e300, hi = 0.0;
  for (std::size_t i = 0; i < c.deltas.size(); ++i) {
    emit.restart();
    const double delta = c.deltas[i], h = delta / c.h_ratio;
    Rng rng = root.split(i);
    const auto fams = orthogonal_tube_families(c.d, c.k, c.tubes, delta, rng);
    const auto r = kakeya::multilinear_kakeya_integral(fams, delta, h);
    emit("integral", r.integral, delta, h);
    emit("normalized", r.normalized, delta, h);
    emit("cells", static_cast<double>(r.cells), delta, h);
    lo = std::min(lo, r.normalized);
    hi = std::max(hi, r.normalized);
  }
  if (lo > 0.0) emit("normalized_spread", hi / lo);
}

std::vector<curves::Param> random_params(int d, int n, Rng& rng) {
  std::vector<curves::Param> out;
  for (int i = 0; i < n; ++i) {
    curves::Param y;
    for (int j = 0; j < d - 1; ++j) y.y1.push_back(rng.uniform(-0.8, 0.8));
    for (int j = 0; j < d - 1; ++j) y.y2.push_back(rng.uniform(-0.8, 0.8));
    out.push_back(std::move(y));
  }
  return out;
}

struct BroadNarrowRun {
  raster::AttributedGrid grid;
  broadnarrow::BroadNarrowPartition part;
};

BroadNarrowRun broadnarrow_at(const ExperimentConfig& c, const curves::CurveFamily& fam,
                              const broadnarrow::CapCover& cover, double delta) {
  std::vector<std::size_t> all(fam.size());
  std::iota(all.begin(), all.end(), 0);
  auto grid = raster::rasterize_attributed(
      fam, all, delta, delta / c.h_ratio,
      [&](std::size_t, const Eigen::VectorXd& e) { return cover.cap_of(e); });
  broadnarrow::PartitionOptions po;
  po.p = c.k + c.beta == 1.0 ? 2.0 : (c.k + c.beta) / (c.k + c.beta - 1.0);
  auto part = broadnarrow::partition_broad_narrow(grid, cover, c.rho, c.k, po);
  return {std::move(grid), std::move(part)};
}

curves::CurveFamily broadnarrow_family(const ExperimentConfig& c) {
  if (c.family.rfind("file:", 0) == 0) return make_family(c.family, c.d, {});
  Rng rng = Rng(c.seed).split(0);
  return make_family(c.family, c.d, random_params(c.d, c.tubes, rng), c.bend);
}

void run_broadnarrow(const ExperimentConfig& c, Emitter& emit) {
  const auto fam = broadnarrow_family(c);
  const auto cover = broadnarrow::CapCover::build(c.d, broadnarrow::fine_cap_radius(c.d, c.rho));
  const auto coarse = broadnarrow::CapCover::build(c.d, c.rho);
  for (double delta : c.deltas) {
    emit.restart();
    const double h = delta / c.h_ratio;
    const auto run = broadnarrow_at(c, fam, cover, delta);
    const auto& p = run.part;
    emit("cap_cover_size", static_cast<double>(cover.size()), delta, h);
    emit("cap_overlap", cover.overlap(), delta, h);
    emit("broad_cells", static_cast<double>(p.broad), delta, h);
    emit("narrow_cells", static_cast<double>(p.narrow), delta, h);
    emit("broad_tuples", static_cast<double>(p.tuples.size()), delta, h);
    emit("broad_mass", p.broad_mass, delta, h);
    emit("chosen_tuple_mass", p.chosen_mass, delta, h);
    emit("pigeonhole_holds", p.pigeonhole_holds ? 1.0 : 0.0, delta, h);
    emit("min_retained_fraction", p.min_retained, delta, h);
    std::uint64_t worst = 0;
    int seen = 0;
    for (std::size_t i = 0; i < p.labels.size() && seen < 32; ++i)
      if (p.labels[i] == broadnarrow::kNarrow) {
        worst = std::max(worst, broadnarrow::caps_meeting(coarse, p.planes[i], c.rho));
        ++seen;
      }
    if (seen > 0) {
      emit("narrow_coarse_caps_max", static_cast<double>(worst), delta, h);
      emit("narrow_coarse_caps_normalized", static_cast<double>(worst) * std::pow(c.rho, c.k - 1), delta, h);
    }
  }
}

deltasets::PointSet boxdim_fixture(const ExperimentConfig& c) {
  if (c.fixture == "cantor")
    return deltasets::cantor_parameter_set(std::log(2.0) / std::log(3.0), c.depth, 1);
  deltasets::PointSet p(1);
  if (c.fixture == "point") {
    p.push(std::vector<double>{0.25});
    return p;
  }
  for (int i = 0; i < 1000; ++i) p.push(std::vector<double>{i / 999.0});
  return p;
}

void emit_box(Emitter& emit, const std::string& prefix, const dimension::BoxCountRecord& rec) {
  for (std::size_t i = 0; i < rec.scales.size(); ++i)
    emit(prefix + "cells", static_cast<double>(rec.counts[i]), 0.0, rec.scales[i]);
  emit(prefix + "slope", rec.slope);
  emit(prefix + "intercept", rec.intercept);
  if (rec.r2) emit(prefix + "r2", *rec.r2);
  emit(prefix + "residual_max", rec.residual_max);
}

void run_boxdim(const ExperimentConfig& c, Emitter& emit) {
  const auto pts = boxdim_fixture(c);
  emit("points", static_cast<double>(pts.size()));
  emit_box(emit, "", dimension::box_dimension(pts, c.h_min, c.h_max));
}

sharpness::SharpnessExample sharpness_for(const ExperimentConfig& c) {
  sharpness::SamplingSpec spec;
  spec.spacing = c.spacing;
  if (c.geometry == "sphere") return sharpness::sphere_example(c.d, c.k, c.beta, c.depth, spec);
  if (c.geometry == "hyperbolic") return sharpness::hyperbolic_example(c.d, c.k, c.beta, c.depth, spec);
  return sharpness::euclidean_example(c.d, c.k, c.beta, c.depth, spec);
}

void run_sharpness(const ExperimentConfig& c, Emitter& emit) {
  const auto ex = sharpness_for(c);
  const auto base = ex.base_dimension(c.h_min, c.h_max);
  const auto lift = ex.lift_dimension(c.h_min, c.h_max);
  emit_box(emit, "base_", base);
  emit_box(emit, "lift_", lift);
  emit("base_target", sharpness::base_target(c.k, c.beta));
  emit("lift_target", sharpness::lift_target(c.k, c.beta));
}

std::vector<deltasets::Line> lift_lines(const ExperimentConfig& c) {
  std::vector<deltasets::Line> lines;
  const int d = c.d;
  Eigen::VectorXd up = Eigen::VectorXd::Unit(d, d - 1);
  if (c.lift_set == "line") {
    lines.push_back({Eigen::VectorXd::Zero(d), up});
  } else if (c.lift_set == "cantor") {
    for (double t : deltasets::cantor_points(c.beta, c.depth)) {
      Eigen::VectorXd x = Eigen::VectorXd::Zero(d);
      x[0] = t;
      lines.push_back({x, up});
    }
  } else {
    const int n = 1 << std::min(c.depth + 4, 16);
    for (int i = 0; i < n; ++i) {
      const double th = 2.0 * M_PI * i / n;
      Eigen::VectorXd v = Eigen::VectorXd::Zero(d);
      v[0] = std::cos(th);
      v[1] = std::sin(th);
      lines.push_back({Eigen::VectorXd::Zero(d), v});
    }
  }
  return lines;
}

void run_lift(const ExperimentConfig& c, Emitter& emit) {
  dimension::LiftOptions lo;
  lo.h_min = c.h_min;
  lo.h_max = c.h_max;
  lo.samples = static_cast<int>(std::ceil(4.0 / c.h_min)) + 1;
  const auto r = dimension::lift_dimension_check(lift_lines(c), lo);
  emit_box(emit, "lines_", r.lines);
  emit_box(emit, "lift_", r.lift);
  emit("dim_a", r.dim_a);
  emit("dim_sa", r.dim_sa);
  emit("difference", r.difference);
}

struct PipelineRun {
  curves::CurveFamily family;
  deltasets::DiscretizeResult result;
  double alpha = 0.0;
};

PipelineRun pipeline_run(const ExperimentConfig& c) {
  if (c.k != 1) throw ValidationError("pipeline supports k = 1");
  const auto pts = cantor_segment_points(c.d, c.beta, c.depth, 1.0, 0);
  deltasets::DeltaSet all{pts, 0.0, c.beta};
  auto family = make_family(c.family, c.d, to_params(all, c.d), c.bend);
  deltasets::DyadicCover cover;
  cover.dim = c.d;
  for (double delta : c.deltas) {
    deltasets::DyadicCover::Level lvl;
    lvl.k = deltasets::dyadic_level(delta);
    lvl.centers = deltasets::PointSet(c.d);
    std::set<std::vector<std::int64_t>> seen;
    const int samples = static_cast<int>(std::ceil(4.0 / delta)) + 1;
    for (std::size_t y = 0; y < family.size(); ++y)
      for (int s = 0; s < samples; ++s) {
        const Eigen::VectorXd x = family.eval(y, -1.0 + 2.0 * s / (samples - 1));
        std::vector<std::int64_t> key(c.d);
        for (int i = 0; i < c.d; ++i) key[i] = std::llround(x[i] / delta);
        if (seen.insert(key).second) {
          std::vector<double> p(c.d);
          for (int i = 0; i < c.d; ++i) p[i] = key[i] * delta;
          lvl.centers.push(p);
        }
      }
    cover.levels.push_back(std::move(lvl));
  }
  // Smallest t with sum 2^{-k t} #B_k <= 1.
  double lo = 0.0, hi = 2.0 * c.d;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (cover.weighted_sum(mid) > 1.0 ? lo : hi) = mid;
  }
  const double alpha = hi + 1e-9 - c.eps;
  auto result = deltasets::discretize_union(family, cover, alpha, c.beta, c.k, c.eps);
  return {std::move(family), std::move(result), alpha};
}

void run_pipeline(const ExperimentConfig& c, Emitter& emit) {
  const auto run = pipeline_run(c);
  const auto& r = run.result;
  const double h = r.delta / c.h_ratio;
  emit("alpha", run.alpha, r.delta, h);
  emit("k1", r.k1, r.delta, h);
  emit("a_prime_size", static_cast<double>(r.a_prime.points.size()), r.delta, h);
  emit("count_constant", r.count_constant, r.delta, h);
  emit("intersection_constant", r.intersection_constant, r.delta, h);
  emit("mass_constant", r.mass_constant, r.delta, h);
  emit("frostman_c_impl", r.frostman_c_impl, r.delta, h);
  const auto ratio = kakeya::curved_kakeya_ratio(run.family, r.curves, r.delta, c.k, c.beta, h);
  emit("numerator", ratio.numerator, r.delta, h);
  emit("volume_sum", ratio.volume_sum, r.delta, h);
  emit("delta_factor", ratio.delta_factor, r.delta, h);
  emit("ratio", ratio.ratio, r.delta, h);
}

}  // namespace

std::vector<ExperimentRecord> run_experiment(const ExperimentConfig& config) {
  Emitter emit{config, config.run_id(), {}};
  if (config.kind == "curved-kakeya") run_curved_kakeya(config, emit);
  else if (config.kind == "mlk") run_mlk(config, emit);
  else if (config.kind == "broadnarrow") run_broadnarrow(config, emit);
  else if (config.kind == "boxdim") run_boxdim(config, emit);
  else if (config.kind == "sharpness") run_sharpness(config, emit);
  else if (config.kind == "lift") run_lift(config, emit);
  else if (config.kind == "pipeline") run_pipeline(config, emit);
  else throw ValidationError("unknown kind '" + config.kind + "'");
  return emit.rows;
}

RunOutput run_and_write(const ExperimentConfig& config) {
  RunOutput out;
  out.run_id = config.run_id();
  const auto rows = run_experiment(config);
  fs::create_directories(fs::path(config.out) / "runs");
  out.csv_path = (fs::path(config.out) / (out.run_id + ".csv")).string();
  out.config_path = (fs::path(config.out) / "runs" / (out.run_id + ".cfg")).string();
  write_csv_file(out.csv_path, rows);
  std::ofstream cfg(out.config_path, std::ios::binary);
  if (!cfg) throw IoError("cannot write " + out.config_path);
  cfg << config.normalized();
  out.rows = rows.size();
  return out;
}

std::vector<std::string> export_grid(const std::string& run_id, const std::string& out_dir) {
  const fs::path cfg_path = fs::path(out_dir) / "runs" / (run_id + ".cfg");
  if (!fs::exists(cfg_path)) throw ValidationError("no recorded run " + run_id + " under " + out_dir);
  const ExperimentConfig c = load_config(cfg_path.string());
  if (c.run_id() != run_id) throw ConsistencyError("recorded config does not hash to " + run_id);
  const double delta = c.deltas.back(), h = delta / c.h_ratio;
  raster::TubeGrid grid(c.d, h);
  std::vector<int> labels;
  bool labelled = false;
  if (c.kind == "curved-kakeya") {
    if (c.family.rfind("file:", 0) == 0) {
      grid = raster::rasterize_family(make_family(c.family, c.d, {}), delta, h);
    } else {
      const auto a = generic_parameter_set(c.d, c.k, c.beta, delta);
      grid = raster::rasterize_family(make_family(c.family, c.d, to_params(a, c.d), c.bend), delta, h);
    }
  } else if (c.kind == "mlk") {
    Rng rng = Rng(c.seed).split(c.deltas.size() - 1);
    std::vector<raster::StraightTube> all;
    for (auto& f : orthogonal_tube_families(c.d, c.k, c.tubes, delta, rng))
      all.insert(all.end(), f.begin(), f.end());
    grid = raster::rasterize_straight(all, h);
  } else if (c.kind == "broadnarrow") {
    const auto fam = broadnarrow_family(c);
    const auto cover = broadnarrow::CapCover::build(c.d, broadnarrow::fine_cap_radius(c.d, c.rho));
    auto run = broadnarrow_at(c, fam, cover, delta);
    grid = std::move(run.grid.grid);
    labels = run.part.labels;
    labelled = true;
  } else if (c.kind == "pipeline") {
    const auto run = pipeline_run(c);
    grid = raster::rasterize_tubes(run.family, run.result.curves, run.result.delta,
                                   run.result.delta / c.h_ratio);
  } else {
    throw ValidationError("kind " + c.kind + " has no grid to export");
  }
  fs::create_directories(fs::path(out_dir) / "grids");
  std::vector<std::string> paths;
  const std::string base = (fs::path(out_dir) / "grids" / run_id).string();
  raster::write_grid(base + ".grid", grid, labelled ? &labels : nullptr);
  paths.push_back(base + ".grid");
  if (c.d == 2) {
    raster::write_dense_file(base + ".dense", grid);
    paths.push_back(base + ".dense");
  }
  return paths;
}

const std::vector<FixtureDoc>& fixtures() {
  static const std::vector<FixtureDoc> f = {
      {"family", "lines", "straight segments joining (y1, -1) to (y2, 1)"},
      {"family", "parabolas", "segments bent by bend * (c^2 - 1) / 2"},
      {"family", "geodesic-euclidean", "shot geodesics of the flat chart"},
      {"family", "geodesic-hyperbolic", "shot geodesics of the half-space chart"},
      {"family", "geodesic-perturbed", "shot geodesics of a Gaussian bump metric"},
      {"boxdim", "cantor", "middle-thirds Cantor set, generation `depth`"},
      {"boxdim", "segment", "1000 points on [0, 1]"},
      {"boxdim", "point", "a single point"},
      {"lift", "line", "one vertical line"},
      {"lift", "cantor", "vertical lines through Cantor(beta) x {0}"},
      {"lift", "circle", "lines through the origin in every direction"},
      {"sharpness", "sphere", "great k-spheres rotated by a Cantor set of angles"},
      {"sharpness", "hyperbolic", "vertical k-planes of the half-space over a Cantor set"},
      {"sharpness", "euclidean", "parallel k-planes over a Cantor set"},
  };
  return f;
}

}  // namespace kl::cli
