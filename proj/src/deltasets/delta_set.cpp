#include "kakeyalab/deltasets/delta_set.hpp"

#include <cmath>
#include <limits>

#include "kakeyalab/deltasets/kd_tree.hpp"
#include "kakeyalab/error.hpp"

namespace kl::deltasets {

std::vector<double> dyadic_radii(double delta, double diameter) {
  std::vector<double> r{delta};
  while (r.back() < diameter) r.push_back(r.back() * 2.0);
  return r;
}

namespace {

// Total order used to pick one witness regardless of thread scheduling.
bool tighter(const BallWitness& a, const BallWitness& b) {
  const double ra = static_cast<double>(a.count) / a.bound;
  const double rb = static_cast<double>(b.count) / b.bound;
  if (ra != rb) return ra > rb;
  if (a.center != b.center) return a.center < b.center;
  return a.radius < b.radius;
}

}  // namespace

DeltaCheck check_delta_s(const PointSet& points, double delta, double s, double constant) {
  if (!(delta > 0.0) || !(s >= 0.0) || !(constant > 0.0))
    throw DomainError("check_delta_s needs delta > 0, s >= 0 and a positive constant");
  DeltaCheck out;
  out.slack = std::pow(2.0, s);
  const std::size_t n = points.size();
  if (n == 0) return out;

  const KdTree tree(points);
  const std::vector<double> radii = dyadic_radii(delta, points.diameter_bound());
  const double sep = delta * (1.0 - kSeparationTolerance);
  std::vector<double> bounds(radii.size());
  for (std::size_t j = 0; j < radii.size(); ++j)
    bounds[j] = constant * std::pow(radii[j] / delta, s);

  std::size_t first_close = std::numeric_limits<std::size_t>::max();
  BallWitness best{0, radii[0], 0, bounds[0]};
  bool have_best = false;
  bool violated = false;

#pragma omp parallel
  {
    std::size_t local_close = std::numeric_limits<std::size_t>::max();
    BallWitness local{0, radii[0], 0, bounds[0]};
    bool have_local = false;
    bool local_violated = false;
#pragma omp for schedule(static)
    for (std::size_t i = 0; i < n; ++i) {
      if (i < local_close && tree.count_open_ball(points[i], sep) > 1) local_close = i;
      for (std::size_t j = 0; j < radii.size(); ++j) {
        // Counts never exceed n, so larger bounds cannot be violated or tight.
        if (bounds[j] >= static_cast<double>(n) && j > 0) break;
        const BallWitness w{i, radii[j], tree.count_open_ball(points[i], radii[j]), bounds[j]};
        if (static_cast<double>(w.count) > w.bound) local_violated = true;
        if (!have_local || tighter(w, local)) {
          local = w;
          have_local = true;
        }
      }
    }
#pragma omp critical
    {
      first_close = std::min(first_close, local_close);
      violated = violated || local_violated;
      if (have_local && (!have_best || tighter(local, best))) {
        best = local;
        have_best = true;
      }
    }
  }

  if (first_close != std::numeric_limits<std::size_t>::max()) {
    out.separated = false;
    std::size_t other = first_close;
    tree.for_each_in_ball(points[first_close], sep, false, [&](std::size_t q) {
      if (q != first_close && (other == first_close || q < other)) other = q;
    });
    out.close_pair = std::make_pair(first_close, other);
  }
  out.witness = best;
  out.ok = out.separated && !violated;
  return out;
}

ColumnarTable delta_set_to_table(const DeltaSet& set) {
  return points_to_table(set.points, "delta-set",
                         {{"delta", format_real(set.delta)}, {"s", format_real(set.s)}});
}

DeltaSet delta_set_from_table(const ColumnarTable& table) {
  if (table.kind != "delta-set") throw ValidationError("expected a delta-set table, got " + table.kind);
  return {points_from_table(table), table.meta_double("delta"), table.meta_double("s")};
}

}  // namespace kl::deltasets
