#pragma once

#include <cstdint>
#include <vector>

#include "kakeyalab/broadnarrow/cap_cover.hpp"
#include "kakeyalab/broadnarrow/dichotomy.hpp"
#include "kakeyalab/raster/rasterize.hpp"

namespace kl::broadnarrow {

enum Label : int { kOutside = 0, kBroad = 1, kNarrow = 2 };

struct PartitionOptions {
  double p = 2.0;  // exponent of the pigeonhole mass
  DichotomyOptions dichotomy;
};

struct BroadNarrowPartition {
  /// Per occupied cell of the grid, in grid order.
  std::vector<int> labels;
  /// Index into tuples for broad cells, -1 otherwise.
  std::vector<std::int64_t> tuple_of;
  /// Distinct broad tuples as sorted cap ids, in first-seen cell order.
  std::vector<std::vector<std::uint64_t>> tuples;
  /// Tuple carrying the most L^p mass, -1 without broad cells.
  std::int64_t chosen = -1;
  /// sum f^p h^d over the broad cells and over those of the chosen tuple.
  double broad_mass = 0.0;
  double chosen_mass = 0.0;
  /// broad_mass <= #tuples * chosen_mass.
  bool pigeonhole_holds = true;
  std::size_t broad = 0, narrow = 0;
  /// Smallest retained fraction of the dyadic pigeonhole over cells.
  double min_retained = 1.0;
  /// Per narrow cell, its k-plane (empty matrix elsewhere).
  std::vector<Subspace> planes;
};

/// Classifies every occupied cell: significant caps, dyadic pigeonhole,
/// then bg_dichotomy on the retained cap centres.
BroadNarrowPartition partition_broad_narrow(const raster::AttributedGrid& grid, const CapCover& caps,
                                            double rho, int k, const PartitionOptions& opts = {});

/// #{caps of the cover meeting N_rho(H)}: centre within rho + r.
/// ResourceError above max_scan caps.
std::uint64_t caps_meeting(const CapCover& cover, const Subspace& h, double rho,
                           std::uint64_t max_scan = std::uint64_t{1} << 24);

}  // namespace kl::broadnarrow
