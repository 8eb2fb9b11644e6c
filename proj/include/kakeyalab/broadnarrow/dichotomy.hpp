#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "kakeyalab/broadnarrow/subspace.hpp"

namespace kl::broadnarrow {

struct CapCount {
  std::uint64_t cap = 0;
  std::uint64_t count = 0;
  bool operator==(const CapCount&) const = default;
};

/// Caps with 1000 * (#caps present) * count >= total count, in input order.
/// Exact integer arithmetic.
std::vector<CapCount> significant_caps(const std::vector<CapCount>& counts);

struct Pigeonhole {
  std::vector<CapCount> caps;  // retained class, input order
  int level = 0;               // floor(log2 count) of the class
  std::uint64_t retained = 0;
  std::uint64_t total = 0;
  double fraction() const { return total ? double(retained) / double(total) : 0.0; }
};

/// Keeps the dyadic class [2^j, 2^{j+1}) of largest total count (the higher
/// class on ties).
Pigeonhole dyadic_pigeonhole(const std::vector<CapCount>& significant);

/// rho^d / (1000 d).
double fine_cap_radius(int d, double rho);

enum class Case { Broad, Narrow };

struct DichotomyResult {
  Case kind = Case::Narrow;
  /// Broad: k+1 indices into the centre list. Narrow: the greedy's picks.
  std::vector<std::size_t> tuple;
  double wedge = 0.0;
  Subspace h;               // Narrow only, dimension k
  std::size_t inside = 0;   // Narrow only: caps with tau ⊂ N_rho(H)
  std::size_t total = 0;
  bool exhaustive = false;  // Broad found by the exhaustive search
};

struct DichotomyOptions {
  /// Up to this many caps, every (k+1)-tuple is tried before the greedy.
  std::size_t exhaustive_limit = 16;
};

/// Broad when some (k+1)-tuple of centres has wedge >= (999/1000) rho^k,
/// Narrow when a k-plane H has at least half the caps inside N_rho(H).
/// The certificate is re-verified; ConsistencyError if that fails.
DichotomyResult bg_dichotomy(const std::vector<Eigen::VectorXd>& centers, double cap_radius,
                             double rho, int k, const DichotomyOptions& opts = {});

/// Throws ConsistencyError unless the certificate holds.
void verify_certificate(const DichotomyResult& r, const std::vector<Eigen::VectorXd>& centers,
                        double cap_radius, double rho, int k);

}  // namespace kl::broadnarrow
