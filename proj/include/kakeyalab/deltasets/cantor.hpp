#pragma once

#include "kakeyalab/deltasets/point_set.hpp"

namespace kl::deltasets {

/// Contraction ratio 2^(-1/beta) of the two-branch self-similar set of
/// dimension beta (0 for beta = 0).
double cantor_ratio(double beta);

/// Left endpoints of the 2^depth intervals of generation `depth` of the
/// two-branch Cantor set in [0, 1] with dimension beta, placed on the first
/// axis of R^ambient. beta = 0 gives the single point 0. When 1/r is an
/// integer the endpoints are computed exactly before a single rounding.
PointSet cantor_parameter_set(double beta, int depth, int ambient = 1);

/// Same endpoints as a plain list, sorted.
std::vector<double> cantor_points(double beta, int depth);

}  // namespace kl::deltasets
