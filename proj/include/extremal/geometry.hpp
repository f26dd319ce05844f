#pragma once

#include "extremal/kernels.hpp"
#include "extremal/point_set.hpp"

namespace extremal {

/// Largest pairwise distance; 0 for a singleton. Exact O(m^2 d) scan.
double diameter(const PointSet& a);

/// Index pair attaining the diameter, lowest indices on ties.
kernels::FarthestPair diametral_pair(const PointSet& a);

/// Dense pairwise distance matrix: zero diagonal, symmetric, row-major.
std::vector<double> distance_matrix(const PointSet& a);

/// Farthest point of `a` from `c` (lowest index on ties).
/// Throws DomainError on dimension mismatch.
kernels::Farthest farthest_from(const PointSet& a, std::span<const double> c);

} // namespace extremal
