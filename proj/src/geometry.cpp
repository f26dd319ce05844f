#include "extremal/geometry.hpp"

namespace extremal {

double diameter(const PointSet& a) {
  return kernels::max_pairwise_distance(a).distance;
}

kernels::FarthestPair diametral_pair(const PointSet& a) {
  return kernels::max_pairwise_distance(a);
}

std::vector<double> distance_matrix(const PointSet& a) {
  return kernels::distance_matrix(a);
}

kernels::Farthest farthest_from(const PointSet& a, std::span<const double> c) {
  if (c.size() != a.dim()) {
    throw DomainError("farthest_from: center dimension " +
                      std::to_string(c.size()) + " does not match point set "
                      "dimension " + std::to_string(a.dim()));
  }
  return kernels::farthest_from(a, c);
}

} // namespace extremal
