#include "extremal/kernels.hpp"

#include <cmath>

#include "extremal/point_set.hpp"

// Straight-line reference versions of the parallel kernels. Tests assert
// bit-identical agreement; the benchmark compares throughput.

namespace extremal::kernels::serial {

FarthestPair max_pairwise_distance(const PointSet& pts) {
  const std::size_t m = pts.size();
  if (m < 2) {
    return {0, 0, 0.0};
  }
  FarthestPair out{0, 1, -1.0};
  for (std::size_t i = 0; i + 1 < m; ++i) {
    const auto pi = pts.point(i);
    for (std::size_t j = i + 1; j < m; ++j) {
      const double d2 = squared_distance(pi, pts.point(j));
      if (d2 > out.distance) {
        out = {i, j, d2};
      }
    }
  }
  out.distance = std::sqrt(out.distance);
  return out;
}

std::vector<double> distance_matrix(const PointSet& pts) {
  const std::size_t m = pts.size();
  std::vector<double> matrix(m * m, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    const auto pi = pts.point(i);
    for (std::size_t j = i + 1; j < m; ++j) {
      const double d = std::sqrt(squared_distance(pi, pts.point(j)));
      matrix[i * m + j] = d;
      matrix[j * m + i] = d;
    }
  }
  return matrix;
}

Farthest farthest_from(const PointSet& pts, std::span<const double> center) {
  Farthest out{0, squared_distance(pts.point(0), center)};
  for (std::size_t i = 1; i < pts.size(); ++i) {
    const double d2 = squared_distance(pts.point(i), center);
    if (d2 > out.distance) {
      out = {i, d2};
    }
  }
  out.distance = std::sqrt(out.distance);
  return out;
}

void update_min_squared_distance(const PointSet& pts,
                                 std::span<const double> added,
                                 std::vector<double>& min_sq) {
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const double d2 = squared_distance(pts.point(i), added);
    if (d2 < min_sq[i]) {
      min_sq[i] = d2;
    }
  }
}

} // namespace extremal::kernels::serial
