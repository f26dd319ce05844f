#include "extremal/kernels.hpp"

#include <cmath>

#include "extremal/point_set.hpp"

// Parallel scans write per-element results into arrays; the argmax/argmin
// reductions then run serially in index order, so the output (value and
// lowest-index tie-break) does not depend on the thread count.

namespace extremal::kernels {

double distance(std::span<const double> a, std::span<const double> b) {
  return std::sqrt(squared_distance(a, b));
}

FarthestPair max_pairwise_distance(const PointSet& pts) {
  const std::size_t m = pts.size();
  if (m < 2) {
    return {0, 0, 0.0};
  }
  std::vector<double> row_best(m, -1.0);
  std::vector<std::size_t> row_arg(m, 0);
#pragma omp parallel for schedule(dynamic, 8) if (m >= 128)
  for (long long ii = 0; ii < static_cast<long long>(m) - 1; ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    const auto pi = pts.point(i);
    double best = -1.0;
    std::size_t arg = i + 1;
    for (std::size_t j = i + 1; j < m; ++j) {
      const double d2 = squared_distance(pi, pts.point(j));
      if (d2 > best) {
        best = d2;
        arg = j;
      }
    }
    row_best[i] = best;
    row_arg[i] = arg;
  }
  FarthestPair out{0, 1, -1.0};
  for (std::size_t i = 0; i + 1 < m; ++i) {
    if (row_best[i] > out.distance) {
      out = {i, row_arg[i], row_best[i]};
    }
  }
  out.distance = std::sqrt(out.distance);
  return out;
}

std::vector<double> distance_matrix(const PointSet& pts) {
  const std::size_t m = pts.size();
  std::vector<double> matrix(m * m, 0.0);
#pragma omp parallel for schedule(static) if (m >= 64)
  for (long long ii = 0; ii < static_cast<long long>(m); ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    const auto pi = pts.point(i);
    for (std::size_t j = i + 1; j < m; ++j) {
      const double d = std::sqrt(squared_distance(pi, pts.point(j)));
      matrix[i * m + j] = d;
    }
  }
  // mirror below the diagonal
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      matrix[i * m + j] = matrix[j * m + i];
    }
  }
  return matrix;
}

Farthest farthest_from(const PointSet& pts, std::span<const double> center,
                       std::vector<double>& scratch) {
  const std::size_t m = pts.size();
  scratch.resize(m);
#pragma omp parallel for schedule(static) if (m >= 512)
  for (long long ii = 0; ii < static_cast<long long>(m); ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    scratch[i] = squared_distance(pts.point(i), center);
  }
  Farthest out{0, scratch[0]};
  for (std::size_t i = 1; i < m; ++i) {
    if (scratch[i] > out.distance) {
      out = {i, scratch[i]};
    }
  }
  out.distance = std::sqrt(out.distance);
  return out;
}

Farthest farthest_from(const PointSet& pts, std::span<const double> center) {
  std::vector<double> scratch;
  return farthest_from(pts, center, scratch);
}

void update_min_squared_distance(const PointSet& pts,
                                 std::span<const double> added,
                                 std::vector<double>& min_sq) {
  const std::size_t m = pts.size();
#pragma omp parallel for schedule(static) if (m >= 512)
  for (long long ii = 0; ii < static_cast<long long>(m); ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    const double d2 = squared_distance(pts.point(i), added);
    if (d2 < min_sq[i]) {
      min_sq[i] = d2;
    }
  }
}

} // namespace extremal::kernels
