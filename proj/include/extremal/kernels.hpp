#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace extremal {
class PointSet;
}

namespace extremal::kernels {

struct Farthest {
  std::size_t index = 0;
  double distance = 0.0;
};

struct FarthestPair {
  std::size_t first = 0;
  std::size_t second = 0;
  double distance = 0.0;
};

/// Every kernel, serial or parallel, computes pairwise terms through this
/// one routine, so matching entries are bit-identical across variants.
inline double squared_distance(std::span<const double> a,
                               std::span<const double> b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double diff = a[i] - b[i];
    acc += diff * diff;
  }
  return acc;
}

double distance(std::span<const double> a, std::span<const double> b);

// OpenMP-parallel kernels. Per-element values land in arrays and the
// reductions run serially in index order, so results (including tie-breaks,
// always lowest index) are bit-identical for any thread count.

/// Max pairwise distance and the first index pair attaining it.
FarthestPair max_pairwise_distance(const PointSet& pts);

/// Dense m-by-m distance matrix, row-major.
std::vector<double> distance_matrix(const PointSet& pts);

/// Argmax of ||x_i - c||. `scratch` is resized to m and reused.
Farthest farthest_from(const PointSet& pts, std::span<const double> center,
                       std::vector<double>& scratch);
Farthest farthest_from(const PointSet& pts, std::span<const double> center);

/// min_sq[i] = min(min_sq[i], ||x_i - added||^2); the farthest-point
/// traversal step shared by the greedy extractors and seeders.
void update_min_squared_distance(const PointSet& pts,
                                 std::span<const double> added,
                                 std::vector<double>& min_sq);

/// Serial reference implementations, kept for tests and the benchmark.
namespace serial {
FarthestPair max_pairwise_distance(const PointSet& pts);
std::vector<double> distance_matrix(const PointSet& pts);
Farthest farthest_from(const PointSet& pts, std::span<const double> center);
void update_min_squared_distance(const PointSet& pts,
                                 std::span<const double> added,
                                 std::vector<double>& min_sq);
} // namespace serial

} // namespace extremal::kernels
