#include <doctest.h>

#include <limits>

#include "extremal/kernels.hpp"
#include "extremal/point_set.hpp"
#include "oracles.hpp"

using namespace extremal;

// The OpenMP kernels must agree with the serial reference bit-for-bit,
// including tie-breaks, for any thread count.
TEST_CASE("parallel kernels match the serial reference bitwise") {
  for (std::size_t m : {std::size_t{1}, std::size_t{2}, std::size_t{7},
                        std::size_t{64}, std::size_t{300}}) {
    for (std::size_t d : {std::size_t{1}, std::size_t{3}, std::size_t{17}}) {
      const auto pts = oracles::gaussian_cloud(m, d, 1000 * m + d);
      CAPTURE(m);
      CAPTURE(d);

      const auto pp = kernels::max_pairwise_distance(pts);
      const auto ps = kernels::serial::max_pairwise_distance(pts);
      CHECK(pp.distance == ps.distance);
      CHECK(pp.first == ps.first);
      CHECK(pp.second == ps.second);

      CHECK(kernels::distance_matrix(pts) ==
            kernels::serial::distance_matrix(pts));

      const std::vector<double> center(d, 0.125);
      const auto fp = kernels::farthest_from(pts, center);
      const auto fs = kernels::serial::farthest_from(pts, center);
      CHECK(fp.distance == fs.distance);
      CHECK(fp.index == fs.index);

      std::vector<double> a(m, std::numeric_limits<double>::infinity());
      std::vector<double> b = a;
      kernels::update_min_squared_distance(pts, pts.point(0), a);
      kernels::serial::update_min_squared_distance(pts, pts.point(0), b);
      CHECK(a == b);
    }
  }
}

TEST_CASE("ties break to the lowest index in both variants") {
  // four corners of a square: two diagonals tie for the diameter
  const auto square =
      PointSet::from_rows({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  const auto pp = kernels::max_pairwise_distance(square);
  const auto ps = kernels::serial::max_pairwise_distance(square);
  CHECK(pp.first == 0);
  CHECK(pp.second == 3);
  CHECK(ps.first == 0);
  CHECK(ps.second == 3);

  const std::vector<double> center{0.5, 0.5};
  CHECK(kernels::farthest_from(square, center).index == 0);
  CHECK(kernels::serial::farthest_from(square, center).index == 0);
}

TEST_CASE("repeat calls are deterministic") {
  const auto pts = oracles::gaussian_cloud(200, 9, 5);
  const auto a = kernels::distance_matrix(pts);
  const auto b = kernels::distance_matrix(pts);
  CHECK(a == b);
}
