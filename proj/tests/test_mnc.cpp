#include <doctest.h>

#include <cmath>
#include <numbers>

#include "extremal/generators.hpp"
#include "extremal/jung.hpp"
#include "extremal/mnc.hpp"
#include "oracles.hpp"

using namespace extremal;

namespace {

PointSet two_tight_clusters() {
  // collinear triples: every intra-cluster distance is at most 0.1
  return PointSet::from_rows({{0.0, 0.0},
                              {0.05, 0.0},
                              {0.1, 0.0},
                              {2.0, 0.0},
                              {2.05, 0.0},
                              {2.1, 0.0}});
}

std::vector<std::size_t> part_sizes(const std::vector<std::size_t>& assign,
                                    std::size_t k) {
  std::vector<std::size_t> sizes(k, 0);
  for (auto part : assign) ++sizes[part];
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

} // namespace

TEST_CASE("exact covering radius on orthonormal frames") {
  const auto four = covering_radius(orthonormal_family(4), 2,
                                    ProfileMode::exact);
  CHECK(four.value ==
        doctest::Approx(std::numbers::sqrt2 / 2).epsilon(1e-12));
  CHECK(part_sizes(four.assignment, 2) == std::vector<std::size_t>{2, 2});

  const auto six = covering_radius(orthonormal_family(6), 2,
                                   ProfileMode::exact);
  CHECK(six.value ==
        doctest::Approx(std::sqrt(2.0 / 3.0)).epsilon(1e-12));
  CHECK(part_sizes(six.assignment, 2) == std::vector<std::size_t>{3, 3});
}

TEST_CASE("exact partition diameter") {
  const auto four = partition_diameter(orthonormal_family(4), 2,
                                       ProfileMode::exact);
  CHECK(four.value == std::sqrt(2.0));

  const auto clusters = partition_diameter(two_tight_clusters(), 2,
                                           ProfileMode::exact);
  CHECK(clusters.value == doctest::Approx(0.1).epsilon(1e-12));

  // one part per point
  const auto trivial = partition_diameter(orthonormal_family(5), 5,
                                          ProfileMode::exact);
  CHECK(trivial.value == 0.0);
  const auto cov_trivial =
      covering_radius(orthonormal_family(5), 5, ProfileMode::exact);
  CHECK(cov_trivial.value == 0.0);
}

TEST_CASE("exact cells match the balanced closed forms") {
  const struct {
    std::size_t m, k;
  } cells[] = {{6, 2}, {8, 2}, {9, 3}, {12, 3}};
  for (const auto cell : cells) {
    CAPTURE(cell.m);
    CAPTURE(cell.k);
    const auto pts = orthonormal_family(cell.m);
    const auto cov = covering_radius(pts, cell.k, ProfileMode::exact);
    const double closed =
        std::sqrt(1.0 - double(cell.k) / double(cell.m));
    CHECK(std::abs(cov.value - closed) <= 1e-12);
    const auto par = partition_diameter(pts, cell.k, ProfileMode::exact);
    CHECK(par.value == std::sqrt(2.0));
  }
}

TEST_CASE("exact mode agrees with the plain enumeration oracle") {
  const struct {
    std::size_t m, k;
  } cells[] = {{6, 2}, {8, 2}, {9, 3}};
  for (const auto cell : cells) {
    const auto pts = oracles::gaussian_cloud(cell.m, 3, 4000 + cell.m);
    CAPTURE(cell.m);
    CAPTURE(cell.k);
    const auto cov = covering_radius(pts, cell.k, ProfileMode::exact);
    CHECK(std::abs(cov.value - oracles::min_partition_exhaustive(
                                   pts, cell.k, true)) <= 1e-12);
    const auto par = partition_diameter(pts, cell.k, ProfileMode::exact);
    CHECK(std::abs(par.value - oracles::min_partition_exhaustive(
                                   pts, cell.k, false)) <= 1e-12);
  }
}

TEST_CASE("size caps and argument validation") {
  const auto big = oracles::gaussian_cloud(15, 3, 1);
  CHECK_THROWS_AS(covering_radius(big, 2, ProfileMode::exact), SizeCapError);
  const auto small = oracles::gaussian_cloud(10, 3, 2);
  CHECK_THROWS_AS(covering_radius(small, 5, ProfileMode::exact), SizeCapError);
  CHECK_THROWS_AS(covering_radius(small, 0, ProfileMode::greedy), DomainError);
  CHECK_THROWS_AS(covering_radius(small, 11, ProfileMode::greedy),
                  DomainError);
  // k == m bypasses the enumeration entirely
  CHECK(covering_radius(orthonormal_family(6), 6, ProfileMode::exact).value ==
        0.0);
}

TEST_CASE("greedy upper-bounds exact and the sandwich holds") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const auto pts = oracles::gaussian_cloud(9 + seed % 4, 2 + seed % 4,
                                             6000 + seed);
    const auto q = std::min<std::uint64_t>(pts.dim(), pts.size() - 1);
    for (std::size_t k : {std::size_t{2}, std::size_t{3}}) {
      CAPTURE(seed);
      CAPTURE(k);
      const auto cov_exact = covering_radius(pts, k, ProfileMode::exact);
      const auto cov_greedy = covering_radius(pts, k, ProfileMode::greedy);
      CHECK(cov_exact.value <= cov_greedy.value + 1e-12);

      const auto par_exact = partition_diameter(pts, k, ProfileMode::exact);
      const auto par_greedy = partition_diameter(pts, k, ProfileMode::greedy);
      CHECK(par_exact.value <= par_greedy.value + 1e-12);

      const std::pair<double, double> pairs[] = {
          {cov_exact.value, par_exact.value},
          {cov_greedy.value, par_greedy.value}};
      for (const auto& [rho, delta] : pairs) {
        CHECK(rho <= delta + 1e-9);
        CHECK(delta <= 2.0 * rho + 1e-9);
        CHECK(rho <= jung_constant(q) * delta + 1e-9);
      }
    }
  }
}

TEST_CASE("profiles over the orthonormal family match the closed forms") {
  GeneratorSpec spec;
  spec.family = "orthonormal";
  const std::vector<std::size_t> m_grid{8, 16};
  const std::vector<std::size_t> k_grid{2, 4};
  const auto profiles =
      mnc_profile(spec, m_grid, k_grid, ProfileMode::exact);
  REQUIRE(profiles.size() == 2);
  for (const auto& pair : profiles) {
    const double m = static_cast<double>(pair.m);
    REQUIRE(pair.covering.entries.size() == 2);
    for (std::size_t i = 0; i < 2; ++i) {
      const auto& cov = pair.covering.entries[i];
      const auto& par = pair.partition.entries[i];
      CHECK(std::abs(cov.value -
                     std::sqrt(1.0 - static_cast<double>(cov.k) / m)) <= 1e-9);
      CHECK(par.value == std::sqrt(2.0)); // any split leaves a sqrt(2) pair
    }
    // exact only fits within the caps; larger cells fall back, marked greedy
    const auto expected =
        pair.m <= 14 ? ProfileMode::exact : ProfileMode::greedy;
    CHECK(pair.covering.entries[0].mode == expected);
    // nonincreasing in k
    CHECK(pair.covering.entries[1].value <= pair.covering.entries[0].value);
    CHECK(pair.partition.entries[1].value <= pair.partition.entries[0].value);
  }
}

TEST_CASE("profiles of the equidistant family report gamma") {
  GeneratorSpec spec;
  spec.family = "example2";
  spec.params["gamma"] = 0.5;
  const std::vector<std::size_t> m_grid{32};
  const std::vector<std::size_t> k_grid{2, 8};
  const auto profiles =
      mnc_profile(spec, m_grid, k_grid, ProfileMode::greedy);
  REQUIRE(profiles.size() == 1);
  for (const auto& e : profiles[0].partition.entries) {
    CHECK(e.value == doctest::Approx(0.5).epsilon(1e-12));
  }
}

TEST_CASE("profile hits zero at k = m") {
  const auto pts = orthonormal_family(6);
  const std::vector<std::size_t> ks{2, 6};
  const auto pair = profile_point_set(pts, ks, ProfileMode::greedy);
  CHECK(pair.covering.entries.back().k == 6);
  CHECK(pair.covering.entries.back().value == 0.0);
  CHECK(pair.partition.entries.back().value == 0.0);
  // k beyond m is skipped
  const std::vector<std::size_t> over{2, 9};
  CHECK(profile_point_set(pts, over, ProfileMode::greedy)
            .covering.entries.size() == 1);
}

TEST_CASE("profile argument validation") {
  GeneratorSpec spec;
  spec.family = "nonsense";
  const std::vector<std::size_t> grid{2};
  CHECK_THROWS_AS(mnc_profile(spec, grid, grid, ProfileMode::greedy),
                  DomainError);
  spec.family = "orthonormal";
  CHECK_THROWS_AS(mnc_profile(spec, {}, grid, ProfileMode::greedy),
                  DomainError);
  CHECK_THROWS_AS(mnc_profile(spec, grid, {}, ProfileMode::greedy),
                  DomainError);
}

TEST_CASE("sphere slice of a fully cospherical set is everything") {
  const auto pts = orthonormal_family(5);
  const auto meb = min_enclosing_ball(pts);
  const auto slice = sphere_slice_mnc(pts, meb, 1e-7 * (1.0 + meb.radius));
  CHECK(!slice.empty);
  CHECK(slice.indices.size() == 5);
  const std::vector<std::size_t> ks{1, 2, 4, 5};
  const auto full = profile_point_set(pts, ks, ProfileMode::greedy);
  const auto sliced = sphere_slice_mnc(pts, meb, 1e-7, ks);
  REQUIRE(sliced.profile.entries.size() == full.partition.entries.size());
  for (std::size_t i = 0; i < full.partition.entries.size(); ++i) {
    CHECK(sliced.profile.entries[i].value == full.partition.entries[i].value);
  }
}

TEST_CASE("slice against the limit sphere") {
  // the basis-direction family keeps every norm strictly below 1: empty
  ChebyshevResult limit;
  const auto a1 = example1(16);
  limit.center.assign(a1.dim(), 0.0);
  limit.radius = 1.0;
  const auto empty = sphere_slice_mnc(a1, limit, 1e-9);
  CHECK(empty.empty);
  CHECK(empty.indices.empty());
  CHECK(empty.profile.entries.empty());

  // in the union, exactly the equidistant points sit on the sphere
  const double gamma = 0.3;
  const auto u = union_of({example1(8), example2(gamma, 8)});
  ChebyshevResult limit9;
  limit9.center.assign(u.dim(), 0.0);
  limit9.radius = 1.0;
  const auto slice = sphere_slice_mnc(u, limit9, 1e-9);
  REQUIRE(slice.indices.size() == 8);
  for (std::size_t i = 0; i < 8; ++i) {
    CHECK(slice.indices[i] == 8 + i);
  }
  for (const auto& e : slice.profile.entries) {
    if (e.k < 8) {
      CHECK(e.value == doctest::Approx(gamma).epsilon(1e-12));
    } else {
      CHECK(e.value == 0.0);
    }
  }
}
