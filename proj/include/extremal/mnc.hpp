#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "extremal/chebyshev.hpp"
#include "extremal/generators.hpp"
#include "extremal/point_set.hpp"

namespace extremal {

enum class ProfileMode { exact, greedy };
const char* to_string(ProfileMode m);

struct ExactCaps {
  std::size_t max_points = 14;
  std::size_t max_parts = 4;
};

struct GreedyClusterOptions {
  int restarts = 8;
  int iteration_cap = 200;
};

struct ClusterResult {
  double value = 0.0;                  // rho or delta
  std::vector<std::size_t> assignment; // point index -> part id (< k)
  ProfileMode mode = ProfileMode::greedy;
};

// Optimal (or greedy) k-ball covering radius: minimum over partitions of the
// set into at most k parts of the largest per-part minimum-enclosing-ball
// radius (ball centers are unrestricted, so the optimal k-ball cover induces
// such a partition). Exact mode enumerates restricted-growth strings with
// memoized per-subset costs and strict pruning; it requires m and k within
// the caps (SizeCapError otherwise). Greedy mode: farthest-point seeded
// restarts, nearest-center reassignment with per-part ball centers, then a
// deterministic move descent; 8 restarts, best kept.
ClusterResult covering_radius(const PointSet& a, std::size_t k,
                              ProfileMode mode, const ExactCaps& caps = {},
                              const GreedyClusterOptions& greedy = {});

/// Same scheme with the max part diameter as the objective.
ClusterResult partition_diameter(const PointSet& a, std::size_t k,
                                 ProfileMode mode, const ExactCaps& caps = {},
                                 const GreedyClusterOptions& greedy = {});

struct ProfileEntry {
  std::size_t k = 0;
  double value = 0.0;
  ProfileMode mode = ProfileMode::greedy; // mode actually used for the cell
};

struct CoveringProfile {
  std::size_t m = 0;
  std::vector<ProfileEntry> entries; // rho per k, nonincreasing
};

struct PartitionProfile {
  std::size_t m = 0;
  std::vector<ProfileEntry> entries; // delta per k, nonincreasing
};

struct ProfilePair {
  std::size_t m = 0;
  CoveringProfile covering;
  PartitionProfile partition;
};

// Builds the family at each m in m_grid, scales it by 1/family_limit_radius
// so the limit object has circumradius 1, and computes both profiles over
// k_grid (cells with k > m are skipped; exact cells over the caps fall back
// to greedy and are marked so). Greedy cells reuse the best assignments from
// smaller k, which keeps the profiles nonincreasing in k.
std::vector<ProfilePair> mnc_profile(const GeneratorSpec& family,
                                     std::span<const std::size_t> m_grid,
                                     std::span<const std::size_t> k_grid,
                                     ProfileMode mode,
                                     const ExactCaps& caps = {},
                                     const GreedyClusterOptions& greedy = {});

/// Profile of a single already-built set (used by mnc_profile and the CLI).
ProfilePair profile_point_set(const PointSet& a,
                              std::span<const std::size_t> k_grid,
                              ProfileMode mode, const ExactCaps& caps = {},
                              const GreedyClusterOptions& greedy = {});

struct SphereSlice {
  bool empty = false;
  std::vector<std::size_t> indices; // points within tol of the sphere
  PartitionProfile profile;
};

// Restricts `a` to the points x with | ||x - center|| - radius | <= tol and
// computes the partition profile of that slice. The reference sphere is
// taken from `ref` as given (typically a solved certificate, or a family's
// limit sphere); it is not re-validated. Empty slice -> empty profile with
// the emptiness flag set.
SphereSlice sphere_slice_mnc(const PointSet& a, const ChebyshevResult& ref,
                             double tol,
                             std::span<const std::size_t> k_grid = {},
                             ProfileMode mode = ProfileMode::greedy,
                             const ExactCaps& caps = {},
                             const GreedyClusterOptions& greedy = {});

} // namespace extremal
