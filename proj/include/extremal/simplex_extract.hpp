#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "extremal/point_set.hpp"

namespace extremal {

/// p+1 vertex indices whose pairwise distances are all >= threshold.
struct SimplexCertificate {
  std::vector<std::size_t> vertex_indices; // ascending, distinct
  std::uint64_t p = 0;
  double threshold = 0.0;
  double min_edge = 0.0; // actual minimum pairwise distance among vertices
};

enum class FailureMode { greedy_exhausted, proven_nonexistent };

struct ExtractionFailure {
  FailureMode mode = FailureMode::greedy_exhausted;
  std::size_t best_size = 0; // largest vertex set found (exact: max clique)
};

struct ExtractionOutcome {
  std::variant<SimplexCertificate, ExtractionFailure> result;

  bool ok() const noexcept {
    return std::holds_alternative<SimplexCertificate>(result);
  }
  const SimplexCertificate& certificate() const {
    return std::get<SimplexCertificate>(result);
  }
  const ExtractionFailure& failure() const {
    return std::get<ExtractionFailure>(result);
  }
};

struct GreedyExtractOptions {
  /// Try every index as seed up to this size; beyond it, seed with the two
  /// endpoints of a diametral pair.
  std::size_t all_seed_limit = 512;
};

// Consecutive selection: grow from a seed by repeatedly taking the point
// whose minimum distance to the chosen set is largest (ties to lowest
// index), stopping when that minimum would fall below the threshold. The
// first seed reaching p+1 vertices wins. Sound but not complete.
ExtractionOutcome extract_greedy(const PointSet& a, double threshold,
                                 std::uint64_t p,
                                 const GreedyExtractOptions& opts = {});

struct ExactExtractOptions {
  std::size_t size_cap = 64;
};

// Exact oracle: branch-and-bound clique search (greedy-coloring bound) on
// the threshold graph (edge iff distance >= threshold). Returns a
// certificate or proves nonexistence, reporting the maximum clique size.
// Throws SizeCapError above the size cap; use greedy mode there.
ExtractionOutcome extract_exact(const PointSet& a, double threshold,
                                std::uint64_t p,
                                const ExactExtractOptions& opts = {});

/// Recomputes the pairwise distances among the certificate's vertices;
/// true iff the minimum is >= threshold and matches min_edge to 1e-12.
bool verify_simplex(const PointSet& a, const SimplexCertificate& cert);

struct WitnessEntry {
  double eps = 0.0;
  std::uint64_t p = 0;
  bool success = false;
  double min_edge = 0.0;     // when successful
  double bound = 0.0;        // simplex_chebyshev_bound(p, min_edge)
  std::size_t best_size = 0; // vertices found (on failure: the best/max size)
  FailureMode failure_mode = FailureMode::greedy_exhausted; // on failure
};

struct WitnessResult {
  /// Best certified lower bound on the Chebyshev radius in normalized units
  /// (Jung gives radius <= 1 there); empty when no extraction succeeded.
  std::optional<double> witness_lower_bound;
  std::vector<WitnessEntry> entries;
  std::optional<SimplexCertificate> best_certificate;
  double scale = 1.0; // normalization factor applied to the input
};

struct WitnessOptions {
  /// Rescale the input to diameter sqrt(2) first. Disable when the set is
  /// already embedded in a normalized ambient set.
  bool normalize = true;
  bool use_exact = false; // exact extraction when within the size cap
  ExactExtractOptions exact;
  GreedyExtractOptions greedy;
};

// For each (eps, p) in the grids, attempts extraction at threshold
// sqrt(2) - eps and converts successes into circumradius lower bounds via
// simplex_chebyshev_bound(p, min_edge). Throws DomainError on empty grids,
// eps outside (0, sqrt(2)), or p + 1 exceeding the point count.
WitnessResult extremality_witness(const PointSet& a,
                                  std::span<const double> eps_grid,
                                  std::span<const std::uint64_t> p_grid,
                                  const WitnessOptions& opts = {});

std::vector<double> default_eps_grid();
/// {1, 2, 5, 10, 20} clipped to m-1.
std::vector<std::uint64_t> default_p_grid(std::size_t m);

} // namespace extremal
