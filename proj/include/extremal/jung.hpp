#pragma once

#include <cstdint>
#include <numbers>
#include <optional>
#include <string>

#include "extremal/chebyshev.hpp"
#include "extremal/point_set.hpp"

namespace extremal {

/// sqrt(n / (2(n+1))): the optimal circumradius-to-diameter ratio in E^n.
/// Strictly increasing in n with limit 1/sqrt(2). Throws DomainError at n=0.
double jung_constant(std::uint64_t n);

/// 1/sqrt(2): the infinite-dimensional ratio bound.
inline constexpr double hilbert_jung_bound = std::numbers::sqrt2 / 2.0;

enum class Classification { extremal_within_tol, near_extremal, non_extremal };

const char* to_string(Classification c);

struct ExtremalityReport {
  double diameter = 0.0;
  double radius = 0.0;
  double ratio = 0.0;            // radius / diameter
  double finite_dim_bound = 0.0; // jung_constant(min(dim, distinct - 1))
  double hilbert_bound = hilbert_jung_bound;
  Classification classification = Classification::non_extremal;
  std::optional<double> witness_lower_bound; // best simplex-certificate bound
  std::size_t points = 0;
  std::size_t distinct_points = 0;
  std::size_t dim = 0;
  ChebyshevResult meb; // full certificate, kept for downstream checks
};

// Classification, with tol defaulting to 1e-6:
//   near-extremal      ratio >= 0.98 * hilbert_bound (finite sets sit
//                      strictly below the bound itself, so this is the band
//                      tracking the asymptotic notion)
//   extremal-within-tol otherwise, when ratio >= (1 - tol) * finite_dim_bound
//   non-extremal       otherwise
Classification classify_ratio(double ratio, double finite_dim_bound,
                              double tol = 1e-6);

/// Requires at least two distinct points (throws DomainError otherwise).
ExtremalityReport extremality_report(const PointSet& a, double tol = 1e-6,
                                     const SolveOptions& solve = {});

/// The n+1 points (edge/sqrt(2)) * {e_1, ..., e_{n+1}} in R^{n+1}: a regular
/// n-simplex with all pairwise distances equal to edge, no cumulative
/// rounding. n >= 1, edge > 0.
PointSet regular_simplex(std::size_t n, double edge);

/// min_edge * sqrt(p / (2(p+1))): circumradius lower bound for any p-simplex
/// whose edges all have length >= min_edge. Tight on the regular simplex.
double simplex_chebyshev_bound(std::uint64_t p, double min_edge);

/// sqrt((2 - 4/sqrt(n)) * p / (2(p+1))): the same bound for a p-simplex whose
/// squared edge lengths are at least 2 - 4/sqrt(n). Increasing in p; tends to
/// 1 as p, then n, grow. Requires n >= 4 (the bound is vacuous below).
double separation_level_bound(std::uint64_t p, std::uint64_t n);

/// A -> (target / d(A)) * A. Throws DomainError when the diameter is zero.
PointSet normalize_to_diameter(const PointSet& a,
                               double target = std::numbers::sqrt2);

} // namespace extremal
