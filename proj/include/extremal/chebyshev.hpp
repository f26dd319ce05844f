#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "extremal/point_set.hpp"

namespace extremal {

struct SupportEntry {
  std::size_t index = 0; // into the original point set (lowest duplicate)
  double weight = 0.0;   // strictly positive; weights sum to 1
};

/// Minimum enclosing ball together with an optimality certificate: the
/// support points lie on the circumsphere and the center is their convex
/// combination, which pins the unique Chebyshev center of the set.
struct ChebyshevResult {
  std::vector<double> center;
  double radius = 0.0;
  std::vector<SupportEntry> support;
  /// Worst violation among the certificate checks, see certificate_residual.
  double residual = 0.0;
};

struct SolveOptions {
  /// Certificate tolerance; distance checks are scaled by (1 + radius).
  double tol = 1e-9;
  std::uint64_t coarse_budget = 1'000'000;
  int pivot_budget = 200;
};

/// Raised when the iteration budgets run out before the certificate meets
/// tolerance; carries the best iterate found.
class NonConvergenceError : public Error {
public:
  NonConvergenceError(const std::string& what, ChebyshevResult best)
      : Error(what), best_(std::move(best)) {}
  const ChebyshevResult& best() const noexcept { return best_; }

private:
  ChebyshevResult best_;
};

// Chebyshev center/radius of `a` in R^d.
//
// Two stages, per a standard high-dimensional design: a core-set sweep
// (step 1/(k+1) toward the current farthest point) warms up the center,
// then active-set refinement solves the equality-constrained system on the
// tentative support, dropping nonpositive weights and adding violated
// points until stable. The certificate falls out of the final active set.
ChebyshevResult min_enclosing_ball(const PointSet& a,
                                   const SolveOptions& opts = {});
ChebyshevResult min_enclosing_ball(const PointSet& a, double tol);

/// sup over x in `a` of ||x - center||. Throws DomainError on dim mismatch.
double relative_radius(const PointSet& a, std::span<const double> center);

/// Max over the four certificate checks: |sum w - 1|, distance from center
/// to the weighted support combination, worst support deviation from the
/// sphere, worst enclosure violation. Absolute, unscaled.
double certificate_residual(const PointSet& a, const ChebyshevResult& r);

/// True iff all certificate invariants hold: positive weights summing to 1
/// within tol, and the three distance checks within tol*(1 + radius).
/// Returns false (never throws) on violation.
bool verify_certificate(const PointSet& a, const ChebyshevResult& r,
                        double tol = 1e-9);

/// A_eps: points strictly farther than radius - eps from the center.
/// Preserves the Chebyshev center and radius of `a`. Strict set arithmetic,
/// no tolerance. Throws DomainError unless 0 < eps < radius and
/// InconsistencyError if the reduction comes out empty (bad certificate).
PointSet annulus_reduction(const PointSet& a, const ChebyshevResult& r,
                           double eps);
std::vector<std::size_t> annulus_indices(const PointSet& a,
                                         const ChebyshevResult& r, double eps);

} // namespace extremal
