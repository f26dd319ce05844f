#include "extremal/jung.hpp"

#include <cmath>

#include "extremal/geometry.hpp"

namespace extremal {

double jung_constant(std::uint64_t n) {
  if (n == 0) {
    throw DomainError("jung_constant: n must be positive");
  }
  const double nd = static_cast<double>(n);
  return std::sqrt(nd / (2.0 * (nd + 1.0)));
}

const char* to_string(Classification c) {
  switch (c) {
  case Classification::extremal_within_tol:
    return "extremal-within-tol";
  case Classification::near_extremal:
    return "near-extremal";
  case Classification::non_extremal:
    return "non-extremal";
  }
  return "unknown";
}

Classification classify_ratio(double ratio, double finite_dim_bound,
                              double tol) {
  const bool near = ratio < (1.0 - tol) * hilbert_jung_bound &&
                    ratio >= 0.98 * hilbert_jung_bound;
  if (near) {
    return Classification::near_extremal;
  }
  if (ratio >= (1.0 - tol) * finite_dim_bound) {
    return Classification::extremal_within_tol;
  }
  return Classification::non_extremal;
}

ExtremalityReport extremality_report(const PointSet& a, double tol,
                                     const SolveOptions& solve) {
  const auto distinct = a.distinct_indices();
  if (distinct.size() < 2) {
    throw DomainError(
        "extremality_report: at least two distinct points required");
  }
  ExtremalityReport rep;
  rep.points = a.size();
  rep.distinct_points = distinct.size();
  rep.dim = a.dim();
  rep.diameter = diameter(a);
  rep.meb = min_enclosing_ball(a, solve);
  rep.radius = rep.meb.radius;
  rep.ratio = rep.radius / rep.diameter;
  const std::uint64_t q = std::min<std::uint64_t>(a.dim(), distinct.size() - 1);
  rep.finite_dim_bound = jung_constant(q);
  rep.hilbert_bound = hilbert_jung_bound;
  rep.classification = classify_ratio(rep.ratio, rep.finite_dim_bound, tol);
  return rep;
}

PointSet regular_simplex(std::size_t n, double edge) {
  if (n < 1) {
    throw DomainError("regular_simplex: n must be positive");
  }
  if (!(edge > 0.0)) {
    throw DomainError("regular_simplex: edge must be positive");
  }
  // sqrt(0.5) rounds up, so the generated pairwise distances land exactly at
  // or a hair above `edge`, never below.
  const double s = edge * std::sqrt(0.5);
  const std::size_t dim = n + 1;
  std::vector<double> coords(dim * dim, 0.0);
  for (std::size_t i = 0; i < dim; ++i) {
    coords[i * dim + i] = s;
  }
  return PointSet(dim, std::move(coords));
}

double simplex_chebyshev_bound(std::uint64_t p, double min_edge) {
  if (p == 0) {
    throw DomainError("simplex_chebyshev_bound: p must be positive");
  }
  if (min_edge < 0.0) {
    throw DomainError("simplex_chebyshev_bound: min_edge must be nonnegative");
  }
  const double pd = static_cast<double>(p);
  return min_edge * std::sqrt(pd / (2.0 * (pd + 1.0)));
}

double separation_level_bound(std::uint64_t p, std::uint64_t n) {
  if (p == 0) {
    throw DomainError("separation_level_bound: p must be positive");
  }
  if (n < 4) {
    throw DomainError("separation_level_bound: n must be at least 4");
  }
  const double lvl = 2.0 - 4.0 / std::sqrt(static_cast<double>(n));
  return simplex_chebyshev_bound(p, std::sqrt(lvl));
}

PointSet normalize_to_diameter(const PointSet& a, double target) {
  if (!(target > 0.0)) {
    throw DomainError("normalize_to_diameter: target must be positive");
  }
  const double d = diameter(a);
  if (!(d > 0.0)) {
    throw DomainError("normalize_to_diameter: diameter is zero");
  }
  const double scale = target / d;
  return scale == 1.0 ? a : a.scaled(scale);
}

} // namespace extremal
