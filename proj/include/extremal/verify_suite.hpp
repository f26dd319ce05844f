#pragma once

#include <string>
#include <vector>

#include "extremal/chebyshev.hpp"
#include "extremal/point_set.hpp"

#include <json.hpp>

namespace extremal {

struct InvariantCheck {
  std::string name;
  bool pass = false;
  double residual = 0.0;
  std::string note;
};

/// Runs the cross-module invariant checks against a point set: certificate
/// validity, the ratio bounds, support identity, annulus invariance,
/// idempotence, kernel consistency, and the covering/partition sandwich.
/// Requires at least two distinct points.
std::vector<InvariantCheck> run_invariant_suite(const PointSet& a,
                                                double tol = 1e-9,
                                                const SolveOptions& solve = {});

/// Re-validates a previously written analyze report against the points it
/// claims to describe.
std::vector<InvariantCheck> check_report_against(const PointSet& a,
                                                 const nlohmann::json& report,
                                                 double tol = 1e-9);

bool all_pass(const std::vector<InvariantCheck>& checks);

} // namespace extremal
