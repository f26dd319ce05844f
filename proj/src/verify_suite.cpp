#include "extremal/verify_suite.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "extremal/geometry.hpp"
#include "extremal/io.hpp"
#include "extremal/jung.hpp"
#include "extremal/mnc.hpp"

namespace extremal {

namespace {

double support_identity_residual(const PointSet& a, const ChebyshevResult& r) {
  // sum_i t_i ||y_i - y_j||^2 should equal 2 r^2 for every support j
  double worst = 0.0;
  for (const auto& ej : r.support) {
    double acc = 0.0;
    for (const auto& ei : r.support) {
      acc += ei.weight *
             kernels::squared_distance(a.point(ei.index), a.point(ej.index));
    }
    worst = std::max(worst, std::abs(acc - 2.0 * r.radius * r.radius));
  }
  return worst;
}

} // namespace

bool all_pass(const std::vector<InvariantCheck>& checks) {
  return std::all_of(checks.begin(), checks.end(),
                     [](const InvariantCheck& c) { return c.pass; });
}

std::vector<InvariantCheck> run_invariant_suite(const PointSet& a, double tol,
                                                const SolveOptions& solve) {
  std::vector<InvariantCheck> checks;
  const auto distinct = a.distinct_indices();
  if (distinct.size() < 2) {
    throw DomainError("invariant suite requires at least two distinct points");
  }

  const double diam = diameter(a);
  const ChebyshevResult meb = min_enclosing_ball(a, solve);
  const double ratio = meb.radius / diam;
  const std::uint64_t q = std::min<std::uint64_t>(a.dim(), distinct.size() - 1);

  checks.push_back({"meb-certificate", verify_certificate(a, meb, tol),
                    meb.residual, ""});

  {
    const double bound = jung_constant(q);
    const double excess = ratio - bound;
    checks.push_back({"jung-inequality", excess <= 1e-7, std::max(0.0, excess),
                      "q=" + std::to_string(q)});
  }
  {
    const double excess = ratio - hilbert_jung_bound;
    checks.push_back(
        {"gulevich-strict", ratio < hilbert_jung_bound, std::max(0.0, excess),
         ""});
  }
  {
    std::size_t heavy = 0;
    for (const auto& e : meb.support) {
      if (e.weight > tol) ++heavy;
    }
    checks.push_back({"support-size", heavy <= a.dim() + 1,
                      static_cast<double>(heavy), "caratheodory"});
  }
  {
    const double res = support_identity_residual(a, meb);
    const double budget = 1e-6 * meb.radius * meb.radius;
    checks.push_back({"support-identity", res <= budget, res, ""});
  }
  {
    // re-solving with the center appended must not move the ball
    const PointSet augmented = a.appended(meb.center);
    const ChebyshevResult again = min_enclosing_ball(augmented, solve);
    const double dr = std::abs(again.radius - meb.radius);
    const double dc = kernels::distance(again.center, meb.center);
    const double budget = std::max(tol, 1e-9) * (1.0 + meb.radius);
    checks.push_back({"idempotence", dr <= budget && dc <= 1e-6,
                      std::max(dr, dc), ""});
  }
  if (meb.radius > 0.0) {
    double worst_dr = 0.0;
    double worst_dc = 0.0;
    for (double frac : {0.2, 0.4, 0.6, 0.8}) {
      const PointSet reduced = annulus_reduction(a, meb, frac * meb.radius);
      const ChebyshevResult sub = min_enclosing_ball(reduced, solve);
      worst_dr = std::max(worst_dr, std::abs(sub.radius - meb.radius));
      worst_dc = std::max(worst_dc, kernels::distance(sub.center, meb.center));
    }
    checks.push_back({"annulus-invariance", worst_dr <= 1e-7 && worst_dc <= 1e-6,
                      std::max(worst_dr, worst_dc), ""});
  }
  {
    const auto matrix = distance_matrix(a);
    const double max_entry = *std::max_element(matrix.begin(), matrix.end());
    checks.push_back({"diameter-consistency", max_entry == diam,
                      std::abs(max_entry - diam), ""});
  }
  {
    const auto par = kernels::max_pairwise_distance(a);
    const auto ser = kernels::serial::max_pairwise_distance(a);
    const bool same = par.distance == ser.distance &&
                      par.first == ser.first && par.second == ser.second;
    checks.push_back({"kernel-consistency", same,
                      std::abs(par.distance - ser.distance), ""});
  }
  {
    bool pass = true;
    double worst = 0.0;
    std::vector<std::size_t> ks;
    for (std::size_t k : {std::size_t{2}, std::size_t{4}}) {
      if (k <= a.size()) ks.push_back(k);
    }
    if (!ks.empty()) {
      const auto pair = profile_point_set(a, ks, ProfileMode::greedy);
      const double jung = jung_constant(q);
      for (std::size_t i = 0; i < pair.covering.entries.size(); ++i) {
        const double rho = pair.covering.entries[i].value;
        const double delta = pair.partition.entries[i].value;
        pass = pass && rho <= delta + 1e-9 && delta <= 2.0 * rho + 1e-9 &&
               rho <= jung * delta + 1e-9;
        worst = std::max(
            {worst, rho - delta, delta - 2.0 * rho, rho - jung * delta});
      }
    }
    checks.push_back({"covering-sandwich", pass, std::max(0.0, worst), ""});
  }
  return checks;
}

std::vector<InvariantCheck> check_report_against(const PointSet& a,
                                                 const nlohmann::json& report,
                                                 double tol) {
  std::vector<InvariantCheck> checks;
  bool schema_ok = report.contains("schema_version") &&
                   report.contains("diameter") && report.contains("radius") &&
                   report.contains("ratio") && report.contains("chebyshev");
  if (schema_ok && report.at("schema_version").get<int>() != 1) {
    schema_ok = false;
  }
  checks.push_back({"report-schema", schema_ok, 0.0, ""});
  if (!schema_ok) {
    return checks;
  }

  const double rep_diam = report.at("diameter").get<double>();
  const double rep_radius = report.at("radius").get<double>();
  const double rep_ratio = report.at("ratio").get<double>();

  ChebyshevResult cert;
  bool cert_parsed = true;
  try {
    cert = io::chebyshev_from_json(report.at("chebyshev"));
  } catch (const std::exception&) {
    cert_parsed = false;
  }
  bool cert_ok = cert_parsed && cert.center.size() == a.dim() &&
                 std::abs(cert.radius - rep_radius) <= tol * (1.0 + rep_radius);
  if (cert_ok) {
    cert_ok = verify_certificate(a, cert, tol);
  }
  checks.push_back({"meb-certificate", cert_ok,
                    cert_parsed ? certificate_residual(a, cert) : 1.0, ""});

  const double diam = diameter(a);
  {
    const double dev = std::abs(diam - rep_diam);
    checks.push_back(
        {"diameter-consistency", dev <= 1e-9 * (1.0 + diam), dev, ""});
  }
  {
    const double dev = std::abs(rep_ratio - rep_radius / rep_diam);
    checks.push_back({"ratio-consistency", dev <= 1e-12, dev, ""});
  }
  const auto distinct = a.distinct_indices();
  const std::uint64_t q = std::min<std::uint64_t>(
      a.dim(), distinct.size() > 1 ? distinct.size() - 1 : 1);
  {
    const double excess = rep_ratio - jung_constant(q);
    checks.push_back({"jung-inequality", excess <= 1e-7, std::max(0.0, excess),
                      "q=" + std::to_string(q)});
  }
  {
    const double excess = rep_radius - diam * hilbert_jung_bound;
    checks.push_back({"gulevich-strict", rep_radius < diam * hilbert_jung_bound,
                      std::max(0.0, excess), ""});
  }
  if (report.contains("classification") &&
      report.contains("finite_dim_bound")) {
    const auto stated = report.at("classification").get<std::string>();
    const auto expected = std::string(to_string(classify_ratio(
        rep_ratio, report.at("finite_dim_bound").get<double>())));
    checks.push_back({"classification-consistency", stated == expected, 0.0,
                      stated == expected ? "" : stated + " != " + expected});
  }
  return checks;
}

} // namespace extremal
