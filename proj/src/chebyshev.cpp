#include "extremal/chebyshev.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>

#include <Eigen/Dense>

#include "extremal/kernels.hpp"

namespace extremal {

namespace {

struct UniquePoints {
  std::vector<std::size_t> orig; // unique index -> lowest original index
  std::vector<double> coords;    // row-major, dim from the source set
};

UniquePoints collapse_duplicates(const PointSet& a) {
  UniquePoints u;
  std::map<std::vector<double>, std::size_t> seen;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto p = a.point(i);
    std::vector<double> key(p.begin(), p.end());
    if (seen.emplace(std::move(key), i).second) {
      u.orig.push_back(i);
      u.coords.insert(u.coords.end(), p.begin(), p.end());
    }
  }
  return u;
}

struct SupportSolve {
  std::vector<double> center;
  double radius = 0.0;
  std::vector<double> weights; // aligned with the support index list
};

// Circumcenter of the support in its affine hull. With v_i = y_i - y_0 the
// center solves (V^T V) lambda = diag(V^T V)/2 and equals y_0 + V lambda;
// the barycentric weights are (1 - sum lambda, lambda...). Rank-deficient
// supports (more than affine-rank+1 cospherical points) get a basic solution
// with zero weight on the redundant points.
SupportSolve solve_support(const PointSet& pts,
                           const std::vector<std::size_t>& support) {
  const std::size_t dim = pts.dim();
  const std::size_t s = support.size();
  SupportSolve out;
  const auto anchor = pts.point(support[0]);
  if (s == 1) {
    out.center.assign(anchor.begin(), anchor.end());
    out.radius = 0.0;
    out.weights = {1.0};
    return out;
  }
  Eigen::MatrixXd v(dim, s - 1);
  for (std::size_t j = 1; j < s; ++j) {
    const auto pj = pts.point(support[j]);
    for (std::size_t i = 0; i < dim; ++i) {
      v(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j - 1)) =
          pj[i] - anchor[i];
    }
  }
  const Eigen::MatrixXd gram = v.transpose() * v;
  const Eigen::VectorXd rhs = 0.5 * gram.diagonal();
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(gram);
  const Eigen::VectorXd lambda = qr.solve(rhs);

  const Eigen::VectorXd offset = v * lambda;
  out.center.resize(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    out.center[i] = anchor[i] + offset(static_cast<Eigen::Index>(i));
  }
  out.weights.resize(s);
  out.weights[0] = 1.0 - lambda.sum();
  for (std::size_t j = 1; j < s; ++j) {
    out.weights[j] = lambda(static_cast<Eigen::Index>(j - 1));
  }
  out.radius = 0.0;
  for (std::size_t idx : support) {
    out.radius = std::max(
        out.radius, kernels::distance(pts.point(idx), out.center));
  }
  return out;
}

struct RefineResult {
  std::vector<std::size_t> support;
  SupportSolve sol;
  int pivots_used = 0;
  bool converged = false;
};

constexpr double kDropTol = 1e-11;

std::size_t most_negative_weight(const SupportSolve& sol) {
  std::size_t worst = sol.weights.size();
  double worst_w = -kDropTol;
  for (std::size_t j = 0; j < sol.weights.size(); ++j) {
    if (sol.weights[j] < worst_w) {
      worst_w = sol.weights[j];
      worst = j;
    }
  }
  return worst; // == size() when no weight is below -kDropTol
}

// Fast path: solve the band of near-farthest points from the warm center in
// one shot. Covers cospherical inputs (simplices, orthonormal frames) where
// the walking loop below would otherwise add the whole set one point at a
// time.
bool try_band_solve(const PointSet& pts, const std::vector<double>& warm,
                    RefineResult& res) {
  const std::size_t m = pts.size();
  std::vector<double> dist_sq;
  kernels::farthest_from(pts, warm, dist_sq);
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (dist_sq[a] != dist_sq[b]) return dist_sq[a] > dist_sq[b];
    return a < b;
  });
  const double band_floor = dist_sq[order[0]] * (1.0 - 2e-3);
  const std::size_t cap = std::min(m, pts.dim() + 8);
  std::vector<std::size_t> band;
  for (std::size_t idx : order) {
    if (band.size() >= cap) break;
    if (!band.empty() && dist_sq[idx] < band_floor) break;
    band.push_back(idx);
  }
  SupportSolve sol = solve_support(pts, band);
  if (most_negative_weight(sol) != band.size()) {
    return false;
  }
  const auto far = kernels::farthest_from(pts, sol.center, dist_sq);
  if (far.distance - sol.radius > 1e-11 * (1.0 + sol.radius)) {
    return false;
  }
  res.support = std::move(band);
  res.sol = std::move(sol);
  res.converged = true;
  return true;
}

// Walking active-set refinement. The trajectory keeps every point inside
// the ball around `c` through the support (up to a noise margin): each round
// solves the support's circumcenter and walks toward it, stopping where an
// outside point reaches the shrinking boundary (that point joins the
// support); nonpositive weights are dropped. The walk makes the radius
// nonincreasing, which rules out the add/drop cycling of the naive scheme.
// Every solve is also screened as a finished certificate: nonnegative
// weights, cospherical support, global enclosure. Near-degenerate inputs
// (everything within noise of one sphere) terminate through that screen
// rather than through an exact final step.
RefineResult refine_active_set(const PointSet& pts,
                               const std::vector<double>& warm_center,
                               int max_pivots,
                               std::vector<std::size_t> initial_support = {}) {
  RefineResult res;
  if (initial_support.empty() && try_band_solve(pts, warm_center, res)) {
    return res;
  }

  const std::size_t m = pts.size();
  const std::size_t dim = pts.dim();
  std::vector<double> c = warm_center;
  std::vector<double> dist_sq;
  std::vector<char> in_support(m, 0);
  if (initial_support.empty()) {
    const auto far0 = kernels::farthest_from(pts, c, dist_sq);
    res.support = {far0.index};
  } else {
    res.support = std::move(initial_support);
  }
  for (std::size_t idx : res.support) {
    in_support[idx] = 1;
  }

  std::vector<double> direction(dim);
  for (;;) {
    res.sol = solve_support(pts, res.support);

    // certificate screen
    double min_w = res.sol.weights[0];
    for (double w : res.sol.weights) min_w = std::min(min_w, w);
    double sphere_dev = 0.0;
    for (std::size_t idx : res.support) {
      sphere_dev = std::max(
          sphere_dev, std::abs(kernels::distance(pts.point(idx),
                                                 res.sol.center) -
                               res.sol.radius));
    }
    const auto far = kernels::farthest_from(pts, res.sol.center, dist_sq);
    const double band = 3e-11 * (1.0 + res.sol.radius);
    if (min_w >= -kDropTol && sphere_dev <= band &&
        far.distance <= res.sol.radius + band) {
      res.converged = true;
      return res;
    }
    if (res.pivots_used >= max_pivots) return res;

    // shed the worst-weighted support point before moving anywhere
    if (min_w < -kDropTol && res.support.size() > 1) {
      const std::size_t worst = most_negative_weight(res.sol);
      in_support[res.support[worst]] = 0;
      res.support.erase(res.support.begin() +
                        static_cast<std::ptrdiff_t>(worst));
      ++res.pivots_used;
      continue;
    }

    double dir_norm_sq = 0.0;
    for (std::size_t d = 0; d < dim; ++d) {
      direction[d] = res.sol.center[d] - c[d];
      dir_norm_sq += direction[d] * direction[d];
    }
    const double r_sq =
        kernels::squared_distance(pts.point(res.support[0]), c);

    if (std::sqrt(dir_norm_sq) <= 1e-11 * (1.0 + std::sqrt(r_sq))) {
      // sitting on the circumcenter with plausible weights, yet some point
      // is still outside: recruit the farthest violator
      c = res.sol.center;
      if (in_support[far.index]) return res; // numerically stuck
      res.support.push_back(far.index);
      in_support[far.index] = 1;
      ++res.pivots_used;
      continue;
    }

    // walk c toward the circumcenter; the support stays equidistant while
    // the common radius shrinks. For an outside point q the clearance
    //   g(t) = (||q - c||^2 - r^2) + 2 t (x0 - q, direction)
    // is linear in t; the smallest root in [0, 1) blocks the walk. The
    // margin tolerates boundary transgressions at noise level, else fully
    // cospherical inputs would pin every walk at t = 0.
    const auto x0 = pts.point(res.support[0]);
    const double margin = 1e-10 * (1.0 + r_sq);
    double t_star = 1.0;
    std::size_t blocker = m;
    for (std::size_t q = 0; q < m; ++q) {
      if (in_support[q]) continue;
      const auto pq = pts.point(q);
      double denom = 0.0;
      for (std::size_t d = 0; d < dim; ++d) {
        denom += (x0[d] - pq[d]) * direction[d];
      }
      denom *= 2.0;
      if (denom <= 1e-300) continue; // clearance not shrinking
      const double slack = r_sq - kernels::squared_distance(pq, c);
      const double t_q = std::max(0.0, (slack + margin) / denom);
      if (t_q < t_star) {
        t_star = t_q;
        blocker = q;
      }
    }
    if (blocker == m) {
      c = res.sol.center; // full step, land exactly on the circumcenter
      continue;
    }
    for (std::size_t d = 0; d < dim; ++d) {
      c[d] += t_star * direction[d];
    }
    res.support.push_back(blocker);
    in_support[blocker] = 1;
    ++res.pivots_used;
  }
}

struct FwResult {
  std::vector<std::size_t> support;
  std::vector<double> weights; // aligned with support
  std::vector<double> center;
  std::uint64_t iterations = 0;
  bool converged = false;
};

// Carathéodory support reduction: as long as the support exceeds dim+1, the
// points carry an affine dependence; shifting the weights along it zeroes
// one of them while the combination (the center) stays put. Keeps the
// reported support within the dimension bound on epsilon-cospherical inputs
// where hundreds of points end up weighted.
void caratheodory_reduce(const PointSet& pts,
                         std::vector<std::size_t>& support,
                         std::vector<double>& weights) {
  const std::size_t dim = pts.dim();
  while (support.size() > dim + 1) {
    const std::size_t k = std::min(support.size(), dim + 2);
    Eigen::MatrixXd a(dim + 1, k);
    for (std::size_t j = 0; j < k; ++j) {
      const auto p = pts.point(support[j]);
      for (std::size_t i = 0; i < dim; ++i) {
        a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = p[i];
      }
      a(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(j)) = 1.0;
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(a);
    const Eigen::MatrixXd kernel = lu.kernel();
    if (kernel.cols() == 0 || kernel.col(0).norm() == 0.0) {
      break; // numerically independent; leave the support as is
    }
    Eigen::VectorXd lambda = kernel.col(0);
    double t = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < k; ++j) {
      const double l = lambda(static_cast<Eigen::Index>(j));
      if (l > 0.0) {
        t = std::min(t, weights[j] / l);
      }
    }
    if (!std::isfinite(t)) {
      lambda = -lambda;
      t = std::numeric_limits<double>::infinity();
      for (std::size_t j = 0; j < k; ++j) {
        const double l = lambda(static_cast<Eigen::Index>(j));
        if (l > 0.0) {
          t = std::min(t, weights[j] / l);
        }
      }
      if (!std::isfinite(t)) break;
    }
    for (std::size_t j = 0; j < k; ++j) {
      weights[j] -= t * lambda(static_cast<Eigen::Index>(j));
    }
    // remove everything that hit (or numerically crossed) zero
    std::vector<std::size_t> kept_idx;
    std::vector<double> kept_w;
    bool removed = false;
    for (std::size_t j = 0; j < support.size(); ++j) {
      if (j < k && weights[j] <= 1e-14) {
        removed = true;
        continue;
      }
      kept_idx.push_back(support[j]);
      kept_w.push_back(weights[j]);
    }
    if (!removed) break;
    support = std::move(kept_idx);
    weights = std::move(kept_w);
  }
}

// Pairwise Frank-Wolfe on the dual weight simplex: shifts mass from the
// closest weighted point to the farthest point until the distances over the
// support level out. Linearly convergent, and the surviving weights identify
// the support set on inputs where many points crowd the boundary and the
// walking refinement churns. The identified support is then solved exactly.
FwResult pairwise_frank_wolfe(const PointSet& pts,
                              const std::vector<double>& warm_center,
                              std::uint64_t max_iters) {
  const std::size_t m = pts.size();
  const std::size_t dim = pts.dim();
  FwResult out;

  std::vector<double> dist_sq;
  kernels::farthest_from(pts, warm_center, dist_sq);
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (dist_sq[a] != dist_sq[b]) return dist_sq[a] > dist_sq[b];
    return a < b;
  });
  const std::size_t seeds = std::min(m, dim + 8);
  std::vector<double> weight(m, 0.0);
  std::vector<double> c(dim, 0.0);
  for (std::size_t s = 0; s < seeds; ++s) {
    weight[order[s]] = 1.0 / static_cast<double>(seeds);
    const auto p = pts.point(order[s]);
    for (std::size_t d = 0; d < dim; ++d) {
      c[d] += p[d] / static_cast<double>(seeds);
    }
  }

  std::vector<double> q(m);
  for (std::size_t i = 0; i < m; ++i) {
    const auto p = pts.point(i);
    double acc = 0.0;
    for (double v : p) acc += v * v;
    q[i] = acc;
  }

  for (std::uint64_t iter = 0; iter < max_iters; ++iter) {
    ++out.iterations;
    double c_sq = 0.0;
    for (double v : c) c_sq += v * v;
    std::size_t far = m, away = m;
    double far_d = -1.0, away_d = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < m; ++i) {
      const auto p = pts.point(i);
      double dot = 0.0;
      for (std::size_t d = 0; d < dim; ++d) dot += p[d] * c[d];
      const double dist = q[i] - 2.0 * dot + c_sq;
      if (dist > far_d) {
        far_d = dist;
        far = i;
      }
      if (weight[i] > 0.0 && dist < away_d) {
        away_d = dist;
        away = i;
      }
    }
    const double gap = far_d - away_d;
    if (away == m || gap <= 1e-13 * (1.0 + far_d)) break;
    const auto pf = pts.point(far);
    const auto pa = pts.point(away);
    double denom = 0.0;
    for (std::size_t d = 0; d < dim; ++d) {
      const double diff = pf[d] - pa[d];
      denom += diff * diff;
    }
    denom *= 2.0;
    if (denom <= 1e-300) break;
    double t = gap / denom;
    bool drop = false;
    if (t >= weight[away]) {
      t = weight[away];
      drop = true;
    }
    weight[far] += t;
    weight[away] = drop ? 0.0 : weight[away] - t;
    for (std::size_t d = 0; d < dim; ++d) {
      c[d] += t * (pf[d] - pa[d]);
    }
    if ((iter & 511u) == 511u) {
      // recompute the weighted combination to shed incremental drift
      std::fill(c.begin(), c.end(), 0.0);
      for (std::size_t i = 0; i < m; ++i) {
        if (weight[i] <= 0.0) continue;
        const auto p = pts.point(i);
        for (std::size_t d = 0; d < dim; ++d) c[d] += weight[i] * p[d];
      }
    }
  }

  {
    double c_sq = 0.0;
    for (double v : c) c_sq += v * v;
    double far_d = -1.0, away_d = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < m; ++i) {
      const auto p = pts.point(i);
      double dot = 0.0;
      for (std::size_t d = 0; d < dim; ++d) dot += p[d] * c[d];
      const double dist = q[i] - 2.0 * dot + c_sq;
      far_d = std::max(far_d, dist);
      if (weight[i] > 0.0) away_d = std::min(away_d, dist);
    }
    out.converged = far_d - away_d <= 1e-12 * (1.0 + far_d);
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (weight[i] > 1e-12) {
      out.support.push_back(i);
      out.weights.push_back(weight[i]);
    }
  }
  // re-synchronize the center with the surviving weights
  out.center.assign(dim, 0.0);
  for (std::size_t j = 0; j < out.support.size(); ++j) {
    const auto p = pts.point(out.support[j]);
    for (std::size_t d = 0; d < dim; ++d) {
      out.center[d] += out.weights[j] * p[d];
    }
  }
  return out;
}

ChebyshevResult assemble_result(const PointSet& a, const UniquePoints& uniq,
                                const PointSet& upts,
                                const std::vector<std::size_t>& support,
                                const std::vector<double>& weights,
                                const std::vector<double>& center,
                                double radius) {
  constexpr double weight_floor = 1e-12;
  std::vector<std::size_t> kept;
  std::vector<double> kept_w;
  for (std::size_t j = 0; j < support.size(); ++j) {
    if (weights[j] > weight_floor) {
      kept.push_back(support[j]);
      kept_w.push_back(weights[j]);
    }
  }
  if (kept.size() > a.dim() + 1) {
    caratheodory_reduce(upts, kept, kept_w);
  }
  ChebyshevResult out;
  out.center = center;
  out.radius = radius;
  double total = 0.0;
  for (double w : kept_w) total += w;
  for (std::size_t j = 0; j < kept.size(); ++j) {
    if (kept_w[j] > weight_floor) {
      out.support.push_back({uniq.orig[kept[j]],
                             total > 0.0 ? kept_w[j] / total : kept_w[j]});
    }
  }
  std::sort(out.support.begin(), out.support.end(),
            [](const SupportEntry& x, const SupportEntry& y) {
              return x.index < y.index;
            });
  out.residual = certificate_residual(a, out);
  return out;
}

ChebyshevResult assemble_result(const PointSet& a, const UniquePoints& uniq,
                                const PointSet& upts,
                                const std::vector<std::size_t>& support,
                                const SupportSolve& sol) {
  return assemble_result(a, uniq, upts, support, sol.weights, sol.center,
                         sol.radius);
}

} // namespace

ChebyshevResult min_enclosing_ball(const PointSet& a,
                                   const SolveOptions& opts) {
  if (!(opts.tol > 0.0)) {
    throw DomainError("min_enclosing_ball: tolerance must be positive");
  }
  const UniquePoints uniq = collapse_duplicates(a);
  const PointSet upts(a.dim(), uniq.coords);

  if (upts.size() == 1) {
    ChebyshevResult out;
    const auto p = upts.point(0);
    out.center.assign(p.begin(), p.end());
    out.radius = 0.0;
    out.support = {{uniq.orig[0], 1.0}};
    out.residual = certificate_residual(a, out);
    return out;
  }

  // start at the centroid of the distinct points
  std::vector<double> center(a.dim(), 0.0);
  for (std::size_t i = 0; i < upts.size(); ++i) {
    const auto p = upts.point(i);
    for (std::size_t d = 0; d < a.dim(); ++d) {
      center[d] += p[d];
    }
  }
  for (double& v : center) {
    v /= static_cast<double>(upts.size());
  }

  std::uint64_t coarse_used = 0;
  // the refinement does the real work; the core-set sweep only warms up the
  // center, so the first stage is short and escalates on failure. Each stage
  // gets the full pivot budget; non-convergence is declared once the coarse
  // budget is spent and the refinement still misses tolerance.
  std::uint64_t stage = 16;
  ChebyshevResult best;
  double best_residual = std::numeric_limits<double>::infinity();
  std::vector<double> scratch;

  for (;;) {
    const std::uint64_t steps =
        std::min<std::uint64_t>(stage, opts.coarse_budget - coarse_used);
    for (std::uint64_t t = 0; t < steps; ++t) {
      const auto far = kernels::farthest_from(upts, center, scratch);
      const auto p = far.index;
      const double step = 1.0 / static_cast<double>(coarse_used + 2);
      const auto fp = upts.point(p);
      for (std::size_t d = 0; d < center.size(); ++d) {
        center[d] += step * (fp[d] - center[d]);
      }
      ++coarse_used;
    }

    const RefineResult ref =
        refine_active_set(upts, center, std::max(opts.pivot_budget, 0));
    ChebyshevResult cand = assemble_result(a, uniq, upts, ref.support, ref.sol);
    double tol_scaled = opts.tol * (1.0 + cand.radius);
    if (cand.residual <= tol_scaled) {
      return cand;
    }
    if (cand.residual < best_residual) {
      best_residual = cand.residual;
      best = cand;
    }

    // Dense boundaries starve the walking loop of pivots; identify the
    // support on the dual weight simplex instead. A converged weight vector
    // is itself a certificate (the center is the weighted combination and
    // every weighted point sits on the sphere at noise level), reduced to
    // at most dim+1 points.
    const std::uint64_t fw_budget = std::min<std::uint64_t>(
        opts.coarse_budget - coarse_used,
        std::max<std::uint64_t>(4096, 32 * upts.size()));
    if (fw_budget > 0) {
      const FwResult fw = pairwise_frank_wolfe(upts, cand.center, fw_budget);
      coarse_used += fw.iterations;
      if (!fw.support.empty()) {
        ChebyshevResult cand2;
        if (fw.converged) {
          const double radius =
              kernels::farthest_from(upts, fw.center, scratch).distance;
          cand2 = assemble_result(a, uniq, upts, fw.support, fw.weights,
                                  fw.center, radius);
        } else {
          const RefineResult polished = refine_active_set(
              upts, fw.center, std::max(opts.pivot_budget, 0), fw.support);
          cand2 =
              assemble_result(a, uniq, upts, polished.support, polished.sol);
        }
        tol_scaled = opts.tol * (1.0 + cand2.radius);
        if (cand2.residual <= tol_scaled) {
          return cand2;
        }
        if (cand2.residual < best_residual) {
          best_residual = cand2.residual;
          best = cand2;
        }
      }
    }

    if (coarse_used >= opts.coarse_budget) {
      throw NonConvergenceError(
          "min_enclosing_ball: budgets exhausted with residual " +
              std::to_string(best_residual) + " above tolerance " +
              std::to_string(tol_scaled),
          best);
    }
    center = best.center;
    stage = std::min<std::uint64_t>(stage * 8, 65536);
  }
}

ChebyshevResult min_enclosing_ball(const PointSet& a, double tol) {
  SolveOptions opts;
  opts.tol = tol;
  return min_enclosing_ball(a, opts);
}

double relative_radius(const PointSet& a, std::span<const double> center) {
  if (center.size() != a.dim()) {
    throw DomainError("relative_radius: dimension mismatch");
  }
  return kernels::farthest_from(a, center).distance;
}

double certificate_residual(const PointSet& a, const ChebyshevResult& r) {
  if (r.center.size() != a.dim()) {
    throw DomainError("certificate_residual: dimension mismatch");
  }
  double weight_sum = 0.0;
  std::vector<double> combination(a.dim(), 0.0);
  double sphere_dev = 0.0;
  for (const auto& e : r.support) {
    if (e.index >= a.size()) {
      throw DomainError("certificate_residual: support index out of range");
    }
    weight_sum += e.weight;
    const auto p = a.point(e.index);
    for (std::size_t d = 0; d < a.dim(); ++d) {
      combination[d] += e.weight * p[d];
    }
    sphere_dev = std::max(
        sphere_dev, std::abs(kernels::distance(p, r.center) - r.radius));
  }
  const double hull_gap = kernels::distance(combination, r.center);
  double enclose = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    enclose = std::max(
        enclose, kernels::distance(a.point(i), r.center) - r.radius);
  }
  return std::max({std::abs(weight_sum - 1.0), hull_gap, sphere_dev,
                   std::max(enclose, 0.0)});
}

bool verify_certificate(const PointSet& a, const ChebyshevResult& r,
                        double tol) {
  if (r.center.size() != a.dim() || r.support.empty() || !(r.radius >= 0.0)) {
    return false;
  }
  double weight_sum = 0.0;
  for (const auto& e : r.support) {
    if (e.index >= a.size() || !(e.weight > 0.0)) {
      return false;
    }
    weight_sum += e.weight;
  }
  if (std::abs(weight_sum - 1.0) > tol) {
    return false;
  }
  const double scaled = tol * (1.0 + r.radius);
  std::vector<double> combination(a.dim(), 0.0);
  for (const auto& e : r.support) {
    const auto p = a.point(e.index);
    for (std::size_t d = 0; d < a.dim(); ++d) {
      combination[d] += e.weight * p[d];
    }
    if (std::abs(kernels::distance(p, r.center) - r.radius) > scaled) {
      return false;
    }
  }
  if (kernels::distance(combination, r.center) > scaled) {
    return false;
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (kernels::distance(a.point(i), r.center) > r.radius + scaled) {
      return false;
    }
  }
  return true;
}

std::vector<std::size_t> annulus_indices(const PointSet& a,
                                         const ChebyshevResult& r,
                                         double eps) {
  if (r.center.size() != a.dim()) {
    throw DomainError("annulus_reduction: dimension mismatch");
  }
  if (!(eps > 0.0) || !(eps < r.radius)) {
    throw DomainError("annulus_reduction: eps must lie in (0, radius)");
  }
  const double cut = r.radius - eps;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (kernels::distance(a.point(i), r.center) > cut) {
      keep.push_back(i);
    }
  }
  if (keep.empty()) {
    throw InconsistencyError(
        "annulus_reduction: empty reduction; the certificate does not match "
        "the point set");
  }
  return keep;
}

PointSet annulus_reduction(const PointSet& a, const ChebyshevResult& r,
                           double eps) {
  return a.subset(annulus_indices(a, r, eps));
}

} // namespace extremal
