#include "extremal/simplex_extract.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "extremal/geometry.hpp"
#include "extremal/jung.hpp"

namespace extremal {

namespace {

double min_pairwise_among(const PointSet& a,
                          const std::vector<std::size_t>& idx) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < idx.size(); ++i) {
    for (std::size_t j = i + 1; j < idx.size(); ++j) {
      best = std::min(best,
                      kernels::distance(a.point(idx[i]), a.point(idx[j])));
    }
  }
  return idx.size() < 2 ? 0.0 : best;
}

void check_extract_pre(const PointSet& a, double threshold, std::uint64_t p) {
  if (p == 0) {
    throw DomainError("extract: p must be positive");
  }
  if (!(threshold > 0.0)) {
    throw DomainError("extract: threshold must be positive");
  }
  if (p + 1 > a.size()) {
    throw DomainError("extract: need at least p+1 = " +
                      std::to_string(p + 1) + " points, have " +
                      std::to_string(a.size()));
  }
}

// Branch-and-bound clique search on the threshold graph with a greedy
// coloring bound. Stops early once a clique of `target` vertices is found;
// otherwise completes and reports the true maximum.
struct CliqueSearch {
  std::size_t m;
  std::vector<std::vector<bool>> adj;
  std::size_t target;
  std::vector<std::size_t> best;
  std::vector<std::size_t> current;
  bool done = false;

  void expand(const std::vector<std::size_t>& cands) {
    if (done) return;
    if (cands.empty()) {
      if (current.size() > best.size()) best = current;
      if (best.size() >= target) done = true;
      return;
    }
    // greedy coloring in index order; color[i] bounds the clique size
    // reachable from cands[0..i]
    std::vector<std::vector<std::size_t>> classes;
    std::vector<std::size_t> order;
    std::vector<std::size_t> bound;
    for (std::size_t v : cands) {
      std::size_t c = 0;
      for (; c < classes.size(); ++c) {
        bool fits = true;
        for (std::size_t u : classes[c]) {
          if (adj[v][u]) {
            fits = false;
            break;
          }
        }
        if (fits) break;
      }
      if (c == classes.size()) classes.emplace_back();
      classes[c].push_back(v);
    }
    for (std::size_t c = 0; c < classes.size(); ++c) {
      for (std::size_t v : classes[c]) {
        order.push_back(v);
        bound.push_back(c + 1);
      }
    }
    for (std::size_t i = order.size(); i-- > 0;) {
      if (done) return;
      if (current.size() + bound[i] <= best.size()) return;
      const std::size_t v = order[i];
      current.push_back(v);
      if (current.size() > best.size()) {
        best = current;
        if (best.size() >= target) {
          done = true;
          current.pop_back();
          return;
        }
      }
      std::vector<std::size_t> next;
      for (std::size_t j = 0; j < i; ++j) {
        if (adj[v][order[j]]) next.push_back(order[j]);
      }
      expand(next);
      current.pop_back();
    }
  }
};

} // namespace

ExtractionOutcome extract_greedy(const PointSet& a, double threshold,
                                 std::uint64_t p,
                                 const GreedyExtractOptions& opts) {
  check_extract_pre(a, threshold, p);
  const std::size_t m = a.size();
  const std::size_t want = static_cast<std::size_t>(p) + 1;
  const double thr_sq = threshold * threshold;

  std::vector<std::size_t> seeds;
  if (m <= opts.all_seed_limit) {
    seeds.resize(m);
    std::iota(seeds.begin(), seeds.end(), 0);
  } else {
    const auto pair = diametral_pair(a);
    seeds = {std::min(pair.first, pair.second),
             std::max(pair.first, pair.second)};
  }

  std::size_t best_size = 1;
  std::vector<double> min_sq(m);
  std::vector<char> chosen(m);
  for (std::size_t seed : seeds) {
    std::vector<std::size_t> verts{seed};
    std::fill(chosen.begin(), chosen.end(), 0);
    chosen[seed] = 1;
    std::fill(min_sq.begin(), min_sq.end(),
              std::numeric_limits<double>::infinity());
    kernels::update_min_squared_distance(a, a.point(seed), min_sq);
    while (verts.size() < want) {
      std::size_t cand = m;
      double cand_sq = -1.0;
      for (std::size_t i = 0; i < m; ++i) {
        if (!chosen[i] && min_sq[i] > cand_sq) {
          cand_sq = min_sq[i];
          cand = i;
        }
      }
      if (cand == m || cand_sq < thr_sq) {
        break; // adding any point would drop the minimum below the threshold
      }
      verts.push_back(cand);
      chosen[cand] = 1;
      kernels::update_min_squared_distance(a, a.point(cand), min_sq);
    }
    best_size = std::max(best_size, verts.size());
    if (verts.size() == want) {
      std::sort(verts.begin(), verts.end());
      SimplexCertificate cert;
      cert.vertex_indices = std::move(verts);
      cert.p = p;
      cert.threshold = threshold;
      cert.min_edge = min_pairwise_among(a, cert.vertex_indices);
      return {cert};
    }
  }
  return {ExtractionFailure{FailureMode::greedy_exhausted, best_size}};
}

ExtractionOutcome extract_exact(const PointSet& a, double threshold,
                                std::uint64_t p,
                                const ExactExtractOptions& opts) {
  check_extract_pre(a, threshold, p);
  const std::size_t m = a.size();
  if (m > opts.size_cap) {
    throw SizeCapError("extract_exact: " + std::to_string(m) +
                       " points exceed the exact-mode cap of " +
                       std::to_string(opts.size_cap) + "; use greedy mode");
  }
  CliqueSearch search;
  search.m = m;
  search.target = static_cast<std::size_t>(p) + 1;
  search.adj.assign(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i + 1 < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const bool edge =
          kernels::distance(a.point(i), a.point(j)) >= threshold;
      search.adj[i][j] = edge;
      search.adj[j][i] = edge;
    }
  }
  std::vector<std::size_t> all(m);
  std::iota(all.begin(), all.end(), 0);
  search.expand(all);

  if (search.best.size() >= search.target) {
    std::vector<std::size_t> verts(search.best.begin(),
                                   search.best.begin() +
                                       static_cast<std::ptrdiff_t>(
                                           search.target));
    std::sort(verts.begin(), verts.end());
    SimplexCertificate cert;
    cert.vertex_indices = std::move(verts);
    cert.p = p;
    cert.threshold = threshold;
    cert.min_edge = min_pairwise_among(a, cert.vertex_indices);
    return {cert};
  }
  return {ExtractionFailure{FailureMode::proven_nonexistent,
                            search.best.size()}};
}

bool verify_simplex(const PointSet& a, const SimplexCertificate& cert) {
  if (cert.vertex_indices.size() != cert.p + 1 || cert.p == 0) {
    return false;
  }
  std::vector<std::size_t> sorted = cert.vertex_indices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    return false;
  }
  if (sorted.back() >= a.size()) {
    return false;
  }
  const double min_edge = min_pairwise_among(a, cert.vertex_indices);
  return min_edge >= cert.threshold &&
         std::abs(min_edge - cert.min_edge) <= 1e-12;
}

WitnessResult extremality_witness(const PointSet& a,
                                  std::span<const double> eps_grid,
                                  std::span<const std::uint64_t> p_grid,
                                  const WitnessOptions& opts) {
  if (eps_grid.empty() || p_grid.empty()) {
    throw DomainError("extremality_witness: grids must be non-empty");
  }
  for (double eps : eps_grid) {
    if (!(eps > 0.0) || !(eps < std::numbers::sqrt2)) {
      throw DomainError("extremality_witness: eps must lie in (0, sqrt(2))");
    }
  }
  WitnessResult out;
  PointSet working = a;
  if (opts.normalize) {
    const double d = diameter(a);
    if (!(d > 0.0)) {
      throw DomainError("extremality_witness: diameter is zero");
    }
    out.scale = std::numbers::sqrt2 / d;
    if (out.scale != 1.0) {
      working = a.scaled(out.scale);
    }
  }
  const bool exact_ok = opts.use_exact && a.size() <= opts.exact.size_cap;
  for (double eps : eps_grid) {
    const double threshold = std::numbers::sqrt2 - eps;
    for (std::uint64_t p : p_grid) {
      const ExtractionOutcome outcome =
          exact_ok ? extract_exact(working, threshold, p, opts.exact)
                   : extract_greedy(working, threshold, p, opts.greedy);
      WitnessEntry entry;
      entry.eps = eps;
      entry.p = p;
      entry.success = outcome.ok();
      if (entry.success) {
        entry.min_edge = outcome.certificate().min_edge;
        entry.bound = simplex_chebyshev_bound(p, entry.min_edge);
        entry.best_size = outcome.certificate().vertex_indices.size();
        if (!out.witness_lower_bound || entry.bound > *out.witness_lower_bound) {
          out.witness_lower_bound = entry.bound;
          out.best_certificate = outcome.certificate();
        }
      } else {
        entry.best_size = outcome.failure().best_size;
        entry.failure_mode = outcome.failure().mode;
      }
      out.entries.push_back(entry);
    }
  }
  return out;
}

std::vector<double> default_eps_grid() { return {0.3, 0.1, 0.03, 0.01}; }

std::vector<std::uint64_t> default_p_grid(std::size_t m) {
  std::vector<std::uint64_t> grid;
  for (std::uint64_t p : {1, 2, 5, 10, 20}) {
    if (p + 1 <= m) {
      grid.push_back(p);
    } else if (m >= 2) {
      const std::uint64_t clipped = m - 1;
      if (grid.empty() || grid.back() != clipped) {
        grid.push_back(clipped);
      }
      break;
    }
  }
  return grid;
}

} // namespace extremal
