#include "extremal/mnc.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>

#include "extremal/geometry.hpp"

namespace extremal {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<std::size_t> part_members(const std::vector<std::size_t>& assign,
                                      std::size_t part) {
  std::vector<std::size_t> members;
  for (std::size_t i = 0; i < assign.size(); ++i) {
    if (assign[i] == part) members.push_back(i);
  }
  return members;
}

double subset_meb_radius(const PointSet& a,
                         const std::vector<std::size_t>& members) {
  if (members.size() <= 1) return 0.0;
  if (members.size() == 2) {
    return 0.5 * kernels::distance(a.point(members[0]), a.point(members[1]));
  }
  return min_enclosing_ball(a.subset(members)).radius;
}

double subset_diameter(const PointSet& a,
                       const std::vector<std::size_t>& members) {
  double best = 0.0;
  for (std::size_t i = 0; i + 1 < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      best = std::max(
          best, kernels::distance(a.point(members[i]), a.point(members[j])));
    }
  }
  return best;
}

double eval_assignment(const PointSet& a,
                       const std::vector<std::size_t>& assign, std::size_t k,
                       bool radius_objective) {
  double worst = 0.0;
  for (std::size_t part = 0; part < k; ++part) {
    const auto members = part_members(assign, part);
    if (members.empty()) continue;
    worst = std::max(worst, radius_objective
                                ? subset_meb_radius(a, members)
                                : subset_diameter(a, members));
  }
  return worst;
}

// ---- exact mode: restricted-growth-string enumeration ----

// Per-subset diameters via the lowest-bit recurrence; O(2^m * m).
std::vector<double> subset_diameter_table(const PointSet& a) {
  const std::size_t m = a.size();
  const std::size_t full = std::size_t{1} << m;
  const auto dist = kernels::distance_matrix(a);
  std::vector<double> table(full, 0.0);
  for (std::size_t mask = 1; mask < full; ++mask) {
    if (std::popcount(mask) < 2) continue;
    const auto low = static_cast<std::size_t>(std::countr_zero(mask));
    const std::size_t rest = mask & (mask - 1);
    double best = table[rest];
    for (std::size_t rem = rest; rem != 0; rem &= rem - 1) {
      const auto j = static_cast<std::size_t>(std::countr_zero(rem));
      best = std::max(best, dist[low * m + j]);
    }
    table[mask] = best;
  }
  return table;
}

std::vector<double> subset_radius_table(const PointSet& a) {
  const std::size_t m = a.size();
  const std::size_t full = std::size_t{1} << m;
  std::vector<double> table(full, 0.0);
#pragma omp parallel for schedule(dynamic, 64)
  for (long long mm = 1; mm < static_cast<long long>(full); ++mm) {
    const auto mask = static_cast<std::size_t>(mm);
    if (std::popcount(mask) < 2) continue;
    std::vector<std::size_t> members;
    for (std::size_t rem = mask; rem != 0; rem &= rem - 1) {
      members.push_back(static_cast<std::size_t>(std::countr_zero(rem)));
    }
    table[mask] = subset_meb_radius(a, members);
  }
  return table;
}

struct ExactState {
  std::size_t m = 0;
  std::size_t k = 0;
  const std::vector<double>* cost = nullptr;
  std::atomic<double> shared_best{kInf};
};

struct ExactLocal {
  double best = kInf;
  std::vector<std::size_t> assign;
};

void atomic_min(std::atomic<double>& target, double v) {
  double cur = target.load(std::memory_order_relaxed);
  while (v < cur &&
         !target.compare_exchange_weak(cur, v, std::memory_order_relaxed)) {
  }
}

// Depth-first completion of a partial restricted-growth string. Subset costs
// are monotone under inclusion, so the running max prunes (strictly, to keep
// the first-in-order optimum deterministic under any thread count).
void exact_dfs(ExactState& st, std::vector<std::size_t>& assign,
               std::vector<std::size_t>& masks, std::size_t nparts,
               std::size_t idx, double partial, ExactLocal& local) {
  if (partial > st.shared_best.load(std::memory_order_relaxed)) return;
  if (idx == st.m) {
    if (partial < local.best) {
      local.best = partial;
      local.assign = assign;
      atomic_min(st.shared_best, partial);
    }
    return;
  }
  const std::size_t limit = std::min(nparts + 1, st.k);
  for (std::size_t part = 0; part < limit; ++part) {
    const std::size_t prev_mask = part < nparts ? masks[part] : 0;
    const std::size_t next_mask = prev_mask | (std::size_t{1} << idx);
    const double next_partial = std::max(partial, (*st.cost)[next_mask]);
    assign[idx] = part;
    if (part < nparts) {
      masks[part] = next_mask;
      exact_dfs(st, assign, masks, nparts, idx + 1, next_partial, local);
      masks[part] = prev_mask;
    } else {
      masks.push_back(next_mask);
      exact_dfs(st, assign, masks, nparts + 1, idx + 1, next_partial, local);
      masks.pop_back();
    }
  }
}

ClusterResult exact_min_partition(const PointSet& a, std::size_t k,
                                  const std::vector<double>& cost) {
  const std::size_t m = a.size();
  ExactState st;
  st.m = m;
  st.k = k;
  st.cost = &cost;

  // enumerate prefixes serially, complete them in parallel
  const std::size_t depth = std::min<std::size_t>(m, 7);
  struct Prefix {
    std::vector<std::size_t> assign;
    std::vector<std::size_t> masks;
    double partial = 0.0;
  };
  std::vector<Prefix> prefixes;
  {
    std::vector<std::size_t> assign(depth, 0);
    std::vector<std::size_t> masks;
    auto gen = [&](auto&& self, std::size_t idx, double partial) -> void {
      if (idx == depth) {
        prefixes.push_back({assign, masks, partial});
        return;
      }
      const std::size_t limit = std::min(masks.size() + 1, k);
      for (std::size_t part = 0; part < limit; ++part) {
        if (part < masks.size()) {
          const std::size_t prev = masks[part];
          masks[part] |= std::size_t{1} << idx;
          assign[idx] = part;
          self(self, idx + 1, std::max(partial, cost[masks[part]]));
          masks[part] = prev;
        } else {
          masks.push_back(std::size_t{1} << idx);
          assign[idx] = part;
          self(self, idx + 1, std::max(partial, cost[masks.back()]));
          masks.pop_back();
        }
      }
    };
    gen(gen, 0, 0.0);
  }

  std::vector<ExactLocal> locals(prefixes.size());
#pragma omp parallel for schedule(dynamic)
  for (long long t = 0; t < static_cast<long long>(prefixes.size()); ++t) {
    const Prefix& pre = prefixes[static_cast<std::size_t>(t)];
    std::vector<std::size_t> assign(m, 0);
    std::copy(pre.assign.begin(), pre.assign.end(), assign.begin());
    std::vector<std::size_t> masks = pre.masks;
    exact_dfs(st, assign, masks, masks.size(), depth, pre.partial,
              locals[static_cast<std::size_t>(t)]);
  }

  ClusterResult out;
  out.mode = ProfileMode::exact;
  out.value = kInf;
  for (const auto& local : locals) {
    if (local.best < out.value) {
      out.value = local.best;
      out.assignment = local.assign;
    }
  }
  return out;
}

// ---- greedy mode ----

std::vector<std::size_t> gonzalez_seeds(const PointSet& a, std::size_t k,
                                        std::size_t start) {
  const std::size_t m = a.size();
  std::vector<std::size_t> seeds{start};
  std::vector<char> is_seed(m, 0);
  is_seed[start] = 1;
  std::vector<double> min_sq(m, kInf);
  kernels::update_min_squared_distance(a, a.point(start), min_sq);
  while (seeds.size() < k) {
    std::size_t next = m;
    double best = -1.0;
    for (std::size_t i = 0; i < m; ++i) {
      if (!is_seed[i] && min_sq[i] > best) {
        best = min_sq[i];
        next = i;
      }
    }
    if (next == m) break;
    seeds.push_back(next);
    is_seed[next] = 1;
    kernels::update_min_squared_distance(a, a.point(next), min_sq);
  }
  return seeds;
}

std::vector<std::size_t> assign_nearest(const PointSet& a,
                                        const std::vector<std::vector<double>>&
                                            centers) {
  std::vector<std::size_t> assign(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    double best = kInf;
    std::size_t arg = 0;
    for (std::size_t j = 0; j < centers.size(); ++j) {
      const double d2 = kernels::squared_distance(a.point(i), centers[j]);
      if (d2 < best) {
        best = d2;
        arg = j;
      }
    }
    assign[i] = arg;
  }
  return assign;
}

// Single-point move descent with lexicographic acceptance on the sorted
// cost vector: a move is taken when it strictly lowers the descending cost
// profile, which also shrinks plateaus where several parts tie at the max.
// Fixed scan order keeps the result deterministic; every accepted move
// strictly decreases the profile, so the descent terminates.
void move_descent(const PointSet& a, std::vector<std::size_t>& assign,
                  std::size_t k, bool radius_objective, int cap) {
  std::vector<std::vector<std::size_t>> parts(k);
  for (std::size_t i = 0; i < assign.size(); ++i) {
    parts[assign[i]].push_back(i);
  }
  auto cost_of = [&](const std::vector<std::size_t>& members) {
    return radius_objective ? subset_meb_radius(a, members)
                            : subset_diameter(a, members);
  };
  std::vector<double> cost(k, 0.0);
  for (std::size_t j = 0; j < k; ++j) {
    cost[j] = cost_of(parts[j]);
  }
  auto sorted_desc = [&](const std::vector<double>& v) {
    std::vector<double> s = v;
    std::sort(s.begin(), s.end(), std::greater<>());
    return s;
  };
  for (int iter = 0; iter < cap; ++iter) {
    const std::vector<double> profile = sorted_desc(cost);
    if (profile.front() <= 0.0) break;
    // scan source parts by decreasing cost (ties: lowest index)
    std::vector<std::size_t> sources(k);
    std::iota(sources.begin(), sources.end(), 0);
    std::sort(sources.begin(), sources.end(), [&](std::size_t x, std::size_t y) {
      if (cost[x] != cost[y]) return cost[x] > cost[y];
      return x < y;
    });
    bool improved = false;
    for (std::size_t src : sources) {
      if (improved) break;
      if (parts[src].size() < 2) continue;
      for (std::size_t xi = 0; xi < parts[src].size() && !improved; ++xi) {
        const std::size_t x = parts[src][xi];
        std::vector<std::size_t> without = parts[src];
        without.erase(without.begin() + static_cast<std::ptrdiff_t>(xi));
        const double cost_without = cost_of(without);
        for (std::size_t q = 0; q < k && !improved; ++q) {
          if (q == src) continue;
          std::vector<std::size_t> with_x = parts[q];
          with_x.insert(std::lower_bound(with_x.begin(), with_x.end(), x), x);
          const double cost_with = cost_of(with_x);
          std::vector<double> next_cost = cost;
          next_cost[src] = cost_without;
          next_cost[q] = cost_with;
          if (sorted_desc(next_cost) < profile) {
            parts[src] = std::move(without);
            parts[q] = std::move(with_x);
            cost = std::move(next_cost);
            improved = true;
          }
        }
      }
    }
    if (!improved) break;
  }
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t x : parts[j]) assign[x] = j;
  }
}

std::vector<std::vector<std::size_t>> greedy_candidates(
    const PointSet& a, std::size_t k, const GreedyClusterOptions& opts) {
  const std::size_t m = a.size();
  const int restarts = std::max(1, opts.restarts);
  std::vector<std::vector<std::size_t>> candidates(
      static_cast<std::size_t>(restarts) * 2);
#pragma omp parallel for schedule(dynamic)
  for (int r = 0; r < restarts; ++r) {
    const std::size_t start =
        (static_cast<std::size_t>(r) * m) / static_cast<std::size_t>(restarts);
    const auto seeds = gonzalez_seeds(a, k, start);
    std::vector<std::vector<double>> centers;
    centers.reserve(seeds.size());
    for (std::size_t s : seeds) {
      const auto p = a.point(s);
      centers.emplace_back(p.begin(), p.end());
    }
    auto assign = assign_nearest(a, centers);
    for (int iter = 0; iter < opts.iteration_cap; ++iter) {
      for (std::size_t j = 0; j < centers.size(); ++j) {
        const auto members = part_members(assign, j);
        if (members.empty()) continue;
        centers[j] = min_enclosing_ball(a.subset(members)).center;
      }
      auto next = assign_nearest(a, centers);
      if (next == assign) break;
      assign = std::move(next);
    }
    auto by_radius = assign;
    move_descent(a, by_radius, k, true, opts.iteration_cap);
    auto by_diameter = assign;
    move_descent(a, by_diameter, k, false, opts.iteration_cap);
    candidates[static_cast<std::size_t>(2 * r)] = std::move(by_radius);
    candidates[static_cast<std::size_t>(2 * r + 1)] = std::move(by_diameter);
  }
  return candidates;
}

ClusterResult pick_best(const PointSet& a,
                        const std::vector<std::vector<std::size_t>>& pool,
                        std::size_t k, bool radius_objective) {
  ClusterResult out;
  out.mode = ProfileMode::greedy;
  out.value = kInf;
  for (const auto& assign : pool) {
    const double value = eval_assignment(a, assign, k, radius_objective);
    if (value < out.value) {
      out.value = value;
      out.assignment = assign;
    }
  }
  return out;
}

void check_cluster_pre(const PointSet& a, std::size_t k) {
  if (k < 1 || k > a.size()) {
    throw DomainError("clustering: k must lie in [1, m]");
  }
}

ClusterResult trivial_partition(const PointSet& a, std::size_t k,
                                ProfileMode mode) {
  // k == m: one point per part, objective 0
  ClusterResult out;
  out.mode = mode;
  out.value = 0.0;
  out.assignment.resize(a.size());
  std::iota(out.assignment.begin(), out.assignment.end(), 0);
  (void)k;
  return out;
}

ClusterResult run_cluster(const PointSet& a, std::size_t k, ProfileMode mode,
                          const ExactCaps& caps,
                          const GreedyClusterOptions& greedy,
                          bool radius_objective) {
  check_cluster_pre(a, k);
  if (k == a.size()) {
    return trivial_partition(a, k, mode);
  }
  if (mode == ProfileMode::exact) {
    if (a.size() > caps.max_points || k > caps.max_parts) {
      throw SizeCapError(
          "exact mode caps exceeded (m <= " + std::to_string(caps.max_points) +
          ", k <= " + std::to_string(caps.max_parts) + "); use greedy mode");
    }
    const auto table = radius_objective ? subset_radius_table(a)
                                        : subset_diameter_table(a);
    return exact_min_partition(a, k, table);
  }
  const auto pool = greedy_candidates(a, k, greedy);
  return pick_best(a, pool, k, radius_objective);
}

} // namespace

const char* to_string(ProfileMode m) {
  return m == ProfileMode::exact ? "exact" : "greedy";
}

ClusterResult covering_radius(const PointSet& a, std::size_t k,
                              ProfileMode mode, const ExactCaps& caps,
                              const GreedyClusterOptions& greedy) {
  return run_cluster(a, k, mode, caps, greedy, true);
}

ClusterResult partition_diameter(const PointSet& a, std::size_t k,
                                 ProfileMode mode, const ExactCaps& caps,
                                 const GreedyClusterOptions& greedy) {
  return run_cluster(a, k, mode, caps, greedy, false);
}

ProfilePair profile_point_set(const PointSet& a,
                              std::span<const std::size_t> k_grid,
                              ProfileMode mode, const ExactCaps& caps,
                              const GreedyClusterOptions& greedy) {
  if (k_grid.empty()) {
    throw DomainError("profile: k grid must be non-empty");
  }
  std::vector<std::size_t> ks(k_grid.begin(), k_grid.end());
  std::sort(ks.begin(), ks.end());
  ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
  for (std::size_t k : ks) {
    if (k == 0) {
      throw DomainError("profile: k values must be positive");
    }
  }

  ProfilePair out;
  out.m = a.size();
  out.covering.m = a.size();
  out.partition.m = a.size();

  std::vector<std::size_t> prev_cov;
  std::vector<std::size_t> prev_par;
  for (std::size_t k : ks) {
    if (k > a.size()) continue; // skipped cell: k exceeds the point count
    const bool fits_exact = mode == ProfileMode::exact &&
                            (k == a.size() ||
                             (a.size() <= caps.max_points &&
                              k <= caps.max_parts));
    ClusterResult cov;
    ClusterResult par;
    if (fits_exact) {
      cov = covering_radius(a, k, ProfileMode::exact, caps, greedy);
      par = partition_diameter(a, k, ProfileMode::exact, caps, greedy);
    } else {
      // one candidate pool for both objectives keeps the pair consistent;
      // carrying the previous assignments keeps the profile nonincreasing
      auto pool = k == a.size()
                      ? std::vector<std::vector<std::size_t>>{}
                      : greedy_candidates(a, k, greedy);
      if (k == a.size()) {
        cov = trivial_partition(a, k, ProfileMode::greedy);
        par = cov;
      } else {
        if (!prev_cov.empty()) pool.push_back(prev_cov);
        if (!prev_par.empty()) pool.push_back(prev_par);
        cov = pick_best(a, pool, k, true);
        par = pick_best(a, pool, k, false);
      }
    }
    prev_cov = cov.assignment;
    prev_par = par.assignment;
    out.covering.entries.push_back({k, cov.value, cov.mode});
    out.partition.entries.push_back({k, par.value, par.mode});
  }
  return out;
}

std::vector<ProfilePair> mnc_profile(const GeneratorSpec& family,
                                     std::span<const std::size_t> m_grid,
                                     std::span<const std::size_t> k_grid,
                                     ProfileMode mode, const ExactCaps& caps,
                                     const GreedyClusterOptions& greedy) {
  if (m_grid.empty() || k_grid.empty()) {
    throw DomainError("mnc_profile: grids must be non-empty");
  }
  const double limit = family_limit_radius(family);
  std::vector<ProfilePair> out;
  for (std::size_t m : m_grid) {
    GeneratorSpec spec = family;
    spec.m = m;
    PointSet pts = build_family(spec);
    if (limit != 1.0) {
      pts = pts.scaled(1.0 / limit);
    }
    auto pair = profile_point_set(pts, k_grid, mode, caps, greedy);
    pair.m = m;
    out.push_back(std::move(pair));
  }
  return out;
}

SphereSlice sphere_slice_mnc(const PointSet& a, const ChebyshevResult& ref,
                             double tol, std::span<const std::size_t> k_grid,
                             ProfileMode mode, const ExactCaps& caps,
                             const GreedyClusterOptions& greedy) {
  if (ref.center.size() != a.dim()) {
    throw DomainError("sphere_slice_mnc: dimension mismatch");
  }
  if (!(tol >= 0.0)) {
    throw DomainError("sphere_slice_mnc: tolerance must be nonnegative");
  }
  SphereSlice out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = kernels::distance(a.point(i), ref.center);
    if (std::abs(d - ref.radius) <= tol) {
      out.indices.push_back(i);
    }
  }
  if (out.indices.empty()) {
    out.empty = true;
    out.profile.m = 0;
    return out;
  }
  const PointSet slice = a.subset(out.indices);
  std::vector<std::size_t> ks(k_grid.begin(), k_grid.end());
  if (ks.empty()) {
    for (std::size_t k = 1; k < slice.size(); k *= 2) {
      ks.push_back(k);
    }
    ks.push_back(slice.size());
  }
  out.profile =
      profile_point_set(slice, ks, mode, caps, greedy).partition;
  return out;
}

} // namespace extremal
