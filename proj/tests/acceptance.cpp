// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// fails. Run as `ctest -R acceptance` or directly from the build tree.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "extremal/chebyshev.hpp"
#include "extremal/geometry.hpp"
#include "extremal/generators.hpp"
#include "extremal/io.hpp"
#include "extremal/jung.hpp"
#include "extremal/mnc.hpp"
#include "extremal/simplex_extract.hpp"
#include "oracles.hpp"

using namespace extremal;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && pass) {
      pass = false;
      detail = what;
    }
  }
  void note(const std::string& text) {
    if (detail.empty()) detail = text;
  }
};

struct SolvedInstance {
  PointSet pts;
  ChebyshevResult meb;
};

std::vector<SolvedInstance> g_solved; // criteria 2-3 feed criterion 4

double support_identity_worst(const PointSet& pts, const ChebyshevResult& r) {
  double worst = 0.0;
  for (const auto& ej : r.support) {
    double acc = 0.0;
    for (const auto& ei : r.support) {
      acc += ei.weight * kernels::squared_distance(pts.point(ei.index),
                                                   pts.point(ej.index));
    }
    worst = std::max(worst, std::abs(acc - 2.0 * r.radius * r.radius));
  }
  return worst;
}

// --- criterion 1: regular simplices attain the dimension ratio exactly ---
Outcome criterion_jung_equality() {
  Outcome out;
  double worst = 0.0;
  for (std::size_t n = 1; n <= 12; ++n) {
    const auto simplex = regular_simplex(n, 1.0);
    const auto meb = min_enclosing_ball(simplex);
    const double ratio = meb.radius / diameter(simplex);
    worst = std::max(worst, std::abs(ratio - jung_constant(n)));
  }
  out.require(worst <= 1e-9, "ratio deviation " + std::to_string(worst));
  out.note("worst |ratio - bound| = " + io::format_double(worst));
  return out;
}

// --- criterion 2: strict ratio bound over 500 random sets ---
Outcome criterion_strict_ratio() {
  Outcome out;
  double closest = 1e300;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const std::size_t m = 2 + (seed * 2654435761u) % 49;
    const std::size_t d = 1 + (seed * 40503u) % 30;
    const auto pts = oracles::gaussian_cloud(m, d, 10'000 + seed,
                                             0.5 + (seed % 5) * 0.5,
                                             (seed % 3) * 0.4 - 0.4);
    const auto meb = min_enclosing_ball(pts);
    const double diam = diameter(pts);
    out.require(meb.radius < diam / std::numbers::sqrt2,
                "strictness failed at seed " + std::to_string(seed));
    const auto q = std::min<std::uint64_t>(d, m - 1);
    out.require(meb.radius <= diam * jung_constant(q) + 1e-7,
                "dimension bound failed at seed " + std::to_string(seed));
    closest = std::min(closest, diam / std::numbers::sqrt2 - meb.radius);
    g_solved.push_back({pts, meb});
  }
  out.note("min strictness margin = " + io::format_double(closest));
  return out;
}

// --- criterion 3: annulus reduction preserves the ball ---
Outcome criterion_annulus_exactness() {
  Outcome out;
  double worst_r = 0.0;
  double worst_c = 0.0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::size_t m = 5 + (seed * 7919) % 40;
    const std::size_t d = 2 + (seed * 104729) % 20;
    const auto pts = oracles::gaussian_cloud(m, d, 20'000 + seed,
                                             0.5 + (seed % 4) * 0.5,
                                             (seed % 5) * 0.25 - 0.5);
    const auto meb = min_enclosing_ball(pts);
    g_solved.push_back({pts, meb});
    for (double frac : {0.1, 0.3, 0.5, 0.7, 0.9}) {
      const auto reduced = annulus_reduction(pts, meb, frac * meb.radius);
      const auto sub = min_enclosing_ball(reduced);
      worst_r = std::max(worst_r, std::abs(sub.radius - meb.radius));
      worst_c = std::max(worst_c, kernels::distance(sub.center, meb.center));
      g_solved.push_back({reduced, sub});
    }
  }
  out.require(worst_r <= 1e-7, "radius drift " + io::format_double(worst_r));
  out.require(worst_c <= 1e-6, "center drift " + io::format_double(worst_c));
  out.note("worst radius drift " + io::format_double(worst_r) +
           ", center drift " + io::format_double(worst_c));
  return out;
}

// --- criterion 4: support identity on every solved instance ---
Outcome criterion_support_identity() {
  Outcome out;
  double worst_rel = 0.0;
  std::size_t checked = 0;
  for (const auto& inst : g_solved) {
    if (inst.meb.radius <= 0.0) continue;
    const double res = support_identity_worst(inst.pts, inst.meb);
    const double budget = 1e-6 * inst.meb.radius * inst.meb.radius;
    worst_rel = std::max(
        worst_rel, res / (inst.meb.radius * inst.meb.radius));
    out.require(res <= budget, "identity failed on an instance");
    ++checked;
  }
  out.note(std::to_string(checked) + " instances, worst relative residual " +
           io::format_double(worst_rel));
  return out;
}

// --- criterion 5: extraction trend on orthonormal truncations ---
Outcome criterion_extraction_trend() {
  Outcome out;
  for (std::size_t m : {std::size_t{8}, std::size_t{32}, std::size_t{128}}) {
    const auto pts = orthonormal_family(m);
    for (double eps : {0.3, 0.1, 0.01}) {
      const double threshold = std::numbers::sqrt2 - eps;
      const auto p_max = std::min<std::uint64_t>(20, m - 1);
      for (std::uint64_t p = 1; p <= p_max; ++p) {
        const auto outcome = extract_greedy(pts, threshold, p);
        out.require(outcome.ok(), "extraction failed at m=" +
                                      std::to_string(m) + " eps=" +
                                      std::to_string(eps) + " p=" +
                                      std::to_string(p));
      }
    }
  }
  const std::vector<double> eps{0.01};
  const std::vector<std::uint64_t> ps{20};
  const auto witness = extremality_witness(orthonormal_family(128), eps, ps);
  out.require(witness.witness_lower_bound.has_value() &&
                  *witness.witness_lower_bound >= 0.975,
              "witness bound below 0.975");
  if (witness.witness_lower_bound) {
    out.note("witness bound at (m=128, p=20, eps=0.01) = " +
             io::format_double(*witness.witness_lower_bound));
  }
  return out;
}

// --- criterion 6: separation-level bound algebra ---
Outcome criterion_separation_bound() {
  Outcome out;
  double worst = 0.0;
  for (std::uint64_t p : {1, 2, 5, 10}) {
    double prev = -1.0;
    for (std::uint64_t n : {4ULL, 16ULL, 100ULL, 10'000ULL, 100'000'000ULL}) {
      const double pd = static_cast<double>(p);
      const double direct = std::sqrt(
          (2.0 - 4.0 / std::sqrt(static_cast<double>(n))) * pd /
          (2.0 * (pd + 1.0)));
      const double got = separation_level_bound(p, n);
      worst = std::max(worst, std::abs(got - direct));
      const double level = 2.0 - 4.0 / std::sqrt(static_cast<double>(n));
      worst = std::max(worst, std::abs(got - simplex_chebyshev_bound(
                                                 p, std::sqrt(level))));
    }
    // monotone in p at fixed n
    for (std::uint64_t n : {16ULL, 10'000ULL}) {
      const double here = separation_level_bound(p, n);
      const double next = separation_level_bound(p + 1, n);
      out.require(next > here, "not increasing in p");
      (void)prev;
      prev = here;
    }
  }
  out.require(worst <= 1e-12, "algebra residual " + io::format_double(worst));
  const double deep = separation_level_bound(10'000, 100'000'000);
  out.require(deep > 0.999, "limit value " + io::format_double(deep));
  out.note("worst algebra residual " + io::format_double(worst) +
           ", bound(1e4, 1e8) = " + io::format_double(deep));
  return out;
}

// --- criterion 7: exact oracles ---
Outcome criterion_exact_oracles() {
  Outcome out;
  std::size_t clique_checks = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const std::size_t m = 4 + (seed * 31) % 9; // 4..12
    const std::size_t d = 2 + seed % 5;
    const auto pts = oracles::gaussian_cloud(m, d, 30'000 + seed);
    std::vector<double> dists;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        dists.push_back(kernels::distance(pts.point(i), pts.point(j)));
      }
    }
    std::sort(dists.begin(), dists.end());
    for (double q : {0.1, 0.3, 0.5, 0.7, 0.9}) {
      const double tau =
          dists[static_cast<std::size_t>(q * (dists.size() - 1))];
      if (!(tau > 0.0)) continue;
      const std::size_t best = oracles::max_clique_exhaustive(pts, tau);
      for (std::uint64_t p = 1; p + 1 <= m; ++p) {
        const auto outcome = extract_exact(pts, tau, p);
        const bool should = best >= p + 1;
        out.require(outcome.ok() == should, "clique existence mismatch");
        if (outcome.ok()) {
          out.require(verify_simplex(pts, outcome.certificate()),
                      "certificate failed verification");
        } else {
          out.require(outcome.failure().best_size == best,
                      "max clique size mismatch");
        }
        ++clique_checks;
      }
    }
  }
  const struct {
    std::size_t m, k;
  } cells[] = {{6, 2}, {8, 2}, {9, 3}};
  for (const auto cell : cells) {
    const auto pts = oracles::gaussian_cloud(cell.m, 3, 40'000 + cell.m);
    const auto cov = covering_radius(pts, cell.k, ProfileMode::exact);
    const double cov_oracle =
        oracles::min_partition_exhaustive(pts, cell.k, true);
    out.require(std::abs(cov.value - cov_oracle) <= 1e-12,
                "covering value mismatch");
    const auto par = partition_diameter(pts, cell.k, ProfileMode::exact);
    const double par_oracle =
        oracles::min_partition_exhaustive(pts, cell.k, false);
    out.require(std::abs(par.value - par_oracle) <= 1e-12,
                "partition value mismatch");
  }
  out.note(std::to_string(clique_checks) +
           " clique comparisons + 3 partition cells");
  return out;
}

// --- criterion 8: profile trends on the orthonormal family ---
Outcome criterion_profile_trends() {
  Outcome out;
  GeneratorSpec spec;
  spec.family = "orthonormal";
  const std::vector<std::size_t> m_grid{8, 16, 32};
  const std::vector<std::size_t> k_grid{2, 4};
  const auto profiles = mnc_profile(spec, m_grid, k_grid, ProfileMode::exact);
  double prev_rho4 = 0.0;
  for (const auto& pair : profiles) {
    const double m = static_cast<double>(pair.m);
    for (std::size_t i = 0; i < pair.partition.entries.size(); ++i) {
      const auto& par = pair.partition.entries[i];
      out.require(par.value == std::sqrt(2.0),
                  "delta(" + std::to_string(par.k) + "," +
                      std::to_string(pair.m) + ") != sqrt(2) exactly");
      const auto& cov = pair.covering.entries[i];
      const double closed = std::sqrt(1.0 - static_cast<double>(cov.k) / m);
      out.require(std::abs(cov.value - closed) <= 1e-9,
                  "rho(" + std::to_string(cov.k) + "," +
                      std::to_string(pair.m) + ") off the closed form");
      if (cov.k == 4) {
        out.require(cov.value > prev_rho4, "rho(4, m) not increasing");
        prev_rho4 = cov.value;
      }
    }
  }
  // the (8,2) cell is also validated against the plain enumeration oracle
  const double brute =
      oracles::min_partition_exhaustive(orthonormal_family(8), 2, true);
  out.require(std::abs(brute - std::sqrt(0.75)) <= 1e-9,
              "(8,2) brute-force cross-check failed");
  out.note("rho(4,m) climbed to " + io::format_double(prev_rho4));
  return out;
}

// --- criterion 9: generated families hit their documented geometry ---
Outcome criterion_family_fidelity() {
  Outcome out;
  for (double gamma : {0.3, 1.0, std::numbers::sqrt2}) {
    const auto pts = example2(gamma, 32);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        out.require(std::abs(kernels::distance(pts.point(i), pts.point(j)) -
                             gamma) <= 1e-12,
                    "pairwise distance drift at gamma=" +
                        std::to_string(gamma));
      }
    }
  }
  const auto cauchy = example1_cauchy(32);
  for (std::size_t n = 0; n < cauchy.size(); ++n) {
    double norm_sq = 0.0;
    for (double v : cauchy.point(n)) norm_sq += v * v;
    out.require(std::abs(std::sqrt(norm_sq) - 1.0) <= 1e-12,
                "cauchy norm drift at n=" + std::to_string(n));
  }
  for (double gamma : {0.3, 1.0}) {
    const auto u = union_of({example1(32), example2(gamma, 32)});
    ChebyshevResult limit;
    limit.center.assign(u.dim(), 0.0);
    limit.radius = 1.0;
    const auto slice = sphere_slice_mnc(u, limit, 1e-9);
    out.require(slice.indices.size() == 32, "slice is not the second family");
    for (std::size_t i = 0; i < slice.indices.size(); ++i) {
      out.require(slice.indices[i] == 32 + i, "slice picked a wrong point");
    }
    for (const auto& e : slice.profile.entries) {
      if (e.k < 32) {
        out.require(std::abs(e.value - gamma) <= 1e-12,
                    "slice delta != gamma at k=" + std::to_string(e.k));
      }
    }
  }
  out.note("pairwise, norm and slice checks all within 1e-12");
  return out;
}

// --- criterion 10: CLI contract ---
struct CliRun {
  int exit_code = -1;
  std::string out;
};

fs::path cli_dir() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / "extremal_acceptance_cli";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

CliRun run_cli(const std::string& args) {
  const fs::path out = cli_dir() / "stdout.txt";
  const std::string cmd = std::string(EXTREMAL_KIT_BIN) + " " + args + " > " +
                          out.string() + " 2> " +
                          (cli_dir() / "stderr.txt").string();
  const int status = std::system(cmd.c_str());
  CliRun r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(out);
  std::stringstream buffer;
  buffer << in.rdbuf();
  r.out = buffer.str();
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Outcome criterion_cli_contract() {
  Outcome out;
  const auto dir = cli_dir();

  // byte-stable generate -> analyze round trip
  const auto csv1 = dir / "f1.csv";
  const auto csv2 = dir / "f2.csv";
  out.require(run_cli("generate --family example2 --m 8 --gamma 1 --out " +
                      csv1.string())
                      .exit_code == 0,
              "generate failed");
  out.require(run_cli("generate --family example2 --m 8 --gamma 1 --out " +
                      csv2.string())
                      .exit_code == 0,
              "generate failed");
  out.require(slurp(csv1) == slurp(csv2), "generate not byte-stable");
  const auto parsed = io::read_point_csv(csv1);
  out.require(parsed.coords() == example2(1.0, 8).coords(),
              "round trip lost precision");
  const auto rep1 = dir / "r1.json";
  const auto rep2 = dir / "r2.json";
  out.require(run_cli("analyze --input " + csv1.string() + " --out " +
                      rep1.string())
                      .exit_code == 0,
              "analyze failed");
  out.require(run_cli("analyze --input " + csv1.string() + " --out " +
                      rep2.string())
                      .exit_code == 0,
              "analyze failed");
  out.require(slurp(rep1) == slurp(rep2), "analyze not deterministic");

  // six scripted failure scenarios against the documented exit codes
  int scenarios_ok = 0;
  {
    const auto malformed = dir / "malformed.csv";
    std::ofstream f(malformed);
    f << "1,2\n3,oops\n";
    f.close();
    scenarios_ok +=
        run_cli("analyze --input " + malformed.string()).exit_code == 2;
  }
  scenarios_ok +=
      run_cli("analyze --input " + (dir / "missing.csv").string())
          .exit_code == 2;
  {
    const auto singleton = dir / "singleton.csv";
    std::ofstream f(singleton);
    f << "1,2,3\n";
    f.close();
    scenarios_ok +=
        run_cli("analyze --input " + singleton.string()).exit_code == 3;
  }
  scenarios_ok +=
      run_cli("generate --family example2 --m 8 --gamma 3").exit_code == 3;
  {
    const auto cloud = dir / "cloud.csv";
    io::write_point_csv(cloud, random_sphere(120, 6, 11).scaled(2.0));
    scenarios_ok += run_cli("analyze --input " + cloud.string() +
                            " --coarse-budget 1 --pivot-budget 0")
                        .exit_code == 4;
  }
  {
    auto j = nlohmann::json::parse(slurp(rep1));
    j["radius"] = j["radius"].get<double>() + 0.1;
    j["chebyshev"]["radius"] = j["radius"];
    const auto bad = dir / "corrupted.json";
    std::ofstream f(bad);
    f << j.dump(2) << "\n";
    f.close();
    scenarios_ok += run_cli("verify --input " + csv1.string() + " --report " +
                            bad.string())
                        .exit_code == 5;
  }
  out.require(scenarios_ok == 6, "only " + std::to_string(scenarios_ok) +
                                     "/6 failure scenarios matched");
  out.note("round trip byte-stable; 6/6 failure scenarios matched");
  return out;
}

struct Criterion {
  int id;
  const char* name;
  std::function<Outcome()> run;
  double time_limit_s; // 0 = no limit stated
};

} // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "Jung equality on regular simplices", criterion_jung_equality, 1.0},
      {2, "strict ratio bound on random sets", criterion_strict_ratio, 30.0},
      {3, "annulus reduction exactness", criterion_annulus_exactness, 60.0},
      {4, "support identity on all solved instances",
       criterion_support_identity, 0.0},
      {5, "extraction trend on orthonormal truncations",
       criterion_extraction_trend, 30.0},
      {6, "separation-level bound algebra", criterion_separation_bound, 0.0},
      {7, "exact-oracle equivalence", criterion_exact_oracles, 300.0},
      {8, "profile trends on the orthonormal family",
       criterion_profile_trends, 0.0},
      {9, "constructed-family fidelity", criterion_family_fidelity, 0.0},
      {10, "CLI contract", criterion_cli_contract, 0.0},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome = criterion.run();
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (criterion.time_limit_s > 0.0 && elapsed > criterion.time_limit_s) {
      outcome.pass = false;
      outcome.detail = "time limit " + std::to_string(criterion.time_limit_s) +
                       "s exceeded";
    }
    std::printf("[%2d] %s  %s (%s; %.2fs)\n", criterion.id,
                outcome.pass ? "PASS" : "FAIL", criterion.name,
                outcome.detail.c_str(), elapsed);
    std::fflush(stdout);
    if (!outcome.pass) ++failures;
  }
  std::printf("acceptance: %zu/%zu criteria passed\n",
              criteria.size() - failures, criteria.size());
  return failures;
}
