// extremal-kit: batch analysis of finite point sets: Chebyshev
// centers/radii with convex-hull certificates, Jung-bound extremality
// classification, long-edge simplex extraction, and covering/partition
// profiles.

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "extremal/cli.hpp"
#include "extremal/common.hpp"
#include "extremal/generators.hpp"

namespace {

void apply_thread_cap() {
#ifdef _OPENMP
  if (const char* env = std::getenv("EXTREMAL_KIT_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) {
      omp_set_num_threads(n);
    }
  }
#endif
}

void add_common_options(CLI::App* cmd, extremal::RunConfig& cfg,
                        std::string& family_id, double& gamma, double& scale,
                        double& edge, std::size_t& dim,
                        std::vector<std::size_t>& m_values,
                        std::string& mode) {
  cmd->add_option("--input", cfg.input,
                  "Input file: point-cloud CSV or JSON family config");
  cmd->add_option("--family", family_id,
                  "Generator family id (see `generate --help`)")
      ->check(CLI::IsMember(extremal::known_families()));
  cmd->add_option("--m", m_values,
                  "Truncation size(s); a list forms the profile m-grid")
      ->delimiter(',');
  cmd->add_option("--gamma", gamma, "example2 pairwise distance, in (0, sqrt 2]");
  cmd->add_option("--scale", scale, "scaled-orthonormal factor s > 0");
  cmd->add_option("--edge", edge, "regular-simplex edge length");
  cmd->add_option("--d", dim, "random-sphere ambient dimension");
  cmd->add_option("--seed", cfg.seed, "Seed for the random families");
  cmd->add_option("--k-grid", cfg.k_grid, "Profile k values")->delimiter(',');
  cmd->add_option("--eps-grid", cfg.eps_grid,
                  "Extraction eps values in (0, sqrt 2)")
      ->delimiter(',');
  cmd->add_option("--p-grid", cfg.p_grid, "Extraction simplex orders p")
      ->delimiter(',');
  cmd->add_option("--tol", cfg.tol, "Certificate tolerance (default 1e-9)");
  cmd->add_option("--out", cfg.out, "Output file (default: stdout)");
  cmd->add_option("--format", cfg.format, "Report format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--coarse-budget", cfg.solve.coarse_budget,
                  "Solver core-set iteration budget");
  cmd->add_option("--pivot-budget", cfg.solve.pivot_budget,
                  "Solver active-set pivot budget");
  cmd->add_option("--mode", mode, "exact or greedy (default greedy)")
      ->check(CLI::IsMember({"exact", "greedy"}));
}

} // namespace

int main(int argc, char** argv) {
  apply_thread_cap();

  CLI::App app{"extremal-kit: Chebyshev centers, Jung bounds, simplex "
               "extraction and covering/partition profiles for finite point "
               "sets"};
  app.require_subcommand(1);

  extremal::RunConfig cfg;
  std::string family_id;
  std::string mode = "greedy";
  double gamma = 1.0, scale = 1.0, edge = 1.0;
  std::size_t dim = 3;
  std::vector<std::size_t> m_values;

  const char* names[] = {"analyze", "extract", "profile", "generate",
                         "verify"};
  const char* descriptions[] = {
      "Diameter, Chebyshev radius/center and extremality classification",
      "Long-edge simplex certificates and witness lower bounds",
      "Covering-radius and partition-diameter profiles over (m, k) grids",
      "Write a generator family as a point-cloud CSV",
      "Run the invariant suite against an input (or re-check a report)"};
  for (int i = 0; i < 5; ++i) {
    auto* cmd = app.add_subcommand(names[i], descriptions[i]);
    add_common_options(cmd, cfg, family_id, gamma, scale, edge, dim, m_values,
                       mode);
    if (std::string(names[i]) == "verify") {
      cmd->add_option("--report", cfg.report,
                      "Analyze-report JSON to validate against the input");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      return app.exit(e); // --help
    }
    app.exit(e);
    return extremal::exit_parse_error;
  }

  for (auto* sub : app.get_subcommands()) {
    cfg.command = sub->get_name();
  }
  cfg.exact_requested = (mode == "exact");
  cfg.mode = cfg.exact_requested ? extremal::ProfileMode::exact
                                 : extremal::ProfileMode::greedy;
  if (!family_id.empty()) {
    extremal::GeneratorSpec spec;
    spec.family = family_id;
    spec.m = m_values.empty() ? 0 : m_values.front();
    if (family_id == "example2") spec.params["gamma"] = gamma;
    if (family_id == "scaled-orthonormal") spec.params["s"] = scale;
    if (family_id == "regular-simplex") spec.params["edge"] = edge;
    if (family_id == "random-sphere") {
      spec.params["d"] = static_cast<double>(dim);
    }
    cfg.family = spec;
  }
  cfg.m_grid = m_values;

  try {
    return extremal::run_command(cfg);
  } catch (const extremal::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return extremal::exit_parse_error;
  } catch (const extremal::NonConvergenceError& e) {
    std::cerr << "non-convergence: " << e.what() << "\n";
    return extremal::exit_non_convergence;
  } catch (const extremal::InconsistencyError& e) {
    std::cerr << "invariant failure: " << e.what() << "\n";
    return extremal::exit_invariant_failure;
  } catch (const extremal::DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return extremal::exit_domain_error;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
