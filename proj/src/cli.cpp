#include "extremal/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "extremal/geometry.hpp"
#include "extremal/io.hpp"
#include "extremal/jung.hpp"
#include "extremal/simplex_extract.hpp"
#include "extremal/verify_suite.hpp"

namespace extremal {

namespace {

struct ResolvedInput {
  PointSet pts;
  std::string source;
  std::vector<GeneratorSpec> specs; // empty when loaded from a CSV
};

PointSet build_specs(const std::vector<GeneratorSpec>& specs) {
  if (specs.size() == 1) {
    return build_family(specs.front());
  }
  std::vector<PointSet> parts;
  parts.reserve(specs.size());
  for (const auto& spec : specs) {
    parts.push_back(build_family(spec));
  }
  return union_of(parts);
}

std::string describe_specs(const std::vector<GeneratorSpec>& specs) {
  std::string out;
  for (std::size_t i = 0; i < specs.size(); ++i) {
    if (i > 0) out += "+";
    out += specs[i].family + "(m=" + std::to_string(specs[i].m) + ")";
  }
  return out;
}

ResolvedInput resolve_input(const RunConfig& cfg, bool require_generator) {
  if (cfg.input && cfg.family) {
    throw DomainError("exactly one input source: pass --input or --family");
  }
  if (cfg.input) {
    if (cfg.input->extension() == ".json") {
      auto specs = io::read_input_config(*cfg.input);
      if (cfg.seed) {
        for (auto& spec : specs) spec.params["seed"] =
            static_cast<double>(*cfg.seed);
      }
      PointSet pts = build_specs(specs);
      return {std::move(pts), describe_specs(specs), std::move(specs)};
    }
    if (require_generator) {
      throw DomainError(cfg.command +
                        " requires a generator input (--family or a JSON "
                        "config)");
    }
    return {io::read_point_csv(*cfg.input), cfg.input->string(), {}};
  }
  if (cfg.family) {
    GeneratorSpec spec = *cfg.family;
    if (cfg.seed) spec.params["seed"] = static_cast<double>(*cfg.seed);
    PointSet pts = build_family(spec);
    return {std::move(pts), describe_specs({spec}), {spec}};
  }
  throw DomainError("an input source is required: --input or --family");
}

void emit_report(const RunConfig& cfg, const nlohmann::ordered_json& report) {
  const std::string text = report.dump(2) + "\n";
  if (cfg.out) {
    io::write_text_atomic(*cfg.out, text);
  } else {
    std::cout << text;
  }
}

nlohmann::ordered_json witness_to_json(const WitnessResult& witness) {
  nlohmann::ordered_json j;
  j["normalization_scale"] = witness.scale;
  if (witness.witness_lower_bound) {
    j["witness_lower_bound"] = *witness.witness_lower_bound;
  } else {
    j["witness_lower_bound"] = nullptr;
  }
  auto entries = nlohmann::ordered_json::array();
  for (const auto& e : witness.entries) {
    nlohmann::ordered_json row;
    row["eps"] = e.eps;
    row["p"] = e.p;
    row["success"] = e.success;
    if (e.success) {
      row["min_edge"] = e.min_edge;
      row["bound"] = e.bound;
    } else {
      row["best_size"] = e.best_size;
      row["outcome"] = e.failure_mode == FailureMode::proven_nonexistent
                           ? "proven-nonexistent"
                           : "greedy-exhausted";
    }
    entries.push_back(std::move(row));
  }
  j["entries"] = std::move(entries);
  if (witness.best_certificate) {
    const auto& cert = *witness.best_certificate;
    nlohmann::ordered_json c;
    c["vertex_indices"] = cert.vertex_indices;
    c["p"] = cert.p;
    c["threshold"] = cert.threshold;
    c["min_edge"] = cert.min_edge;
    j["best_certificate"] = std::move(c);
  } else {
    j["best_certificate"] = nullptr;
  }
  return j;
}

int cmd_analyze(const RunConfig& cfg) {
  const auto input = resolve_input(cfg, false);
  SolveOptions solve = cfg.solve;
  solve.tol = cfg.tol;
  const ExtremalityReport rep = extremality_report(input.pts, 1e-6, solve);

  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  j["command"] = "analyze";
  j["source"] = input.source;
  j["points"] = rep.points;
  j["distinct_points"] = rep.distinct_points;
  j["dim"] = rep.dim;
  j["diameter"] = rep.diameter;
  j["radius"] = rep.radius;
  j["ratio"] = rep.ratio;
  j["finite_dim_bound"] = rep.finite_dim_bound;
  j["hilbert_bound"] = rep.hilbert_bound;
  j["classification"] = to_string(rep.classification);
  j["tolerance"] = cfg.tol;
  j["chebyshev"] = io::to_json(rep.meb);

  if (!cfg.eps_grid.empty() || !cfg.p_grid.empty()) {
    const auto eps =
        cfg.eps_grid.empty() ? default_eps_grid() : cfg.eps_grid;
    const auto ps = cfg.p_grid.empty() ? default_p_grid(input.pts.size())
                                       : cfg.p_grid;
    WitnessOptions wopts;
    wopts.use_exact = cfg.exact_requested;
    const WitnessResult witness =
        extremality_witness(input.pts, eps, ps, wopts);
    j["witness"] = witness_to_json(witness);
    if (witness.witness_lower_bound) {
      j["witness_lower_bound"] = *witness.witness_lower_bound;
    }
  }

  std::cout << "analyze: " << rep.points << " points, dim " << rep.dim << " ("
            << rep.distinct_points << " distinct)\n"
            << "  diameter " << io::format_double(rep.diameter) << "\n"
            << "  radius   " << io::format_double(rep.radius) << "\n"
            << "  ratio    " << io::format_double(rep.ratio) << "\n"
            << "  bounds   finite-dim " << io::format_double(rep.finite_dim_bound)
            << ", hilbert " << io::format_double(rep.hilbert_bound) << "\n"
            << "  classification " << to_string(rep.classification) << "\n"
            << "  certificate residual " << io::format_double(rep.meb.residual)
            << " (tolerance " << io::format_double(cfg.tol) << ")\n";
  emit_report(cfg, j);
  return exit_ok;
}

int cmd_extract(const RunConfig& cfg) {
  const auto input = resolve_input(cfg, false);
  const auto eps = cfg.eps_grid.empty() ? default_eps_grid() : cfg.eps_grid;
  const auto ps =
      cfg.p_grid.empty() ? default_p_grid(input.pts.size()) : cfg.p_grid;
  WitnessOptions wopts;
  wopts.use_exact = cfg.exact_requested;
  const WitnessResult witness = extremality_witness(input.pts, eps, ps, wopts);

  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  j["command"] = "extract";
  j["source"] = input.source;
  j["points"] = input.pts.size();
  j["dim"] = input.pts.dim();
  j["mode"] = cfg.exact_requested ? "exact" : "greedy";
  j["witness"] = witness_to_json(witness);

  std::size_t successes = 0;
  for (const auto& e : witness.entries) {
    if (e.success) ++successes;
  }
  std::cout << "extract: " << successes << "/" << witness.entries.size()
            << " grid cells produced a certificate\n";
  if (witness.witness_lower_bound) {
    std::cout << "  witness lower bound "
              << io::format_double(*witness.witness_lower_bound)
              << " (normalized units)\n";
  } else {
    std::cout << "  no certificate found on the grid\n";
  }
  emit_report(cfg, j);
  return exit_ok;
}

int cmd_profile(const RunConfig& cfg) {
  const auto input = resolve_input(cfg, false);
  std::vector<std::size_t> k_grid = cfg.k_grid;
  if (k_grid.empty()) {
    k_grid = {1, 2, 4, 8};
  }
  const ProfileMode mode =
      cfg.exact_requested ? ProfileMode::exact : ProfileMode::greedy;

  struct Row {
    std::string family;
    std::size_t m;
    ProfileEntry cov;
    ProfileEntry par;
  };
  std::vector<Row> rows;

  if (!input.specs.empty() && !cfg.m_grid.empty()) {
    // rebuild the family (or union) at each m in the grid
    double limit = 0.0;
    for (const auto& spec : input.specs) {
      limit = std::max(limit, family_limit_radius(spec));
    }
    for (std::size_t m : cfg.m_grid) {
      std::vector<GeneratorSpec> specs = input.specs;
      for (auto& spec : specs) spec.m = m;
      PointSet pts = build_specs(specs);
      if (limit != 1.0) pts = pts.scaled(1.0 / limit);
      const auto pair = profile_point_set(pts, k_grid, mode, cfg.caps);
      for (std::size_t i = 0; i < pair.covering.entries.size(); ++i) {
        rows.push_back({describe_specs(specs), m, pair.covering.entries[i],
                        pair.partition.entries[i]});
      }
    }
  } else {
    const auto pair = profile_point_set(input.pts, k_grid, mode, cfg.caps);
    for (std::size_t i = 0; i < pair.covering.entries.size(); ++i) {
      rows.push_back({input.source, input.pts.size(),
                      pair.covering.entries[i], pair.partition.entries[i]});
    }
  }

  if (cfg.format == "json") {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["command"] = "profile";
    auto arr = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
      arr.push_back({{"family", row.family},
                     {"m", row.m},
                     {"k", row.cov.k},
                     {"mode", to_string(row.cov.mode)},
                     {"rho", row.cov.value},
                     {"delta", row.par.value}});
    }
    j["rows"] = std::move(arr);
    emit_report(cfg, j);
  } else {
    std::string csv = "family,m,k,mode,rho,delta\n";
    for (const auto& row : rows) {
      csv += row.family + "," + std::to_string(row.m) + "," +
             std::to_string(row.cov.k) + "," + to_string(row.cov.mode) + "," +
             io::format_double(row.cov.value) + "," +
             io::format_double(row.par.value) + "\n";
    }
    if (cfg.out) {
      io::write_text_atomic(*cfg.out, csv);
      std::cout << "profile: wrote " << rows.size() << " rows to "
                << cfg.out->string() << "\n";
    } else {
      std::cout << csv;
    }
  }
  return exit_ok;
}

int cmd_generate(const RunConfig& cfg) {
  const auto input = resolve_input(cfg, true);
  const std::string csv = io::point_csv_string(input.pts);
  if (cfg.out) {
    io::write_text_atomic(*cfg.out, csv);
    std::cout << "generate: wrote " << input.pts.size() << " points of dim "
              << input.pts.dim() << " to " << cfg.out->string() << "\n";
  } else {
    std::cout << csv;
  }
  return exit_ok;
}

int cmd_verify(const RunConfig& cfg) {
  const auto input = resolve_input(cfg, false);
  std::vector<InvariantCheck> checks;
  if (cfg.report) {
    std::ifstream in(*cfg.report);
    if (!in) {
      throw ParseError("cannot open report file: " + cfg.report->string());
    }
    nlohmann::json report;
    try {
      in >> report;
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(cfg.report->filename().string() + ": " + e.what());
    }
    checks = check_report_against(input.pts, report, cfg.tol);
  } else {
    SolveOptions solve = cfg.solve;
    solve.tol = cfg.tol;
    checks = run_invariant_suite(input.pts, cfg.tol, solve);
  }
  std::size_t passed = 0;
  for (const auto& check : checks) {
    std::cout << (check.pass ? "PASS " : "FAIL ") << check.name
              << " (residual=" << io::format_double(check.residual) << ")";
    if (!check.note.empty()) {
      std::cout << " [" << check.note << "]";
    }
    std::cout << "\n";
    if (check.pass) ++passed;
  }
  std::cout << "verify: " << passed << "/" << checks.size()
            << " invariants passed\n";
  if (cfg.out) {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["command"] = "verify";
    j["source"] = input.source;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& check : checks) {
      arr.push_back({{"name", check.name},
                     {"pass", check.pass},
                     {"residual", check.residual},
                     {"note", check.note}});
    }
    j["checks"] = std::move(arr);
    io::write_text_atomic(*cfg.out, j.dump(2) + "\n");
  }
  return passed == checks.size() ? exit_ok : exit_invariant_failure;
}

} // namespace

int run_command(const RunConfig& cfg) {
  if (cfg.command == "analyze") return cmd_analyze(cfg);
  if (cfg.command == "extract") return cmd_extract(cfg);
  if (cfg.command == "profile") return cmd_profile(cfg);
  if (cfg.command == "generate") return cmd_generate(cfg);
  if (cfg.command == "verify") return cmd_verify(cfg);
  throw DomainError("unknown command: \"" + cfg.command + "\"");
}

} // namespace extremal
