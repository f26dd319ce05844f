#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "extremal/chebyshev.hpp"
#include "extremal/generators.hpp"
#include "extremal/mnc.hpp"

namespace extremal {

/// One batch command. Exactly one input source: --input (CSV points or JSON
/// family config) or the --family flags.
struct RunConfig {
  std::string command; // analyze | extract | profile | generate | verify

  std::optional<std::filesystem::path> input;
  std::optional<GeneratorSpec> family;

  std::vector<std::size_t> m_grid; // profile
  std::vector<std::size_t> k_grid;
  std::vector<double> eps_grid;
  std::vector<std::uint64_t> p_grid;

  ProfileMode mode = ProfileMode::greedy;
  bool exact_requested = false;
  double tol = 1e-9;
  std::optional<std::uint64_t> seed;
  std::optional<std::filesystem::path> out;
  std::string format; // csv | json; empty = per-command default
  std::optional<std::filesystem::path> report; // verify: re-check a report

  SolveOptions solve;
  ExactCaps caps;
};

/// Executes the command, writing the report to config.out (or stdout) and a
/// human-readable summary to stdout. Throws the library error types; the
/// binary maps them to exit codes. Returns exit_ok or exit_invariant_failure
/// (verify with failing checks).
int run_command(const RunConfig& config);

} // namespace extremal
