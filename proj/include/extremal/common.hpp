#pragma once

#include <stdexcept>
#include <string>

namespace extremal {

// Exit codes used by the CLI; library error types map onto them 1:1.
inline constexpr int exit_ok = 0;
inline constexpr int exit_parse_error = 2;
inline constexpr int exit_domain_error = 3;
inline constexpr int exit_non_convergence = 4;
inline constexpr int exit_invariant_failure = 5;

class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input files or configuration. Carries a 1-based line number
/// when the problem is tied to a specific line of a text input.
class ParseError : public Error {
public:
  explicit ParseError(const std::string& what, long line = -1)
      : Error(line >= 0 ? what + " (line " + std::to_string(line) + ")" : what),
        line_(line) {}
  long line() const noexcept { return line_; }

private:
  long line_;
};

/// Inputs outside an operation's domain: bad dimensions, parameter ranges,
/// preconditions on the point count.
class DomainError : public Error {
public:
  using Error::Error;
};

/// Exact-mode instance exceeds the configured size caps; greedy mode applies.
class SizeCapError : public DomainError {
public:
  using DomainError::DomainError;
};

/// Inputs that violate invariants they were claimed to satisfy
/// (e.g. an annulus reduction emptied by a bogus certificate).
class InconsistencyError : public Error {
public:
  using Error::Error;
};

} // namespace extremal
