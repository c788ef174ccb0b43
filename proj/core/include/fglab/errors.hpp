#pragma once

#include <stdexcept>
#include <string>

namespace fglab {

// Bad user input: malformed config files, unknown keys, invalid parameter
// values, inconsistent policy requests. Mapped to its own CLI exit code.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

enum class SolverFailure {
  indeterminate,    // too few unstable roots, multiple stable solutions
  explosive,        // too many unstable roots, no stable solution
  no_convergence,   // iteration cap hit without a fixed point
  oscillation,      // regime sequence alternates between two candidates
  singular_system,  // a linear system inside the solver lost rank
};

// Numerical failure inside a solver. Mapped to a CLI exit code distinct from
// config errors so scripted callers can tell the two apart.
class SolverError : public std::runtime_error {
 public:
  SolverError(SolverFailure kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  SolverFailure kind() const { return kind_; }

 private:
  SolverFailure kind_;
};

}  // namespace fglab
