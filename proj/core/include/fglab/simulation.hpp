#pragma once

#include <array>
#include <vector>

#include "fglab/decision_rule.hpp"
#include "fglab/linear_model.hpp"
#include "fglab/types.hpp"

namespace fglab {

// How one country's lower bound is treated along a path.
//
// enforce=false removes the bound entirely (the counterfactual unconstrained
// rule). forced_window = w > 0 pins the rate at the bound for periods
// 1..w even after the rule would lift off; this is how calendar-based
// forward guidance enters the solvers.
struct ConstraintPolicy {
  bool enforce = true;
  int forced_window = 0;
};

using ConstraintPolicies = std::array<ConstraintPolicy, 2>;

// Which bound binds when, for t = 1..horizon. binding[t-1][country].
struct RegimeSequence {
  std::vector<std::array<bool, 2>> binding;

  static RegimeSequence all_slack(int horizon) {
    RegimeSequence seq;
    seq.binding.assign(horizon, {false, false});
    return seq;
  }

  int horizon() const { return static_cast<int>(binding.size()); }

  bool is_binding(int t, Country c) const {  // t is 1-based
    return binding[t - 1][country_index(c)];
  }

  // Last period where this country's bound binds; 0 when it never does.
  int last_binding(Country c) const {
    for (int t = horizon(); t >= 1; --t)
      if (binding[t - 1][country_index(c)]) return t;
    return 0;
  }

  // Last period where any bound binds; 0 when the path is slack throughout.
  int last_binding_any() const {
    for (int t = horizon(); t >= 1; --t)
      if (binding[t - 1][0] || binding[t - 1][1]) return t;
    return 0;
  }

  bool operator==(const RegimeSequence& other) const {
    return binding == other.binding;
  }
};

struct SolverDiagnostics {
  int iterations = 0;
  // Largest violation of the rate-bound complementarity conditions along
  // the returned path (see max_complementarity_violation).
  double complementarity = 0.0;
  // Largest path change when the solve is repeated at twice the horizon;
  // only set when the horizon guard ran.
  double horizon_sensitivity = 0.0;
  bool horizon_checked = false;
};

// A perfect-foresight path for t = 1..horizon after an impulse at t = 1.
// values(t-1, v) is variable v at period t; the pre-impulse state is zero
// unless a solver variant says otherwise.
struct SimulationPath {
  Eigen::MatrixXd values;
  RegimeSequence regimes;
  SolverDiagnostics diagnostics;

  int horizon() const { return static_cast<int>(values.rows()); }
  double at(int t, int v) const { return values(t - 1, v); }  // t is 1-based
};

// Re-derives the binding flags a path implies: a bound binds at (t, c) when
// t is inside the forced window, or the shadow rate falls below bound - tol.
// This is the fixed-point map both solvers iterate on.
RegimeSequence derive_regimes(const LinearModel& model,
                              const Eigen::MatrixXd& values,
                              const ConstraintPolicies& policies,
                              const ShockVec& impulse, double tol);

// Largest violation of the regime conditions along a path: in slack periods
// the rate must equal the shadow rate and clear the bound; in binding
// periods the rate must sit on the bound, and beyond the forced window the
// shadow rate must not exceed it. Zero (up to tolerance) certifies the path
// solves the piecewise model.
double max_complementarity_violation(const LinearModel& model,
                                     const SimulationPath& path,
                                     const ConstraintPolicies& policies,
                                     const ShockVec& impulse);

}  // namespace fglab
