#pragma once

#include "fglab/simulation.hpp"

namespace fglab {

struct OccbinOptions {
  int horizon = 60;
  int max_iterations = 50;
  double regime_tol = 1e-9;
  // After convergence, re-solve at twice the horizon and require the first
  // `horizon` periods to agree within horizon_tol, so a too-short horizon
  // fails loudly instead of biasing the path.
  bool horizon_guard = true;
  double horizon_tol = 1e-8;
};

// Solves the model for a given regime assignment by backward recursion:
// time-varying rules y_t = P_t y_{t-1} + k_t from the last binding period
// down to t = 1, with the reference rule taking over afterwards. The
// returned path is exact for this regime sequence; nothing checks that the
// sequence is self-consistent.
SimulationPath simulate_with_regimes(const LinearModel& model,
                                     const DecisionRule& rule,
                                     const RegimeSequence& regimes,
                                     const Vec8& initial_state,
                                     const ShockVec& impulse);

// Guess-and-verify solver for the piecewise model: simulate under a guessed
// regime sequence, re-derive where the bounds bind, repeat to a fixed point.
// Starts from the forced windows alone. Throws SolverError: oscillation on
// a two-cycle of regime guesses, no_convergence when the iteration cap or
// the horizon guard trips.
SimulationPath solve_occbin(const LinearModel& model, const DecisionRule& rule,
                            const ConstraintPolicies& policies,
                            const ShockVec& impulse,
                            const OccbinOptions& opts = {});

}  // namespace fglab
