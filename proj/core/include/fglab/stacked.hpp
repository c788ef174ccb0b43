#pragma once

#include "fglab/simulation.hpp"

namespace fglab {

// How the stacked system is closed at t = horizon.
//
// reference_rule imposes y_{T+1} = P y_T: beyond the horizon the path
// follows the slack-regime rule, which is exact whenever all binding spells
// end before T. steady_state imposes y_{T+1} = 0 instead and leaves a
// truncation error of order spectral_radius^T.
enum class TerminalCondition { reference_rule, steady_state };

struct StackedOptions {
  int horizon = 60;
  int max_iterations = 50;
  double regime_tol = 1e-9;
  TerminalCondition terminal = TerminalCondition::reference_rule;
};

// Solves all horizon periods simultaneously as one sparse linear system
// under a fixed regime assignment. Independent of the backward recursion in
// simulate_with_regimes; the two must agree on self-consistent sequences,
// which is what the cross-validation tests exercise.
SimulationPath solve_stacked_fixed(const LinearModel& model,
                                   const DecisionRule& rule,
                                   const RegimeSequence& regimes,
                                   const ShockVec& impulse,
                                   const StackedOptions& opts = {});

// Active-set counterpart of solve_occbin: repeatedly solve the stacked
// system, re-derive where the bounds bind, stop at a fixed point. Throws
// SolverError: oscillation on a two-cycle, no_convergence at the iteration
// cap, singular_system when the stacked matrix cannot be factorized.
SimulationPath solve_stacked_newton(const LinearModel& model,
                                    const DecisionRule& rule,
                                    const ConstraintPolicies& policies,
                                    const ShockVec& impulse,
                                    const StackedOptions& opts = {});

}  // namespace fglab
