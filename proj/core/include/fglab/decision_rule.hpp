#pragma once

#include "fglab/linear_model.hpp"
#include "fglab/types.hpp"

namespace fglab {

// First-order solution of the slack-regime system: the recursion every path
// follows once both bounds have stopped binding,
//
//   y_t = transition * y_{t-1} + impact * eps_t.
//
// The diagnostics record how well the rule solves its defining identities
//   lead*P^2 + contemp*P + lag = 0 and (lead*P + contemp)*Q + innov = 0.
struct DecisionRule {
  Mat8 transition = Mat8::Zero();
  ImpactMat impact = ImpactMat::Zero();
  double residual_transition = 0.0;
  double residual_impact = 0.0;
  double spectral_radius = 0.0;
  int iterations = 0;
};

struct ReferenceRuleOptions {
  double tol = 1e-14;
  int max_iterations = 5000;
  double residual_tol = 1e-10;
};

// Number of generalized eigenvalues of the regime's companion pencil outside
// the unit circle (infinite ones included). The system is determinate
// exactly when this equals the number of non-predetermined variables, which
// is var::count here since lagged variables enter as extra states.
int count_unstable_roots(const RegimeMatrices& m, double tol = 1e-8);

// Solves the slack regime for its stable decision rule by fixed-point
// iteration on the quadratic matrix equation. Throws SolverError:
// indeterminate / explosive when the root count rules out a unique stable
// solution, no_convergence when iteration stalls, singular_system when a
// step matrix loses rank.
DecisionRule solve_reference_rule(const LinearModel& model,
                                  const ReferenceRuleOptions& opts = {});

}  // namespace fglab
