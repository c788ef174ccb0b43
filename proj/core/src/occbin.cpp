#include "fglab/occbin.hpp"

#include <optional>
#include <string>
#include <vector>

#include "fglab/errors.hpp"

namespace fglab {

namespace {

void validate_policies(const ConstraintPolicies& policies, int horizon) {
  for (const ConstraintPolicy& pol : policies) {
    if (pol.forced_window < 0)
      throw ConfigError("forced window must be nonnegative");
    if (pol.forced_window > horizon)
      throw ConfigError("forced window (" + std::to_string(pol.forced_window) +
                        ") exceeds the solve horizon (" +
                        std::to_string(horizon) + ")");
    if (!pol.enforce && pol.forced_window > 0)
      throw ConfigError(
          "cannot force a bound that is not enforced; enable the bound or "
          "drop the forced window");
  }
}

RegimeSequence initial_guess(const ConstraintPolicies& policies, int horizon) {
  RegimeSequence seq = RegimeSequence::all_slack(horizon);
  for (int ci = 0; ci < 2; ++ci) {
    for (int t = 1; t <= policies[ci].forced_window; ++t)
      seq.binding[t - 1][ci] = true;
  }
  return seq;
}

}  // namespace

SimulationPath simulate_with_regimes(const LinearModel& model,
                                     const DecisionRule& rule,
                                     const RegimeSequence& regimes,
                                     const Vec8& initial_state,
                                     const ShockVec& impulse) {
  const int horizon = regimes.horizon();
  const int t_star = regimes.last_binding_any();

  // Backward pass: y_t = p_seq[t] y_{t-1} + k_seq[t] for t <= t_star, found
  // by substituting the continuation rule into each period's system.
  std::vector<Mat8> p_seq(t_star + 2);
  std::vector<Vec8> k_seq(t_star + 2);
  ImpactMat impact1 = rule.impact;
  if (t_star >= 1) {
    p_seq[t_star + 1] = rule.transition;
    k_seq[t_star + 1] = Vec8::Zero();
    for (int t = t_star; t >= 1; --t) {
      const unsigned mask = LinearModel::regime_mask(regimes.binding[t - 1][0],
                                                     regimes.binding[t - 1][1]);
      const RegimeMatrices& m = model.regime(mask);
      Eigen::FullPivLU<Mat8> lu(m.lead * p_seq[t + 1] + m.contemp);
      if (!lu.isInvertible())
        throw SolverError(SolverFailure::singular_system,
                          "period-" + std::to_string(t) +
                              " system is singular under the guessed regimes");
      p_seq[t] = -lu.solve(m.lag);
      k_seq[t] = -lu.solve(m.lead * k_seq[t + 1] + m.constant);
      if (t == 1) impact1 = -lu.solve(m.innov);
    }
  }

  SimulationPath path;
  path.values.setZero(horizon, var::count);
  path.regimes = regimes;
  Vec8 y = initial_state;
  for (int t = 1; t <= horizon; ++t) {
    if (t <= t_star)
      y = p_seq[t] * y + k_seq[t];
    else
      y = rule.transition * y;
    if (t == 1) y += impact1 * impulse;
    path.values.row(t - 1) = y.transpose();
  }
  return path;
}

SimulationPath solve_occbin(const LinearModel& model, const DecisionRule& rule,
                            const ConstraintPolicies& policies,
                            const ShockVec& impulse,
                            const OccbinOptions& opts) {
  validate_policies(policies, opts.horizon);

  RegimeSequence guess = initial_guess(policies, opts.horizon);
  std::optional<RegimeSequence> previous;
  for (int it = 1; it <= opts.max_iterations; ++it) {
    SimulationPath path =
        simulate_with_regimes(model, rule, guess, Vec8::Zero(), impulse);
    RegimeSequence implied =
        derive_regimes(model, path.values, policies, impulse, opts.regime_tol);
    if (implied == guess) {
      path.diagnostics.iterations = it;
      path.diagnostics.complementarity =
          max_complementarity_violation(model, path, policies, impulse);
      if (opts.horizon_guard) {
        OccbinOptions doubled = opts;
        doubled.horizon = 2 * opts.horizon;
        doubled.horizon_guard = false;
        SimulationPath longer =
            solve_occbin(model, rule, policies, impulse, doubled);
        double diff = (longer.values.topRows(opts.horizon) - path.values)
                          .cwiseAbs()
                          .maxCoeff();
        path.diagnostics.horizon_checked = true;
        path.diagnostics.horizon_sensitivity = diff;
        if (diff > opts.horizon_tol)
          throw SolverError(
              SolverFailure::no_convergence,
              "solution changes by " + std::to_string(diff) +
                  " when the horizon doubles; increase the horizon");
      }
      return path;
    }
    if (previous && implied == *previous)
      throw SolverError(SolverFailure::oscillation,
                        "regime guesses oscillate between two sequences "
                        "(iteration " + std::to_string(it) + ")");
    previous = guess;
    guess = implied;
  }
  throw SolverError(SolverFailure::no_convergence,
                    "regime iteration did not converge in " +
                        std::to_string(opts.max_iterations) + " steps");
}

}  // namespace fglab
