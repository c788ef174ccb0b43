#include "fglab/stacked.hpp"

#include <Eigen/SparseCore>
#include <Eigen/SparseLU>
#include <optional>
#include <string>
#include <vector>

#include "fglab/errors.hpp"

namespace fglab {

namespace {

void append_block(std::vector<Eigen::Triplet<double>>& triplets, int row0,
                  int col0, const Mat8& block) {
  for (int i = 0; i < var::count; ++i)
    for (int j = 0; j < var::count; ++j)
      if (block(i, j) != 0.0)
        triplets.emplace_back(row0 + i, col0 + j, block(i, j));
}

Eigen::MatrixXd solve_blocks(const LinearModel& model, const DecisionRule& rule,
                             const RegimeSequence& regimes,
                             const ShockVec& impulse,
                             TerminalCondition terminal) {
  const int horizon = regimes.horizon();
  const int n = horizon * var::count;
  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(static_cast<size_t>(n) * 3 * var::count);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n);

  for (int t = 1; t <= horizon; ++t) {
    const unsigned mask = LinearModel::regime_mask(regimes.binding[t - 1][0],
                                                   regimes.binding[t - 1][1]);
    const RegimeMatrices& m = model.regime(mask);
    const int row0 = (t - 1) * var::count;

    Mat8 diag = m.contemp;
    if (t == horizon && terminal == TerminalCondition::reference_rule)
      diag += m.lead * rule.transition;
    append_block(triplets, row0, row0, diag);
    if (t >= 2) append_block(triplets, row0, row0 - var::count, m.lag);
    if (t <= horizon - 1) append_block(triplets, row0, row0 + var::count, m.lead);

    rhs.segment<var::count>(row0) = -m.constant;
    if (t == 1) rhs.segment<var::count>(row0) -= m.innov * impulse;
  }

  Eigen::SparseMatrix<double> sys(n, n);
  sys.setFromTriplets(triplets.begin(), triplets.end());
  Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
  lu.analyzePattern(sys);
  lu.factorize(sys);
  if (lu.info() != Eigen::Success)
    throw SolverError(SolverFailure::singular_system,
                      "stacked system could not be factorized under the "
                      "current regime assignment");
  Eigen::VectorXd sol = lu.solve(rhs);
  if (lu.info() != Eigen::Success)
    throw SolverError(SolverFailure::singular_system,
                      "stacked back-substitution failed");

  Eigen::MatrixXd values(horizon, var::count);
  for (int t = 0; t < horizon; ++t)
    values.row(t) = sol.segment<var::count>(t * var::count).transpose();
  return values;
}

RegimeSequence initial_guess(const ConstraintPolicies& policies, int horizon) {
  RegimeSequence seq = RegimeSequence::all_slack(horizon);
  for (int ci = 0; ci < 2; ++ci) {
    if (policies[ci].forced_window > horizon)
      throw ConfigError("forced window exceeds the solve horizon");
    if (!policies[ci].enforce && policies[ci].forced_window > 0)
      throw ConfigError(
          "cannot force a bound that is not enforced; enable the bound or "
          "drop the forced window");
    for (int t = 1; t <= policies[ci].forced_window; ++t)
      seq.binding[t - 1][ci] = true;
  }
  return seq;
}

}  // namespace

SimulationPath solve_stacked_fixed(const LinearModel& model,
                                   const DecisionRule& rule,
                                   const RegimeSequence& regimes,
                                   const ShockVec& impulse,
                                   const StackedOptions& opts) {
  SimulationPath path;
  path.values = solve_blocks(model, rule, regimes, impulse, opts.terminal);
  path.regimes = regimes;
  path.diagnostics.iterations = 1;
  return path;
}

SimulationPath solve_stacked_newton(const LinearModel& model,
                                    const DecisionRule& rule,
                                    const ConstraintPolicies& policies,
                                    const ShockVec& impulse,
                                    const StackedOptions& opts) {
  RegimeSequence guess = initial_guess(policies, opts.horizon);
  std::optional<RegimeSequence> previous;
  for (int it = 1; it <= opts.max_iterations; ++it) {
    Eigen::MatrixXd values =
        solve_blocks(model, rule, guess, impulse, opts.terminal);
    RegimeSequence implied =
        derive_regimes(model, values, policies, impulse, opts.regime_tol);
    if (implied == guess) {
      SimulationPath path;
      path.values = std::move(values);
      path.regimes = guess;
      path.diagnostics.iterations = it;
      path.diagnostics.complementarity =
          max_complementarity_violation(model, path, policies, impulse);
      return path;
    }
    if (previous && implied == *previous)
      throw SolverError(SolverFailure::oscillation,
                        "active set oscillates between two assignments "
                        "(iteration " + std::to_string(it) + ")");
    previous = guess;
    guess = implied;
  }
  throw SolverError(SolverFailure::no_convergence,
                    "active-set iteration did not converge in " +
                        std::to_string(opts.max_iterations) + " steps");
}

}  // namespace fglab
