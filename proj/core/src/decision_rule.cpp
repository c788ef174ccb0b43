#include "fglab/decision_rule.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <string>
#include <vector>

#include "fglab/errors.hpp"

namespace fglab {

int count_unstable_roots(const RegimeMatrices& m, double tol) {
  // Columns that actually appear lagged become predetermined states of the
  // companion pencil; everything else stays a jump variable.
  std::vector<int> lagged;
  for (int j = 0; j < var::count; ++j) {
    if (m.lag.col(j).cwiseAbs().maxCoeff() > 0.0) lagged.push_back(j);
  }
  const int nl = static_cast<int>(lagged.size());
  const int n = var::count + nl;

  // Pencil M0 v_t = lambda M1 v_t with v = (y_t, y_{t-1} selection).
  Eigen::MatrixXd m0 = Eigen::MatrixXd::Zero(n, n);
  Eigen::MatrixXd m1 = Eigen::MatrixXd::Zero(n, n);
  m1.topLeftCorner(var::count, var::count) = m.lead;
  m0.topLeftCorner(var::count, var::count) = -m.contemp;
  for (int i = 0; i < nl; ++i) {
    m0(i + var::count, lagged[i]) = 1.0;
    m1(i + var::count, i + var::count) = 1.0;
    for (int r = 0; r < var::count; ++r) m0(r, var::count + i) = -m.lag(r, lagged[i]);
  }

  Eigen::GeneralizedEigenSolver<Eigen::MatrixXd> solver;
  solver.compute(m0, m1, false);
  int unstable = 0;
  for (int i = 0; i < n; ++i) {
    std::complex<double> a = solver.alphas()(i);
    double b = solver.betas()(i);
    if (std::abs(b) < 1e-12 * std::abs(a) || std::abs(b) == 0.0) {
      ++unstable;  // infinite root
    } else if (std::abs(a / b) > 1.0 + tol) {
      ++unstable;
    }
  }
  return unstable;
}

DecisionRule solve_reference_rule(const LinearModel& model,
                                  const ReferenceRuleOptions& opts) {
  const RegimeMatrices& m = model.regime(false, false);

  int unstable = count_unstable_roots(m);
  if (unstable < var::count)
    throw SolverError(
        SolverFailure::indeterminate,
        "reference regime is indeterminate: " + std::to_string(unstable) +
            " unstable roots for " + std::to_string(int(var::count)) +
            " non-predetermined variables (policy response too weak?)");
  if (unstable > var::count)
    throw SolverError(
        SolverFailure::explosive,
        "reference regime has no stable solution: " +
            std::to_string(unstable) + " unstable roots for " +
            std::to_string(int(var::count)) + " non-predetermined variables");

  DecisionRule rule;
  Mat8 p = Mat8::Zero();
  bool converged = false;
  for (int it = 0; it < opts.max_iterations; ++it) {
    Mat8 step = m.lead * p + m.contemp;
    Eigen::FullPivLU<Mat8> lu(step);
    if (!lu.isInvertible())
      throw SolverError(SolverFailure::singular_system,
                        "lead*P + contemp became singular while iterating for "
                        "the reference rule");
    Mat8 next = -lu.solve(m.lag);
    double diff = (next - p).cwiseAbs().maxCoeff();
    p = next;
    rule.iterations = it + 1;
    if (diff < opts.tol) {
      converged = true;
      break;
    }
  }
  if (!converged)
    throw SolverError(SolverFailure::no_convergence,
                      "reference-rule iteration did not converge in " +
                          std::to_string(opts.max_iterations) + " steps");

  Eigen::FullPivLU<Mat8> lu(m.lead * p + m.contemp);
  if (!lu.isInvertible())
    throw SolverError(SolverFailure::singular_system,
                      "lead*P + contemp is singular at the fixed point");
  rule.transition = p;
  rule.impact = -lu.solve(m.innov);

  rule.residual_transition =
      (m.lead * p * p + m.contemp * p + m.lag).cwiseAbs().maxCoeff();
  rule.residual_impact =
      ((m.lead * p + m.contemp) * rule.impact + m.innov).cwiseAbs().maxCoeff();
  Eigen::EigenSolver<Mat8> es(p, false);
  rule.spectral_radius = es.eigenvalues().cwiseAbs().maxCoeff();

  if (rule.residual_transition > opts.residual_tol ||
      rule.residual_impact > opts.residual_tol ||
      rule.spectral_radius >= 1.0)
    throw SolverError(SolverFailure::no_convergence,
                      "reference rule failed its own verification: residuals " +
                          std::to_string(rule.residual_transition) + ", " +
                          std::to_string(rule.residual_impact) +
                          ", spectral radius " +
                          std::to_string(rule.spectral_radius));
  return rule;
}

}  // namespace fglab
