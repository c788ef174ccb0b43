#include "fglab/simulation.hpp"

#include <algorithm>
#include <cmath>

namespace fglab {

RegimeSequence derive_regimes(const LinearModel& model,
                              const Eigen::MatrixXd& values,
                              const ConstraintPolicies& policies,
                              const ShockVec& impulse, double tol) {
  const int horizon = static_cast<int>(values.rows());
  RegimeSequence seq = RegimeSequence::all_slack(horizon);
  const ShockVec zero_shock = ShockVec::Zero();
  Vec8 y_lag = Vec8::Zero();
  for (int t = 1; t <= horizon; ++t) {
    if (t >= 2) y_lag = values.row(t - 2).transpose();
    const Vec8 y = values.row(t - 1).transpose();
    const ShockVec& eps = (t == 1) ? impulse : zero_shock;
    for (int ci = 0; ci < 2; ++ci) {
      const ConstraintPolicy& pol = policies[ci];
      if (!pol.enforce) continue;
      const Country c = static_cast<Country>(ci);
      const double shadow = model.shadow_rate(c, y, y_lag, eps);
      const double bound = model.constraint(c).bound;
      seq.binding[t - 1][ci] = (t <= pol.forced_window) || (shadow < bound - tol);
    }
  }
  return seq;
}

double max_complementarity_violation(const LinearModel& model,
                                     const SimulationPath& path,
                                     const ConstraintPolicies& policies,
                                     const ShockVec& impulse) {
  const ShockVec zero_shock = ShockVec::Zero();
  double worst = 0.0;
  Vec8 y_lag = Vec8::Zero();
  for (int t = 1; t <= path.horizon(); ++t) {
    if (t >= 2) y_lag = path.values.row(t - 2).transpose();
    const Vec8 y = path.values.row(t - 1).transpose();
    const ShockVec& eps = (t == 1) ? impulse : zero_shock;
    for (int ci = 0; ci < 2; ++ci) {
      const ConstraintPolicy& pol = policies[ci];
      const Country c = static_cast<Country>(ci);
      const double rate = y(model.constraint(c).rate);
      const double shadow = model.shadow_rate(c, y, y_lag, eps);
      if (!pol.enforce) {
        worst = std::max(worst, std::abs(rate - shadow));
        continue;
      }
      const double bound = model.constraint(c).bound;
      if (path.regimes.is_binding(t, c)) {
        worst = std::max(worst, std::abs(rate - bound));
        if (t > pol.forced_window)
          worst = std::max(worst, std::max(0.0, shadow - bound));
      } else {
        worst = std::max(worst, std::abs(rate - shadow));
        worst = std::max(worst, std::max(0.0, bound - rate));
      }
    }
  }
  return worst;
}

}  // namespace fglab
