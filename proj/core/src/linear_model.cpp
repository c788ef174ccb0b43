#include "fglab/linear_model.hpp"

namespace fglab {

namespace {

// Equation row indices, fixed across regimes.
enum : int {
  eq_nkpc_h = 0,
  eq_nkpc_f = 1,
  eq_is_h = 2,
  eq_is_f = 3,
  eq_policy_h = 4,
  eq_policy_f = 5,
  eq_natural_h = 6,
  eq_natural_f = 7,
};

// Writes the rule form of one country's policy row:
//   psi_r * r_{t-1} + (1 - psi_r)*(psi_pi * pi_t + psi_x * x_t) - r_t + e_t = 0
void fill_slack_policy_row(RegimeMatrices& m, int row, int pi, int x, int rate,
                           int mon_shock, double psi_r, double psi_pi,
                           double psi_x) {
  m.contemp(row, pi) = (1.0 - psi_r) * psi_pi;
  m.contemp(row, x) = (1.0 - psi_r) * psi_x;
  m.contemp(row, rate) = -1.0;
  m.lag(row, rate) = psi_r;
  m.innov(row, mon_shock) = 1.0;
}

// Writes the bound form: r_t = bound. The monetary innovation is dropped
// while the rate is pinned.
void fill_binding_policy_row(RegimeMatrices& m, int row, int rate,
                             double bound) {
  m.contemp.row(row).setZero();
  m.lag.row(row).setZero();
  m.innov.row(row).setZero();
  m.contemp(row, rate) = -1.0;
  m.constant(row) = bound;
}

}  // namespace

double LinearModel::shadow_rate(Country c, const Vec8& y, const Vec8& y_lag,
                                const ShockVec& eps) const {
  const ConstraintSpec& spec = constraints[country_index(c)];
  const RegimeMatrices& slack = regimes[0];
  double acc = slack.lag.row(spec.row).dot(y_lag) +
               slack.innov.row(spec.row).dot(eps);
  for (int j = 0; j < var::count; ++j) {
    if (j == spec.rate) continue;
    acc += slack.contemp(spec.row, j) * y(j);
  }
  return acc;
}

LinearModel build_two_country_model(const StructuralParams& p) {
  LinearModel model;
  model.params = p;
  model.comps = derive_composites(p);
  const CompositeCoefficients& c = model.comps;
  const double bound = p.effective_bound();

  RegimeMatrices base;

  // Phillips curves: pi = beta*E pi' + kappa1*own gap + kappa2*other gap + u.
  base.lead(eq_nkpc_h, var::pi_h) = p.beta;
  base.contemp(eq_nkpc_h, var::pi_h) = -1.0;
  base.contemp(eq_nkpc_h, var::gap_h) = c.kappa1;
  base.contemp(eq_nkpc_h, var::gap_f) = c.kappa2;
  base.innov(eq_nkpc_h, shock::cost_push_h) = 1.0;

  base.lead(eq_nkpc_f, var::pi_f) = p.beta;
  base.contemp(eq_nkpc_f, var::pi_f) = -1.0;
  base.contemp(eq_nkpc_f, var::gap_f) = c.kappa1_star;
  base.contemp(eq_nkpc_f, var::gap_h) = c.kappa2_star;
  base.innov(eq_nkpc_f, shock::cost_push_f) = 1.0;

  // IS curves:
  //   x = E x' + vartheta*(E x_other' - x_other) - (r - E pi' - rn)/sigma0.
  base.lead(eq_is_h, var::gap_h) = 1.0;
  base.lead(eq_is_h, var::gap_f) = c.vartheta;
  base.lead(eq_is_h, var::pi_h) = 1.0 / c.sigma0;
  base.contemp(eq_is_h, var::gap_h) = -1.0;
  base.contemp(eq_is_h, var::gap_f) = -c.vartheta;
  base.contemp(eq_is_h, var::rate_h) = -1.0 / c.sigma0;
  base.contemp(eq_is_h, var::natural_h) = 1.0 / c.sigma0;

  base.lead(eq_is_f, var::gap_f) = 1.0;
  base.lead(eq_is_f, var::gap_h) = c.vartheta_star;
  base.lead(eq_is_f, var::pi_f) = 1.0 / c.sigma0_star;
  base.contemp(eq_is_f, var::gap_f) = -1.0;
  base.contemp(eq_is_f, var::gap_h) = -c.vartheta_star;
  base.contemp(eq_is_f, var::rate_f) = -1.0 / c.sigma0_star;
  base.contemp(eq_is_f, var::natural_f) = 1.0 / c.sigma0_star;

  // Natural-rate processes. The home rate carries both the home-only and
  // the global innovation; the foreign rate only the global one.
  base.contemp(eq_natural_h, var::natural_h) = -1.0;
  base.lag(eq_natural_h, var::natural_h) = p.rho_r;
  base.innov(eq_natural_h, shock::natural_h) = 1.0;
  base.innov(eq_natural_h, shock::global_h) = 1.0;

  base.contemp(eq_natural_f, var::natural_f) = -1.0;
  base.lag(eq_natural_f, var::natural_f) = p.rho_r_star;
  base.innov(eq_natural_f, shock::global_f) = 1.0;

  for (unsigned mask = 0; mask < 4; ++mask) {
    RegimeMatrices m = base;
    if (mask & 1u)
      fill_binding_policy_row(m, eq_policy_h, var::rate_h, bound);
    else
      fill_slack_policy_row(m, eq_policy_h, var::pi_h, var::gap_h, var::rate_h,
                            shock::monetary_h, p.psi_r, p.psi_pi, p.psi_x);
    if (mask & 2u)
      fill_binding_policy_row(m, eq_policy_f, var::rate_f, bound);
    else
      fill_slack_policy_row(m, eq_policy_f, var::pi_f, var::gap_f, var::rate_f,
                            shock::monetary_f, p.psi_r_star, p.psi_pi_star,
                            p.psi_x_star);
    model.regimes[mask] = m;
  }

  model.constraints[0] = ConstraintSpec{eq_policy_h, var::rate_h, bound};
  model.constraints[1] = ConstraintSpec{eq_policy_f, var::rate_f, bound};
  return model;
}

const std::vector<std::string>& variable_names() {
  static const std::vector<std::string> names = {
      "pi_h", "pi_f", "x_h", "x_f", "r_h", "r_f", "rn_h", "rn_f"};
  return names;
}

}  // namespace fglab
