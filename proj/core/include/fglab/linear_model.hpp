#pragma once

#include <array>
#include <string>
#include <vector>

#include "fglab/composites.hpp"
#include "fglab/params.hpp"
#include "fglab/types.hpp"

namespace fglab {

// One regime's stacked equation system
//
//   lead * E_t y_{t+1} + contemp * y_t + lag * y_{t-1} + innov * eps_t
//     + constant = 0
//
// with 8 equations ordered: two Phillips curves, two IS curves, two policy
// equations, two natural-rate processes.
struct RegimeMatrices {
  Mat8 lead = Mat8::Zero();
  Mat8 contemp = Mat8::Zero();
  Mat8 lag = Mat8::Zero();
  ImpactMat innov = ImpactMat::Zero();
  Vec8 constant = Vec8::Zero();
};

// Lower bound on one country's policy rate: which equation it replaces,
// which variable it pins, and where.
struct ConstraintSpec {
  int row;       // policy equation index for this country
  int rate;      // variable index of the constrained rate
  double bound;  // lower bound in deviations from steady state
};

// The piecewise-linear two-country model: one RegimeMatrices per combination
// of binding/slack bounds, plus the constraint descriptors needed to decide
// regimes from a candidate path.
struct LinearModel {
  StructuralParams params;
  CompositeCoefficients comps;
  std::array<RegimeMatrices, 4> regimes;  // indexed by regime_mask
  std::array<ConstraintSpec, 2> constraints;

  static unsigned regime_mask(bool home_binding, bool foreign_binding) {
    return (home_binding ? 1u : 0u) | (foreign_binding ? 2u : 0u);
  }
  const RegimeMatrices& regime(unsigned mask) const { return regimes[mask]; }
  const RegimeMatrices& regime(bool home_binding, bool foreign_binding) const {
    return regimes[regime_mask(home_binding, foreign_binding)];
  }
  const ConstraintSpec& constraint(Country c) const {
    return constraints[country_index(c)];
  }

  // Rate the country's rule would set at (y, y_lag, eps), ignoring the
  // bound. The bound binds exactly when this falls below it.
  double shadow_rate(Country c, const Vec8& y, const Vec8& y_lag,
                     const ShockVec& eps) const;
};

// Assembles the model for a calibration. The calibration is not validated
// here; call require_valid_params first when the input is untrusted.
LinearModel build_two_country_model(const StructuralParams& p);

// Column labels in path/CSV order, h before f within each pair.
const std::vector<std::string>& variable_names();

}  // namespace fglab
