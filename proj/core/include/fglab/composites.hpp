#pragma once

#include "fglab/params.hpp"

namespace fglab {

// Reduced-form coefficients implied by a structural calibration. These are
// the only objects the linear model and the loss function touch; tests pin
// them independently of the solvers.
//
// gamma is the home country's import share; the foreign country's import
// share is its complement, so every starred coefficient swaps gamma for
// 1 - gamma as well as alpha for alpha_star.
struct CompositeCoefficients {
  double varpi;          // price-adjustment slope block, home
  double varpi_star;
  double sigma0;         // openness-adjusted intertemporal elasticity, home
  double sigma0_star;
  double kappa1;         // own-gap slope in the home Phillips curve
  double kappa2;         // cross-gap slope in the home Phillips curve
  double kappa1_star;
  double kappa2_star;
  double vartheta;       // cross-country spillover in the home IS curve
  double vartheta_star;
  double omega;          // sum of openness-weighted inverse slopes
  double psi_weight;     // foreign share in the world loss
  double lambda_x;       // gap weight in the home per-period loss
  double lambda_x_star;
  double cross_weight;   // coefficient on gap_h*gap_f in the world loss
};

// Computes all composites from the structural calibration. Throws
// ConfigError when a divisor degenerates (alpha at 0 or 1, or an openness /
// elasticity mix that zeroes an aggregate elasticity).
CompositeCoefficients derive_composites(const StructuralParams& p);

}  // namespace fglab
