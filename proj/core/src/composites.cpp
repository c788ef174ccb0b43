#include "fglab/composites.hpp"

#include <cmath>

#include "fglab/errors.hpp"

namespace fglab {

CompositeCoefficients derive_composites(const StructuralParams& p) {
  if (p.alpha <= 0.0 || p.alpha >= 1.0 || p.alpha_star <= 0.0 ||
      p.alpha_star >= 1.0)
    throw ConfigError("alpha and alpha_star must lie strictly inside (0, 1)");
  if (p.theta == 0.0) throw ConfigError("theta must be nonzero");

  const double gamma_star = 1.0 - p.gamma;

  CompositeCoefficients c;
  c.varpi = (1.0 - p.alpha) * (1.0 - p.alpha * p.beta) / p.alpha;
  c.varpi_star =
      (1.0 - p.alpha_star) * (1.0 - p.alpha_star * p.beta) / p.alpha_star;

  c.sigma0 = p.sigma - p.gamma * (p.sigma - 1.0);
  c.sigma0_star = p.sigma - gamma_star * (p.sigma - 1.0);
  if (std::abs(c.sigma0) < 1e-12 || std::abs(c.sigma0_star) < 1e-12)
    throw ConfigError(
        "sigma - gamma*(sigma - 1) vanished; aggregate demand is undefined");

  c.kappa1 = c.varpi * (p.sigma + p.eta - p.gamma * (p.sigma - 1.0));
  c.kappa2 = c.varpi * p.gamma * (p.sigma - 1.0);
  c.kappa1_star =
      c.varpi_star * (p.sigma + p.eta - gamma_star * (p.sigma - 1.0));
  c.kappa2_star = c.varpi_star * gamma_star * (p.sigma - 1.0);

  c.vartheta = p.gamma * (p.sigma - 1.0) / c.sigma0;
  c.vartheta_star = gamma_star * (p.sigma - 1.0) / c.sigma0_star;

  c.omega = gamma_star / c.varpi + p.gamma / c.varpi_star;
  c.psi_weight = 1.0 - gamma_star / c.varpi / c.omega;

  c.lambda_x = c.kappa1 / p.theta;
  c.lambda_x_star = c.kappa1_star / p.theta;
  c.cross_weight =
      2.0 * gamma_star * p.gamma * (1.0 - p.sigma) / (c.varpi * p.theta);
  return c;
}

}  // namespace fglab
