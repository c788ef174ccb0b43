#include <doctest.h>

#include <cmath>

#include "fglab/composites.hpp"
#include "fglab/errors.hpp"
#include "fglab/params.hpp"

using namespace fglab;

namespace {
constexpr double kTol = 1e-13;
}

TEST_CASE("baseline calibration composites") {
  CompositeCoefficients c = derive_composites(StructuralParams{});
  CHECK(c.varpi == doctest::Approx(0.01261111111111111).epsilon(kTol));
  CHECK(c.varpi_star == doctest::Approx(c.varpi).epsilon(kTol));
  CHECK(c.kappa1 == doctest::Approx(0.0378333333333333).epsilon(kTol));
  CHECK(c.kappa2 == doctest::Approx(0.0063055555555556).epsilon(kTol));
  CHECK(c.kappa1_star == doctest::Approx(c.kappa1).epsilon(kTol));
  CHECK(c.kappa2_star == doctest::Approx(c.kappa2).epsilon(kTol));
  CHECK(c.sigma0 == doctest::Approx(1.5).epsilon(kTol));
  CHECK(c.sigma0_star == doctest::Approx(1.5).epsilon(kTol));
  CHECK(c.vartheta == doctest::Approx(1.0 / 3.0).epsilon(kTol));
  CHECK(c.vartheta_star == doctest::Approx(1.0 / 3.0).epsilon(kTol));
  CHECK(c.omega == doctest::Approx(79.2951541850220).epsilon(1e-12));
  CHECK(c.psi_weight == doctest::Approx(0.5).epsilon(kTol));
  CHECK(c.lambda_x == doctest::Approx(0.00378333333333333).epsilon(kTol));
  CHECK(c.lambda_x_star == doctest::Approx(c.lambda_x).epsilon(kTol));
  CHECK(c.cross_weight == doctest::Approx(-3.96475770925110).epsilon(1e-12));
}

TEST_CASE("unit elasticity removes all trade spillovers") {
  StructuralParams p;
  p.sigma = 1.0;
  CompositeCoefficients c = derive_composites(p);
  CHECK(c.kappa2 == 0.0);
  CHECK(c.kappa2_star == 0.0);
  CHECK(c.vartheta == 0.0);
  CHECK(c.vartheta_star == 0.0);
  CHECK(c.cross_weight == 0.0);
  CHECK(c.sigma0 == 1.0);
  CHECK(c.sigma0_star == 1.0);
  CHECK(c.kappa1 == doctest::Approx(0.0315277777777778).epsilon(kTol));
}

TEST_CASE("spillover sign follows sigma relative to one") {
  StructuralParams p;
  p.sigma = 0.5;
  CompositeCoefficients c = derive_composites(p);
  CHECK(c.vartheta == doctest::Approx(-1.0 / 3.0).epsilon(kTol));
  CHECK(c.kappa2 == doctest::Approx(-0.00315277777777778).epsilon(kTol));
  CHECK(c.sigma0 == doctest::Approx(0.75).epsilon(kTol));
  CHECK(c.cross_weight > 0.0);

  p.sigma = 3.7;
  c = derive_composites(p);
  CHECK(c.vartheta > 0.0);
  CHECK(c.kappa2 > 0.0);
  CHECK(c.cross_weight < 0.0);
}

TEST_CASE("asymmetric openness composites") {
  StructuralParams p;
  p.gamma = 0.3;
  CompositeCoefficients c = derive_composites(p);
  CHECK(c.kappa1 == doctest::Approx(0.0403555555555556).epsilon(kTol));
  CHECK(c.kappa2 == doctest::Approx(0.00378333333333333).epsilon(kTol));
  CHECK(c.kappa1_star == doctest::Approx(0.0353111111111111).epsilon(kTol));
  CHECK(c.kappa2_star == doctest::Approx(0.00882777777777778).epsilon(kTol));
  CHECK(c.sigma0 == doctest::Approx(1.7).epsilon(kTol));
  CHECK(c.sigma0_star == doctest::Approx(1.3).epsilon(kTol));
  CHECK(c.vartheta == doctest::Approx(0.176470588235294).epsilon(1e-12));
  CHECK(c.vartheta_star == doctest::Approx(0.538461538461538).epsilon(1e-12));
  CHECK(c.psi_weight == doctest::Approx(0.3).epsilon(1e-12));
  CHECK(c.omega == doctest::Approx(79.295154185022).epsilon(1e-12));
  CHECK(c.lambda_x == doctest::Approx(0.00403555555555556).epsilon(kTol));
  CHECK(c.lambda_x_star == doctest::Approx(0.00353111111111111).epsilon(kTol));
  CHECK(c.cross_weight == doctest::Approx(-3.33039647577092).epsilon(1e-12));
}

TEST_CASE("relabeling countries mirrors the composites") {
  // With equal stickiness the two blocks are mirror images of each other
  // under gamma -> 1 - gamma, so the starred coefficients must trade places.
  StructuralParams p;
  p.gamma = 0.3;
  StructuralParams q = p;
  q.gamma = 1.0 - p.gamma;
  CompositeCoefficients a = derive_composites(p);
  CompositeCoefficients b = derive_composites(q);
  CHECK(a.kappa1 == doctest::Approx(b.kappa1_star).epsilon(kTol));
  CHECK(a.kappa2 == doctest::Approx(b.kappa2_star).epsilon(kTol));
  CHECK(a.sigma0 == doctest::Approx(b.sigma0_star).epsilon(kTol));
  CHECK(a.vartheta == doctest::Approx(b.vartheta_star).epsilon(kTol));
  CHECK(a.lambda_x == doctest::Approx(b.lambda_x_star).epsilon(kTol));
  CHECK(a.omega == doctest::Approx(b.omega).epsilon(kTol));
  CHECK(a.psi_weight == doctest::Approx(1.0 - b.psi_weight).epsilon(kTol));
  CHECK(a.cross_weight == doctest::Approx(b.cross_weight).epsilon(kTol));
}

TEST_CASE("loss weights stay admissible across calibrations") {
  for (double sigma : {0.5, 1.0, 2.0, 4.0}) {
    for (double gamma : {0.1, 0.3, 0.5, 0.8}) {
      StructuralParams p;
      p.sigma = sigma;
      p.gamma = gamma;
      CompositeCoefficients c = derive_composites(p);
      CAPTURE(sigma);
      CAPTURE(gamma);
      CHECK(c.lambda_x > 0.0);
      CHECK(c.lambda_x_star > 0.0);
      CHECK(c.psi_weight > 0.0);
      CHECK(c.psi_weight < 1.0);
      // vartheta carries the sign of sigma - 1 in both countries.
      CHECK(c.vartheta * (sigma - 1.0) >= 0.0);
      CHECK(c.vartheta_star * (sigma - 1.0) >= 0.0);
      // cross_weight vanishes exactly at sigma = 1 and flips sign there.
      CHECK(c.cross_weight * (1.0 - sigma) >= 0.0);
    }
  }
}

TEST_CASE("degenerate stickiness is rejected") {
  StructuralParams p;
  p.alpha = 0.0;
  CHECK_THROWS_AS(derive_composites(p), ConfigError);
  p.alpha = 1.0;
  CHECK_THROWS_AS(derive_composites(p), ConfigError);
  p.alpha = 0.9;
  p.alpha_star = 0.0;
  CHECK_THROWS_AS(derive_composites(p), ConfigError);
}
