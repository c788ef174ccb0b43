#include <doctest.h>

#include "fglab/decision_rule.hpp"
#include "fglab/errors.hpp"
#include "fglab/linear_model.hpp"

using namespace fglab;

namespace {

DecisionRule baseline_rule() {
  LinearModel m = build_two_country_model(StructuralParams{});
  return solve_reference_rule(m);
}

}  // namespace

TEST_CASE("baseline rule matches the frozen natural-rate column") {
  DecisionRule rule = baseline_rule();
  const double want[8] = {
      0.161374746304612,  0.0062446027067525,  0.924104918178003,
      -0.119025703794796, 0.663770891969767,   -0.0517070985139574,
      0.8,                0.0};
  for (int i = 0; i < 8; ++i) {
    CAPTURE(i);
    CHECK(rule.transition(i, var::natural_h) ==
          doctest::Approx(want[i]).epsilon(1e-9));
  }
  CHECK(rule.spectral_radius == doctest::Approx(0.8).epsilon(1e-9));
}

TEST_CASE("baseline rule matches the frozen impact column") {
  DecisionRule rule = baseline_rule();
  const double want[8] = {
      0.201718432880773,  0.00780575338343925, 1.1551311477225,
      -0.148782129743495, 0.829713614962216,   -0.0646338731424482,
      1.0,                0.0};
  for (int i = 0; i < 8; ++i) {
    CAPTURE(i);
    CHECK(rule.impact(i, shock::natural_h) ==
          doctest::Approx(want[i]).epsilon(1e-9));
  }
}

TEST_CASE("rule satisfies its defining identities") {
  LinearModel m = build_two_country_model(StructuralParams{});
  DecisionRule rule = solve_reference_rule(m);
  const RegimeMatrices& s = m.regime(0);
  Mat8 res_p = s.lead * rule.transition * rule.transition +
               s.contemp * rule.transition + s.lag;
  ImpactMat res_q = (s.lead * rule.transition + s.contemp) * rule.impact +
                    s.innov;
  CHECK(res_p.cwiseAbs().maxCoeff() < 1e-10);
  CHECK(res_q.cwiseAbs().maxCoeff() < 1e-10);
  CHECK(rule.residual_transition < 1e-10);
  CHECK(rule.residual_impact < 1e-10);
  CHECK(rule.iterations > 0);
}

TEST_CASE("only natural rates feed back into the rule") {
  // Without interest smoothing the lagged jump variables are irrelevant, so
  // every transition column except the two natural-rate ones must vanish.
  DecisionRule rule = baseline_rule();
  for (int j = 0; j < var::count; ++j) {
    if (j == var::natural_h || j == var::natural_f) continue;
    CAPTURE(j);
    CHECK(rule.transition.col(j).isZero(1e-12));
  }
}

TEST_CASE("interest smoothing activates the lagged-rate column") {
  StructuralParams p;
  p.psi_r = 0.5;
  LinearModel m = build_two_country_model(p);
  DecisionRule rule = solve_reference_rule(m);
  CHECK(rule.transition.col(var::rate_h).cwiseAbs().maxCoeff() > 1e-4);
  CHECK(rule.transition.col(var::rate_f).isZero(1e-12));
}

TEST_CASE("root counting flags determinacy regions") {
  StructuralParams p;
  CHECK(count_unstable_roots(build_two_country_model(p).regime(0)) == 8);
  p.psi_pi = 0.5;
  CHECK(count_unstable_roots(build_two_country_model(p).regime(0)) == 7);
  p.psi_pi_star = 0.5;
  CHECK(count_unstable_roots(build_two_country_model(p).regime(0)) == 6);
}

TEST_CASE("passive policy raises an indeterminacy error") {
  StructuralParams p;
  p.psi_pi = 0.5;
  LinearModel m = build_two_country_model(p);
  try {
    solve_reference_rule(m);
    FAIL("expected SolverError");
  } catch (const SolverError& e) {
    CHECK(e.kind() == SolverFailure::indeterminate);
  }
}

TEST_CASE("explosive shock persistence raises an explosive error") {
  StructuralParams p;
  p.rho_r = 1.05;
  LinearModel m = build_two_country_model(p);
  CHECK(count_unstable_roots(m.regime(0)) == 9);
  try {
    solve_reference_rule(m);
    FAIL("expected SolverError");
  } catch (const SolverError& e) {
    CHECK(e.kind() == SolverFailure::explosive);
  }
}

TEST_CASE("country relabeling transposes the rule") {
  StructuralParams p;
  p.gamma = 0.3;
  p.alpha = 0.85;
  p.alpha_star = 0.92;
  p.psi_pi = 1.4;
  p.psi_pi_star = 1.1;
  p.rho_r = 0.7;
  p.rho_r_star = 0.85;
  StructuralParams q = p;
  std::swap(q.alpha, q.alpha_star);
  std::swap(q.psi_pi, q.psi_pi_star);
  std::swap(q.rho_r, q.rho_r_star);
  q.gamma = 1.0 - p.gamma;

  DecisionRule a = solve_reference_rule(build_two_country_model(p));
  DecisionRule b = solve_reference_rule(build_two_country_model(q));

  // Swapping the h/f slots of every variable pair maps one rule to the other.
  auto mirror = [](int v) { return v % 2 == 0 ? v + 1 : v - 1; };
  for (int i = 0; i < var::count; ++i)
    for (int j = 0; j < var::count; ++j) {
      CAPTURE(i);
      CAPTURE(j);
      CHECK(a.transition(i, j) ==
            doctest::Approx(b.transition(mirror(i), mirror(j)))
                .epsilon(1e-9));
    }
  CHECK(a.impact(var::gap_h, shock::natural_h) ==
        doctest::Approx(b.impact(var::gap_f, shock::global_f)).epsilon(1e-9));
}
