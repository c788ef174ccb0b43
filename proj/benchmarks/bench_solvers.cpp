#include <benchmark/benchmark.h>

#include "fglab/occbin.hpp"
#include "fglab/policy.hpp"
#include "fglab/stacked.hpp"
#include "fglab/welfare.hpp"

using namespace fglab;

namespace {

ShockVec home_impulse() {
  ShockVec eps = ShockVec::Zero();
  eps(shock::natural_h) = -0.05;
  return eps;
}

}  // namespace

static void BM_ReferenceRule(benchmark::State& state) {
  const LinearModel model = build_two_country_model(StructuralParams{});
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_reference_rule(model));
  }
}
BENCHMARK(BM_ReferenceRule);

static void BM_PiecewiseRecursion(benchmark::State& state) {
  const LinearModel model = build_two_country_model(StructuralParams{});
  const DecisionRule rule = solve_reference_rule(model);
  OccbinOptions opts;
  opts.horizon = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        solve_occbin(model, rule, ConstraintPolicies{}, home_impulse(), opts));
  }
}
BENCHMARK(BM_PiecewiseRecursion)->Arg(60)->Arg(120)->Arg(240);

static void BM_StackedNewton(benchmark::State& state) {
  const LinearModel model = build_two_country_model(StructuralParams{});
  const DecisionRule rule = solve_reference_rule(model);
  StackedOptions opts;
  opts.horizon = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_stacked_newton(
        model, rule, ConstraintPolicies{}, home_impulse(), opts));
  }
}
BENCHMARK(BM_StackedNewton)->Arg(60)->Arg(120)->Arg(240);

static void BM_GuidanceScenario(benchmark::State& state) {
  // End-to-end cost of one forward-guidance evaluation, anchor solve
  // included; this is the unit of work a bargaining grid repeats per cell.
  Scenario s;
  s.shock = ShockKind::global_trap;
  s.policy = {PolicySpec::fg(5), PolicySpec::fg(5)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_scenario(s));
  }
}
BENCHMARK(BM_GuidanceScenario);

static void BM_WelfareRow(benchmark::State& state) {
  Scenario s;
  ScenarioResult r = run_scenario(s);
  const WelfareWeights w = welfare_weights(s.params);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        discounted_losses(period_losses(r.path, w), s.params.beta));
  }
}
BENCHMARK(BM_WelfareRow);

BENCHMARK_MAIN();
