#pragma once

#include <array>
#include <string>

#include "fglab/occbin.hpp"
#include "fglab/params.hpp"
#include "fglab/simulation.hpp"
#include "fglab/stacked.hpp"

namespace fglab {

class ConfigFile;

// What one country's central bank commits to.
//
// no_zlb: the rule operates unconstrained (counterfactual benchmark).
// zlb: the rule is truncated at the lower bound, nothing else.
// forward_guidance: the rate is held at the bound for the endogenous spell
// plus extra_quarters more, announced at t = 1.
enum class PolicyMode { no_zlb, zlb, forward_guidance };

struct PolicySpec {
  PolicyMode mode = PolicyMode::zlb;
  int extra_quarters = 0;

  static PolicySpec no_zlb() { return {PolicyMode::no_zlb, 0}; }
  static PolicySpec zlb() { return {PolicyMode::zlb, 0}; }
  static PolicySpec fg(int k) { return {PolicyMode::forward_guidance, k}; }

  std::string label() const;
  bool operator==(const PolicySpec&) const = default;
};

// Parses "nozlb", "zlb", or "fg<k>" (e.g. "fg5"). Throws ConfigError on
// anything else.
PolicySpec parse_policy(const std::string& token);

enum class ShockKind { none, home_only, global_trap };

ShockKind parse_shock(const std::string& token);
std::string shock_label(ShockKind kind);

// One experiment: a calibration, the t=1 impulse, one policy per country,
// and the solve horizon.
struct Scenario {
  StructuralParams params;
  ShockKind shock = ShockKind::home_only;
  std::array<PolicySpec, 2> policy = {PolicySpec::zlb(), PolicySpec::zlb()};
  int horizon = 60;
};

// Reads the [scenario] section (shock, horizon, home_policy, foreign_policy,
// home_extra_quarters, foreign_extra_quarters); params come from [params].
Scenario scenario_from_config(ConfigFile& cfg);

enum class SolverEngine { occbin, stacked };

struct ScenarioOptions {
  SolverEngine engine = SolverEngine::occbin;
  int max_iterations = 50;
  double regime_tol = 1e-9;
  bool horizon_guard = true;                 // occbin engine only
  double horizon_tol = 1e-8;
  TerminalCondition terminal = TerminalCondition::reference_rule;  // stacked
};

// The t=1 innovation vector the scenario's shock kind implies.
ShockVec scenario_impulse(const Scenario& s);

// Endogenous ZLB spell per country: the scenario is re-run with every
// forward-guidance policy replaced by plain ZLB, and the last binding period
// of each country's bound is reported (0 when it never binds). This is the
// anchor that forward-guidance windows extend.
std::array<int, 2> baseline_zlb_exit(const Scenario& s,
                                     const ScenarioOptions& opts = {});

struct ScenarioResult {
  SimulationPath path;
  // Anchors actually used: zero unless the scenario requested forward
  // guidance, in which case they come from baseline_zlb_exit.
  std::array<int, 2> zlb_exit = {0, 0};
  // Realized forced windows, zlb_exit[c] + extra_quarters for FG countries.
  std::array<int, 2> forced_window = {0, 0};
};

// Solves the scenario with the chosen engine. Forward guidance for country
// c becomes the forced-binding window [1, T0_c + k]. Throws ConfigError for
// inconsistent policy requests and SolverError from the engines.
ScenarioResult run_scenario(const Scenario& s, const ScenarioOptions& opts = {});

// Period-by-period listing of a path: first column t = 1..T, then the eight
// variables in CSV order.
struct IrfTable {
  std::vector<std::string> columns;
  Eigen::MatrixXd data;
};

IrfTable irf_table(const SimulationPath& path);

}  // namespace fglab
