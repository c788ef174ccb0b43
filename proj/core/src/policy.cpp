#include "fglab/policy.hpp"

#include <cstdlib>

#include "fglab/config.hpp"
#include "fglab/errors.hpp"

namespace fglab {

std::string PolicySpec::label() const {
  switch (mode) {
    case PolicyMode::no_zlb:
      return "nozlb";
    case PolicyMode::zlb:
      return "zlb";
    case PolicyMode::forward_guidance:
      return "fg" + std::to_string(extra_quarters);
  }
  return "?";
}

PolicySpec parse_policy(const std::string& token) {
  if (token == "nozlb") return PolicySpec::no_zlb();
  if (token == "zlb") return PolicySpec::zlb();
  if (token.rfind("fg", 0) == 0 && token.size() > 2) {
    const std::string digits = token.substr(2);
    char* end = nullptr;
    long k = std::strtol(digits.c_str(), &end, 10);
    if (end != digits.c_str() && *end == '\0' && k >= 0)
      return PolicySpec::fg(static_cast<int>(k));
  }
  throw ConfigError("unknown policy '" + token +
                    "' (expected nozlb, zlb, or fg<k>)");
}

ShockKind parse_shock(const std::string& token) {
  if (token == "none") return ShockKind::none;
  if (token == "home_only") return ShockKind::home_only;
  if (token == "global_trap") return ShockKind::global_trap;
  throw ConfigError("unknown shock '" + token +
                    "' (expected none, home_only, or global_trap)");
}

std::string shock_label(ShockKind kind) {
  switch (kind) {
    case ShockKind::none:
      return "none";
    case ShockKind::home_only:
      return "home_only";
    case ShockKind::global_trap:
      return "global_trap";
  }
  return "?";
}

Scenario scenario_from_config(ConfigFile& cfg) {
  Scenario s;
  s.params = params_from_config(cfg);
  cfg.allow_section("scenario");
  s.shock = parse_shock(cfg.string_or("scenario", "shock", "home_only"));
  s.horizon = cfg.int_or("scenario", "horizon", s.horizon);

  auto read_policy = [&cfg](const char* mode_key, const char* extra_key) {
    PolicySpec spec = parse_policy(cfg.string_or("scenario", mode_key, "zlb"));
    if (cfg.has_key("scenario", extra_key)) {
      int extra = cfg.require_int("scenario", extra_key);
      if (spec.mode != PolicyMode::forward_guidance)
        throw ConfigError(std::string(extra_key) +
                          " is only meaningful when " + mode_key +
                          " is fg; drop it or switch the policy");
      spec.extra_quarters = extra;
    }
    if (spec.mode == PolicyMode::forward_guidance && spec.extra_quarters < 0)
      throw ConfigError("extra quarters must be nonnegative");
    return spec;
  };
  s.policy[0] = read_policy("home_policy", "home_extra_quarters");
  s.policy[1] = read_policy("foreign_policy", "foreign_extra_quarters");
  return s;
}

ShockVec scenario_impulse(const Scenario& s) {
  ShockVec impulse = ShockVec::Zero();
  switch (s.shock) {
    case ShockKind::none:
      break;
    case ShockKind::home_only:
      impulse(shock::natural_h) = s.params.e_nr;
      break;
    case ShockKind::global_trap:
      impulse(shock::global_h) = s.params.e_gl;
      impulse(shock::global_f) = s.params.e_gl_star;
      break;
  }
  return impulse;
}

namespace {

ConstraintPolicy to_constraint_policy(const PolicySpec& spec, int window) {
  ConstraintPolicy pol;
  pol.enforce = spec.mode != PolicyMode::no_zlb;
  pol.forced_window = window;
  return pol;
}

SimulationPath dispatch_solve(const LinearModel& model, const DecisionRule& rule,
                              const ConstraintPolicies& policies,
                              const ShockVec& impulse, int horizon,
                              const ScenarioOptions& opts) {
  if (opts.engine == SolverEngine::occbin) {
    OccbinOptions o;
    o.horizon = horizon;
    o.max_iterations = opts.max_iterations;
    o.regime_tol = opts.regime_tol;
    o.horizon_guard = opts.horizon_guard;
    o.horizon_tol = opts.horizon_tol;
    return solve_occbin(model, rule, policies, impulse, o);
  }
  StackedOptions o;
  o.horizon = horizon;
  o.max_iterations = opts.max_iterations;
  o.regime_tol = opts.regime_tol;
  o.terminal = opts.terminal;
  return solve_stacked_newton(model, rule, policies, impulse, o);
}

void validate_scenario(const Scenario& s) {
  if (s.horizon < 1) throw ConfigError("horizon must be at least 1");
  for (const PolicySpec& spec : s.policy) {
    if (spec.mode == PolicyMode::forward_guidance && spec.extra_quarters < 0)
      throw ConfigError("extra quarters must be nonnegative");
  }
}

}  // namespace

std::array<int, 2> baseline_zlb_exit(const Scenario& s,
                                     const ScenarioOptions& opts) {
  validate_scenario(s);
  const LinearModel model = build_two_country_model(s.params);
  const DecisionRule rule = solve_reference_rule(model);
  ConstraintPolicies policies;
  for (int ci = 0; ci < 2; ++ci) {
    PolicySpec spec = s.policy[ci];
    if (spec.mode == PolicyMode::forward_guidance) spec = PolicySpec::zlb();
    policies[ci] = to_constraint_policy(spec, 0);
  }
  SimulationPath path = dispatch_solve(model, rule, policies,
                                       scenario_impulse(s), s.horizon, opts);
  return {path.regimes.last_binding(Country::home),
          path.regimes.last_binding(Country::foreign)};
}

ScenarioResult run_scenario(const Scenario& s, const ScenarioOptions& opts) {
  validate_scenario(s);
  ScenarioResult result;

  const bool wants_fg =
      s.policy[0].mode == PolicyMode::forward_guidance ||
      s.policy[1].mode == PolicyMode::forward_guidance;
  if (wants_fg) result.zlb_exit = baseline_zlb_exit(s, opts);

  ConstraintPolicies policies;
  for (int ci = 0; ci < 2; ++ci) {
    const PolicySpec& spec = s.policy[ci];
    int window = 0;
    if (spec.mode == PolicyMode::forward_guidance)
      window = result.zlb_exit[ci] + spec.extra_quarters;
    policies[ci] = to_constraint_policy(spec, window);
    result.forced_window[ci] = window;
  }

  const LinearModel model = build_two_country_model(s.params);
  const DecisionRule rule = solve_reference_rule(model);
  result.path = dispatch_solve(model, rule, policies, scenario_impulse(s),
                               s.horizon, opts);
  return result;
}

IrfTable irf_table(const SimulationPath& path) {
  IrfTable table;
  table.columns.push_back("t");
  for (const std::string& name : variable_names()) table.columns.push_back(name);
  const int horizon = path.horizon();
  table.data.resize(horizon, 1 + var::count);
  for (int t = 1; t <= horizon; ++t) {
    table.data(t - 1, 0) = t;
    table.data.block(t - 1, 1, 1, var::count) = path.values.row(t - 1);
  }
  return table;
}

}  // namespace fglab
