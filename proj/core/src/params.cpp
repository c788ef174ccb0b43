#include "fglab/params.hpp"

#include <cmath>
#include <cstdio>

#include "fglab/config.hpp"
#include "fglab/errors.hpp"

namespace fglab {

namespace {

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

void check_unit_interval_open(std::vector<std::string>& out, double v,
                              const char* name) {
  if (!(v > 0.0 && v < 1.0))
    out.push_back(std::string(name) + " must lie strictly between 0 and 1, got " +
                  fmt(v));
}

void check_nonneg(std::vector<std::string>& out, double v, const char* name) {
  if (!(v >= 0.0))
    out.push_back(std::string(name) + " must be nonnegative, got " + fmt(v));
}

void check_persistence(std::vector<std::string>& out, double v,
                       const char* name) {
  if (!(v >= 0.0 && v < 1.0))
    out.push_back(std::string(name) + " must lie in [0, 1), got " + fmt(v));
}

}  // namespace

std::vector<std::string> validate_params(const StructuralParams& p) {
  std::vector<std::string> out;
  check_unit_interval_open(out, p.alpha, "alpha");
  check_unit_interval_open(out, p.alpha_star, "alpha_star");
  check_unit_interval_open(out, p.beta, "beta");
  if (!(p.sigma > 0.0))
    out.push_back("sigma must be positive, got " + fmt(p.sigma));
  if (!(p.gamma >= 0.0 && p.gamma <= 1.0))
    out.push_back("gamma must lie in [0, 1], got " + fmt(p.gamma));
  check_nonneg(out, p.eta, "eta");
  if (!(p.theta > 1.0))
    out.push_back("theta must exceed 1, got " + fmt(p.theta));
  check_persistence(out, p.psi_r, "psi_r");
  check_persistence(out, p.psi_r_star, "psi_r_star");
  check_nonneg(out, p.psi_pi, "psi_pi");
  check_nonneg(out, p.psi_pi_star, "psi_pi_star");
  check_nonneg(out, p.psi_x, "psi_x");
  check_nonneg(out, p.psi_x_star, "psi_x_star");
  check_persistence(out, p.rho_r, "rho_r");
  check_persistence(out, p.rho_r_star, "rho_r_star");
  check_nonneg(out, p.lambda_r, "lambda_r");
  check_nonneg(out, p.lambda_r_star, "lambda_r_star");
  if (p.sigma > 0.0) {
    double sigma0 = p.sigma - p.gamma * (p.sigma - 1.0);
    if (std::abs(sigma0) < 1e-12)
      out.push_back("sigma - gamma*(sigma - 1) must be nonzero; the open-economy "
                    "aggregates are undefined at this calibration");
  }
  if (p.rate_bound && !(*p.rate_bound <= 0.0))
    out.push_back("rate_bound must be nonpositive, got " + fmt(*p.rate_bound));
  return out;
}

void require_valid_params(const StructuralParams& p) {
  auto violations = validate_params(p);
  if (violations.empty()) return;
  std::string msg = "invalid parameters:";
  for (const auto& v : violations) msg += "\n  " + v;
  throw ConfigError(msg);
}

StructuralParams params_from_config(ConfigFile& cfg) {
  StructuralParams p;
  cfg.allow_section("params");
  p.alpha = cfg.double_or("params", "alpha", p.alpha);
  p.alpha_star = cfg.double_or("params", "alpha_star", p.alpha_star);
  p.beta = cfg.double_or("params", "beta", p.beta);
  p.sigma = cfg.double_or("params", "sigma", p.sigma);
  p.gamma = cfg.double_or("params", "gamma", p.gamma);
  p.eta = cfg.double_or("params", "eta", p.eta);
  p.theta = cfg.double_or("params", "theta", p.theta);
  p.psi_r = cfg.double_or("params", "psi_r", p.psi_r);
  p.psi_pi = cfg.double_or("params", "psi_pi", p.psi_pi);
  p.psi_x = cfg.double_or("params", "psi_x", p.psi_x);
  p.psi_r_star = cfg.double_or("params", "psi_r_star", p.psi_r_star);
  p.psi_pi_star = cfg.double_or("params", "psi_pi_star", p.psi_pi_star);
  p.psi_x_star = cfg.double_or("params", "psi_x_star", p.psi_x_star);
  p.rho_r = cfg.double_or("params", "rho_r", p.rho_r);
  p.rho_r_star = cfg.double_or("params", "rho_r_star", p.rho_r_star);
  p.e_nr = cfg.double_or("params", "e_nr", p.e_nr);
  p.e_gl = cfg.double_or("params", "e_gl", p.e_gl);
  p.e_gl_star = cfg.double_or("params", "e_gl_star", p.e_gl_star);
  p.lambda_r = cfg.double_or("params", "lambda_r", p.lambda_r);
  p.lambda_r_star = cfg.double_or("params", "lambda_r_star", p.lambda_r_star);
  p.rate_bound = cfg.optional_double("params", "rate_bound");
  return p;
}

std::vector<std::pair<std::string, std::string>> params_key_values(
    const StructuralParams& p) {
  std::vector<std::pair<std::string, std::string>> kv;
  kv.emplace_back("alpha", fmt(p.alpha));
  kv.emplace_back("alpha_star", fmt(p.alpha_star));
  kv.emplace_back("beta", fmt(p.beta));
  kv.emplace_back("sigma", fmt(p.sigma));
  kv.emplace_back("gamma", fmt(p.gamma));
  kv.emplace_back("eta", fmt(p.eta));
  kv.emplace_back("theta", fmt(p.theta));
  kv.emplace_back("psi_r", fmt(p.psi_r));
  kv.emplace_back("psi_pi", fmt(p.psi_pi));
  kv.emplace_back("psi_x", fmt(p.psi_x));
  kv.emplace_back("psi_r_star", fmt(p.psi_r_star));
  kv.emplace_back("psi_pi_star", fmt(p.psi_pi_star));
  kv.emplace_back("psi_x_star", fmt(p.psi_x_star));
  kv.emplace_back("rho_r", fmt(p.rho_r));
  kv.emplace_back("rho_r_star", fmt(p.rho_r_star));
  kv.emplace_back("e_nr", fmt(p.e_nr));
  kv.emplace_back("e_gl", fmt(p.e_gl));
  kv.emplace_back("e_gl_star", fmt(p.e_gl_star));
  kv.emplace_back("lambda_r", fmt(p.lambda_r));
  kv.emplace_back("lambda_r_star", fmt(p.lambda_r_star));
  kv.emplace_back("rate_bound", fmt(p.effective_bound()));
  return kv;
}

std::uint64_t param_hash(const StructuralParams& p) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
    h ^= 0x1f;
    h *= 1099511628211ull;
  };
  for (const auto& [key, value] : params_key_values(p)) {
    mix(key);
    mix(value);
  }
  return h;
}

}  // namespace fglab
