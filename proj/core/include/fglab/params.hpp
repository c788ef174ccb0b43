#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fglab {

class ConfigFile;

// Structural calibration of the two-country model. Defaults reproduce the
// baseline calibration used throughout the tests: quarterly data, equal-sized
// countries, symmetric price stickiness.
struct StructuralParams {
  double alpha = 0.9;        // home Calvo price-stickiness probability
  double alpha_star = 0.9;   // foreign Calvo probability
  double beta = 0.985;       // common discount factor
  double sigma = 2.0;        // inverse intertemporal elasticity
  double gamma = 0.5;        // trade openness / import share
  double eta = 1.5;          // inverse Frisch elasticity
  double theta = 10.0;       // elasticity of substitution across goods

  double psi_r = 0.0;        // home interest-rate smoothing
  double psi_pi = 1.25;      // home Taylor response to inflation
  double psi_x = 0.5;        // home Taylor response to the output gap
  double psi_r_star = 0.0;
  double psi_pi_star = 1.25;
  double psi_x_star = 0.5;

  double rho_r = 0.8;        // persistence of the home natural rate
  double rho_r_star = 0.8;

  double e_nr = -0.05;       // home-only natural-rate innovation
  double e_gl = -0.04;       // global-trap innovation, home leg
  double e_gl_star = -0.04;  // global-trap innovation, foreign leg

  double lambda_r = 0.01;    // rate-variability weight in the home loss
  double lambda_r_star = 0.01;

  // Lower bound on the nominal rate, in deviations from steady state.
  // Unset means -(1/beta - 1), i.e. the rate floors at zero in levels.
  std::optional<double> rate_bound;

  double effective_bound() const {
    return rate_bound ? *rate_bound : -(1.0 / beta - 1.0);
  }
};

// Checks admissibility of a calibration. Returns one message per violated
// constraint; empty means the calibration is usable.
std::vector<std::string> validate_params(const StructuralParams& p);

// Like validate_params, but throws ConfigError listing all violations.
void require_valid_params(const StructuralParams& p);

// Reads the [params] section of a config file, starting from defaults.
// Unknown keys in the section are a hard error.
StructuralParams params_from_config(ConfigFile& cfg);

// Canonical name/value listing, used for output headers and hashing.
std::vector<std::pair<std::string, std::string>> params_key_values(
    const StructuralParams& p);

// FNV-1a hash of the canonical listing; identifies a calibration in output
// file headers so runs can be matched to their inputs.
std::uint64_t param_hash(const StructuralParams& p);

}  // namespace fglab
