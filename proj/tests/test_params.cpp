#include <doctest.h>

#include "fglab/config.hpp"
#include "fglab/errors.hpp"
#include "fglab/params.hpp"

using namespace fglab;

TEST_CASE("default parameters are valid") {
  StructuralParams p;
  CHECK(validate_params(p).empty());
  CHECK_NOTHROW(require_valid_params(p));
  CHECK(p.effective_bound() == doctest::Approx(-0.015228426395939).epsilon(1e-12));
}

TEST_CASE("explicit bound overrides the default") {
  StructuralParams p;
  p.rate_bound = -0.01;
  CHECK(p.effective_bound() == -0.01);
  p.rate_bound = 0.0;
  CHECK(p.effective_bound() == 0.0);
}

TEST_CASE("parameter violations are reported by name") {
  StructuralParams p;
  p.alpha = 1.0;
  p.beta = 0.0;
  p.sigma = -1.0;
  p.gamma = 1.5;
  p.eta = -0.1;
  p.theta = 1.0;
  p.psi_r = 1.0;
  p.rho_r_star = -0.2;
  p.lambda_r = -0.5;
  p.rate_bound = 0.3;
  auto problems = validate_params(p);
  REQUIRE(problems.size() == 10);
  auto mentions = [&](const char* name) {
    for (const auto& msg : problems)
      if (msg.find(name) != std::string::npos) return true;
    return false;
  };
  CHECK(mentions("alpha"));
  CHECK(mentions("beta"));
  CHECK(mentions("sigma"));
  CHECK(mentions("gamma"));
  CHECK(mentions("eta"));
  CHECK(mentions("theta"));
  CHECK(mentions("psi_r"));
  CHECK(mentions("rho_r_star"));
  CHECK(mentions("lambda_r"));
  CHECK(mentions("rate_bound"));
  CHECK_THROWS_AS(require_valid_params(p), ConfigError);
}

TEST_CASE("degenerate demand aggregate is rejected") {
  // sigma - gamma (sigma - 1) hits zero only when gamma leaves [0, 1], so the
  // dedicated message rides along with the range violation.
  StructuralParams p;
  p.sigma = 2.0;
  p.gamma = 2.0;
  auto problems = validate_params(p);
  REQUIRE(problems.size() == 2);
  CHECK(problems[1].find("nonzero") != std::string::npos);
}

TEST_CASE("params load from config with overrides") {
  ConfigFile cfg = ConfigFile::parse_text(
      "[params]\n"
      "sigma = 0.5\n"
      "gamma = 0.3\n"
      "alpha_star = 0.8\n"
      "rate_bound = -0.02\n"
      "lambda_r = 0.05\n");
  StructuralParams p = params_from_config(cfg);
  CHECK(p.sigma == 0.5);
  CHECK(p.gamma == 0.3);
  CHECK(p.alpha == 0.9);
  CHECK(p.alpha_star == 0.8);
  CHECK(p.beta == 0.985);
  REQUIRE(p.rate_bound.has_value());
  CHECK(*p.rate_bound == -0.02);
  CHECK(p.lambda_r == 0.05);
  CHECK(p.lambda_r_star == 0.01);
  CHECK_NOTHROW(cfg.ensure_all_consumed());
}

TEST_CASE("absent rate_bound stays unset through config") {
  ConfigFile cfg = ConfigFile::parse_text("[params]\nsigma = 1\n");
  StructuralParams p = params_from_config(cfg);
  CHECK_FALSE(p.rate_bound.has_value());
}

TEST_CASE("unknown params key fails the consumption check") {
  ConfigFile cfg = ConfigFile::parse_text("[params]\nsgima = 1\n");
  params_from_config(cfg);
  CHECK_THROWS_AS(cfg.ensure_all_consumed(), ConfigError);
}

TEST_CASE("key-value dump covers every structural field") {
  StructuralParams p;
  auto kv = params_key_values(p);
  CHECK(kv.size() == 21);
  bool saw_sigma = false;
  bool saw_bound = false;
  for (const auto& [k, v] : kv) {
    if (k == "sigma") {
      saw_sigma = true;
      CHECK(v == "2");
    }
    if (k == "rate_bound") saw_bound = true;
  }
  CHECK(saw_sigma);
  CHECK(saw_bound);
}

TEST_CASE("param hash is stable and sensitive") {
  StructuralParams a;
  StructuralParams b;
  CHECK(param_hash(a) == param_hash(b));
  b.sigma = 2.0000000001;
  CHECK(param_hash(a) != param_hash(b));
  b = a;
  b.rate_bound = a.effective_bound();
  // The hash keys off the resolved bound, so spelling out the default is a
  // no-op for identification purposes.
  CHECK(param_hash(a) == param_hash(b));
  b.rate_bound = -0.01;
  CHECK(param_hash(a) != param_hash(b));
}
