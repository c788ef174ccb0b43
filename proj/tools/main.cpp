#include <CLI11.hpp>
#include <iostream>
#include <string>

#include "commands.hpp"
#include "fglab/errors.hpp"
#include "fglab/version.hpp"

namespace {

void add_common_flags(CLI::App* cmd, fglab::cli::CommonFlags& flags,
                      bool with_grid) {
  cmd->add_option("--scenario", flags.scenario_file,
                  "scenario config file (required)");
  cmd->add_option("--params", flags.params_file,
                  "calibration config file; replaces the scenario file's "
                  "[params] section");
  cmd->add_option("--out", flags.out_dir, "output directory (default: .)");
  cmd->add_option("--horizon", flags.horizon, "override the solve horizon");
  cmd->add_option("--lambda-r", flags.lambda_r,
                  "override the rate-variability loss weight, both countries");
  cmd->add_option("--engine", flags.engine,
                  "solver engine: occbin (default) or stacked");
  if (with_grid)
    cmd->add_option("--grid", flags.grid,
                    "extra-quarter grid for both axes, e.g. 0,2,4,5,6,9,10 "
                    "or 0:10");
  cmd->add_flag("--plots", flags.plots, "also emit SVG plots");
  cmd->add_flag("--raw", flags.raw,
                "also emit full-precision (_raw) CSV companions");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "two-country lower-bound laboratory: impulse responses, welfare "
      "tables, and forward-guidance bargaining grids"};
  app.set_version_flag("--version", std::string(fglab::tool_version));
  app.require_subcommand(1);

  fglab::cli::CommonFlags irf_flags, welfare_flags, bargain_flags, losses_flags;
  CLI::App* irf = app.add_subcommand(
      "irf", "impulse responses for one scenario or a policy menu");
  add_common_flags(irf, irf_flags, false);
  CLI::App* welfare = app.add_subcommand(
      "welfare", "discounted-loss table over a family of policy pairs");
  add_common_flags(welfare, welfare_flags, false);
  CLI::App* bargain = app.add_subcommand(
      "bargain", "forward-guidance bargaining grid with best responses");
  add_common_flags(bargain, bargain_flags, true);
  CLI::App* losses = app.add_subcommand(
      "losses", "per-period world/home/foreign loss series");
  add_common_flags(losses, losses_flags, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (irf->parsed()) return fglab::cli::cmd_irf(irf_flags);
    if (welfare->parsed()) return fglab::cli::cmd_welfare(welfare_flags);
    if (bargain->parsed()) return fglab::cli::cmd_bargain(bargain_flags);
    if (losses->parsed()) return fglab::cli::cmd_losses(losses_flags);
  } catch (const fglab::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const fglab::SolverError& e) {
    std::cerr << "solver error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
