#pragma once

#include <optional>
#include <string>

namespace fglab::cli {

// Flags shared by all subcommands; unset optionals fall back to the config
// files' values.
struct CommonFlags {
  std::string scenario_file;
  std::string params_file;
  std::string out_dir = ".";
  std::optional<int> horizon;
  std::optional<double> lambda_r;  // sets both countries' rate weights
  std::optional<std::string> engine;
  std::string grid;  // bargain only: "0,2,4" or "lo:hi"
  bool plots = false;
  bool raw = false;
};

int cmd_irf(const CommonFlags& flags);
int cmd_welfare(const CommonFlags& flags);
int cmd_bargain(const CommonFlags& flags);
int cmd_losses(const CommonFlags& flags);

}  // namespace fglab::cli
