#include "commands.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <vector>

#include "fglab/config.hpp"
#include "fglab/csv.hpp"
#include "fglab/errors.hpp"
#include "fglab/policy.hpp"
#include "fglab/svg.hpp"
#include "fglab/version.hpp"
#include "fglab/welfare.hpp"

namespace fglab::cli {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_list(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string item;
  while (std::getline(in, item, sep)) {
    std::string t = trim(item);
    if (t.empty()) throw ConfigError("empty element in list '" + s + "'");
    out.push_back(t);
  }
  if (out.empty()) throw ConfigError("empty list");
  return out;
}

SolverEngine parse_engine(const std::string& name) {
  if (name == "occbin") return SolverEngine::occbin;
  if (name == "stacked") return SolverEngine::stacked;
  throw ConfigError("unknown engine '" + name + "' (expected occbin or stacked)");
}

std::string engine_label(SolverEngine e) {
  return e == SolverEngine::occbin ? "occbin" : "stacked";
}

// Everything a subcommand needs from its input files, with CLI overrides
// already applied. The configs stay open so commands can read their own
// sections before the final unknown-key sweep.
struct Setup {
  ConfigFile scenario_cfg;
  std::optional<ConfigFile> params_cfg;
  Scenario scenario;
  ScenarioOptions options;
};

ScenarioOptions options_from_config(ConfigFile& cfg) {
  ScenarioOptions o;
  cfg.allow_section("solver");
  o.engine = parse_engine(cfg.string_or("solver", "engine", "occbin"));
  o.max_iterations = cfg.int_or("solver", "max_iterations", o.max_iterations);
  o.regime_tol = cfg.double_or("solver", "regime_tol", o.regime_tol);
  o.horizon_guard = cfg.bool_or("solver", "horizon_guard", o.horizon_guard);
  o.horizon_tol = cfg.double_or("solver", "horizon_tol", o.horizon_tol);
  const std::string terminal =
      cfg.string_or("solver", "terminal", "reference_rule");
  if (terminal == "reference_rule")
    o.terminal = TerminalCondition::reference_rule;
  else if (terminal == "steady_state")
    o.terminal = TerminalCondition::steady_state;
  else
    throw ConfigError("unknown terminal condition '" + terminal +
                      "' (expected reference_rule or steady_state)");
  return o;
}

Setup load_setup(const CommonFlags& flags) {
  if (flags.scenario_file.empty())
    throw ConfigError("--scenario <file> is required");
  Setup s{ConfigFile::parse_file(flags.scenario_file), std::nullopt, {}, {}};
  if (!flags.params_file.empty()) {
    if (s.scenario_cfg.has_section("params"))
      throw ConfigError(
          "parameters must come from exactly one place: remove [params] from "
          "the scenario file or drop --params");
    s.params_cfg = ConfigFile::parse_file(flags.params_file);
  }
  s.scenario = scenario_from_config(s.scenario_cfg);
  if (s.params_cfg) s.scenario.params = params_from_config(*s.params_cfg);
  s.options = options_from_config(s.scenario_cfg);

  if (flags.horizon) {
    if (*flags.horizon < 1) throw ConfigError("--horizon must be positive");
    s.scenario.horizon = *flags.horizon;
  }
  if (flags.lambda_r) {
    if (*flags.lambda_r < 0.0)
      throw ConfigError("--lambda-r must be nonnegative");
    s.scenario.params.lambda_r = *flags.lambda_r;
    s.scenario.params.lambda_r_star = *flags.lambda_r;
  }
  if (flags.engine) s.options.engine = parse_engine(*flags.engine);

  require_valid_params(s.scenario.params);
  return s;
}

void finish_config_checks(Setup& s) {
  s.scenario_cfg.ensure_all_consumed();
  if (s.params_cfg) s.params_cfg->ensure_all_consumed();
}

std::string hash_hex(const StructuralParams& p) {
  char buf[24];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(param_hash(p)));
  return buf;
}

HeaderEntries output_header(const std::string& command, const Scenario& sc,
                            const ScenarioOptions& opts) {
  HeaderEntries h;
  h.emplace_back("tool", std::string(tool_name));
  h.emplace_back("version", std::string(tool_version));
  h.emplace_back("command", command);
  h.emplace_back("param_hash", hash_hex(sc.params));
  h.emplace_back("lambda_r", format_significant(sc.params.lambda_r, 17));
  h.emplace_back("lambda_r_star",
                 format_significant(sc.params.lambda_r_star, 17));
  h.emplace_back("rate_bound",
                 format_significant(sc.params.effective_bound(), 17));
  h.emplace_back("sigma", format_significant(sc.params.sigma, 17));
  h.emplace_back("shock", shock_label(sc.shock));
  h.emplace_back("horizon", std::to_string(sc.horizon));
  h.emplace_back("engine", engine_label(opts.engine));
  h.emplace_back("regime_tol", format_significant(opts.regime_tol, 3));
  if (opts.engine == SolverEngine::occbin) {
    h.emplace_back("horizon_guard", opts.horizon_guard ? "on" : "off");
    h.emplace_back("horizon_tol", format_significant(opts.horizon_tol, 3));
  } else {
    h.emplace_back("terminal",
                   opts.terminal == TerminalCondition::reference_rule
                       ? "reference_rule"
                       : "steady_state");
  }
  h.emplace_back("units", "raw log deviations from steady state");
  return h;
}

// Computed outputs are staged in memory and written in one pass at the end,
// so a failing scenario never leaves partial files behind.
class OutputStage {
 public:
  explicit OutputStage(std::string dir) : dir_(std::move(dir)) {}

  void add(const std::string& name, std::string content) {
    files_.emplace_back(name, std::move(content));
  }

  std::string path_of(const std::string& name) const {
    return (std::filesystem::path(dir_) / name).string();
  }

  void write_all() const {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec) throw ConfigError("cannot create output directory: " + dir_);
    for (const auto& [name, content] : files_) {
      const std::string path = path_of(name);
      std::ofstream out(path, std::ios::binary);
      if (!out) throw ConfigError("cannot write file: " + path);
      out << content;
      if (!out) throw ConfigError("write failed: " + path);
      std::cout << "wrote " << path << "\n";
    }
  }

 private:
  std::string dir_;
  std::vector<std::pair<std::string, std::string>> files_;
};

// A policy menu turns one scenario into a labeled family of variants, used
// by the irf and losses commands for overlay figures.
struct MenuVariant {
  std::string label;
  Scenario scenario;
};

std::vector<MenuVariant> scenario_variants(Setup& setup) {
  std::vector<MenuVariant> variants;
  if (setup.scenario_cfg.has_key("scenario", "menu")) {
    const std::string menu =
        setup.scenario_cfg.require_string("scenario", "menu");
    const std::string applies =
        setup.scenario_cfg.string_or("scenario", "menu_applies", "home");
    if (applies != "home" && applies != "foreign" && applies != "both")
      throw ConfigError("menu_applies must be home, foreign, or both");
    for (const std::string& token : split_list(menu, ',')) {
      MenuVariant v{token, setup.scenario};
      const PolicySpec spec = parse_policy(token);
      if (applies == "home" || applies == "both") v.scenario.policy[0] = spec;
      if (applies == "foreign" || applies == "both") v.scenario.policy[1] = spec;
      variants.push_back(std::move(v));
    }
  } else {
    const std::string label = "h-" + setup.scenario.policy[0].label() + "_f-" +
                              setup.scenario.policy[1].label();
    variants.push_back({label, setup.scenario});
  }
  return variants;
}

HeaderEntries variant_header(const std::string& command, const Scenario& sc,
                             const ScenarioOptions& opts,
                             const ScenarioResult& result) {
  HeaderEntries h = output_header(command, sc, opts);
  h.emplace_back("home_policy", sc.policy[0].label());
  h.emplace_back("foreign_policy", sc.policy[1].label());
  h.emplace_back("zlb_exit_home", std::to_string(result.zlb_exit[0]));
  h.emplace_back("zlb_exit_foreign", std::to_string(result.zlb_exit[1]));
  h.emplace_back("forced_window_home", std::to_string(result.forced_window[0]));
  h.emplace_back("forced_window_foreign",
                 std::to_string(result.forced_window[1]));
  return h;
}

void stage_table(OutputStage& stage, const CommonFlags& flags,
                 const std::string& base_name, const HeaderEntries& header,
                 const std::vector<std::string>& columns,
                 const Eigen::MatrixXd& data) {
  stage.add(base_name + ".csv", format_csv(header, columns, data, 6));
  if (flags.raw)
    stage.add(base_name + "_raw.csv", format_csv(header, columns, data, 17));
}

// Builds overlay panels from already-written CSV files: one panel per value
// column, one curve per file.
std::vector<PlotPanel> panels_from_csvs(const OutputStage& stage,
                                        const std::vector<std::string>& names,
                                        const std::vector<std::string>& labels) {
  std::vector<PlotPanel> panels;
  for (size_t fi = 0; fi < names.size(); ++fi) {
    const CsvTable table = read_csv(stage.path_of(names[fi]));
    if (table.columns.empty() || table.columns[0] != "t")
      throw ConfigError(names[fi] + ": expected leading t column");
    if (panels.empty()) {
      panels.resize(table.columns.size() - 1);
      for (size_t c = 1; c < table.columns.size(); ++c)
        panels[c - 1].title = table.columns[c];
    }
    for (size_t c = 1; c < table.columns.size(); ++c) {
      PlotSeries series;
      series.label = labels[fi];
      for (Eigen::Index i = 0; i < table.data.rows(); ++i) {
        series.x.push_back(table.data(i, 0));
        series.y.push_back(table.data(i, static_cast<Eigen::Index>(c)));
      }
      panels[c - 1].series.push_back(std::move(series));
    }
  }
  return panels;
}

std::vector<int> parse_grid_flag(const std::string& text) {
  const size_t colon = text.find(':');
  if (colon != std::string::npos) {
    const int lo = std::stoi(text.substr(0, colon));
    const int hi = std::stoi(text.substr(colon + 1));
    if (lo < 0 || hi < lo) throw ConfigError("bad grid range '" + text + "'");
    std::vector<int> out;
    for (int k = lo; k <= hi; ++k) out.push_back(k);
    return out;
  }
  std::vector<int> out;
  for (const std::string& item : split_list(text, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw ConfigError("bad grid element '" + item + "'");
    }
  }
  return out;
}

const std::vector<int> default_grid = {0, 2, 4, 5, 6, 9, 10};

}  // namespace

int cmd_irf(const CommonFlags& flags) {
  Setup setup = load_setup(flags);
  std::vector<MenuVariant> variants = scenario_variants(setup);
  finish_config_checks(setup);

  OutputStage stage(flags.out_dir);
  std::vector<std::string> csv_names;
  std::vector<std::string> labels;
  for (const MenuVariant& v : variants) {
    const ScenarioResult result = run_scenario(v.scenario, setup.options);
    const IrfTable table = irf_table(result.path);
    const std::string base =
        "irf_" + shock_label(v.scenario.shock) + "_" + v.label;
    stage_table(stage, flags, base,
                variant_header("irf", v.scenario, setup.options, result),
                table.columns, table.data);
    csv_names.push_back(base + ".csv");
    labels.push_back(v.label);
  }
  stage.write_all();

  if (flags.plots) {
    const std::vector<PlotPanel> panels =
        panels_from_csvs(stage, csv_names, labels);
    const std::string name = "irf_" + shock_label(setup.scenario.shock) +
                             (variants.size() > 1 ? "_overlay" : "_" + labels[0]) +
                             ".svg";
    write_svg_panels(stage.path_of(name),
                     shock_label(setup.scenario.shock) + " impulse responses",
                     panels, 2);
    std::cout << "wrote " << stage.path_of(name) << "\n";
  }
  return 0;
}

int cmd_losses(const CommonFlags& flags) {
  Setup setup = load_setup(flags);
  std::vector<MenuVariant> variants = scenario_variants(setup);
  finish_config_checks(setup);

  OutputStage stage(flags.out_dir);
  std::vector<std::string> csv_names;
  std::vector<std::string> labels;
  const std::vector<std::string> columns = {"t", "world", "home", "foreign"};
  for (const MenuVariant& v : variants) {
    const ScenarioResult result = run_scenario(v.scenario, setup.options);
    const WelfareWeights w = welfare_weights(v.scenario.params);
    const LossSeries series = period_losses(result.path, w);
    Eigen::MatrixXd data(result.path.horizon(), 4);
    for (int t = 0; t < result.path.horizon(); ++t) {
      data(t, 0) = t + 1;
      data(t, 1) = series.world(t);
      data(t, 2) = series.home(t);
      data(t, 3) = series.foreign(t);
    }
    const std::string base =
        "losses_" + shock_label(v.scenario.shock) + "_" + v.label;
    stage_table(stage, flags, base,
                variant_header("losses", v.scenario, setup.options, result),
                columns, data);
    csv_names.push_back(base + ".csv");
    labels.push_back(v.label);
  }
  stage.write_all();

  if (flags.plots) {
    const std::vector<PlotPanel> panels =
        panels_from_csvs(stage, csv_names, labels);
    const std::string name = "losses_" + shock_label(setup.scenario.shock) +
                             (variants.size() > 1 ? "_overlay" : "_" + labels[0]) +
                             ".svg";
    write_svg_panels(stage.path_of(name),
                     shock_label(setup.scenario.shock) + " per-period losses",
                     panels, 1);
    std::cout << "wrote " << stage.path_of(name) << "\n";
  }
  return 0;
}

int cmd_welfare(const CommonFlags& flags) {
  Setup setup = load_setup(flags);

  setup.scenario_cfg.allow_section("welfare");
  std::vector<std::array<PolicySpec, 2>> pairs;
  if (setup.scenario_cfg.has_key("welfare", "rows")) {
    const std::string rows = setup.scenario_cfg.require_string("welfare", "rows");
    for (const std::string& token : split_list(rows, ',')) {
      const std::vector<std::string> sides = split_list(token, '/');
      if (sides.size() != 2)
        throw ConfigError("welfare row '" + token +
                          "' must look like homepolicy/foreignpolicy");
      pairs.push_back({parse_policy(sides[0]), parse_policy(sides[1])});
    }
  } else {
    for (const char* h : {"zlb", "fg2", "fg4", "fg5", "fg9"})
      pairs.push_back({parse_policy(h), PolicySpec::no_zlb()});
  }
  finish_config_checks(setup);

  const WelfareTable table = welfare_table(pairs, setup.scenario, setup.options);

  std::vector<std::vector<std::string>> rows;
  for (const WelfareRow& row : table.rows) {
    std::vector<std::string> cells = {row.home_policy.label(),
                                      row.foreign_policy.label()};
    if (row.report) {
      cells.push_back(format_significant(row.report->world, 6));
      cells.push_back(format_significant(row.report->home, 6));
      cells.push_back(format_significant(row.report->foreign, 6));
      cells.push_back(row.world_min ? "1" : "0");
      cells.push_back(row.home_min ? "1" : "0");
      cells.push_back(row.foreign_min ? "1" : "0");
      cells.push_back(std::to_string(row.zlb_exit[0]));
      cells.push_back(std::to_string(row.zlb_exit[1]));
      cells.push_back(std::to_string(row.forced_window[0]));
      cells.push_back(std::to_string(row.forced_window[1]));
      cells.push_back("");
    } else {
      for (int i = 0; i < 10; ++i) cells.push_back("");
      cells.push_back(row.error);
    }
    rows.push_back(std::move(cells));
  }
  const std::vector<std::string> columns = {
      "home_policy", "foreign_policy", "world", "home", "foreign",
      "world_min", "home_min", "foreign_min", "zlb_exit_h", "zlb_exit_f",
      "window_h", "window_f", "error"};

  OutputStage stage(flags.out_dir);
  const std::string base = "welfare_" + shock_label(setup.scenario.shock);
  const HeaderEntries header =
      output_header("welfare", setup.scenario, setup.options);
  stage.add(base + ".csv", format_csv_rows(header, columns, rows));
  if (flags.raw) {
    std::vector<std::vector<std::string>> raw_rows;
    for (const WelfareRow& row : table.rows) {
      std::vector<std::string> cells = {row.home_policy.label(),
                                        row.foreign_policy.label()};
      if (row.report) {
        cells.push_back(format_significant(row.report->world, 17));
        cells.push_back(format_significant(row.report->home, 17));
        cells.push_back(format_significant(row.report->foreign, 17));
        cells.push_back(row.world_min ? "1" : "0");
        cells.push_back(row.home_min ? "1" : "0");
        cells.push_back(row.foreign_min ? "1" : "0");
        cells.push_back(std::to_string(row.zlb_exit[0]));
        cells.push_back(std::to_string(row.zlb_exit[1]));
        cells.push_back(std::to_string(row.forced_window[0]));
        cells.push_back(std::to_string(row.forced_window[1]));
        cells.push_back("");
      } else {
        for (int i = 0; i < 10; ++i) cells.push_back("");
        cells.push_back(row.error);
      }
      raw_rows.push_back(std::move(cells));
    }
    stage.add(base + "_raw.csv", format_csv_rows(header, columns, raw_rows));
  }
  const std::string text = render_welfare_table(table);
  stage.add(base + ".txt", text);
  stage.write_all();
  std::cout << text;

  // Failed rows are annotations, not aborts; only a table with no usable
  // row at all counts as a solver failure.
  bool any_success = false;
  for (const WelfareRow& row : table.rows) any_success |= row.report.has_value();
  return any_success ? 0 : 3;
}

int cmd_bargain(const CommonFlags& flags) {
  Setup setup = load_setup(flags);
  if (setup.scenario.shock != ShockKind::global_trap)
    throw ConfigError(
        "bargaining grids are defined for the global_trap shock; set "
        "shock = global_trap in the scenario");

  setup.scenario_cfg.allow_section("bargain");
  std::vector<int> home_grid =
      setup.scenario_cfg.int_list_or("bargain", "home_grid", default_grid);
  std::vector<int> foreign_grid =
      setup.scenario_cfg.int_list_or("bargain", "foreign_grid", default_grid);
  if (!flags.grid.empty())
    home_grid = foreign_grid = parse_grid_flag(flags.grid);
  for (int k : home_grid)
    if (k < 0) throw ConfigError("grid entries must be nonnegative");
  for (int k : foreign_grid)
    if (k < 0) throw ConfigError("grid entries must be nonnegative");
  finish_config_checks(setup);

  const BargainGrid grid =
      bargain_grid(home_grid, foreign_grid, setup.scenario, setup.options);

  const std::vector<std::string> columns = {
      "k_h", "k_f", "world", "home", "foreign",
      "cooperative", "home_best_response", "foreign_best_response", "error"};
  auto make_rows = [&grid](int digits) {
    std::vector<std::vector<std::string>> rows;
    for (size_t i = 0; i < grid.home_grid.size(); ++i) {
      for (size_t j = 0; j < grid.foreign_grid.size(); ++j) {
        const BargainCell& cell = grid.cells[i][j];
        std::vector<std::string> cells = {std::to_string(cell.k_home),
                                          std::to_string(cell.k_foreign)};
        if (cell.report) {
          cells.push_back(format_significant(cell.report->world, digits));
          cells.push_back(format_significant(cell.report->home, digits));
          cells.push_back(format_significant(cell.report->foreign, digits));
          const bool coop = static_cast<int>(i) == grid.coop_home &&
                            static_cast<int>(j) == grid.coop_foreign;
          cells.push_back(coop ? "1" : "0");
          cells.push_back(
              grid.home_best_response[j] == static_cast<int>(i) ? "1" : "0");
          cells.push_back(
              grid.foreign_best_response[i] == static_cast<int>(j) ? "1" : "0");
          cells.push_back("");
        } else {
          for (int c = 0; c < 6; ++c) cells.push_back("");
          cells.push_back(cell.error);
        }
        rows.push_back(std::move(cells));
      }
    }
    return rows;
  };

  OutputStage stage(flags.out_dir);
  const HeaderEntries header =
      output_header("bargain", setup.scenario, setup.options);
  stage.add("bargain_grid.csv", format_csv_rows(header, columns, make_rows(6)));
  if (flags.raw)
    stage.add("bargain_grid_raw.csv",
              format_csv_rows(header, columns, make_rows(17)));
  const std::string text = render_bargain_summary(grid);
  stage.add("bargain_summary.txt", text);
  stage.write_all();
  std::cout << text;
  return grid.coop_home >= 0 ? 0 : 3;
}

}  // namespace fglab::cli
