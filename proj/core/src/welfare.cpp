#include "fglab/welfare.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "fglab/errors.hpp"

namespace fglab {

WelfareWeights welfare_weights(const StructuralParams& p,
                               const CompositeCoefficients& c) {
  WelfareWeights w;
  w.lambda_x = c.lambda_x;
  w.lambda_x_star = c.lambda_x_star;
  w.lambda_r = p.lambda_r;
  w.lambda_r_star = p.lambda_r_star;
  w.psi_weight = c.psi_weight;
  w.cross_weight = c.cross_weight;
  w.beta = p.beta;
  return w;
}

WelfareWeights welfare_weights(const StructuralParams& p) {
  return welfare_weights(p, derive_composites(p));
}

LossSeries period_losses(const SimulationPath& path, const WelfareWeights& w) {
  const int horizon = path.horizon();
  LossSeries s;
  s.home.resize(horizon);
  s.foreign.resize(horizon);
  s.world.resize(horizon);
  for (int t = 0; t < horizon; ++t) {
    const auto& y = path.values;
    const double home = y(t, var::pi_h) * y(t, var::pi_h) +
                        w.lambda_x * y(t, var::gap_h) * y(t, var::gap_h) +
                        w.lambda_r * y(t, var::rate_h) * y(t, var::rate_h);
    const double foreign =
        y(t, var::pi_f) * y(t, var::pi_f) +
        w.lambda_x_star * y(t, var::gap_f) * y(t, var::gap_f) +
        w.lambda_r_star * y(t, var::rate_f) * y(t, var::rate_f);
    s.home(t) = home;
    s.foreign(t) = foreign;
    s.world(t) = (1.0 - w.psi_weight) * home + w.psi_weight * foreign -
                 2.0 * w.cross_weight * y(t, var::gap_h) * y(t, var::gap_f);
  }
  return s;
}

WelfareReport discounted_losses(const LossSeries& series, double beta,
                                std::string label) {
  WelfareReport r;
  r.label = std::move(label);
  r.series = series;
  double weight = 1.0;
  for (int t = 0; t < series.home.size(); ++t) {
    r.home += weight * series.home(t);
    r.foreign += weight * series.foreign(t);
    r.world += weight * series.world(t);
    weight *= beta;
  }
  r.home_undiscounted = series.home.sum();
  r.foreign_undiscounted = series.foreign.sum();
  r.world_undiscounted = series.world.sum();
  return r;
}

namespace {

WelfareReport report_for(const Scenario& s, const ScenarioOptions& opts,
                         ScenarioResult& result) {
  result = run_scenario(s, opts);
  const WelfareWeights w = welfare_weights(s.params);
  std::string label = shock_label(s.shock) + " " + s.policy[0].label() + "/" +
                      s.policy[1].label();
  return discounted_losses(period_losses(result.path, w), s.params.beta,
                           std::move(label));
}

}  // namespace

WelfareTable welfare_table(const std::vector<std::array<PolicySpec, 2>>& pairs,
                           const Scenario& base, const ScenarioOptions& opts) {
  WelfareTable table;
  table.rows.reserve(pairs.size());
  for (const auto& pair : pairs) {
    WelfareRow row;
    row.home_policy = pair[0];
    row.foreign_policy = pair[1];
    Scenario s = base;
    s.policy = {pair[0], pair[1]};
    try {
      ScenarioResult result;
      row.report = report_for(s, opts, result);
      row.zlb_exit = result.zlb_exit;
      row.forced_window = result.forced_window;
    } catch (const SolverError& e) {
      row.error = e.what();
      table.has_failures = true;
    }
    table.rows.push_back(std::move(row));
  }

  auto flag_min = [&table](auto value, auto flag) {
    double best = std::numeric_limits<double>::infinity();
    int best_i = -1;
    for (size_t i = 0; i < table.rows.size(); ++i) {
      if (!table.rows[i].report) continue;
      double v = value(*table.rows[i].report);
      if (v < best) {
        best = v;
        best_i = static_cast<int>(i);
      }
    }
    if (best_i >= 0) flag(table.rows[best_i]);
  };
  flag_min([](const WelfareReport& r) { return r.world; },
           [](WelfareRow& r) { r.world_min = true; });
  flag_min([](const WelfareReport& r) { return r.home; },
           [](WelfareRow& r) { r.home_min = true; });
  flag_min([](const WelfareReport& r) { return r.foreign; },
           [](WelfareRow& r) { r.foreign_min = true; });
  return table;
}

BargainGrid bargain_grid(const std::vector<int>& home_grid,
                         const std::vector<int>& foreign_grid,
                         const Scenario& base, const ScenarioOptions& opts) {
  if (home_grid.empty() || foreign_grid.empty())
    throw ConfigError("bargaining grid axes must be nonempty");
  BargainGrid grid;
  grid.home_grid = home_grid;
  grid.foreign_grid = foreign_grid;
  grid.cells.resize(home_grid.size());
  for (size_t i = 0; i < home_grid.size(); ++i) {
    grid.cells[i].resize(foreign_grid.size());
    for (size_t j = 0; j < foreign_grid.size(); ++j) {
      BargainCell& cell = grid.cells[i][j];
      cell.k_home = home_grid[i];
      cell.k_foreign = foreign_grid[j];
      Scenario s = base;
      s.policy = {PolicySpec::fg(home_grid[i]), PolicySpec::fg(foreign_grid[j])};
      try {
        ScenarioResult result;
        cell.report = report_for(s, opts, result);
      } catch (const SolverError& e) {
        cell.error = e.what();
        grid.has_failures = true;
      }
    }
  }
  recompute_grid_summaries(grid);
  return grid;
}

void recompute_grid_summaries(BargainGrid& grid) {
  const size_t nh = grid.home_grid.size();
  const size_t nf = grid.foreign_grid.size();

  grid.home_best_response.assign(nf, -1);
  for (size_t j = 0; j < nf; ++j) {
    double best = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < nh; ++i) {
      const auto& report = grid.cells[i][j].report;
      if (report && report->home < best) {
        best = report->home;
        grid.home_best_response[j] = static_cast<int>(i);
      }
    }
  }
  grid.foreign_best_response.assign(nh, -1);
  for (size_t i = 0; i < nh; ++i) {
    double best = std::numeric_limits<double>::infinity();
    for (size_t j = 0; j < nf; ++j) {
      const auto& report = grid.cells[i][j].report;
      if (report && report->foreign < best) {
        best = report->foreign;
        grid.foreign_best_response[i] = static_cast<int>(j);
      }
    }
  }

  grid.coop_home = grid.coop_foreign = -1;
  double best_world = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < nh; ++i) {
    for (size_t j = 0; j < nf; ++j) {
      const auto& report = grid.cells[i][j].report;
      if (report && report->world < best_world) {
        best_world = report->world;
        grid.coop_home = static_cast<int>(i);
        grid.coop_foreign = static_cast<int>(j);
      }
    }
  }

  grid.home_deviation_incentive = false;
  grid.foreign_deviation_incentive = false;
  if (grid.coop_home >= 0) {
    const int br_home = grid.home_best_response[grid.coop_foreign];
    const int br_foreign = grid.foreign_best_response[grid.coop_home];
    grid.home_deviation_incentive = br_home >= 0 && br_home != grid.coop_home;
    grid.foreign_deviation_incentive =
        br_foreign >= 0 && br_foreign != grid.coop_foreign;
  }
}

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

}  // namespace

std::string render_welfare_table(const WelfareTable& table) {
  std::ostringstream out;
  out << "home policy | foreign policy | world loss | home loss | foreign loss\n";
  out << "------------+----------------+------------+-----------+-------------\n";
  for (const WelfareRow& row : table.rows) {
    out << row.home_policy.label() << " | " << row.foreign_policy.label()
        << " | ";
    if (!row.report) {
      out << "failed: " << row.error << "\n";
      continue;
    }
    out << num(row.report->world) << (row.world_min ? "*" : "") << " | "
        << num(row.report->home) << (row.home_min ? "*" : "") << " | "
        << num(row.report->foreign) << (row.foreign_min ? "*" : "") << "\n";
  }
  out << "(* = column minimum; losses are discounted sums in raw deviation "
         "units)\n";
  return out.str();
}

std::string render_bargain_summary(const BargainGrid& grid) {
  std::ostringstream out;
  out << "world loss by (home k rows, foreign k columns)\n";
  out << "kH\\kF";
  for (int kf : grid.foreign_grid) out << " | " << kf;
  out << "\n";
  for (size_t i = 0; i < grid.home_grid.size(); ++i) {
    out << grid.home_grid[i];
    for (size_t j = 0; j < grid.foreign_grid.size(); ++j) {
      const auto& report = grid.cells[i][j].report;
      out << " | " << (report ? num(report->world) : "failed");
      if (static_cast<int>(i) == grid.coop_home &&
          static_cast<int>(j) == grid.coop_foreign)
        out << "*";
    }
    out << "\n";
  }
  out << "(* = cooperative minimum)\n";
  if (grid.coop_home >= 0) {
    out << "cooperative point: kH=" << grid.home_grid[grid.coop_home]
        << ", kF=" << grid.foreign_grid[grid.coop_foreign] << "\n";
    out << "home best response to cooperative kF: "
        << (grid.home_best_response[grid.coop_foreign] >= 0
                ? std::to_string(
                      grid.home_grid[grid.home_best_response[grid.coop_foreign]])
                : "n/a")
        << (grid.home_deviation_incentive ? " (deviation incentive)" : "")
        << "\n";
    out << "foreign best response to cooperative kH: "
        << (grid.foreign_best_response[grid.coop_home] >= 0
                ? std::to_string(
                      grid.foreign_grid[grid.foreign_best_response[grid.coop_home]])
                : "n/a")
        << (grid.foreign_deviation_incentive ? " (deviation incentive)" : "")
        << "\n";
  }
  if (grid.has_failures)
    out << "warning: some cells failed to solve and were excluded from "
           "argmins\n";
  return out.str();
}

}  // namespace fglab
