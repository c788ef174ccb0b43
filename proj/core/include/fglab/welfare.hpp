#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fglab/composites.hpp"
#include "fglab/policy.hpp"
#include "fglab/simulation.hpp"

namespace fglab {

// Weights of the quadratic per-period losses and of the world aggregate.
struct WelfareWeights {
  double lambda_x;
  double lambda_x_star;
  double lambda_r;
  double lambda_r_star;
  double psi_weight;    // foreign share in the world loss
  double cross_weight;  // Lambda; the world loss subtracts 2*Lambda*x*x_star
  double beta;
};

WelfareWeights welfare_weights(const StructuralParams& p,
                               const CompositeCoefficients& c);
WelfareWeights welfare_weights(const StructuralParams& p);

// Per-period losses along a path:
//   home_t  = pi^2 + lambda_x x^2 + lambda_r r^2   (foreign analogue)
//   world_t = (1 - psi) home_t + psi foreign_t - 2 Lambda x x_star
// Rates enter with their bounded path values.
struct LossSeries {
  Eigen::VectorXd home;
  Eigen::VectorXd foreign;
  Eigen::VectorXd world;
};

LossSeries period_losses(const SimulationPath& path, const WelfareWeights& w);

// Discounted (sum of beta^(t-1) loss_t) and plain sums of a loss series.
// Discounted sums are the headline numbers; undiscounted sums are kept
// because aggregation conventions differ across summaries of this model.
struct WelfareReport {
  std::string label;
  double home = 0.0;
  double foreign = 0.0;
  double world = 0.0;
  double home_undiscounted = 0.0;
  double foreign_undiscounted = 0.0;
  double world_undiscounted = 0.0;
  LossSeries series;
};

WelfareReport discounted_losses(const LossSeries& series, double beta,
                                std::string label = {});

// One row of a policy-comparison table. A row whose scenario failed to
// solve carries the error text instead of a report and is skipped when
// column minima are flagged.
struct WelfareRow {
  PolicySpec home_policy;
  PolicySpec foreign_policy;
  std::optional<WelfareReport> report;
  std::string error;
  std::array<int, 2> zlb_exit = {0, 0};
  std::array<int, 2> forced_window = {0, 0};
  bool world_min = false;
  bool home_min = false;
  bool foreign_min = false;
};

struct WelfareTable {
  std::vector<WelfareRow> rows;
  bool has_failures = false;
};

// Evaluates one scenario per policy pair (shock, params, and horizon from
// the base scenario) and flags each loss column's minimum.
WelfareTable welfare_table(const std::vector<std::array<PolicySpec, 2>>& pairs,
                           const Scenario& base,
                           const ScenarioOptions& opts = {});

// One cell of a forward-guidance bargaining grid.
struct BargainCell {
  int k_home = 0;
  int k_foreign = 0;
  std::optional<WelfareReport> report;
  std::string error;
};

// Grid of FG lengths with best responses and the cooperative point.
// cells[i][j] pairs home_grid[i] with foreign_grid[j]. Best responses and
// argmins are indices into the grids, -1 where every candidate cell failed.
struct BargainGrid {
  std::vector<int> home_grid;
  std::vector<int> foreign_grid;
  std::vector<std::vector<BargainCell>> cells;
  std::vector<int> home_best_response;     // per foreign index: home index
  std::vector<int> foreign_best_response;  // per home index: foreign index
  int coop_home = -1;   // world-loss argmin, home index
  int coop_foreign = -1;
  bool home_deviation_incentive = false;
  bool foreign_deviation_incentive = false;
  bool has_failures = false;
};

BargainGrid bargain_grid(const std::vector<int>& home_grid,
                         const std::vector<int>& foreign_grid,
                         const Scenario& base,
                         const ScenarioOptions& opts = {});

// Recomputes best responses, cooperative point, and deviation flags from
// the stored cells. bargain_grid calls this; exposed so the summaries can
// be re-derived after transforming the cell losses.
void recompute_grid_summaries(BargainGrid& grid);

// Plain-text renderings with starred column minima / marked summary points.
std::string render_welfare_table(const WelfareTable& table);
std::string render_bargain_summary(const BargainGrid& grid);

}  // namespace fglab
