#include <doctest.h>

#include "fglab/errors.hpp"
#include "fglab/welfare.hpp"

using namespace fglab;

namespace {

Scenario global_scenario() {
  Scenario s;
  s.shock = ShockKind::global_trap;
  return s;
}

}  // namespace

TEST_CASE("grid layout stores the requested pairs") {
  BargainGrid grid = bargain_grid({0, 3}, {2, 5}, global_scenario());
  REQUIRE(grid.cells.size() == 2);
  REQUIRE(grid.cells[0].size() == 2);
  CHECK(grid.cells[0][0].k_home == 0);
  CHECK(grid.cells[0][1].k_foreign == 5);
  CHECK(grid.cells[1][0].k_home == 3);
  CHECK_FALSE(grid.has_failures);
  for (const auto& row : grid.cells)
    for (const auto& cell : row) REQUIRE(cell.report.has_value());
  CHECK(grid.home_best_response.size() == 2);
  CHECK(grid.foreign_best_response.size() == 2);
  CHECK(grid.coop_home >= 0);
  CHECK(grid.coop_foreign >= 0);
}

TEST_CASE("symmetric countries give a mirror-symmetric grid") {
  BargainGrid grid = bargain_grid({0, 3, 5}, {0, 3, 5}, global_scenario());
  for (size_t i = 0; i < 3; ++i) {
    for (size_t j = 0; j < 3; ++j) {
      const WelfareReport& a = *grid.cells[i][j].report;
      const WelfareReport& b = *grid.cells[j][i].report;
      CAPTURE(i);
      CAPTURE(j);
      CHECK(a.world == doctest::Approx(b.world).epsilon(1e-10));
      CHECK(a.home == doctest::Approx(b.foreign).epsilon(1e-10));
      CHECK(a.foreign == doctest::Approx(b.home).epsilon(1e-10));
    }
  }
}

TEST_CASE("home best response to a five-quarter partner") {
  // Against kF = 5, the home loss bottoms out at kH = 6 on the integer grid.
  std::vector<int> ks;
  for (int k = 0; k <= 10; ++k) ks.push_back(k);
  BargainGrid grid = bargain_grid(ks, {5}, global_scenario());
  REQUIRE(grid.home_best_response.size() == 1);
  REQUIRE(grid.home_best_response[0] >= 0);
  CHECK(grid.home_grid[grid.home_best_response[0]] == 6);
  // Frozen neighborhood of the optimum.
  CHECK(grid.cells[6][0].report->home <
        grid.cells[5][0].report->home);
  CHECK(grid.cells[6][0].report->home <
        grid.cells[7][0].report->home);
}

TEST_CASE("single-cell grid is its own cooperative point") {
  BargainGrid grid = bargain_grid({4}, {4}, global_scenario());
  CHECK(grid.coop_home == 0);
  CHECK(grid.coop_foreign == 0);
  CHECK(grid.home_best_response[0] == 0);
  CHECK(grid.foreign_best_response[0] == 0);
  CHECK_FALSE(grid.home_deviation_incentive);
  CHECK_FALSE(grid.foreign_deviation_incentive);
}

TEST_CASE("summary argmins are invariant to positive scaling") {
  BargainGrid grid = bargain_grid({0, 2, 5, 6}, {0, 2, 5, 6},
                                  global_scenario());
  BargainGrid scaled = grid;
  for (auto& row : scaled.cells)
    for (auto& cell : row) {
      cell.report->home *= 2.5;
      cell.report->foreign *= 2.5;
      cell.report->world *= 2.5;
    }
  recompute_grid_summaries(scaled);
  CHECK(scaled.coop_home == grid.coop_home);
  CHECK(scaled.coop_foreign == grid.coop_foreign);
  CHECK(scaled.home_best_response == grid.home_best_response);
  CHECK(scaled.foreign_best_response == grid.foreign_best_response);
  CHECK(scaled.home_deviation_incentive == grid.home_deviation_incentive);
  CHECK(scaled.foreign_deviation_incentive == grid.foreign_deviation_incentive);
}

TEST_CASE("failed cells are excluded and flagged") {
  Scenario s = global_scenario();
  ScenarioOptions opts;
  opts.max_iterations = 1;  // nothing converges in one pass here
  BargainGrid grid = bargain_grid({0, 2}, {0, 2}, s, opts);
  CHECK(grid.has_failures);
  CHECK(grid.coop_home == -1);
  CHECK(grid.coop_foreign == -1);
  for (int br : grid.home_best_response) CHECK(br == -1);
  for (const auto& row : grid.cells)
    for (const auto& cell : row) {
      CHECK_FALSE(cell.report.has_value());
      CHECK_FALSE(cell.error.empty());
    }
  std::string text = render_bargain_summary(grid);
  CHECK(text.find("failed") != std::string::npos);
  CHECK(text.find("warning") != std::string::npos);
}

TEST_CASE("empty axes are rejected") {
  CHECK_THROWS_AS(bargain_grid({}, {1}, global_scenario()), ConfigError);
  CHECK_THROWS_AS(bargain_grid({1}, {}, global_scenario()), ConfigError);
}

TEST_CASE("summary text names the cooperative point and responses") {
  BargainGrid grid = bargain_grid({3, 5}, {3, 5}, global_scenario());
  std::string text = render_bargain_summary(grid);
  CHECK(text.find("cooperative point: kH=") != std::string::npos);
  CHECK(text.find("home best response to cooperative kF:") !=
        std::string::npos);
  CHECK(text.find("kH\\kF | 3 | 5") != std::string::npos);
  CHECK(text.find("*") != std::string::npos);
  CHECK(text.find("warning") == std::string::npos);
}
