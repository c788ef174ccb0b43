#pragma once

#include <Eigen/Dense>

namespace fglab {

// Endogenous variables, in the fixed column/row order used by every matrix,
// path, and CSV in this project. The h/f suffix marks the country.
namespace var {
enum : int {
  pi_h = 0,       // home producer-price inflation
  pi_f = 1,       // foreign producer-price inflation
  gap_h = 2,      // home output gap
  gap_f = 3,      // foreign output gap
  rate_h = 4,     // home nominal policy rate (deviation from steady state)
  rate_f = 5,     // foreign nominal policy rate
  natural_h = 6,  // home natural real rate (AR(1) state)
  natural_f = 7,  // foreign natural real rate
  count = 8,
};
}  // namespace var

// Exogenous innovations, one column each in the impact matrices.
namespace shock {
enum : int {
  cost_push_h = 0,
  cost_push_f = 1,
  monetary_h = 2,
  monetary_f = 3,
  natural_h = 4,   // hits only the home natural rate
  global_h = 5,    // global-trap component, home natural rate
  global_f = 6,    // global-trap component, foreign natural rate
  count = 7,
};
}  // namespace shock

enum class Country { home = 0, foreign = 1 };

constexpr int country_index(Country c) { return static_cast<int>(c); }

using Mat8 = Eigen::Matrix<double, var::count, var::count>;
using Vec8 = Eigen::Matrix<double, var::count, 1>;
using ShockVec = Eigen::Matrix<double, shock::count, 1>;
using ImpactMat = Eigen::Matrix<double, var::count, shock::count>;

}  // namespace fglab
