#pragma once

#include <string>
#include <vector>

namespace fglab {

// One curve within a panel.
struct PlotSeries {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

// One set of axes with a title and any number of curves.
struct PlotPanel {
  std::string title;
  std::vector<PlotSeries> series;
};

// Renders panels as a static SVG laid out in a grid with the given number
// of columns. Axes, a zero line, per-panel autoscaling, and a shared legend
// are drawn; formatting is fixed-precision so output is deterministic.
void write_svg_panels(const std::string& path, const std::string& title,
                      const std::vector<PlotPanel>& panels, int columns);

// In-memory variant for tests.
std::string format_svg_panels(const std::string& title,
                              const std::vector<PlotPanel>& panels,
                              int columns);

}  // namespace fglab
