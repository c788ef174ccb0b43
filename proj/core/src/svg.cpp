#include "fglab/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "fglab/errors.hpp"

namespace fglab {

namespace {

constexpr int panel_width = 320;
constexpr int panel_height = 220;
constexpr int margin_left = 48;
constexpr int margin_right = 12;
constexpr int margin_top = 28;
constexpr int margin_bottom = 30;
constexpr int outer_top = 40;

const char* const palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                               "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};
constexpr int palette_size = 8;

std::string coord(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string tick_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

struct Range {
  double lo = 0.0;
  double hi = 1.0;
};

Range data_range(const std::vector<PlotSeries>& series,
                 bool use_y) {
  bool any = false;
  Range r{0.0, 0.0};
  for (const auto& s : series) {
    const std::vector<double>& v = use_y ? s.y : s.x;
    for (double value : v) {
      if (!std::isfinite(value)) continue;
      if (!any) {
        r.lo = r.hi = value;
        any = true;
      } else {
        r.lo = std::min(r.lo, value);
        r.hi = std::max(r.hi, value);
      }
    }
  }
  if (!any) return {0.0, 1.0};
  if (r.hi == r.lo) {
    double pad = std::max(1e-12, std::abs(r.hi) * 0.5 + 0.5);
    return {r.lo - pad, r.hi + pad};
  }
  if (use_y) {
    double pad = (r.hi - r.lo) * 0.08;
    r.lo -= pad;
    r.hi += pad;
  }
  return r;
}

void render_panel(std::ostringstream& out, const PlotPanel& panel, double x0,
                  double y0) {
  const double plot_x = x0 + margin_left;
  const double plot_y = y0 + margin_top;
  const double plot_w = panel_width - margin_left - margin_right;
  const double plot_h = panel_height - margin_top - margin_bottom;

  const Range xr = data_range(panel.series, false);
  const Range yr = data_range(panel.series, true);
  auto sx = [&](double v) {
    return plot_x + (v - xr.lo) / (xr.hi - xr.lo) * plot_w;
  };
  auto sy = [&](double v) {
    return plot_y + plot_h - (v - yr.lo) / (yr.hi - yr.lo) * plot_h;
  };

  out << "<rect x=\"" << coord(plot_x) << "\" y=\"" << coord(plot_y)
      << "\" width=\"" << coord(plot_w) << "\" height=\"" << coord(plot_h)
      << "\" fill=\"none\" stroke=\"#444\" stroke-width=\"1\"/>\n";
  out << "<text x=\"" << coord(x0 + panel_width / 2.0) << "\" y=\""
      << coord(y0 + 18) << "\" font-size=\"13\" text-anchor=\"middle\">"
      << panel.title << "</text>\n";

  if (yr.lo < 0.0 && yr.hi > 0.0) {
    out << "<line x1=\"" << coord(plot_x) << "\" y1=\"" << coord(sy(0.0))
        << "\" x2=\"" << coord(plot_x + plot_w) << "\" y2=\""
        << coord(sy(0.0))
        << "\" stroke=\"#bbb\" stroke-width=\"1\" stroke-dasharray=\"3,3\"/>\n";
  }

  for (double frac : {0.0, 0.5, 1.0}) {
    double yv = yr.lo + frac * (yr.hi - yr.lo);
    out << "<text x=\"" << coord(plot_x - 4) << "\" y=\""
        << coord(sy(yv) + 4)
        << "\" font-size=\"9\" text-anchor=\"end\">" << tick_label(yv)
        << "</text>\n";
    double xv = xr.lo + frac * (xr.hi - xr.lo);
    out << "<text x=\"" << coord(sx(xv)) << "\" y=\""
        << coord(plot_y + plot_h + 14)
        << "\" font-size=\"9\" text-anchor=\"middle\">" << tick_label(xv)
        << "</text>\n";
  }

  for (size_t si = 0; si < panel.series.size(); ++si) {
    const PlotSeries& s = panel.series[si];
    if (s.x.size() != s.y.size())
      throw ConfigError("plot series '" + s.label + "' has mismatched x/y");
    if (s.x.empty()) continue;
    out << "<polyline fill=\"none\" stroke=\""
        << palette[si % palette_size] << "\" stroke-width=\"1.5\" points=\"";
    for (size_t i = 0; i < s.x.size(); ++i) {
      if (i) out << " ";
      out << coord(sx(s.x[i])) << "," << coord(sy(s.y[i]));
    }
    out << "\"/>\n";
  }
}

}  // namespace

std::string format_svg_panels(const std::string& title,
                              const std::vector<PlotPanel>& panels,
                              int columns) {
  if (columns < 1) throw ConfigError("svg layout needs at least one column");
  if (panels.empty()) throw ConfigError("svg layout needs at least one panel");
  const int rows =
      static_cast<int>((panels.size() + columns - 1) / columns);

  // Legend labels: union over panels, first appearance order.
  std::vector<std::string> labels;
  for (const auto& panel : panels)
    for (const auto& s : panel.series)
      if (!s.label.empty() &&
          std::find(labels.begin(), labels.end(), s.label) == labels.end())
        labels.push_back(s.label);

  const int width = columns * panel_width;
  const int height = outer_top + rows * panel_height +
                     (labels.empty() ? 0 : 22);

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " "
      << height << "\" font-family=\"Helvetica, Arial, sans-serif\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << width / 2 << "\" y=\"24\" font-size=\"15\" "
         "text-anchor=\"middle\">" << title << "</text>\n";

  for (size_t pi = 0; pi < panels.size(); ++pi) {
    const double x0 = static_cast<double>(pi % columns) * panel_width;
    const double y0 =
        outer_top + static_cast<double>(pi / columns) * panel_height;
    render_panel(out, panels[pi], x0, y0);
  }

  if (!labels.empty()) {
    double lx = 12;
    const double ly = outer_top + rows * panel_height + 14;
    for (size_t i = 0; i < labels.size(); ++i) {
      out << "<line x1=\"" << coord(lx) << "\" y1=\"" << coord(ly - 4)
          << "\" x2=\"" << coord(lx + 18) << "\" y2=\"" << coord(ly - 4)
          << "\" stroke=\"" << palette[i % palette_size]
          << "\" stroke-width=\"2\"/>\n";
      lx += 24;
      out << "<text x=\"" << coord(lx) << "\" y=\"" << coord(ly)
          << "\" font-size=\"11\">" << labels[i] << "</text>\n";
      lx += 10.0 * labels[i].size() + 16;
    }
  }
  out << "</svg>\n";
  return out.str();
}

void write_svg_panels(const std::string& path, const std::string& title,
                      const std::vector<PlotPanel>& panels, int columns) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write file: " + path);
  out << format_svg_panels(title, panels, columns);
  if (!out) throw ConfigError("write failed: " + path);
}

}  // namespace fglab
