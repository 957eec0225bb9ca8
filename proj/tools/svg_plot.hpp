#pragma once

// Minimal SVG line plot for sweep curves.

#include <algorithm>
#include <cstdio>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace jamsec::tools {

using Series = std::map<std::string, std::vector<std::pair<double, double>>>;

inline void write_svg(std::ostream& out, const Series& series, const std::string& x_label,
                      const std::string& y_label) {
  constexpr double w = 640, h = 420, left = 60, right = 160, top = 20, bottom = 50;
  double x_min = 1e300, x_max = -1e300, y_max = 0.0;
  for (const auto& [name, pts] : series) {
    for (auto [x, y] : pts) {
      x_min = std::min(x_min, x);
      x_max = std::max(x_max, x);
      y_max = std::max(y_max, y);
    }
  }
  if (x_max <= x_min) x_max = x_min + 1.0;
  if (y_max <= 0.0) y_max = 1.0;
  auto sx = [&](double x) { return left + (x - x_min) / (x_max - x_min) * (w - left - right); };
  auto sy = [&](double y) { return h - bottom - y / y_max * (h - top - bottom); };

  static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};
  char buf[256];
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
      << "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  std::snprintf(buf, sizeof buf,
                "<line x1=\"%g\" y1=\"%g\" x2=\"%g\" y2=\"%g\" stroke=\"black\"/>\n"
                "<line x1=\"%g\" y1=\"%g\" x2=\"%g\" y2=\"%g\" stroke=\"black\"/>\n",
                left, h - bottom, w - right, h - bottom, left, top, left, h - bottom);
  out << buf;
  for (int i = 0; i <= 4; ++i) {
    const double yv = y_max * i / 4.0, xv = x_min + (x_max - x_min) * i / 4.0;
    std::snprintf(buf, sizeof buf,
                  "<text x=\"%g\" y=\"%g\" font-size=\"11\" text-anchor=\"end\">%.2f</text>\n"
                  "<text x=\"%g\" y=\"%g\" font-size=\"11\" text-anchor=\"middle\">%.2f</text>\n",
                  left - 6, sy(yv) + 4, yv, sx(xv), h - bottom + 16, xv);
    out << buf;
  }
  out << "<text x=\"" << (left + w - right) / 2 << "\" y=\"" << h - 10
      << "\" font-size=\"13\" text-anchor=\"middle\">" << x_label << "</text>\n"
      << "<text x=\"14\" y=\"" << (top + h - bottom) / 2
      << "\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 14 "
      << (top + h - bottom) / 2 << ")\">" << y_label << "</text>\n";

  int k = 0;
  for (const auto& [name, pts] : series) {
    const char* color = colors[k % 5];
    out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\"";
    for (auto [x, y] : pts) {
      std::snprintf(buf, sizeof buf, "%.2f,%.2f ", sx(x), sy(y));
      out << buf;
    }
    out << "\"/>\n";
    std::snprintf(buf, sizeof buf,
                  "<text x=\"%g\" y=\"%g\" font-size=\"12\" fill=\"%s\">%s</text>\n",
                  w - right + 10, top + 16.0 * (k + 1), color, name.c_str());
    out << buf;
    ++k;
  }
  out << "</svg>\n";
}

}  // namespace jamsec::tools
