// Copyright 2026 The archgeom Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Log-log SVG plot of a box-count series: (-ln delta, ln N) markers, the
// least-squares line and its slope.

#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "archgeom/boxcount.hpp"
#include "archgeom/errors.hpp"
#include "archgeom/report.hpp"

namespace archgeom {

namespace detail {

struct Axis {
  double lo = 0.0;
  double hi = 1.0;
  double step = 1.0;
};

/// Range padded to "nice" tick steps (1, 2, 5 x 10^k), at most 12 ticks.
inline Axis nice_axis(double lo, double hi) {
  if (hi - lo < 1e-9) {
    lo -= 0.5;
    hi += 0.5;
  }
  const double raw = (hi - lo) / 8.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  double step = mag;
  for (const double m : {1.0, 2.0, 5.0, 10.0}) {
    step = m * mag;
    if (step >= raw) break;
  }
  Axis a{std::floor(lo / step) * step, std::ceil(hi / step) * step, step};
  while ((a.hi - a.lo) / a.step + 1.0 > 12.0 + 1e-9) {
    a.step *= 2.0;
    a.lo = std::floor(lo / a.step) * a.step;
    a.hi = std::ceil(hi / a.step) * a.step;
  }
  return a;
}

inline int tick_decimals(double step) {
  return std::clamp(static_cast<int>(std::ceil(-std::log10(step) - 1e-9)), 0, 6);
}

inline std::string xml_escape(const std::string& s) {
  std::string out;
  for (const char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace detail

inline std::string render_loglog_svg(const BoxCountSeries& s) {
  if (s.records.size() < 2) throw DomainError("plot needs at least 2 records");
  const double slope = fit_dimension(s);

  std::vector<double> xs, ys;
  for (const auto& r : s.records) {
    xs.push_back(-std::log(r.delta));
    ys.push_back(std::log(static_cast<double>(r.count)));
  }
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= static_cast<double>(xs.size());
  my /= static_cast<double>(ys.size());
  const double intercept = my - slope * mx;

  const auto [xmin, xmax] = std::minmax_element(xs.begin(), xs.end());
  const auto [ymin, ymax] = std::minmax_element(ys.begin(), ys.end());
  const detail::Axis ax = detail::nice_axis(*xmin, *xmax);
  const detail::Axis ay = detail::nice_axis(*ymin, *ymax);

  constexpr double W = 640, H = 480, left = 70, right = 20, top = 40, bottom = 60;
  const double pw = W - left - right, ph = H - top - bottom;
  auto px = [&](double x) { return left + (x - ax.lo) / (ax.hi - ax.lo) * pw; };
  auto py = [&](double y) { return top + ph - (y - ay.lo) / (ay.hi - ay.lo) * ph; };
  auto f2 = [](double v) { return format_fixed(v, 2); };

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"640\" height=\"480\" "
         "viewBox=\"0 0 640 480\">\n";
  svg += "<rect x=\"0\" y=\"0\" width=\"640\" height=\"480\" fill=\"white\"/>\n";
  svg += "<g font-family=\"sans-serif\" font-size=\"12\" fill=\"black\">\n";

  // Axes frame.
  svg += "<rect x=\"" + f2(left) + "\" y=\"" + f2(top) + "\" width=\"" + f2(pw) + "\" height=\"" + f2(ph) +
         "\" fill=\"none\" stroke=\"black\"/>\n";
  const int xd = detail::tick_decimals(ax.step), yd = detail::tick_decimals(ay.step);
  const int nx = static_cast<int>(std::lround((ax.hi - ax.lo) / ax.step));
  for (int i = 0; i <= nx; ++i) {
    const double v = ax.lo + i * ax.step;
    const std::string x = f2(px(v));
    svg += "<line x1=\"" + x + "\" y1=\"" + f2(top + ph) + "\" x2=\"" + x + "\" y2=\"" + f2(top + ph + 5) +
           "\" stroke=\"black\"/>\n";
    svg += "<text x=\"" + x + "\" y=\"" + f2(top + ph + 20) + "\" text-anchor=\"middle\">" + format_fixed(v, xd) +
           "</text>\n";
  }
  const int ny = static_cast<int>(std::lround((ay.hi - ay.lo) / ay.step));
  for (int i = 0; i <= ny; ++i) {
    const double v = ay.lo + i * ay.step;
    const std::string y = f2(py(v));
    svg += "<line x1=\"" + f2(left - 5) + "\" y1=\"" + y + "\" x2=\"" + f2(left) + "\" y2=\"" + y +
           "\" stroke=\"black\"/>\n";
    svg += "<text x=\"" + f2(left - 8) + "\" y=\"" + f2(py(v) + 4) + "\" text-anchor=\"end\">" +
           format_fixed(v, yd) + "</text>\n";
  }
  svg += "<text x=\"" + f2(left + pw / 2) + "\" y=\"" + f2(H - 15) + "\" text-anchor=\"middle\">-ln \xCE\x94</text>\n";
  svg += "<text x=\"20\" y=\"" + f2(top + ph / 2) + "\" text-anchor=\"middle\" transform=\"rotate(-90 20 " +
         f2(top + ph / 2) + ")\">ln N(\xCE\x94)</text>\n";

  // Fit line over the data range.
  svg += "<line x1=\"" + f2(px(*xmin)) + "\" y1=\"" + f2(py(intercept + slope * *xmin)) + "\" x2=\"" +
         f2(px(*xmax)) + "\" y2=\"" + f2(py(intercept + slope * *xmax)) +
         "\" stroke=\"#c0392b\" stroke-width=\"1.5\"/>\n";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    svg += "<circle cx=\"" + f2(px(xs[i])) + "\" cy=\"" + f2(py(ys[i])) + "\" r=\"4\" fill=\"#2c3e50\"/>\n";
  }
  std::string title = "box counting";
  if (!s.image_id.empty()) title += ": " + detail::xml_escape(s.image_id);
  svg += "<text x=\"" + f2(left) + "\" y=\"24\" font-size=\"14\">" + title + "</text>\n";
  svg += "<text class=\"slope\" x=\"" + f2(left + pw - 8) + "\" y=\"24\" text-anchor=\"end\">slope = " +
         format_fixed(slope, 3) + "</text>\n";
  svg += "</g>\n</svg>\n";
  return svg;
}

}  // namespace archgeom
