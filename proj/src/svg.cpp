// SPDX-License-Identifier: Apache-2.0
//
// gdof: exact GDoF region calculator for the two-user MIMO interference channel
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <algorithm>
#include <cstdio>
#include <string>

#include "gdof/cli.hpp"

namespace gdof::cli {

using gdof::to_string;

namespace {

constexpr double kSize = 480.0;
constexpr double kMargin = 56.0;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::string escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

struct Frame {
  double x_max;
  double y_max;

  double px(double x) const { return kMargin + x / x_max * (kSize - 2 * kMargin); }
  double py(double y) const { return kSize - kMargin - y / y_max * (kSize - 2 * kMargin); }
};

double nice_max(double v) { return v <= 0 ? 1.0 : v * 1.1; }

std::string header(std::string_view title) {
  std::string s = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(kSize) +
       "\" height=\"" + num(kSize) + "\">\n";
  s += "<title>" + escape(title) + "</title>\n";
  s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  s += "<text x=\"" + num(kSize / 2) + "\" y=\"24\" text-anchor=\"middle\" font-size=\"14\">" +
       escape(title) + "</text>\n";
  return s;
}

std::string axes(const Frame& fr, std::string_view x_label, std::string_view y_label) {
  std::string s;
  s += "<g stroke=\"black\" stroke-width=\"1\">\n";
  s += "<line x1=\"" + num(fr.px(0)) + "\" y1=\"" + num(fr.py(0)) + "\" x2=\"" + num(fr.px(fr.x_max)) +
       "\" y2=\"" + num(fr.py(0)) + "\"/>\n";
  s += "<line x1=\"" + num(fr.px(0)) + "\" y1=\"" + num(fr.py(0)) + "\" x2=\"" + num(fr.px(0)) +
       "\" y2=\"" + num(fr.py(fr.y_max)) + "\"/>\n";
  s += "</g>\n";
  s += "<text x=\"" + num(kSize - kMargin) + "\" y=\"" + num(kSize - kMargin / 3) +
       "\" text-anchor=\"end\" font-size=\"14\">" + escape(x_label) + "</text>\n";
  s += "<text x=\"" + num(kMargin / 3) + "\" y=\"" + num(kMargin) + "\" font-size=\"14\">" +
       escape(y_label) + "</text>\n";
  for (int t = 0; t <= 4; ++t) {
    const double x = fr.x_max * t / 4.0;
    const double y = fr.y_max * t / 4.0;
    s += "<text x=\"" + num(fr.px(x)) + "\" y=\"" + num(fr.py(0) + 16) +
         "\" text-anchor=\"middle\" font-size=\"10\">" + num(x) + "</text>\n";
    s += "<text x=\"" + num(fr.px(0) - 6) + "\" y=\"" + num(fr.py(y) + 4) +
         "\" text-anchor=\"end\" font-size=\"10\">" + num(y) + "</text>\n";
  }
  return s;
}

}  // namespace

std::string region_svg(const GdofRegion& region, std::string_view title, const std::vector<Point2>& marks) {
  double x_max = 0, y_max = 0;
  for (const auto& v : region.vertices()) {
    x_max = std::max(x_max, to_double(v.x));
    y_max = std::max(y_max, to_double(v.y));
  }
  for (const auto& v : marks) {
    x_max = std::max(x_max, to_double(v.x));
    y_max = std::max(y_max, to_double(v.y));
  }
  const Frame fr{nice_max(x_max), nice_max(y_max)};

  std::string exact, pixels;
  for (const auto& v : region.vertices()) {
    exact += (exact.empty() ? "" : ";") + to_string(v.x) + "," + to_string(v.y);
    pixels += (pixels.empty() ? "" : " ") + num(fr.px(to_double(v.x))) + "," + num(fr.py(to_double(v.y)));
  }
  std::string s = header(title);
  s += axes(fr, "d1", "d2");
  s += "<polygon class=\"region\" data-vertices=\"" + exact + "\" points=\"" + pixels +
       "\" fill=\"#9ecae1\" fill-opacity=\"0.6\" stroke=\"#08519c\" stroke-width=\"2\"/>\n";
  for (const auto& v : region.vertices()) {
    s += "<circle class=\"vertex\" data-d1=\"" + to_string(v.x) + "\" data-d2=\"" + to_string(v.y) +
         "\" cx=\"" + num(fr.px(to_double(v.x))) + "\" cy=\"" + num(fr.py(to_double(v.y))) +
         "\" r=\"3\" fill=\"#08519c\"/>\n";
  }
  for (const auto& m : marks) {
    s += "<circle class=\"mark\" data-d1=\"" + to_string(m.x) + "\" data-d2=\"" + to_string(m.y) +
         "\" cx=\"" + num(fr.px(to_double(m.x))) + "\" cy=\"" + num(fr.py(to_double(m.y))) +
         "\" r=\"4\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"2\"/>\n";
  }
  s += "</svg>\n";
  return s;
}

std::string sweep_svg(const std::vector<SweepPoint>& points, std::string_view title) {
  double x_max = 0, y_max = 0;
  for (const auto& p : points) {
    x_max = std::max(x_max, to_double(p.alpha));
    y_max = std::max(y_max, to_double(p.d_sym));
  }
  const Frame fr{nice_max(x_max), nice_max(y_max)};
  std::string pixels, breaks;
  for (const auto& p : points) {
    pixels += (pixels.empty() ? "" : " ") + num(fr.px(to_double(p.alpha))) + "," + num(fr.py(to_double(p.d_sym)));
    if (p.is_breakpoint) breaks += (breaks.empty() ? "" : ";") + to_string(p.alpha) + "," + to_string(p.d_sym);
  }
  std::string s = header(title);
  s += axes(fr, "alpha", "d_sym");
  s += "<polyline class=\"curve\" data-breakpoints=\"" + breaks + "\" points=\"" + pixels +
       "\" fill=\"none\" stroke=\"#08519c\" stroke-width=\"2\"/>\n";
  for (const auto& p : points) {
    if (!p.is_breakpoint) continue;
    s += "<circle class=\"breakpoint\" data-alpha=\"" + to_string(p.alpha) + "\" data-d-sym=\"" +
         to_string(p.d_sym) + "\" cx=\"" + num(fr.px(to_double(p.alpha))) + "\" cy=\"" +
         num(fr.py(to_double(p.d_sym))) + "\" r=\"3\" fill=\"#d62728\"/>\n";
  }
  s += "</svg>\n";
  return s;
}

}  // namespace gdof::cli
