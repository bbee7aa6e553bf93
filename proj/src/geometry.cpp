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

#include "gdof/geometry.hpp"

#include <algorithm>
#include <optional>

namespace gdof {

namespace {

std::optional<Point2> intersect(const HalfPlane& a, const HalfPlane& b) {
  Rational det = a.c1 * b.c2 - a.c2 * b.c1;
  if (det == 0) return std::nullopt;
  return Point2{(a.rhs * b.c2 - a.c2 * b.rhs) / det, (a.c1 * b.rhs - a.rhs * b.c1) / det};
}

Rational cross(const Point2& o, const Point2& a, const Point2& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

}  // namespace

std::vector<Point2> enumerate_vertices(std::span<const HalfPlane> constraints) {
  std::vector<Point2> candidates;
  for (std::size_t i = 0; i < constraints.size(); ++i) {
    for (std::size_t j = i + 1; j < constraints.size(); ++j) {
      auto p = intersect(constraints[i], constraints[j]);
      if (!p) continue;
      bool ok = std::all_of(constraints.begin(), constraints.end(),
                            [&](const HalfPlane& h) { return h.admits(*p); });
      if (ok) candidates.push_back(*p);
    }
  }
  return convex_hull(std::move(candidates));
}

std::vector<Point2> convex_hull(std::vector<Point2> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.size() < 3) return points;

  std::vector<Point2> hull(2 * points.size());
  std::size_t k = 0;
  for (const auto& p : points) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = points.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], points[i]) <= 0) --k;
    hull[k++] = points[i];
  }
  // Collinear input collapses to its two extremes.
  hull.resize(k - 1);
  return hull;
}

}  // namespace gdof
