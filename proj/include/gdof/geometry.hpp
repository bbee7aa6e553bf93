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

#pragma once

#include <compare>
#include <span>
#include <vector>

#include "gdof/rational.hpp"

namespace gdof {

struct Point2 {
  Rational x{0};
  Rational y{0};

  friend bool operator==(const Point2&, const Point2&) = default;
  friend bool operator<(const Point2& a, const Point2& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  }
};

// c1 * x + c2 * y <= rhs
struct HalfPlane {
  Rational c1{0};
  Rational c2{0};
  Rational rhs{0};

  bool admits(const Point2& p) const { return c1 * p.x + c2 * p.y <= rhs; }
  bool tight_at(const Point2& p) const { return c1 * p.x + c2 * p.y == rhs; }
};

// Vertices of the intersection of the half-planes, found by intersecting every
// pair of boundary lines and keeping the admissible points. The result is in
// counterclockwise order starting at the lexicographically smallest vertex.
// An empty result means the intersection is empty (or unbounded with no vertex).
std::vector<Point2> enumerate_vertices(std::span<const HalfPlane> constraints);

// Counterclockwise convex hull (Andrew's monotone chain), collinear points dropped.
std::vector<Point2> convex_hull(std::vector<Point2> points);

}  // namespace gdof
