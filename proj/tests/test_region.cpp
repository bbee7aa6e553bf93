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

#include <catch_amalgamated.hpp>

#include <random>
#include <set>

#include "gdof/closed_forms.hpp"
#include "gdof/error.hpp"
#include "gdof/region.hpp"
#include "oracles.hpp"

using namespace gdof;

namespace {

ChannelProfile profile(int m1, int n1, int m2, int n2, Rational a12, Rational a21, Rational a22 = 1) {
  return {AntennaProfile(m1, n1, m2, n2), ExponentProfile(1, a12, a21, a22)};
}

ChannelProfile symmetric(int m1, int n1, int m2, int n2, Rational alpha) {
  return {AntennaProfile(m1, n1, m2, n2), ExponentProfile::symmetric(alpha)};
}

std::set<oracle::Vertex> vertex_set(const GdofRegion& r) {
  std::set<oracle::Vertex> s;
  for (const auto& v : r.vertices()) s.insert({v.x, v.y});
  return s;
}

std::vector<oracle::Vertex> vertex_list(const GdofRegion& r) {
  std::vector<oracle::Vertex> s;
  for (const auto& v : r.vertices()) s.push_back({v.x, v.y});
  return s;
}

const Rational kExponentGrid[] = {Rational(0),    Rational(1, 4), Rational(1, 3), Rational(1, 2), Rational(2, 3),
                                  Rational(3, 4), Rational(1),    Rational(4, 3), Rational(3, 2), Rational(2)};

ChannelProfile random_profile(std::mt19937_64& rng, int max_antennas = 4) {
  std::uniform_int_distribution<int> ant(1, max_antennas), level(0, 9);
  int m1 = ant(rng), n1 = ant(rng), m2 = ant(rng), n2 = ant(rng);
  Rational a12 = kExponentGrid[level(rng)], a21 = kExponentGrid[level(rng)], a22 = kExponentGrid[level(rng)];
  return profile(m1, n1, m2, n2, a12, a21, a22);
}

}  // namespace

TEST_CASE("profiles validate their inputs") {
  CHECK_THROWS_AS(AntennaProfile(0, 1, 1, 1), Error);
  CHECK_THROWS_AS(ExponentProfile(1, Rational(-1, 2), 0, 1), Error);
  try {
    ExponentProfile(2, 1, 1, 1);
    FAIL("unnormalized exponents accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kUnnormalizedExponents);
    CHECK(std::string(e.what()).find("divide every exponent by 2") != std::string::npos);
  }
}

TEST_CASE("theorem bounds on hand-evaluated profiles") {
  auto siso = theorem_bounds(symmetric(1, 1, 1, 1, Rational(1, 2)));
  CHECK(siso[4].kind == BoundKind::kD5);
  CHECK(siso[4].rhs == 1);

  auto fig = theorem_bounds(symmetric(3, 3, 2, 2, Rational(2, 3)));
  CHECK(fig[6].kind == BoundKind::kD7);
  CHECK(fig[6].c1 == 1);
  CHECK(fig[6].c2 == 2);
  CHECK(fig[6].rhs == 5);

  auto dof = theorem_bounds(symmetric(2, 2, 1, 1, Rational(1)));
  CHECK(dof[2].rhs == 2);
  CHECK(dof[2].rhs == oracle::dof_sum(2, 2, 1, 1));
}

TEST_CASE("bound coefficients follow the per-user weighting") {
  auto b = theorem_bounds(profile(2, 3, 1, 2, Rational(1, 3), Rational(3, 4), Rational(5, 6)));
  const Rational a22(5, 6);
  CHECK((b[0].c1 == 1 && b[0].c2 == 0));
  CHECK((b[1].c1 == 0 && b[1].c2 == 1));
  for (int k : {2, 3, 4}) CHECK((b[k].c1 == 1 && b[k].c2 == a22));
  CHECK((b[5].c1 == 2 && b[5].c2 == a22));
  CHECK((b[6].c1 == 1 && b[6].c2 == 2 * a22));
  for (const auto& bound : b) CHECK(bound.rhs >= 0);
}

TEST_CASE("build_region shapes") {
  SECTION("SISO at alpha = 1/2 is the unit triangle") {
    auto r = gdof_region(symmetric(1, 1, 1, 1, Rational(1, 2)));
    CHECK(vertex_list(r) == std::vector<oracle::Vertex>{{0, 0}, {1, 0}, {0, 1}});
  }
  SECTION("(3,3,2,2) at 2/3 has the D2/D7 vertex (1,2)") {
    auto r = gdof_region(symmetric(3, 3, 2, 2, Rational(2, 3)));
    CHECK(vertex_set(r).count({1, 2}) == 1);
    const Point2 b{1, 2};
    CHECK(r.bounds()[1].half_plane().tight_at(b));
    CHECK(r.bounds()[6].half_plane().tight_at(b));
  }
  SECTION("no interference gives the single-user rectangle") {
    for (auto [m1, n1, m2, n2] : {std::array{3, 2, 1, 4}, std::array{1, 1, 1, 1}, std::array{2, 4, 3, 3}}) {
      auto r = gdof_region(profile(m1, n1, m2, n2, 0, 0, Rational(1, 2)));
      const Rational a = std::min(m1, n1), b = std::min(m2, n2);
      CHECK(vertex_list(r) == std::vector<oracle::Vertex>{{0, 0}, {a, 0}, {a, b}, {0, b}});
    }
  }
  SECTION("vertices start at the origin and run counterclockwise") {
    auto r = gdof_region(profile(3, 2, 2, 3, Rational(1, 2), Rational(3, 4)));
    const auto& v = r.vertices();
    REQUIRE(v.size() >= 3);
    CHECK(v.front() == Point2{0, 0});
    for (std::size_t k = 0; k < v.size(); ++k) {
      const auto& o = v[k];
      const auto& a = v[(k + 1) % v.size()];
      const auto& c = v[(k + 2) % v.size()];
      CHECK((a.x - o.x) * (c.y - o.y) - (a.y - o.y) * (c.x - o.x) > 0);
    }
  }
}

TEST_CASE("contains") {
  auto r = gdof_region(symmetric(3, 3, 2, 2, Rational(2, 3)));
  CHECK(contains(r, {1, 2}));
  CHECK(contains(r, {0, 0}));
  CHECK_FALSE(contains(r, {Rational(11, 10), 2}));
  CHECK_FALSE(contains(r, {Rational(-1, 10), 0}));
}

TEST_CASE("symmetric GDoF examples") {
  CHECK(symmetric_gdof(symmetric(1, 1, 1, 1, Rational(2, 3))).value == Rational(2, 3));
  CHECK(symmetric_gdof(symmetric(3, 2, 3, 2, Rational(1, 4))).value == Rational(7, 4));
  CHECK(symmetric_gdof(symmetric(1, 1, 2, 1, Rational(1, 2))).value == Rational(3, 4));
}

TEST_CASE("reciprocal channel") {
  auto rec = reciprocal(symmetric(3, 2, 3, 2, Rational(2, 3)));
  CHECK(rec == symmetric(2, 3, 2, 3, Rational(2, 3)));

  auto z = reciprocal(profile(1, 1, 2, 1, Rational(1, 4), Rational(3, 4)));
  CHECK(z == profile(1, 1, 1, 2, Rational(3, 4), Rational(1, 4)));

  std::mt19937_64 rng(5);
  for (int k = 0; k < 50; ++k) {
    auto p = random_profile(rng);
    CHECK(reciprocal(reciprocal(p)) == p);
  }
}

TEST_CASE("regions_equal") {
  auto p = profile(2, 3, 1, 2, Rational(1, 3), Rational(3, 4), Rational(5, 6));
  CHECK(regions_equal(gdof_region(p), gdof_region(reciprocal(p))));
  CHECK(regions_equal(gdof_region(p), gdof_region(p)));
  auto lo = gdof_region(symmetric(1, 1, 1, 1, Rational(1, 4)));
  auto hi = gdof_region(symmetric(1, 1, 1, 1, Rational(3, 4)));
  CHECK_FALSE(regions_equal(lo, hi));
  CHECK(symmetric_gdof(symmetric(1, 1, 1, 1, Rational(1, 4))).value == Rational(3, 4));
  CHECK(symmetric_gdof(symmetric(1, 1, 1, 1, Rational(3, 4))).value == Rational(5, 8));
}

TEST_CASE("sweep_alpha examples") {
  const std::vector<Rational> grid{0, Rational(1, 2), Rational(2, 3), 1, 2};
  auto w = sweep_alpha(AntennaProfile(1, 1, 1, 1), {}, grid);
  std::vector<Rational> values;
  for (const auto& p : w) values.push_back(p.d_sym);
  CHECK(values == std::vector<Rational>{1, Rational(1, 2), Rational(2, 3), Rational(1, 2), 1});

  for (const auto& p : sweep_alpha(AntennaProfile(2, 1, 2, 1), {}, make_grid(0, 3, Rational(1, 12)))) {
    CHECK(p.d_sym == 1);
    CHECK_FALSE(p.is_breakpoint);
  }

  for (int n = 1; n <= 3; ++n) {
    for (int m = n + 1; m <= 4; ++m) {
      const Rational star = Rational(3) - Rational(m, n);
      for (const auto& p : sweep_alpha(AntennaProfile(m, n, m, n), {}, make_grid(0, 3, Rational(1, 12)))) {
        if (p.alpha >= star) CHECK(p.d_sym == n);
      }
    }
  }

  CHECK(sweep_alpha(AntennaProfile(1, 1, 1, 1), {}, std::vector<Rational>{}).empty());
  CHECK_THROWS_AS(sweep_alpha(AntennaProfile(1, 1, 1, 1), {}, std::vector<Rational>{1, 0}), Error);
}

TEST_CASE("sweep with a non-default template") {
  // Only the second cross link scales: [1, 0, alpha, 1] is a Z channel.
  ExponentTemplate z;
  z.slope = {0, 0, 1, 0};
  auto pts = sweep_alpha(AntennaProfile(1, 1, 1, 1), z, std::vector<Rational>{0, Rational(1, 2), 1});
  CHECK(pts[0].d_sym == 1);
  for (const auto& p : pts) CHECK(p.d_sym == symmetric_gdof({AntennaProfile(1, 1, 1, 1), z.at(p.alpha)}).value);
}

TEST_CASE("every vertex is feasible, on two active constraints, at most nine of them") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    auto p = random_profile(rng);
    auto r = gdof_region(p);
    CHECK(r.vertices().size() <= 9);
    for (const auto& v : r.vertices()) {
      CHECK(contains(r, v));
      int active = (v.x == 0) + (v.y == 0);
      for (const auto& b : r.bounds()) active += b.half_plane().tight_at(v);
      CHECK(active >= 2);
    }
    // Each bound is tight somewhere or can be dropped without changing the region.
    for (std::size_t k = 0; k < r.bounds().size(); ++k) {
      bool tight = false;
      for (const auto& v : r.vertices()) tight = tight || r.bounds()[k].half_plane().tight_at(v);
      if (tight) continue;
      auto rest = r.bounds();
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
      CHECK(regions_equal(build_region(rest), r));
    }
  }
}

TEST_CASE("vertex hull admits exactly the grid points the inequalities admit") {
  std::mt19937_64 rng(123);
  for (int trial = 0; trial < 60; ++trial) {
    auto p = random_profile(rng);
    auto r = gdof_region(p);
    auto poly = vertex_list(r);
    const auto& ant = p.antennas;
    const int xs = 8 * std::min(ant.tx(1), ant.rx(1));
    const int ys = 8 * std::min(ant.tx(2), ant.rx(2));
    for (int i = 0; i <= xs; ++i) {
      for (int j = 0; j <= ys; ++j) {
        const Point2 q{Rational(i, 8), Rational(j, 8)};
        bool direct = true;
        for (const auto& b : theorem_bounds(p)) direct = direct && b.admits(q);
        CHECK(contains(r, q) == direct);
        CHECK(oracle::in_convex_polygon(poly, {q.x, q.y}) == direct);
      }
    }
  }
}

TEST_CASE("reciprocity over random profiles") {
  std::mt19937_64 rng(2011);
  for (int trial = 0; trial < 200; ++trial) {
    auto p = random_profile(rng);
    INFO("profile " << p.antennas.tx(1) << p.antennas.rx(1) << p.antennas.tx(2) << p.antennas.rx(2));
    CHECK(regions_equal(gdof_region(p), gdof_region(reciprocal(p))));
  }
}

TEST_CASE("all-ones exponents recover the DoF region") {
  for (int m1 = 1; m1 <= 4; ++m1)
    for (int n1 = 1; n1 <= 4; ++n1)
      for (int m2 = 1; m2 <= 4; ++m2)
        for (int n2 = 1; n2 <= 4; ++n2) {
          auto r = gdof_region(profile(m1, n1, m2, n2, 1, 1));
          auto expected = oracle::box_with_sum_vertices(std::min(m1, n1), std::min(m2, n2),
                                                        oracle::dof_sum(m1, n1, m2, n2));
          CHECK(vertex_set(r) == expected);
        }
}

TEST_CASE("single antennas recover the SISO region") {
  for (const auto& alpha : make_grid(0, 3, Rational(1, 60))) {
    CHECK(symmetric_gdof(symmetric(1, 1, 1, 1, alpha)).value == oracle::w_curve(alpha));
  }
  using V = std::vector<oracle::Vertex>;
  CHECK(vertex_list(gdof_region(symmetric(1, 1, 1, 1, 0))) == V{{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  CHECK(vertex_list(gdof_region(symmetric(1, 1, 1, 1, Rational(1, 2)))) == V{{0, 0}, {1, 0}, {0, 1}});
  CHECK(vertex_list(gdof_region(symmetric(1, 1, 1, 1, 1))) == V{{0, 0}, {1, 0}, {0, 1}});
  // Weak interference gives a pentagon cut by d1 + d2 <= 3/2 and the 2d1 + d2 bounds.
  CHECK(vertex_list(gdof_region(symmetric(1, 1, 1, 1, Rational(1, 4)))) ==
        V{{0, 0}, {1, 0}, {1, Rational(1, 2)}, {Rational(1, 2), 1}, {0, 1}});
}

TEST_CASE("symmetric curve is linear between detected breakpoints") {
  struct Line {
    Rational slope, intercept;
    Rational at(const Rational& x) const { return intercept + slope * x; }
  };
  const std::vector<AntennaProfile> profiles{AntennaProfile(1, 1, 1, 1), AntennaProfile(3, 2, 3, 2),
                                             AntennaProfile(2, 3, 2, 3), AntennaProfile(3, 2, 2, 3),
                                             AntennaProfile(1, 1, 2, 1), AntennaProfile(4, 3, 4, 3)};
  const Rational fine(1, 600);
  for (const auto& ant : profiles) {
    auto coarse = sweep_alpha(ant, {}, make_grid(0, 3, Rational(1, 60)));
    auto value = [&](const Rational& x) { return symmetric_gdof({ant, ExponentProfile::symmetric(x)}).value; };
    auto line_of = [&](std::size_t k) {
      const auto& a = coarse[k];
      const auto& b = coarse[k + 1];
      const Rational slope = (b.d_sym - a.d_sym) / (b.alpha - a.alpha);
      return Line{slope, a.d_sym - slope * a.alpha};
    };
    // A kink that misses the grid leaves one cell between two flagged points;
    // inside it the curve follows one of the neighbouring lines.
    for (std::size_t k = 0; k + 1 < coarse.size(); ++k) {
      const bool gap = coarse[k].is_breakpoint && coarse[k + 1].is_breakpoint && k > 0 && k + 2 < coarse.size() &&
                       line_of(k - 1).slope != line_of(k).slope && line_of(k).slope != line_of(k + 1).slope;
      for (Rational x = coarse[k].alpha; x <= coarse[k + 1].alpha; x += fine) {
        if (gap) {
          const Rational v = value(x);
          CHECK((v == line_of(k - 1).at(x) || v == line_of(k + 1).at(x)));
        } else {
          CHECK(value(x) == line_of(k).at(x));
        }
      }
    }
  }
  // The (3,2,2,3) curve turns from slope 5/2 to slope -1 at alpha = 4/7, off every decimal grid.
  const std::vector<Rational> around{Rational(14, 25), Rational(4, 7), Rational(29, 50)};
  auto turn = sweep_alpha(AntennaProfile(3, 2, 2, 3), {}, around);
  CHECK(turn[1].d_sym == Rational(10, 7));
  CHECK(turn[1].is_breakpoint);
}
