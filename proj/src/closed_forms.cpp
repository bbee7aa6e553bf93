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

#include "gdof/closed_forms.hpp"

#include <algorithm>

#include "gdof/error.hpp"

namespace gdof {

Rational SymmetricCurve::at(const Rational& alpha) const {
  for (const auto& piece : pieces) {
    if (alpha >= piece.lo && (!piece.hi || alpha < *piece.hi)) return piece.at(alpha);
  }
  throw Error(ErrorCode::kInvalidArgument, "alpha " + to_string(alpha) + " is outside the curve");
}

SymmetricCurve corollary_D_pieces(int tx, int rx) {
  if (tx <= rx || rx < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "closed form needs M > N >= 1; for M <= N evaluate the reciprocal channel");
  }
  const Rational m(tx), n(rx), gap(2 * rx - tx);
  const Rational half(1, 2), two_thirds(2, 3), one(1);
  return SymmetricCurve{{
      {Rational(0), half, -gap, n},
      {half, two_thirds, gap, m - n},
      {two_thirds, one, -gap / 2, n},
      {one, std::nullopt, n / 2, m / 2 - n / 2},
  }};
}

Rational corollary_D(int tx, int rx, const Rational& alpha) {
  return std::min(Rational(rx), corollary_D_pieces(tx, rx).at(alpha));
}

SymmetricCurve siso_w_pieces() {
  const Rational half(1, 2);
  return SymmetricCurve{{
      {Rational(0), half, Rational(-1), Rational(1)},
      {half, Rational(2, 3), Rational(1), Rational(0)},
      {Rational(2, 3), Rational(1), -half, Rational(1)},
      {Rational(1), Rational(2), half, Rational(0)},
      {Rational(2), std::nullopt, Rational(0), Rational(1)},
  }};
}

Rational siso_w_curve(const Rational& alpha) { return siso_w_pieces().at(alpha); }

Rational curve_1121(const Rational& alpha) {
  const Rational half(1, 2);
  static const SymmetricCurve v{{
      {Rational(0), Rational(1), -half, Rational(1)},
      {Rational(1), Rational(2), half, Rational(0)},
      {Rational(2), std::nullopt, Rational(0), Rational(1)},
  }};
  return v.at(alpha);
}

Rational alpha_star(int tx, int rx) {
  if (rx < 1 || tx < rx) throw Error(ErrorCode::kInvalidArgument, "alpha* needs M >= N >= 1");
  return Rational(3) - Rational(tx, rx);
}

std::string_view to_string(Regime regime) {
  switch (regime) {
    case Regime::kVeryWeak: return "very_weak";
    case Regime::kWeak: return "weak";
    case Regime::kModerate: return "moderate";
    case Regime::kStrong: return "strong";
    case Regime::kVeryStrong: return "very_strong";
  }
  return "?";
}

Regime classify_regime(int tx, int rx, const Rational& alpha) {
  if (alpha < 0) throw Error(ErrorCode::kInvalidArgument, "alpha must be nonnegative");
  if (alpha >= alpha_star(tx, rx)) return Regime::kVeryStrong;
  if (alpha < Rational(1, 2)) return Regime::kVeryWeak;
  if (alpha < Rational(2, 3)) return Regime::kWeak;
  if (alpha < 1) return Regime::kModerate;
  return Regime::kStrong;
}

int dof_sum_bound(const AntennaProfile& a) {
  return std::min({a.tx(1) + a.tx(2), a.rx(1) + a.rx(2), std::max(a.tx(1), a.rx(2)),
                   std::max(a.tx(2), a.rx(1))});
}

GdofRegion zf_only_region(const ChannelProfile& channel) {
  const auto& a = channel.exponents;
  const Rational zero(0), one(1);
  // Zero forcing sees only whether a cross link exists, not how strong it is.
  const ChannelProfile spatial{
      channel.antennas,
      ExponentProfile(one, a.link(1, 2) > 0 ? one : zero, a.link(2, 1) > 0 ? one : zero, one)};
  const GdofRegion dof = gdof_region(spatial);

  std::vector<Point2> streams;
  const auto& ant = channel.antennas;
  for (int s1 = 0; s1 <= std::min(ant.tx(1), ant.rx(1)); ++s1) {
    for (int s2 = 0; s2 <= std::min(ant.tx(2), ant.rx(2)); ++s2) {
      Point2 p{Rational(s1), Rational(s2)};
      if (contains(dof, p)) streams.push_back(p);
    }
  }
  const auto hull = convex_hull(std::move(streams));

  std::vector<GdofBound> edges;
  for (std::size_t k = 0; k < hull.size(); ++k) {
    const Point2& p = hull[k];
    const Point2& q = hull[(k + 1) % hull.size()];
    const Rational c1 = q.y - p.y;
    const Rational c2 = p.x - q.x;
    // Axis edges are already implied by d >= 0.
    if ((c1 < 0 && c2 == 0) || (c1 == 0 && c2 < 0)) continue;
    edges.push_back({BoundKind::kEdge, c1, c2, c1 * p.x + c2 * p.y});
  }
  return build_region(std::move(edges));
}

}  // namespace gdof
