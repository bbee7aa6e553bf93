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

#include "gdof/region.hpp"

#include <algorithm>
#include <string>

#include "gdof/core_math.hpp"
#include "gdof/error.hpp"

namespace gdof {

AntennaProfile::AntennaProfile(int tx1, int rx1, int tx2, int rx2)
    : tx1_(tx1), rx1_(rx1), tx2_(tx2), rx2_(rx2) {
  if (tx1 < 1 || rx1 < 1 || tx2 < 1 || rx2 < 1) {
    throw Error(ErrorCode::kInvalidProfile, "antenna counts must all be at least 1");
  }
}

ExponentProfile::ExponentProfile(Rational a11, Rational a12, Rational a21, Rational a22)
    : values_{a11, a12, a21, a22} {
  for (const auto& a : values_) {
    if (a < 0) throw Error(ErrorCode::kInvalidProfile, "exponents must be nonnegative");
  }
  if (a11 != 1) {
    std::string hint = a11 > 0 ? "; divide every exponent by " + to_string(a11) : "";
    throw Error(ErrorCode::kUnnormalizedExponents,
                "the first direct-link exponent must be 1, got " + to_string(a11) + hint);
  }
}

ExponentProfile ExponentProfile::symmetric(Rational alpha) {
  return ExponentProfile(Rational(1), alpha, alpha, Rational(1));
}

std::string_view to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::kD1: return "D1";
    case BoundKind::kD2: return "D2";
    case BoundKind::kD3: return "D3";
    case BoundKind::kD4: return "D4";
    case BoundKind::kD5: return "D5";
    case BoundKind::kD6: return "D6";
    case BoundKind::kD7: return "D7";
    case BoundKind::kEdge: return "edge";
  }
  return "?";
}

namespace {

// Per-user quantities seen from user i, with j the other user.
struct UserTerms {
  WeightedDim own_full;       // (a_ii, M_i)
  WeightedDim cross_full;     // (a_ij, M_i): user i's signal at receiver j
  WeightedDim below_noise;    // (beta_ij, m_ij): levels of user i hidden under Rx_j's noise floor
  WeightedDim null_space;     // (a_ii, (M_i - N_j)^+): directions Rx_j cannot see
};

UserTerms terms_for(const ChannelProfile& ch, int i) {
  const int j = 3 - i;
  const auto& a = ch.exponents;
  const auto& ant = ch.antennas;
  return UserTerms{
      {a.link(i, i), ant.tx(i)},
      {a.link(i, j), ant.tx(i)},
      {pos_part(a.link(i, i) - a.link(i, j)), std::min(ant.tx(i), ant.rx(j))},
      {a.link(i, i), std::max(ant.tx(i) - ant.rx(j), 0)},
  };
}

}  // namespace

std::array<GdofBound, 7> theorem_bounds(const ChannelProfile& ch) {
  const auto& ant = ch.antennas;
  const Rational a22 = ch.exponents.link(2, 2);
  const int n1 = ant.rx(1);
  const int n2 = ant.rx(2);
  const UserTerms u1 = terms_for(ch, 1);
  const UserTerms u2 = terms_for(ch, 2);

  // Receiver-side MAC terms.
  const Rational mac_at_rx2 = f(n2, u1.cross_full, u2.own_full);
  const Rational mac_at_rx1 = f(n1, u2.cross_full, u1.own_full);
  const Rational private1 = f(n1, u1.below_noise, u1.null_space);
  const Rational private2 = f(n2, u2.below_noise, u2.null_space);
  const Rational mixed_at_rx1 = g(n1, u2.cross_full, u1.below_noise, u1.null_space);
  const Rational mixed_at_rx2 = g(n2, u1.cross_full, u2.below_noise, u2.null_space);

  const Rational one(1);
  return {{
      {BoundKind::kD1, one, Rational(0), Rational(std::min(ant.tx(1), n1))},
      {BoundKind::kD2, Rational(0), one, Rational(std::min(ant.tx(2), n2))},
      {BoundKind::kD3, one, a22, mac_at_rx2 + private1},
      {BoundKind::kD4, one, a22, mac_at_rx1 + private2},
      {BoundKind::kD5, one, a22, mixed_at_rx1 + mixed_at_rx2},
      {BoundKind::kD6, Rational(2), a22, mac_at_rx1 + private1 + mixed_at_rx2},
      // The first term is the MAC at Rx2 (mirror image of D6). Taking it as
      // f(M2, (a21, N1), (a22, N2)) breaks reciprocity and DoF-region recovery.
      {BoundKind::kD7, one, 2 * a22, mac_at_rx2 + private2 + mixed_at_rx1},
  }};
}

GdofRegion build_region(std::vector<GdofBound> bounds) {
  std::vector<HalfPlane> planes;
  planes.reserve(bounds.size() + 2);
  for (const auto& b : bounds) planes.push_back(b.half_plane());
  planes.push_back({Rational(-1), Rational(0), Rational(0)});
  planes.push_back({Rational(0), Rational(-1), Rational(0)});

  GdofRegion region;
  region.bounds_ = std::move(bounds);
  region.vertices_ = enumerate_vertices(planes);
  return region;
}

GdofRegion gdof_region(const ChannelProfile& channel) {
  auto bounds = theorem_bounds(channel);
  return build_region({bounds.begin(), bounds.end()});
}

bool contains(const GdofRegion& region, const Point2& p) {
  if (p.x < 0 || p.y < 0) return false;
  return std::all_of(region.bounds().begin(), region.bounds().end(),
                     [&](const GdofBound& b) { return b.admits(p); });
}

SymmetricGdof symmetric_gdof(const ChannelProfile& channel) {
  auto bounds = theorem_bounds(channel);
  SymmetricGdof best{bounds[0].rhs / (bounds[0].c1 + bounds[0].c2), bounds[0].kind};
  for (const auto& b : bounds) {
    Rational v = b.rhs / (b.c1 + b.c2);
    if (v < best.value) best = {v, b.kind};
  }
  return best;
}

ChannelProfile reciprocal(const ChannelProfile& ch) {
  const auto& ant = ch.antennas;
  const auto& a = ch.exponents;
  return ChannelProfile{
      AntennaProfile(ant.rx(1), ant.tx(1), ant.rx(2), ant.tx(2)),
      ExponentProfile(Rational(1), a.link(2, 1), a.link(1, 2), a.link(2, 2)),
  };
}

bool regions_equal(const GdofRegion& a, const GdofRegion& b) {
  auto va = a.vertices();
  auto vb = b.vertices();
  std::sort(va.begin(), va.end());
  std::sort(vb.begin(), vb.end());
  return va == vb;
}

ExponentProfile ExponentTemplate::at(const Rational& alpha) const {
  std::array<Rational, 4> v;
  for (std::size_t k = 0; k < 4; ++k) v[k] = offset[k] + slope[k] * alpha;
  return ExponentProfile(v[0], v[1], v[2], v[3]);
}

std::vector<SweepPoint> sweep_alpha(const AntennaProfile& antennas, const ExponentTemplate& shape,
                                    std::span<const Rational> grid) {
  for (std::size_t k = 1; k < grid.size(); ++k) {
    if (!(grid[k - 1] < grid[k])) {
      throw Error(ErrorCode::kInvalidArgument, "sweep grid must be strictly increasing");
    }
  }
  std::vector<SweepPoint> out;
  out.reserve(grid.size());
  for (const auto& alpha : grid) {
    auto sym = symmetric_gdof({antennas, shape.at(alpha)});
    out.push_back({alpha, sym.value, sym.active, false});
  }
  for (std::size_t k = 1; k + 1 < out.size(); ++k) {
    Rational left = (out[k].d_sym - out[k - 1].d_sym) / (out[k].alpha - out[k - 1].alpha);
    Rational right = (out[k + 1].d_sym - out[k].d_sym) / (out[k + 1].alpha - out[k].alpha);
    out[k].is_breakpoint = left != right;
  }
  return out;
}

std::vector<Rational> make_grid(const Rational& lo, const Rational& hi, const Rational& step) {
  if (step <= 0) throw Error(ErrorCode::kInvalidArgument, "grid step must be positive");
  std::vector<Rational> grid;
  for (Rational a = lo; a <= hi; a += step) grid.push_back(a);
  return grid;
}

}  // namespace gdof
