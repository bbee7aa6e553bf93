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

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "gdof/geometry.hpp"
#include "gdof/rational.hpp"

namespace gdof {

/// Antenna counts of the (M1, N1, M2, N2) interference channel: transmitter i
/// has M_i antennas and receiver i has N_i. All counts must be at least one.
class AntennaProfile {
 public:
  AntennaProfile(int tx1, int rx1, int tx2, int rx2);

  int tx(int user) const { return user == 1 ? tx1_ : tx2_; }
  int rx(int user) const { return user == 1 ? rx1_ : rx2_; }

  friend bool operator==(const AntennaProfile&, const AntennaProfile&) = default;

 private:
  int tx1_, rx1_, tx2_, rx2_;
};

/// Exponents [a11, a12, a21, a22] of the link SNR/INRs relative to the nominal
/// SNR; a_ij belongs to the link from transmitter i to receiver j. The first
/// direct link is the unit of measure, so a11 must equal 1. Inputs with a
/// different a11 are rejected; rescale every exponent by 1/a11 first.
class ExponentProfile {
 public:
  ExponentProfile(Rational a11, Rational a12, Rational a21, Rational a22);

  /// [1, alpha, alpha, 1]
  static ExponentProfile symmetric(Rational alpha);

  /// Exponent of the link from transmitter `from` to receiver `to`.
  const Rational& link(int from, int to) const { return values_[2 * (from - 1) + (to - 1)]; }
  const std::array<Rational, 4>& values() const { return values_; }

  friend bool operator==(const ExponentProfile&, const ExponentProfile&) = default;

 private:
  std::array<Rational, 4> values_;
};

struct ChannelProfile {
  AntennaProfile antennas;
  ExponentProfile exponents;

  friend bool operator==(const ChannelProfile&, const ChannelProfile&) = default;
};

enum class BoundKind { kD1, kD2, kD3, kD4, kD5, kD6, kD7, kEdge };

std::string_view to_string(BoundKind kind);

/// c1 * d1 + c2 * d2 <= rhs
struct GdofBound {
  BoundKind kind = BoundKind::kEdge;
  Rational c1{0};
  Rational c2{0};
  Rational rhs{0};

  HalfPlane half_plane() const { return {c1, c2, rhs}; }
  bool admits(const Point2& p) const { return half_plane().admits(p); }
};

/// The polygon {d >= 0} intersected with a list of bounds. Immutable once built.
class GdofRegion {
 public:
  const std::vector<GdofBound>& bounds() const { return bounds_; }
  /// Counterclockwise, starting at the origin.
  const std::vector<Point2>& vertices() const { return vertices_; }

 private:
  friend GdofRegion build_region(std::vector<GdofBound> bounds);
  std::vector<GdofBound> bounds_;
  std::vector<Point2> vertices_;
};

/// The seven bounds D1..D7 of the GDoF region, in that order.
std::array<GdofBound, 7> theorem_bounds(const ChannelProfile& channel);

GdofRegion build_region(std::vector<GdofBound> bounds);

/// build_region(theorem_bounds(channel))
GdofRegion gdof_region(const ChannelProfile& channel);

bool contains(const GdofRegion& region, const Point2& point);

struct SymmetricGdof {
  Rational value{0};
  BoundKind active = BoundKind::kD1;  // first bound attaining the minimum
};

/// Largest d with (d, d) in the region.
SymmetricGdof symmetric_gdof(const ChannelProfile& channel);

/// The channel with transmitter and receiver roles exchanged:
/// (N1, M1, N2, M2) and [1, a21, a12, a22].
ChannelProfile reciprocal(const ChannelProfile& channel);

/// Same vertex set, compared exactly.
bool regions_equal(const GdofRegion& a, const GdofRegion& b);

/// Exponent profile whose entries are affine in one parameter alpha:
/// a_k = offset_k + slope_k * alpha. The a11 entry must be the constant 1.
struct ExponentTemplate {
  std::array<Rational, 4> offset{Rational(1), Rational(0), Rational(0), Rational(1)};
  std::array<Rational, 4> slope{Rational(0), Rational(1), Rational(1), Rational(0)};

  ExponentProfile at(const Rational& alpha) const;
};

struct SweepPoint {
  Rational alpha{0};
  Rational d_sym{0};
  BoundKind active = BoundKind::kD1;
  bool is_breakpoint = false;
};

/// Symmetric GDoF at every grid point. A grid point is flagged as a breakpoint
/// when the slopes to its left and right neighbours differ; the end points are
/// never flagged. The grid must be strictly increasing.
std::vector<SweepPoint> sweep_alpha(const AntennaProfile& antennas, const ExponentTemplate& shape,
                                    std::span<const Rational> grid);

/// lo, lo + step, ... up to and including hi when it lands on the lattice.
std::vector<Rational> make_grid(const Rational& lo, const Rational& hi, const Rational& step);

}  // namespace gdof
