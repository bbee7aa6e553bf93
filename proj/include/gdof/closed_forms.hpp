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

#include <optional>
#include <string_view>
#include <vector>

#include "gdof/rational.hpp"
#include "gdof/region.hpp"

namespace gdof {

// Closed-form symmetric GDoF curves for symmetric channels [1, alpha, alpha, 1].

/// min{N, D(alpha)} for the (M, N, M, N) channel with M > N.
/// Throws for M <= N; use the reciprocal channel instead.
Rational corollary_D(int tx, int rx, const Rational& alpha);

/// The SISO "W" curve.
Rational siso_w_curve(const Rational& alpha);

/// The "V" curve of the (1, 1, 2, 1) channel.
Rational curve_1121(const Rational& alpha);

/// Smallest alpha from which both users get single-user GDoF, 3 - M/N (M >= N).
Rational alpha_star(int tx, int rx);

enum class Regime { kVeryWeak, kWeak, kModerate, kStrong, kVeryStrong };

std::string_view to_string(Regime regime);

/// Left-closed intervals [0,1/2), [1/2,2/3), [2/3,1), [1,alpha*), [alpha*,inf).
/// When alpha* < 1 the very strong interval takes precedence.
Regime classify_regime(int tx, int rx, const Rational& alpha);

/// min{M1+M2, N1+N2, max(M1,N2), max(M2,N1)}
int dof_sum_bound(const AntennaProfile& antennas);

/// GDoF of transmit/receive zero-forcing with time sharing: the convex hull of
/// integer stream pairs the DoF region admits. Cross links with exponent zero
/// are absent and impose no spatial constraint. Each stream is worth one unit
/// of its own user's GDoF.
GdofRegion zf_only_region(const ChannelProfile& channel);

/// One linear piece of a symmetric curve on [lo, hi); no hi means unbounded.
struct CurvePiece {
  Rational lo{0};
  std::optional<Rational> hi;
  Rational slope{0};
  Rational intercept{0};

  Rational at(const Rational& alpha) const { return intercept + slope * alpha; }
};

/// Contiguous pieces covering [0, inf).
struct SymmetricCurve {
  std::vector<CurvePiece> pieces;

  Rational at(const Rational& alpha) const;
};

SymmetricCurve siso_w_pieces();
SymmetricCurve corollary_D_pieces(int tx, int rx);

}  // namespace gdof
