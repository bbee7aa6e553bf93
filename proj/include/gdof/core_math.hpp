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

#include "gdof/rational.hpp"

namespace gdof {

/// max(x, 0)
inline Rational pos_part(const Rational& x) { return x < 0 ? Rational(0) : x; }

/// A signal level paired with the number of dimensions carried at that level.
/// `exponent` is the SNR exponent relative to the nominal SNR; `dims` is an
/// antenna or stream count.
struct WeightedDim {
  Rational exponent{0};
  int dims = 0;

  friend bool operator==(const WeightedDim&, const WeightedDim&) = default;
};

/// Sum GDoF of a two-transmitter MAC with `receive_dims` receive antennas:
/// the stronger level is served first, the weaker one gets what is left.
/// Equal exponents take the first-argument-first branch.
Rational f(int receive_dims, const WeightedDim& p1, const WeightedDim& p2);

/// Three-transmitter version of f. Levels are served in descending exponent
/// order; ties keep argument order.
Rational g(int receive_dims, const WeightedDim& t1, const WeightedDim& t2, const WeightedDim& t3);

}  // namespace gdof
