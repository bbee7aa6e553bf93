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

#include "gdof/core_math.hpp"

#include <algorithm>
#include <array>
#include <cassert>

namespace gdof {

namespace {

Rational served(int remaining, int dims, const Rational& exponent) {
  return Rational(std::min(std::max(remaining, 0), dims)) * exponent;
}

}  // namespace

Rational f(int receive_dims, const WeightedDim& p1, const WeightedDim& p2) {
  assert(receive_dims >= 0);
  const WeightedDim& hi = p1.exponent >= p2.exponent ? p1 : p2;
  const WeightedDim& lo = p1.exponent >= p2.exponent ? p2 : p1;
  return served(receive_dims, hi.dims, hi.exponent) +
         served(receive_dims - hi.dims, lo.dims, lo.exponent);
}

Rational g(int receive_dims, const WeightedDim& t1, const WeightedDim& t2, const WeightedDim& t3) {
  assert(receive_dims >= 0);
  std::array<WeightedDim, 3> levels{t1, t2, t3};
  std::stable_sort(levels.begin(), levels.end(),
                   [](const WeightedDim& a, const WeightedDim& b) { return a.exponent > b.exponent; });
  Rational total(0);
  int remaining = receive_dims;
  for (const auto& level : levels) {
    total += served(remaining, level.dims, level.exponent);
    remaining -= level.dims;
  }
  return total;
}

}  // namespace gdof
