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

#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "gdof/core_math.hpp"
#include "gdof/hk_scheme.hpp"
#include "gdof/rational.hpp"
#include "gdof/region.hpp"

namespace gdof {

/// SplitMix64 output for a given 64-bit input.
std::uint64_t splitmix64(std::uint64_t x);

/// Independent child seed for stream `index` of `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// Counter-based generator: the k-th draw is splitmix64 of (seed, k), so any
/// draw can be reproduced without replaying the stream. Normals use Box-Muller
/// rather than std::normal_distribution, whose output is library-specific.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t next_u64() { return splitmix64(seed_ + counter_++ * 0x9E3779B97F4A7C15ULL); }
  /// Uniform on (0, 1].
  double uniform();
  double normal();
  std::uint64_t counter() const { return counter_; }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

/// i.i.d. circularly-symmetric complex Gaussian entries CN(0, 1), filled
/// column by column. Deterministic in the seed.
ComplexMatrix sample_channel(int rows, int cols, std::uint64_t seed);

/// Samples all four links. A draw with any link whose smallest singular value
/// is below 1e-6 of its largest is rejected and redrawn from a derived seed.
ChannelInstance sample_instance(const ChannelProfile& profile, double rho, std::uint64_t seed);

class SnrLadder {
 public:
  /// Ascending positive nominal SNRs, at least two, adjacent ones at least
  /// 20 dB apart.
  explicit SnrLadder(std::vector<double> rho_values);
  static SnrLadder standard() { return SnrLadder({1e8, 1e12}); }

  const std::vector<double>& values() const { return values_; }
  double lo() const { return values_.front(); }
  double hi() const { return values_.back(); }

 private:
  std::vector<double> values_;
};

struct SlopeEstimate {
  double value = 0.0;   // mean secant slope over draws
  double spread = 0.0;  // sample standard deviation over draws
  double min = 0.0;
  double max = 0.0;
  int draws = 0;
  std::uint64_t seed = 0;
};

/// log2 det(I + snr H Q H^H). Q must be Hermitian positive semidefinite.
double p2p_rate(const ComplexMatrix& h, const ComplexMatrix& q, double snr);

struct MacUser {
  ComplexMatrix h;  // receiver_dims x tx_dims
  int tx_dims = 1;
  Rational exponent{0};
};

/// log2 det(I + sum_k rho^{a_k} H_k H_k^H / M_k) for two or three users.
double mac_sum_rate(int receiver_dims, std::span<const MacUser> users, double rho);

/// Rates when each receiver treats the other user's signal as noise, with
/// white inputs Q_k = I / M_k at both transmitters.
std::pair<double, double> tin_rates(const ChannelInstance& inst, double rho);

/// rate(rho, draw_seed); draw_seed identifies the channel draw.
using RateFunction = std::function<double(double rho, std::uint64_t draw_seed)>;

/// Averages (rate(hi) - rate(lo)) / (log2 hi - log2 lo) over `draws` draws,
/// using the ladder's extreme points. Draw k uses derive_seed(seed, k).
SlopeEstimate estimate_slope(const RateFunction& rate, const SnrLadder& ladder, int draws,
                             std::uint64_t seed);

/// Per-user TIN slope of the given channel profile.
std::pair<SlopeEstimate, SlopeEstimate> estimate_tin_gdof(const ChannelProfile& profile,
                                                          const SnrLadder& ladder, int draws,
                                                          std::uint64_t seed);

/// MAC at a receiver with `receiver_dims` antennas and users (exponent, tx_dims).
/// The oracle for the slope is f (two users) or g (three users).
SlopeEstimate estimate_mac_gdof(int receiver_dims, std::span<const WeightedDim> users,
                                const SnrLadder& ladder, int draws, std::uint64_t seed);

}  // namespace gdof
