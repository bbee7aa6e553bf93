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

#include "gdof/finite_snr.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gdof/error.hpp"

namespace gdof {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(seed ^ splitmix64(index + 0x632BE59BD9B4E019ULL));
}

double CounterRng::uniform() {
  // 53 random bits, shifted off zero so log() below stays finite.
  return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
}

double CounterRng::normal() {
  const double r = std::sqrt(-2.0 * std::log(uniform()));
  const double theta = 2.0 * std::numbers::pi * uniform();
  return r * std::cos(theta);
}

ComplexMatrix sample_channel(int rows, int cols, std::uint64_t seed) {
  if (rows < 1 || cols < 1) throw Error(ErrorCode::kInvalidArgument, "matrix dimensions must be >= 1");
  CounterRng rng(seed);
  ComplexMatrix h(rows, cols);
  const double scale = std::sqrt(0.5);
  for (int c = 0; c < cols; ++c) {
    for (int r = 0; r < rows; ++r) {
      const double re = rng.normal();
      const double im = rng.normal();
      h(r, c) = {scale * re, scale * im};
    }
  }
  return h;
}

namespace {

bool well_conditioned(const ComplexMatrix& h) {
  Eigen::JacobiSVD<ComplexMatrix> svd(h);
  const auto& s = svd.singularValues();
  return s(s.size() - 1) > 1e-6 * s(0);
}

double log2_det_hpd(const ComplexMatrix& a) {
  Eigen::LLT<ComplexMatrix> llt(a);
  if (llt.info() != Eigen::Success) {
    throw Error(ErrorCode::kInvalidArgument, "matrix is not positive definite");
  }
  double acc = 0.0;
  const auto& l = llt.matrixLLT();
  for (Eigen::Index k = 0; k < l.rows(); ++k) acc += std::log2(std::abs(l(k, k).real()));
  return 2.0 * acc;
}

void expect_psd(const ComplexMatrix& q) {
  if (q.rows() != q.cols()) throw Error(ErrorCode::kDimensionMismatch, "covariance must be square");
  const double scale = std::max(1.0, q.norm());
  if ((q - q.adjoint()).norm() > 1e-10 * scale) {
    throw Error(ErrorCode::kInvalidArgument, "covariance is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(q, Eigen::EigenvaluesOnly);
  if (eig.eigenvalues().minCoeff() < -1e-12 * scale) {
    throw Error(ErrorCode::kInvalidArgument, "covariance is not positive semidefinite");
  }
}

// Pairwise summation keeps the result independent of how draws are chunked.
double pairwise_sum(std::span<const double> v) {
  if (v.size() <= 2) {
    double s = 0.0;
    for (double x : v) s += x;
    return s;
  }
  const std::size_t half = v.size() / 2;
  return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

}  // namespace

ChannelInstance sample_instance(const ChannelProfile& profile, double rho, std::uint64_t seed) {
  const auto& ant = profile.antennas;
  constexpr int kMaxAttempts = 16;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    auto draw = [&](int link, int rows, int cols) {
      return sample_channel(rows, cols, derive_seed(seed, 4 * attempt + link));
    };
    ComplexMatrix h11 = draw(0, ant.rx(1), ant.tx(1));
    ComplexMatrix h12 = draw(1, ant.rx(2), ant.tx(1));
    ComplexMatrix h21 = draw(2, ant.rx(1), ant.tx(2));
    ComplexMatrix h22 = draw(3, ant.rx(2), ant.tx(2));
    if (well_conditioned(h11) && well_conditioned(h12) && well_conditioned(h21) &&
        well_conditioned(h22)) {
      return ChannelInstance(profile, rho, std::move(h11), std::move(h12), std::move(h21),
                             std::move(h22));
    }
  }
  throw Error(ErrorCode::kRankDeficient, "could not sample a full-rank channel");
}

SnrLadder::SnrLadder(std::vector<double> rho_values) : values_(std::move(rho_values)) {
  if (values_.size() < 2) throw Error(ErrorCode::kInvalidArgument, "SNR ladder needs at least two values");
  for (std::size_t k = 0; k < values_.size(); ++k) {
    if (!(values_[k] > 0) || !std::isfinite(values_[k])) {
      throw Error(ErrorCode::kInvalidArgument, "SNR ladder values must be positive and finite");
    }
    if (k > 0 && std::log10(values_[k]) - std::log10(values_[k - 1]) < 2.0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "SNR ladder values must be ascending and at least 20 dB apart");
    }
  }
}

double p2p_rate(const ComplexMatrix& h, const ComplexMatrix& q, double snr) {
  if (snr < 0) throw Error(ErrorCode::kInvalidArgument, "snr must be nonnegative");
  expect_psd(q);
  if (q.rows() != h.cols()) throw Error(ErrorCode::kDimensionMismatch, "Q must be cols(H) square");
  const auto n = h.rows();
  ComplexMatrix a = ComplexMatrix::Identity(n, n) + snr * (h * q * h.adjoint());
  return log2_det_hpd(a);
}

double mac_sum_rate(int receiver_dims, std::span<const MacUser> users, double rho) {
  if (users.size() < 2 || users.size() > 3) {
    throw Error(ErrorCode::kInvalidArgument, "MAC needs two or three users");
  }
  ComplexMatrix a = ComplexMatrix::Identity(receiver_dims, receiver_dims);
  for (const auto& u : users) {
    if (u.h.rows() != receiver_dims || u.h.cols() != u.tx_dims || u.tx_dims < 1) {
      throw Error(ErrorCode::kDimensionMismatch, "MAC user matrix must be receiver_dims x tx_dims");
    }
    a += (std::pow(rho, to_double(u.exponent)) / u.tx_dims) * (u.h * u.h.adjoint());
  }
  return log2_det_hpd(a);
}

std::pair<double, double> tin_rates(const ChannelInstance& inst, double rho) {
  const auto& ant = inst.antennas();
  const auto& a = inst.exponents();
  auto rate = [&](int i) {
    const int j = 3 - i;
    const ComplexMatrix& direct = inst.link(i, i);
    const ComplexMatrix& cross = inst.link(j, i);
    const auto n = direct.rows();
    ComplexMatrix noise = ComplexMatrix::Identity(n, n) +
                          (std::pow(rho, to_double(a.link(j, i))) / ant.tx(j)) * (cross * cross.adjoint());
    ComplexMatrix total = noise + (std::pow(rho, to_double(a.link(i, i))) / ant.tx(i)) *
                                      (direct * direct.adjoint());
    return log2_det_hpd(total) - log2_det_hpd(noise);
  };
  return {rate(1), rate(2)};
}

SlopeEstimate estimate_slope(const RateFunction& rate, const SnrLadder& ladder, int draws,
                             std::uint64_t seed) {
  if (draws < 1) throw Error(ErrorCode::kInvalidArgument, "draws must be >= 1");
  const double window = std::log2(ladder.hi()) - std::log2(ladder.lo());
  std::vector<double> slopes(static_cast<std::size_t>(draws));
  for (int d = 0; d < draws; ++d) {
    const std::uint64_t s = derive_seed(seed, static_cast<std::uint64_t>(d));
    slopes[static_cast<std::size_t>(d)] = (rate(ladder.hi(), s) - rate(ladder.lo(), s)) / window;
  }
  SlopeEstimate est;
  est.draws = draws;
  est.seed = seed;
  est.value = pairwise_sum(slopes) / draws;
  est.min = *std::min_element(slopes.begin(), slopes.end());
  est.max = *std::max_element(slopes.begin(), slopes.end());
  if (draws > 1) {
    std::vector<double> sq(slopes.size());
    std::transform(slopes.begin(), slopes.end(), sq.begin(),
                   [&](double x) { return (x - est.value) * (x - est.value); });
    est.spread = std::sqrt(pairwise_sum(sq) / (draws - 1));
  }
  return est;
}

std::pair<SlopeEstimate, SlopeEstimate> estimate_tin_gdof(const ChannelProfile& profile,
                                                          const SnrLadder& ladder, int draws,
                                                          std::uint64_t seed) {
  if (profile.exponents.link(2, 2) == 0) {
    throw Error(ErrorCode::kInvalidArgument, "per-user GDoF needs a positive a22");
  }
  auto user_rate = [&](int user) -> RateFunction {
    return [&profile, user](double rho, std::uint64_t s) {
      const auto inst = sample_instance(profile, rho, s);
      const auto [r1, r2] = tin_rates(inst, rho);
      // Per-user GDoF is measured against the user's own SNR exponent.
      return (user == 1 ? r1 : r2) / to_double(profile.exponents.link(user, user));
    };
  };
  return {estimate_slope(user_rate(1), ladder, draws, seed),
          estimate_slope(user_rate(2), ladder, draws, seed)};
}

SlopeEstimate estimate_mac_gdof(int receiver_dims, std::span<const WeightedDim> users,
                                const SnrLadder& ladder, int draws, std::uint64_t seed) {
  std::vector<WeightedDim> levels(users.begin(), users.end());
  RateFunction rate = [receiver_dims, levels](double rho, std::uint64_t s) {
    std::vector<MacUser> mac;
    for (std::size_t k = 0; k < levels.size(); ++k) {
      mac.push_back({sample_channel(receiver_dims, levels[k].dims, derive_seed(s, k)),
                     levels[k].dims, levels[k].exponent});
    }
    return mac_sum_rate(receiver_dims, mac, rho);
  };
  return estimate_slope(rate, ladder, draws, seed);
}

}  // namespace gdof
