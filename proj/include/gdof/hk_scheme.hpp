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

#include <Eigen/Dense>

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "gdof/error.hpp"
#include "gdof/geometry.hpp"
#include "gdof/rational.hpp"
#include "gdof/region.hpp"

namespace gdof {

using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// A fixed channel realization. The link matrix from transmitter i to
/// receiver j is N_j x M_i and its INR/SNR is rho^{a_ij}.
class ChannelInstance {
 public:
  ChannelInstance(ChannelProfile profile, double rho, ComplexMatrix h11, ComplexMatrix h12,
                  ComplexMatrix h21, ComplexMatrix h22);

  const ChannelProfile& profile() const { return profile_; }
  const AntennaProfile& antennas() const { return profile_.antennas; }
  const ExponentProfile& exponents() const { return profile_.exponents; }
  double rho() const { return rho_; }

  const ComplexMatrix& link(int from, int to) const { return links_[2 * (from - 1) + (to - 1)]; }
  /// rho^{a_ij}
  double link_snr(int from, int to) const;

 private:
  ChannelProfile profile_;
  double rho_;
  std::array<ComplexMatrix, 4> links_;
};

/// Private (K_u) and public (K_w) input covariances of one user. Together they
/// use the full power budget: K_u + K_w = I / M.
struct CovariancePair {
  ComplexMatrix private_cov;
  ComplexMatrix public_cov;
};

/// K_u = (I + rho_ij H_ij^H H_ij)^{-1} / M_i, K_w = I / M_i - K_u, where j is the
/// other user. The private part arrives at receiver j at or below its noise floor.
CovariancePair covariances(const ChannelInstance& inst, int user);

enum class StreamClass { kPublic, kPrivateBelowNoise, kPrivateNullSpace };

std::string_view to_string(StreamClass cls);

struct Stream {
  ComplexVector direction;  // unit-norm right singular vector of H_ij
  double weight = 0.0;      // amplitude; the stream contributes weight^2 * v v^H
  StreamClass cls = StreamClass::kPublic;
};

/// Decomposes user `user`'s transmit signal along the right singular vectors
/// of its cross link: min(M_i, N_j) public and below-noise private streams
/// sharing each visible direction, plus one private stream per null-space
/// direction. Throws kRankDeficient when the cross link is numerically rank
/// deficient (smallest kept singular value below 1e-9 of the largest).
std::vector<Stream> stream_decomposition(const ChannelInstance& inst, int user);

/// Sum of weight^2 * v v^H over the streams.
ComplexMatrix reconstruct_covariance(const std::vector<Stream>& streams, int tx_dims);

/// Public/private GDoF of each user, in per-user units.
struct DofSplit {
  Rational d1c{0};
  Rational d1p{0};
  Rational d2c{0};
  Rational d2p{0};

  friend bool operator==(const DofSplit&, const DofSplit&) = default;
};

/// A linear constraint on the public parts (d1c, d2c) for a fixed target point.
struct SplitConstraint {
  std::string label;  // e.g. "C2[1]": constraint C2 written for user 1
  HalfPlane plane;    // over (x, y) = (d1c, d2c)
};

/// Per-message constraints of the HK scheme for the target point, written in
/// base-rho units (user-i quantities multiplied by a_ii). For user i, j != i:
///   C1: a_ii d_ip          <= f(N_i, (beta_ij, m_ij), (a_ii, (M_i - N_j)^+))
///   C2: a_ii d_ic + a_jj d_j  <= f(N_j, (a_ij, M_i), (a_jj, M_j))
///   C3: a_ii d_i + a_jj d_jc  <= f(N_i, (a_ji, M_j), (a_ii, M_i))
///   C4: a_ii d_ip + a_jj d_jc <= g(N_i, (a_ji, M_j), (beta_ij, m_ij), (a_ii, (M_i - N_j)^+))
/// plus 0 <= d_ic <= d_i.
std::vector<SplitConstraint> split_constraints(const ChannelProfile& channel, const Point2& point);

/// Thrown when no split satisfies the constraints; carries an irreducible
/// conflicting subset of constraint labels.
class InfeasibleSplit : public Error {
 public:
  InfeasibleSplit(const std::string& what, std::vector<std::string> conflict)
      : Error(ErrorCode::kInfeasibleSplit, what), conflict_(std::move(conflict)) {}
  const std::vector<std::string>& conflict() const { return conflict_; }

 private:
  std::vector<std::string> conflict_;
};

/// Finds a public/private split of a region point. Among feasible splits it
/// maximizes the total private GDoF d1p + d2p, then d1p.
/// Throws kPointOutsideRegion if the point is not in the GDoF region and
/// InfeasibleSplit if the constraints admit no split.
DofSplit split_solver(const ChannelProfile& channel, const Point2& point);

}  // namespace gdof
