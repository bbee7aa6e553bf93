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

#include "gdof/hk_scheme.hpp"

#include <algorithm>
#include <algorithm>
#include <cmath>

#include "gdof/core_math.hpp"

namespace gdof {

namespace {

constexpr double kRankTolerance = 1e-9;

void expect_shape(const ComplexMatrix& h, int rows, int cols, const char* name) {
  if (h.rows() != rows || h.cols() != cols) {
    throw Error(ErrorCode::kDimensionMismatch,
                std::string(name) + " must be " + std::to_string(rows) + "x" + std::to_string(cols) +
                    ", got " + std::to_string(h.rows()) + "x" + std::to_string(h.cols()));
  }
}

void expect_user(int user) {
  if (user != 1 && user != 2) throw Error(ErrorCode::kInvalidArgument, "user must be 1 or 2");
}

}  // namespace

ChannelInstance::ChannelInstance(ChannelProfile profile, double rho, ComplexMatrix h11,
                                 ComplexMatrix h12, ComplexMatrix h21, ComplexMatrix h22)
    : profile_(std::move(profile)),
      rho_(rho),
      links_{std::move(h11), std::move(h12), std::move(h21), std::move(h22)} {
  if (!(rho > 0)) throw Error(ErrorCode::kInvalidArgument, "nominal SNR must be positive");
  const auto& ant = profile_.antennas;
  expect_shape(link(1, 1), ant.rx(1), ant.tx(1), "H11");
  expect_shape(link(1, 2), ant.rx(2), ant.tx(1), "H12");
  expect_shape(link(2, 1), ant.rx(1), ant.tx(2), "H21");
  expect_shape(link(2, 2), ant.rx(2), ant.tx(2), "H22");
}

double ChannelInstance::link_snr(int from, int to) const {
  return std::pow(rho_, to_double(profile_.exponents.link(from, to)));
}

CovariancePair covariances(const ChannelInstance& inst, int user) {
  expect_user(user);
  const int other = 3 - user;
  const int m = inst.antennas().tx(user);
  const ComplexMatrix& h = inst.link(user, other);
  const ComplexMatrix eye = ComplexMatrix::Identity(m, m);

  const double snr = inst.link_snr(user, other);

  // (I + snr H^H H)^{-1} through the eigenbasis of H^H H.
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h.adjoint() * h);
  Eigen::VectorXd scale(m);
  for (int k = 0; k < m; ++k) scale(k) = 1.0 / (m * (1.0 + snr * std::max(es.eigenvalues()(k), 0.0)));
  const ComplexMatrix& v = es.eigenvectors();
  ComplexMatrix private_cov = v * scale.asDiagonal() * v.adjoint();
  private_cov = (0.5 * (private_cov + private_cov.adjoint())).eval();
  ComplexMatrix public_cov = eye / static_cast<double>(m) - private_cov;
  return {std::move(private_cov), std::move(public_cov)};
}

std::string_view to_string(StreamClass cls) {
  switch (cls) {
    case StreamClass::kPublic: return "public";
    case StreamClass::kPrivateBelowNoise: return "private_below_noise";
    case StreamClass::kPrivateNullSpace: return "private_nullspace";
  }
  return "?";
}

std::vector<Stream> stream_decomposition(const ChannelInstance& inst, int user) {
  expect_user(user);
  const int other = 3 - user;
  const int m = inst.antennas().tx(user);
  const int visible = std::min(m, inst.antennas().rx(other));
  const ComplexMatrix& h = inst.link(user, other);
  const double snr = inst.link_snr(user, other);

  Eigen::JacobiSVD<ComplexMatrix> svd(h, Eigen::ComputeFullV);
  const auto& sigma = svd.singularValues();
  const ComplexMatrix& v = svd.matrixV();
  if (sigma(visible - 1) <= kRankTolerance * sigma(0)) {
    throw Error(ErrorCode::kRankDeficient, "cross link H" + std::to_string(user) +
                                               std::to_string(other) + " is rank deficient");
  }

  std::vector<Stream> streams;
  streams.reserve(2 * visible + (m - visible));
  for (int k = 0; k < visible; ++k) {
    // G = M (1 + rho lambda): the private share is 1/G, the public share 1/M - 1/G.
    const double gain = m * (1.0 + snr * sigma(k) * sigma(k));
    streams.push_back({v.col(k), std::sqrt(1.0 / m - 1.0 / gain), StreamClass::kPublic});
    streams.push_back({v.col(k), std::sqrt(1.0 / gain), StreamClass::kPrivateBelowNoise});
  }
  for (int k = visible; k < m; ++k) {
    streams.push_back({v.col(k), 1.0 / std::sqrt(static_cast<double>(m)),
                       StreamClass::kPrivateNullSpace});
  }
  return streams;
}

ComplexMatrix reconstruct_covariance(const std::vector<Stream>& streams, int tx_dims) {
  ComplexMatrix cov = ComplexMatrix::Zero(tx_dims, tx_dims);
  for (const auto& s : streams) cov += (s.weight * s.weight) * (s.direction * s.direction.adjoint());
  return cov;
}

std::vector<SplitConstraint> split_constraints(const ChannelProfile& channel, const Point2& point) {
  const auto& ant = channel.antennas;
  const auto& a = channel.exponents;
  const std::array<Rational, 2> target{point.x, point.y};
  std::vector<SplitConstraint> out;

  // Coefficients are placed on (d_ic, d_jc) and mapped onto (d1c, d2c).
  auto add = [&](std::string label, int i, Rational on_own, Rational on_other, Rational rhs) {
    HalfPlane h{Rational(0), Rational(0), rhs};
    (i == 1 ? h.c1 : h.c2) += on_own;
    (i == 1 ? h.c2 : h.c1) += on_other;
    out.push_back({std::move(label), h});
  };

  for (int i = 1; i <= 2; ++i) {
    const int j = 3 - i;
    const std::string tag = "[" + std::to_string(i) + "]";
    const Rational& a_ii = a.link(i, i);
    const Rational& a_jj = a.link(j, j);
    const Rational& d_i = target[i - 1];
    const Rational& d_j = target[j - 1];
    const WeightedDim below_noise{pos_part(a_ii - a.link(i, j)), std::min(ant.tx(i), ant.rx(j))};
    const WeightedDim null_space{a_ii, std::max(ant.tx(i) - ant.rx(j), 0)};
    const WeightedDim own{a_ii, ant.tx(i)};
    const WeightedDim other_own{a_jj, ant.tx(j)};

    // d_ip = d_i - d_ic throughout.
    add("C1" + tag, i, -a_ii, Rational(0), f(ant.rx(i), below_noise, null_space) - a_ii * d_i);
    add("C2" + tag, i, a_ii, Rational(0),
        f(ant.rx(j), {a.link(i, j), ant.tx(i)}, other_own) - a_jj * d_j);
    add("C3" + tag, i, Rational(0), a_jj, f(ant.rx(i), {a.link(j, i), ant.tx(j)}, own) - a_ii * d_i);
    add("C4" + tag, i, -a_ii, a_jj,
        g(ant.rx(i), {a.link(j, i), ant.tx(j)}, below_noise, null_space) - a_ii * d_i);
    add("d" + std::to_string(i) + "c>=0", i, Rational(-1), Rational(0), Rational(0));
    add("d" + std::to_string(i) + "c<=d" + std::to_string(i), i, Rational(1), Rational(0), d_i);
  }
  return out;
}

namespace {

std::vector<Point2> feasible_vertices(const std::vector<SplitConstraint>& cs) {
  std::vector<HalfPlane> planes;
  planes.reserve(cs.size());
  for (const auto& c : cs) planes.push_back(c.plane);
  return enumerate_vertices(planes);
}

// Deletion filter: drop every constraint whose removal keeps the set infeasible.
std::vector<std::string> irreducible_conflict(std::vector<SplitConstraint> cs) {
  for (std::size_t k = 0; k < cs.size();) {
    auto trial = cs;
    trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(k));
    if (feasible_vertices(trial).empty()) {
      cs = std::move(trial);
    } else {
      ++k;
    }
  }
  std::vector<std::string> labels;
  for (auto& c : cs) labels.push_back(std::move(c.label));
  return labels;
}

}  // namespace

DofSplit split_solver(const ChannelProfile& channel, const Point2& point) {
  const auto bounds = theorem_bounds(channel);
  const bool inside = point.x >= 0 && point.y >= 0 &&
                      std::all_of(bounds.begin(), bounds.end(), [&](const GdofBound& b) { return b.admits(point); });
  if (!inside) {
    throw Error(ErrorCode::kPointOutsideRegion,
                "(" + to_string(point.x) + ", " + to_string(point.y) + ") is outside the GDoF region");
  }
  auto cs = split_constraints(channel, point);
  const auto vertices = feasible_vertices(cs);
  if (vertices.empty()) {
    auto conflict = irreducible_conflict(std::move(cs));
    std::string msg = "no feasible split for (" + to_string(point.x) + ", " + to_string(point.y) +
                      "); conflicting constraints:";
    for (const auto& l : conflict) msg += " " + l;
    throw InfeasibleSplit(msg, std::move(conflict));
  }
  // Least public GDoF first, then least d1c.
  const Point2 best = *std::min_element(vertices.begin(), vertices.end(), [](const Point2& p, const Point2& q) {
    const Rational sp = p.x + p.y, sq = q.x + q.y;
    return sp < sq || (sp == sq && p.x < q.x);
  });
  return DofSplit{best.x, point.x - best.x, best.y, point.y - best.y};
}

}  // namespace gdof
