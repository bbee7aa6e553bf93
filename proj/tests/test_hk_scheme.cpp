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

#include <catch_amalgamated.hpp>

#include <Eigen/Eigenvalues>

#include "gdof/finite_snr.hpp"
#include "gdof/hk_scheme.hpp"
#include "oracles.hpp"

using namespace gdof;

namespace {

ChannelProfile symmetric(int m1, int n1, int m2, int n2, Rational alpha) {
  return {AntennaProfile(m1, n1, m2, n2), ExponentProfile::symmetric(alpha)};
}

double min_eigenvalue(const ComplexMatrix& m) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

double max_eigenvalue(const ComplexMatrix& m) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues().maxCoeff();
}

// The split constraints written out from scratch, with the MAC caps counted by
// exhaustive allocation.
bool satisfies_split_constraints(const ChannelProfile& ch, const DofSplit& s) {
  const auto& ant = ch.antennas;
  const auto& a = ch.exponents;
  const Rational dc[3] = {0, s.d1c, s.d2c};
  const Rational dp[3] = {0, s.d1p, s.d2p};
  for (int i = 1; i <= 2; ++i) {
    const int j = 3 - i;
    const Rational aii = a.link(i, i), ajj = a.link(j, j);
    const Rational beta = std::max(Rational(0), aii - a.link(i, j));
    const int m_ij = std::min(ant.tx(i), ant.rx(j));
    const int null = std::max(0, ant.tx(i) - ant.rx(j));
    const Rational di = dc[i] + dp[i], dj = dc[j] + dp[j];
    if (dc[i] < 0 || dp[i] < 0) return false;
    if (aii * dp[i] > oracle::mac_by_enumeration(ant.rx(i), {{beta, m_ij}, {aii, null}})) return false;
    if (aii * dc[i] + ajj * dj > oracle::mac_by_enumeration(ant.rx(j), {{a.link(i, j), ant.tx(i)}, {ajj, ant.tx(j)}}))
      return false;
    if (aii * di + ajj * dc[j] > oracle::mac_by_enumeration(ant.rx(i), {{a.link(j, i), ant.tx(j)}, {aii, ant.tx(i)}}))
      return false;
    if (aii * dp[i] + ajj * dc[j] >
        oracle::mac_by_enumeration(ant.rx(i), {{a.link(j, i), ant.tx(j)}, {beta, m_ij}, {aii, null}}))
      return false;
  }
  return true;
}

}  // namespace

TEST_CASE("channel instances check their shapes") {
  auto p = symmetric(3, 2, 2, 3, Rational(1, 2));
  auto inst = sample_instance(p, 1e4, 3);
  CHECK(inst.link(1, 2).rows() == 3);
  CHECK(inst.link(1, 2).cols() == 3);
  CHECK(inst.link(2, 1).rows() == 2);
  CHECK(inst.link(2, 1).cols() == 2);
  CHECK(inst.link_snr(1, 2) == Catch::Approx(100.0));
  CHECK_THROWS_AS(ChannelInstance(p, 1e4, inst.link(1, 2), inst.link(1, 2), inst.link(2, 1), inst.link(2, 2)),
                  Error);
  CHECK_THROWS_AS(ChannelInstance(p, 0.0, inst.link(1, 1), inst.link(1, 2), inst.link(2, 1), inst.link(2, 2)),
                  Error);
}

TEST_CASE("covariance split uses the full power budget") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const int m1 = 1 + seed % 3, n1 = 1 + (seed / 3) % 3, m2 = 1 + (seed / 9) % 3, n2 = 1 + (seed / 27) % 3;
    auto inst = sample_instance(symmetric(m1, n1, m2, n2, Rational(static_cast<int>(seed % 5), 2)), 1e3, seed);
    for (int user = 1; user <= 2; ++user) {
      const int m = inst.antennas().tx(user);
      auto [ku, kw] = covariances(inst, user);
      const ComplexMatrix eye = ComplexMatrix::Identity(m, m) / static_cast<double>(m);
      CHECK((ku + kw - eye).norm() <= 1e-12 * eye.norm());
      CHECK(min_eigenvalue(ku) >= -1e-12);
      CHECK(min_eigenvalue(kw) >= -1e-12);
      CHECK(ku.trace().real() + kw.trace().real() == Catch::Approx(1.0).epsilon(1e-12));
      // The private part lands at or below the noise floor of the other receiver.
      const ComplexMatrix& h = inst.link(user, 3 - user);
      const ComplexMatrix seen = inst.link_snr(user, 3 - user) * h * ku * h.adjoint();
      CHECK(max_eigenvalue(0.5 * (seen + seen.adjoint())) <= 1.0 / m + 1e-12);
    }
  }
}

TEST_CASE("covariance special cases") {
  SECTION("no cross link keeps everything private") {
    ChannelProfile p{AntennaProfile(2, 2, 2, 2), ExponentProfile(1, 0, 0, 1)};
    ComplexMatrix zero = ComplexMatrix::Zero(2, 2);
    auto inst = sample_instance(p, 1e6, 4);
    ChannelInstance silent(p, 1e6, inst.link(1, 1), zero, zero, inst.link(2, 2));
    auto [ku, kw] = covariances(silent, 1);
    CHECK((ku - ComplexMatrix::Identity(2, 2) / 2.0).norm() < 1e-15);
    CHECK(kw.norm() < 1e-15);
  }
  SECTION("SISO with a 60 dB cross link") {
    ComplexMatrix one = ComplexMatrix::Ones(1, 1);
    ChannelInstance inst(symmetric(1, 1, 1, 1, 1), 1e6, one, one, one, one);
    auto [ku, kw] = covariances(inst, 1);
    CHECK(ku(0, 0).real() == Catch::Approx(1e-6 / (1 + 1e-6)).epsilon(1e-9));
    CHECK(1e6 * ku(0, 0).real() < 1.0);
  }
}

TEST_CASE("stream decomposition") {
  auto p = symmetric(3, 3, 2, 2, Rational(2, 3));
  auto inst = sample_instance(p, 1e5, 11);
  auto streams = stream_decomposition(inst, 1);
  int pub = 0, below = 0, null = 0;
  for (const auto& s : streams) {
    pub += s.cls == StreamClass::kPublic;
    below += s.cls == StreamClass::kPrivateBelowNoise;
    null += s.cls == StreamClass::kPrivateNullSpace;
    CHECK(s.direction.norm() == Catch::Approx(1.0).epsilon(1e-12));
  }
  CHECK(pub == 2);
  CHECK(below == 2);
  CHECK(null == 1);
  CHECK(to_string(StreamClass::kPrivateNullSpace) == "private_nullspace");

  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    auto q = symmetric(1 + seed % 3, 1 + (seed / 3) % 3, 1 + (seed / 9) % 3, 1 + (seed / 2) % 3, Rational(3, 4));
    auto draw = sample_instance(q, 1e4, seed);
    for (int user = 1; user <= 2; ++user) {
      auto s = stream_decomposition(draw, user);
      const int m = q.antennas.tx(user);
      auto cov = covariances(draw, user);
      const ComplexMatrix total = cov.private_cov + cov.public_cov;
      CHECK((reconstruct_covariance(s, m) - total).norm() <= 1e-10 * total.norm());
      ComplexMatrix priv = ComplexMatrix::Zero(m, m);
      for (const auto& st : s) {
        if (st.cls != StreamClass::kPublic) priv += st.weight * st.weight * st.direction * st.direction.adjoint();
      }
      // The null-space streams carry the part of K_u the other receiver cannot see.
      CHECK((priv - cov.private_cov).norm() <= 1e-10 * total.norm());
      if (m <= q.antennas.rx(3 - user)) {
        for (const auto& st : s) CHECK(st.cls != StreamClass::kPrivateNullSpace);
      }
    }
  }
}

TEST_CASE("stream decomposition rejects rank-deficient cross links") {
  auto p = symmetric(2, 2, 2, 2, 1);
  auto inst = sample_instance(p, 1e4, 5);
  ComplexMatrix rank_one(2, 2);
  rank_one << 1.0, 2.0, 2.0, 4.0;
  ChannelInstance bad(p, 1e4, inst.link(1, 1), rank_one, inst.link(2, 1), inst.link(2, 2));
  try {
    stream_decomposition(bad, 1);
    FAIL("rank-deficient link accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kRankDeficient);
  }
  CHECK_NOTHROW(stream_decomposition(bad, 2));
}

TEST_CASE("split solver examples") {
  auto p = symmetric(3, 3, 2, 2, Rational(2, 3));
  const DofSplit s = split_solver(p, {1, 2});
  CHECK(s == DofSplit{0, 1, Rational(4, 3), Rational(2, 3)});
  CHECK(satisfies_split_constraints(p, s));

  ChannelProfile quiet{AntennaProfile(3, 2, 2, 3), ExponentProfile(1, 0, 0, Rational(1, 2))};
  auto region = gdof_region(quiet);
  for (const auto& v : region.vertices()) CHECK(split_solver(quiet, v) == DofSplit{0, v.x, 0, v.y});

  CHECK(split_solver(p, {0, 0}) == DofSplit{});

  try {
    split_solver(p, {Rational(11, 10), 2});
    FAIL("outside point accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kPointOutsideRegion);
  }
}

TEST_CASE("split constraints admit nothing for a point outside the region") {
  auto p = symmetric(1, 1, 1, 1, Rational(1, 2));
  auto cs = split_constraints(p, {1, 1});
  std::vector<HalfPlane> planes;
  for (const auto& c : cs) planes.push_back(c.plane);
  CHECK(enumerate_vertices(planes).empty());
  CHECK(cs.size() == 12);
  CHECK(cs.front().label == "C1[1]");
}

TEST_CASE("split solver is sound and complete on a sample of profiles") {
  const Rational levels[] = {Rational(1, 4), Rational(1, 2), Rational(2, 3), 1};
  int checked = 0;
  for (int m1 = 1; m1 <= 3; m1 += 2)
    for (int n1 = 1; n1 <= 3; ++n1)
      for (int m2 = 1; m2 <= 2; ++m2)
        for (int n2 = 2; n2 <= 3; ++n2)
          for (const auto& a12 : levels)
            for (const auto& a21 : levels) {
              ChannelProfile p{AntennaProfile(m1, n1, m2, n2), ExponentProfile(1, a12, a21, Rational(2, 3))};
              auto region = gdof_region(p);
              std::vector<Point2> targets = region.vertices();
              for (int i = 0; i <= 4 * std::min(m1, n1); ++i)
                for (int j = 0; j <= 4 * std::min(m2, n2); ++j) {
                  Point2 q{Rational(i, 4), Rational(j, 4)};
                  if (contains(region, q)) targets.push_back(q);
                }
              for (const auto& t : targets) {
                DofSplit s;
                REQUIRE_NOTHROW(s = split_solver(p, t));
                CHECK(s.d1c + s.d1p == t.x);
                CHECK(s.d2c + s.d2p == t.y);
                CHECK(satisfies_split_constraints(p, s));
                ++checked;
              }
            }
  CHECK(checked > 1000);
}
