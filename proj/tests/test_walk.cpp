// Copyright 2026 The ffkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ffkit/walk.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gtest/gtest.h"

#include "ffkit/bessel.hpp"
#include "ffkit/errors.hpp"
#include "oracles.hpp"

namespace ffkit::walk {
namespace {

using testing::dense_expm;
using testing::path_adjacency;

constexpr cplx kI{0.0, 1.0};

TEST(LineWalk, SmallSpectra) {
  EXPECT_NEAR(LineWalk(1).eigenvalues()[0], 0.0, 1e-15);
  const auto e2 = LineWalk(2).eigenvalues();
  EXPECT_NEAR(e2[0], 1.0, 1e-15);
  EXPECT_NEAR(e2[1], -1.0, 1e-15);
  const auto e3 = LineWalk(3).eigenvalues();
  EXPECT_NEAR(e3[0], std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(e3[1], 0.0, 1e-15);
  EXPECT_NEAR(e3[2], -std::sqrt(2.0), 1e-15);
}

TEST(LineWalk, RangeChecked) {
  EXPECT_THROW(build_line(0), DomainError);
  EXPECT_THROW(build_line(4097), DomainError);
  EXPECT_NO_THROW(build_line(4096));
}

TEST(LineWalk, EigenvectorsOrthonormalAndReconstruct) {
  for (int length : {1, 2, 7, 64, 101}) {
    const LineWalk w(length);
    const auto flat = w.eigenvector_matrix();
    const Eigen::Map<const Eigen::MatrixXd> v(flat.data(), length, length);
    EXPECT_LE((v.transpose() * v - Eigen::MatrixXd::Identity(length, length)).cwiseAbs().maxCoeff(),
              1e-12);
    Eigen::VectorXd lambda(length);
    for (int p = 0; p < length; ++p) lambda[p] = w.eigenvalues()[p];
    const Eigen::MatrixXd h = v * lambda.asDiagonal() * v.transpose();
    EXPECT_LE((h - path_adjacency(length).real()).cwiseAbs().maxCoeff(), 1e-10);
    for (int p = 1; p <= length; ++p) {
      for (int j = 1; j <= length; ++j) {
        EXPECT_NEAR(w.eigenvector(p, j),
                    std::sqrt(2.0 / (length + 1)) * std::sin(j * p * std::numbers::pi / (length + 1)),
                    1e-13);
      }
    }
  }
}

TEST(Propagator, IdentityAtTimeZero) {
  const LineWalk w(9);
  for (int k = 1; k <= 9; ++k) {
    for (int l = 1; l <= 9; ++l) {
      EXPECT_NEAR(std::abs(propagator_exact(w, k, l, 0.0) - cplx(k == l ? 1.0 : 0.0)), 0.0, 1e-14);
    }
  }
}

TEST(Propagator, TwoVertexClosedForm) {
  const LineWalk w(2);
  for (double t : {0.1, 0.7, 2.0, 9.3}) {
    EXPECT_NEAR(std::abs(propagator_exact(w, 1, 2, t) - (-kI * std::sin(t))), 0.0, 1e-14);
    EXPECT_NEAR(std::abs(propagator_exact(w, 1, 1, t) - std::cos(t)), 0.0, 1e-14);
  }
}

TEST(Propagator, MatchesDenseExponential) {
  const Eigen::MatrixXcd u = dense_expm(path_adjacency(100), 10.0);
  const LineWalk w(100);
  EXPECT_NEAR(std::abs(propagator_exact(w, 1, 20, 10.0) - u(19, 0)), 0.0, 1e-10);
  const auto amps = amplitudes(w, 7, 10.0);
  for (int l = 1; l <= 100; ++l) EXPECT_NEAR(std::abs(amps[l - 1] - u(l - 1, 6)), 0.0, 1e-10);
}

TEST(Propagator, VertexRangeChecked) {
  const LineWalk w(5);
  EXPECT_THROW(propagator_exact(w, 0, 1, 1.0), DomainError);
  EXPECT_THROW(propagator_exact(w, 1, 6, 1.0), DomainError);
}

TEST(Propagator, UnitarityAndSymmetry) {
  for (int length : {1, 3, 50, 256}) {
    const LineWalk w(length);
    for (double t = 0.0; t <= length / 2.0; t += length / 7.0 + 0.3) {
      double total = 0.0;
      for (const auto& a : amplitudes(w, 1, t)) {
        EXPECT_LE(std::abs(a), 1.0 + 1e-12);
        total += std::norm(a);
      }
      EXPECT_NEAR(total, 1.0, 1e-9);
      const int k = 1 + length / 3;
      const int l = length;
      EXPECT_NEAR(std::abs(propagator_exact(w, k, l, t)), std::abs(propagator_exact(w, l, k, t)), 1e-10);
    }
  }
}

TEST(Infinite, ValuesAndRange) {
  EXPECT_EQ(propagator_infinite(0, 0.0), cplx(1.0));
  for (double t : {0.3, 2.0, 11.0}) {
    EXPECT_NEAR(std::abs(propagator_infinite(1, t) - (-kI) * bessel::bessel_j(1, 2 * t)), 0.0, 1e-15);
  }
  const double j56 = static_cast<double>(testing::series_bessel(5, 6.0L));
  EXPECT_NEAR(std::abs(propagator_infinite(5, 3.0) - std::pow(-kI, 5) * j56), 0.0, 1e-13);
  EXPECT_THROW(propagator_infinite(201, 1.0), DomainError);
  EXPECT_THROW(propagator_infinite(0, 200.5), DomainError);
}

// A line much longer than the light cone, started in the middle, is an
// infinite line for all practical purposes. This pins the phase convention.
TEST(Infinite, MatchesCentredLongLine) {
  constexpr int kLength = 401;
  constexpr int kCentre = 201;
  const LineWalk w(kLength);
  for (double t : {1.0, 4.5, 10.0}) {
    const auto amps = amplitudes(w, kCentre, t);
    for (int d = -40; d <= 40; ++d) {
      EXPECT_NEAR(std::abs(amps[kCentre + d - 1] - propagator_infinite(d, t)), 0.0, 1e-10)
          << "d=" << d << " t=" << t;
    }
  }
}

TEST(ImageSum, AgreesWithExact) {
  const LineWalk w(100);
  EXPECT_NEAR(std::abs(propagator_image_sum(100, 10, 5.0, 2) - propagator_exact(w, 1, 10, 5.0)), 0.0,
              1e-8);
  for (int t = 0; t <= 50; t += 5) {
    for (int l = 1; l <= 100; l += 9) {
      EXPECT_NEAR(std::abs(propagator_image_sum(100, l, t, 2) - propagator_exact(w, 1, l, t)), 0.0,
                  1e-8);
    }
  }
}

TEST(ImageSum, InitialCondition) {
  EXPECT_NEAR(std::abs(propagator_image_sum(100, 10, 0.0, 2)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(propagator_image_sum(20, 1, 0.0, 2) - cplx(1.0)), 0.0, 1e-15);
  EXPECT_THROW(propagator_image_sum(20, 1, 1.0, 0), DomainError);
}

TEST(ImageSum, TruncationConverged) {
  for (int t = 1; t <= 50; t += 7) {
    for (int l = 1; l <= 100; l += 11) {
      EXPECT_LE(std::abs(propagator_image_sum(100, l, t, 1) - propagator_image_sum(100, l, t, 2)),
                1e-10);
    }
  }
}

TEST(HalfLine, LimitsAndAgreement) {
  EXPECT_EQ(propagator_bessel(1, 0.0), cplx(1.0));
  EXPECT_EQ(propagator_bessel(4, 0.0), cplx(0.0));
  const LineWalk w(100);
  EXPECT_NEAR(std::abs(propagator_bessel(12, 8.0) - propagator_exact(w, 1, 12, 8.0)), 0.0, 1e-8);
  EXPECT_THROW(propagator_bessel(0, 1.0), DomainError);
}

// Away from the far boundary the dropped images are negligible.
TEST(HalfLine, AccurateWellInsideLightCone) {
  const LineWalk w(100);
  for (int t = 1; t <= 30; ++t) {
    const auto exact = amplitudes(w, 1, t);
    for (int l = 1; l <= 100; ++l) {
      EXPECT_NEAR(std::abs(propagator_bessel(l, t) - exact[l - 1]), 0.0, 1e-6);
    }
  }
}

TEST(Profile, PointMassAtZero) {
  const auto p = prob_profile(LineWalk(30), 0.0);
  EXPECT_DOUBLE_EQ(p.probs[0], 1.0);
  for (int l = 2; l <= 30; ++l) EXPECT_LE(p.probs[l - 1], 1e-24);
}

TEST(Profile, WavefrontNearTwiceTime) {
  const auto p = prob_profile(LineWalk(100), 25.0);
  const int argmax = static_cast<int>(std::max_element(p.probs.begin(), p.probs.end()) - p.probs.begin()) + 1;
  EXPECT_LE(std::abs(argmax - 50), 3);
}

TEST(Profile, MatchesDenseExponential) {
  const Eigen::MatrixXcd u = dense_expm(path_adjacency(100), 10.0);
  const auto p = prob_profile(LineWalk(100), 10.0);
  double total = 0.0;
  for (int l = 1; l <= 100; ++l) {
    EXPECT_NEAR(p.probs[l - 1], std::norm(u(l - 1, 0)), 1e-10);
    EXPECT_GE(p.probs[l - 1], 0.0);
    total += p.probs[l - 1];
  }
  EXPECT_NEAR(total, 1.0, 1e-9);
}

TEST(Mass, Examples) {
  const LineWalk w(100);
  EXPECT_NEAR(tail_mass(w, 0.0), 1.0, 1e-12);
  EXPECT_GE(tail_mass(w, 30.0), 1.0 / 3.0);
  EXPECT_LE(head_mass(w, 30.0), 2.0 / std::numbers::pi + 1e-6);
  EXPECT_THROW(tail_mass(w, 50.5), DomainError);
  EXPECT_THROW(head_mass(w, -0.1), DomainError);
}

TEST(Mass, TailPlusHead) {
  const LineWalk w(60);
  for (int t = 1; t <= 30; ++t) {
    const auto p = prob_profile(w, t);
    EXPECT_NEAR(tail_mass(w, t) + head_mass(w, t), 1.0 + p.probs[t - 1], 1e-12);
  }
  const double t = 12.4;
  EXPECT_NEAR(tail_mass(w, t) + head_mass(w, t), 1.0, 1e-12);
}

TEST(Mass, TailAndHeadOverGrid) {
  for (int length : {50, 100, 200}) {
    const LineWalk w(length);
    for (int t = 1; t <= length / 2; ++t) {
      EXPECT_GE(tail_mass(w, t), 1.0 / 3.0 - 1e-9) << "L=" << length << " t=" << t;
      EXPECT_LE(head_mass(w, t), 2.0 / std::numbers::pi + 1e-6) << "L=" << length << " t=" << t;
    }
  }
}

TEST(IPow, Cycle) {
  EXPECT_EQ(i_pow(0), cplx(1.0));
  EXPECT_EQ(i_pow(1), kI);
  EXPECT_EQ(i_pow(-1), -kI);
  EXPECT_EQ(i_pow(6), cplx(-1.0));
  EXPECT_EQ(i_pow(-7), kI);
}

}  // namespace
}  // namespace ffkit::walk
