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

#include "ffkit/clock.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>

#include "gtest/gtest.h"

#include <Eigen/Dense>

#include "ffkit/errors.hpp"

namespace ffkit::clock {
namespace {

// R(n, k) = R(n-1, k) followed by reverse(R(n-1, k-1)) with n appended.
std::vector<Bits> revolving_door(int n, int k) {
  if (k == 0) return {0};
  if (k == n) return {static_cast<Bits>((Bits{1} << n) - 1)};
  auto head = revolving_door(n - 1, k);
  auto tail = revolving_door(n - 1, k - 1);
  std::reverse(tail.begin(), tail.end());
  for (auto b : tail) head.push_back(b | (Bits{1} << (n - 1)));
  return head;
}

// Dense E_{j->j+1} from its tensor factors; qubit i is bit i-1, so each new
// factor goes on the left of the running Kronecker product.
Eigen::MatrixXd dense_transition(const JohnsonClock& c, std::uint64_t j) {
  const auto f = c.factors(j);
  Eigen::MatrixXd m = Eigen::MatrixXd::Ones(1, 1);
  for (int q = 0; q < c.qubits(); ++q) {
    Eigen::Matrix2d p = Eigen::Matrix2d::Identity();
    const Bits bit = Bits{1} << q;
    if (f.keep & bit) p << 0, 0, 0, 1;
    if (f.raise & bit) p << 0, 0, 1, 0;
    if (f.lower & bit) p << 0, 1, 0, 0;
    Eigen::MatrixXd next(m.rows() * 2, m.cols() * 2);
    for (int r = 0; r < 2; ++r) {
      for (int s = 0; s < 2; ++s) next.block(r * m.rows(), s * m.cols(), m.rows(), m.cols()) = p(r, s) * m;
    }
    m = next;
  }
  return m;
}

TEST(Binomial, ValuesAndSaturation) {
  EXPECT_EQ(binomial(5, 2), 10u);
  EXPECT_EQ(binomial(24, 12), 2704156u);
  EXPECT_EQ(binomial(3, 5), 0u);
  EXPECT_EQ(binomial(62, 31), 465428353255261088ULL);
  EXPECT_EQ(binomial(200, 100), UINT64_MAX);
}

TEST(MinClockQubits, Examples) {
  EXPECT_EQ(min_clock_qubits(2, 10), 10);
  EXPECT_EQ(min_clock_qubits(3, 10), 5);
  EXPECT_EQ(min_clock_qubits(4, 20), 6);
  EXPECT_EQ(min_clock_qubits(3, 1), 2);
}

TEST(MinClockQubits, BruteForce) {
  for (int c = 2; c <= 7; ++c) {
    for (std::uint64_t t = 1; t <= 500; ++t) {
      int n = c - 1;
      while (binomial(n, c - 1) < t) ++n;
      // Independent check of the chosen n with floating-point binomials.
      const auto fb = [](int a, int b) {
        double r = 1.0;
        for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
        return std::round(r);
      };
      const int got = min_clock_qubits(c, t);
      EXPECT_EQ(got, n);
      EXPECT_GE(fb(got, c - 1), static_cast<double>(t));
      if (got > c - 1) {
        EXPECT_LT(fb(got - 1, c - 1), static_cast<double>(t));
      }
    }
  }
}

TEST(JohnsonClock, SmallPaths) {
  const auto c21 = build_clock(2, 1);
  ASSERT_EQ(c21.size(), 2u);
  EXPECT_EQ(c21.subset(1), std::vector<int>{1});
  EXPECT_EQ(c21.subset(2), std::vector<int>{2});
  const auto c32 = build_clock(3, 2);
  ASSERT_EQ(c32.size(), 3u);
  std::set<Bits> seen;
  for (std::uint64_t j = 1; j <= 3; ++j) {
    seen.insert(c32.encoding(j));
    if (j < 3) {
      EXPECT_EQ(std::popcount(c32.encoding(j) & c32.encoding(j + 1)), 1);
    }
  }
  EXPECT_EQ(seen, (std::set<Bits>{0b011, 0b101, 0b110}));
}

TEST(JohnsonClock, PathValidity) {
  for (int n = 1; n <= 12; ++n) {
    for (int k = 1; k <= n; ++k) {
      const JohnsonClock c(n, k);
      ASSERT_EQ(c.size(), binomial(n, k));
      std::set<Bits> seen;
      for (std::uint64_t j = 1; j <= c.size(); ++j) {
        const Bits b = c.encoding(j);
        EXPECT_EQ(std::popcount(b), k);
        EXPECT_LT(b, Bits{1} << n);
        seen.insert(b);
        if (j < c.size()) {
          EXPECT_EQ(std::popcount(b & c.encoding(j + 1)), k - 1);
        }
      }
      EXPECT_EQ(seen.size(), c.size());
    }
  }
}

TEST(JohnsonClock, FollowsRevolvingDoorRecursion) {
  for (int n = 1; n <= 10; ++n) {
    for (int k = 1; k <= n; ++k) {
      const auto want = revolving_door(n, k);
      const JohnsonClock c(n, k);
      ASSERT_EQ(want.size(), c.size());
      for (std::uint64_t j = 1; j <= c.size(); ++j) EXPECT_EQ(c.encoding(j), want[j - 1]);
    }
  }
}

TEST(JohnsonClock, LazyPathAboveMaterializeLimit) {
  const JohnsonClock c(18, 3);
  EXPECT_FALSE(c.materialized());
  const auto want = revolving_door(18, 3);
  ASSERT_EQ(c.size(), want.size());
  for (std::uint64_t j = 1; j <= c.size(); ++j) EXPECT_EQ(c.encoding(j), want[j - 1]);

  const JohnsonClock big(24, 12);
  for (std::uint64_t j : {std::uint64_t{1}, std::uint64_t{77777}, big.size() - 1}) {
    EXPECT_EQ(std::popcount(big.encoding(j)), 12);
    EXPECT_EQ(std::popcount(big.encoding(j) & big.encoding(j + 1)), 11);
  }
}

TEST(JohnsonClock, RangeChecked) {
  EXPECT_THROW(build_clock(0, 0), DomainError);
  EXPECT_THROW(build_clock(3, 4), DomainError);
  EXPECT_THROW(build_clock(25, 2), DomainError);
  const auto c = build_clock(5, 2);
  EXPECT_THROW(c.encoding(0), DomainError);
  EXPECT_THROW(c.encoding(11), DomainError);
  EXPECT_THROW(c.apply_transition(10, c.encoding(10)), DomainError);
  EXPECT_THROW(c.apply_transition(0, c.encoding(1)), DomainError);
}

TEST(JohnsonClock, BitstringAndExport) {
  const auto c = build_clock(5, 2);
  const auto path = path_bitstrings(c);
  ASSERT_EQ(path.size(), 10u);
  for (std::uint64_t j = 1; j <= 10; ++j) {
    const auto& s = path[j - 1];
    EXPECT_EQ(s, c.bitstring(j));
    for (int i = 1; i <= 5; ++i) {
      EXPECT_EQ(s[i - 1] == '1', ((c.encoding(j) >> (i - 1)) & 1U) == 1U);
    }
  }
}

TEST(Transition, MapsOnlyItsOwnTime) {
  for (int n = 2; n <= 8; ++n) {
    for (int k = 1; k < n; ++k) {
      const JohnsonClock c(n, k);
      for (std::uint64_t j = 1; j < c.size(); ++j) {
        EXPECT_EQ(c.factors(j).locality(), k + 1);
        for (std::uint64_t i = 1; i <= c.size(); ++i) {
          const auto out = c.apply_transition(j, c.encoding(i));
          if (i == j) {
            ASSERT_TRUE(out.has_value());
            EXPECT_EQ(*out, c.encoding(j + 1));
          } else {
            EXPECT_FALSE(out.has_value()) << "n=" << n << " k=" << k << " j=" << j << " i=" << i;
          }
        }
      }
    }
  }
}

TEST(Transition, MatchesDenseTensorOperator) {
  for (int n = 2; n <= 6; ++n) {
    for (int k = 1; k < n; ++k) {
      const JohnsonClock c(n, k);
      for (std::uint64_t j = 1; j < c.size(); ++j) {
        const Eigen::MatrixXd e = dense_transition(c, j);
        for (Bits b = 0; b < (Bits{1} << n); ++b) {
          const auto out = c.apply_transition(j, b);
          const auto adj = c.apply_transition_adjoint(j, b);
          for (Bits r = 0; r < (Bits{1} << n); ++r) {
            EXPECT_EQ(e(r, b), out && *out == r ? 1.0 : 0.0);
            EXPECT_EQ(e(b, r), adj && *adj == r ? 1.0 : 0.0);
          }
        }
      }
    }
  }
}

}  // namespace
}  // namespace ffkit::clock
