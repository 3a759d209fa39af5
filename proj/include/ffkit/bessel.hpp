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

#pragma once

#include <vector>

/// Integer-order Bessel functions of the first kind and the bounds used to
/// control line-walk propagators.
namespace ffkit::bessel {

inline constexpr int kMaxOrder = 200;
inline constexpr double kMaxArgument = 500.0;

struct BesselEval {
  int order = 0;
  double argument = 0.0;
  double value = 0.0;
  // Residual of J_0 + 2 sum_k J_{2k} = 1 after normalization. Informational.
  double abs_error_estimate = 0.0;
};

/// J_n(x) for |n| <= 200, 0 <= x <= 500. Negative orders go through
/// J_{-n} = (-1)^n J_n. Throws DomainError naming the violated bound.
BesselEval evaluate(int n, double x);

inline double bessel_j(int n, double x) { return evaluate(n, x).value; }

/// J_0(x), ..., J_{max_order}(x) from one backward sweep (power series when
/// x < 2). No cap on `max_order`; x must be finite and nonnegative.
std::vector<double> bessel_j_sequence(int max_order, double x);

/// 2 / (n pi): bound on J_n(x)^2 valid for x >= 2n.
double tail_bound(int n);

/// Smallest admissible argument of kra_bound: sqrt(mu + mu^(2/3)) / 2 with
/// mu = (2n+1)(2n+3).
double kra_threshold(double n);

/// Upper bound on J_n(x)^2 for n > -1/2 and x > kra_threshold(n). Throws
/// DomainError with bound() == kra_threshold(n) otherwise.
double kra_bound(double n, double x);

/// Debye-type estimate of J_n(n sech xi) = exp(-n(xi - tanh xi)) /
/// sqrt(2 pi n tanh xi), for 0 < sech_xi < 1.
double large_order_estimate(int n, double sech_xi);

}  // namespace ffkit::bessel
