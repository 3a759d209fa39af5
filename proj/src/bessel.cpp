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

#include "ffkit/bessel.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "ffkit/errors.hpp"

namespace ffkit::bessel {
namespace {

constexpr double kRescaleAbove = 1e250;

std::vector<double> power_series(int max_order, double x) {
  std::vector<double> out(max_order + 1, 0.0);
  const double half = 0.5 * x;
  const double q = half * half;
  double lead = 1.0;  // (x/2)^n / n!
  for (int n = 0; n <= max_order; ++n) {
    if (n > 0) lead *= half / n;
    if (lead == 0.0) break;
    double term = lead;
    double sum = term;
    for (int m = 1; m < 200; ++m) {
      term *= -q / (static_cast<double>(m) * (m + n));
      sum += term;
      if (std::abs(term) <= 1e-17 * std::abs(sum)) break;
    }
    out[n] = sum;
  }
  return out;
}

// Miller's algorithm. The trial solution starts at f_{N+1} = 0, f_N = tiny
// and is normalized with J_0 + 2 sum_k J_{2k} = 1.
std::vector<double> backward_recurrence(int max_order, double x,
                                        double* residual) {
  const int margin = 20 + static_cast<int>(std::ceil(x)) +
                     static_cast<int>(std::ceil(15.0 * std::cbrt(x)));
  int start = max_order + margin;
  if (start % 2 != 0) ++start;

  std::vector<double> f(start + 2, 0.0);
  f[start] = 1e-300;
  for (int k = start; k >= 1; --k) {
    f[k - 1] = (2.0 * k / x) * f[k] - f[k + 1];
    if (std::abs(f[k - 1]) > kRescaleAbove) {
      for (int j = k - 1; j <= start; ++j) f[j] /= kRescaleAbove;
    }
  }

  double norm = f[0];
  for (int k = 2; k <= start; k += 2) norm += 2.0 * f[k];

  std::vector<double> out(max_order + 1);
  for (int n = 0; n <= max_order; ++n) out[n] = f[n] / norm;

  if (residual != nullptr) {
    double check = f[0] / norm;
    for (int k = 2; k <= start; k += 2) check += 2.0 * (f[k] / norm);
    *residual = std::abs(check - 1.0);
  }
  return out;
}

}  // namespace

std::vector<double> bessel_j_sequence(int max_order, double x) {
  if (max_order < 0) throw DomainError("bessel: max_order must be >= 0");
  if (!std::isfinite(x) || x < 0.0) {
    throw DomainError("bessel: argument x must be finite and >= 0", 0.0);
  }
  if (x == 0.0) {
    std::vector<double> out(max_order + 1, 0.0);
    out[0] = 1.0;
    return out;
  }
  if (x < 2.0) return power_series(max_order, x);
  return backward_recurrence(max_order, x, nullptr);
}

BesselEval evaluate(int n, double x) {
  if (n < -kMaxOrder || n > kMaxOrder) {
    throw DomainError("bessel_j: |n| <= " + std::to_string(kMaxOrder) +
                          " violated (n = " + std::to_string(n) + ")",
                      kMaxOrder);
  }
  if (!(x >= 0.0)) {
    throw DomainError("bessel_j: x >= 0 violated", 0.0);
  }
  if (!(x <= kMaxArgument)) {
    throw DomainError("bessel_j: x <= 500 violated", kMaxArgument);
  }
  const int order = n < 0 ? -n : n;
  BesselEval eval;
  eval.order = n;
  eval.argument = x;
  if (x == 0.0) {
    eval.value = order == 0 ? 1.0 : 0.0;
  } else if (x < 2.0) {
    eval.value = power_series(order, x)[order];
  } else {
    eval.value = backward_recurrence(order, x, &eval.abs_error_estimate)[order];
  }
  if (n < 0 && order % 2 == 1) eval.value = -eval.value;
  return eval;
}

double tail_bound(int n) {
  if (n <= 0) throw DomainError("tail_bound: n >= 1 violated", 1.0);
  return 2.0 / (n * std::numbers::pi);
}

double kra_threshold(double n) {
  const double mu = (2.0 * n + 1.0) * (2.0 * n + 3.0);
  return std::sqrt(mu + std::cbrt(mu * mu)) / 2.0;
}

double kra_bound(double n, double x) {
  if (!(n > -0.5)) throw DomainError("kra_bound: n > -1/2 violated", -0.5);
  const double threshold = kra_threshold(n);
  if (!(x > threshold)) {
    throw DomainError("kra_bound: x > " + std::to_string(threshold) +
                          " violated (x = " + std::to_string(x) + ")",
                      threshold);
  }
  const double mu = (2.0 * n + 1.0) * (2.0 * n + 3.0);
  const double four_x2 = 4.0 * x * x;
  const double numer = 4.0 * (four_x2 - (2.0 * n + 1.0) * (2.0 * n + 5.0));
  const double denom = std::numbers::pi * (std::pow(four_x2 - mu, 1.5) - mu);
  return numer / denom;
}

double large_order_estimate(int n, double sech_xi) {
  if (n < 1) throw DomainError("large_order_estimate: n >= 1 violated", 1.0);
  if (!(sech_xi > 0.0 && sech_xi < 1.0)) {
    throw DomainError("large_order_estimate: 0 < sech_xi < 1 violated");
  }
  const double xi = std::acosh(1.0 / sech_xi);
  const double th = std::tanh(xi);
  return std::exp(-n * (xi - th)) / std::sqrt(2.0 * std::numbers::pi * n * th);
}

}  // namespace ffkit::bessel
