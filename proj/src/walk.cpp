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
#include <cstdlib>
#include <numbers>
#include <string>

#include "ffkit/bessel.hpp"
#include "ffkit/errors.hpp"

namespace ffkit::walk {
namespace {

void check_vertex(const LineWalk& walk, int v, const char* name) {
  if (v < 1 || v > walk.length()) {
    throw DomainError(std::string("walk: vertex ") + name + " must lie in [1, " +
                      std::to_string(walk.length()) + "]");
  }
}

void check_mass_time(const LineWalk& walk, double t) {
  if (!(t >= 0.0 && t <= walk.length() / 2.0)) {
    throw DomainError("walk: t must lie in [0, L/2]", walk.length() / 2.0);
  }
}

// Infinite-line propagator from vertex 1 to `target` given J_0..J_max at 2t.
cplx infinite_from_one(int target, const std::vector<double>& j_values) {
  const int order = target - 1;
  const int abs_order = std::abs(order);
  double j = j_values[abs_order];
  if (order < 0 && abs_order % 2 == 1) j = -j;
  return i_pow(-order) * j;
}

}  // namespace

cplx i_pow(int n) {
  switch (((n % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

LineWalk::LineWalk(int length) : length_(length) {
  if (length < 1 || length > kMaxLength) {
    throw DomainError("build_line: 1 <= L <= 4096 violated", kMaxLength);
  }
  const int period = 2 * (length + 1);
  scale_ = std::sqrt(2.0 / (length + 1));
  sines_.resize(period);
  for (int m = 0; m < period; ++m) {
    sines_[m] = std::sin(m * std::numbers::pi / (length + 1));
  }
  // Exact zeros at multiples of pi keep the eigenvectors clean.
  sines_[0] = 0.0;
  sines_[length + 1] = 0.0;
  eigenvalues_.resize(length);
  for (int p = 1; p <= length; ++p) {
    eigenvalues_[p - 1] = 2.0 * std::cos(p * std::numbers::pi / (length + 1));
  }
}

double LineWalk::eigenvector(int p, int j) const {
  const long period = 2L * (length_ + 1);
  return scale_ * sines_[(static_cast<long>(j) * p) % period];
}

std::vector<double> LineWalk::eigenvector_matrix() const {
  std::vector<double> out(static_cast<std::size_t>(length_) * length_);
  for (int p = 1; p <= length_; ++p) {
    for (int j = 1; j <= length_; ++j) {
      out[static_cast<std::size_t>(p - 1) * length_ + (j - 1)] = eigenvector(p, j);
    }
  }
  return out;
}

cplx propagator_exact(const LineWalk& walk, int k, int l, double t) {
  check_vertex(walk, k, "k");
  check_vertex(walk, l, "l");
  if (!(t >= 0.0)) throw DomainError("propagator_exact: t >= 0 violated", 0.0);
  cplx sum = 0.0;
  const auto& lambda = walk.eigenvalues();
  for (int p = 1; p <= walk.length(); ++p) {
    const double phase = -lambda[p - 1] * t;
    sum += cplx(std::cos(phase), std::sin(phase)) *
           (walk.eigenvector(p, l) * walk.eigenvector(p, k));
  }
  return sum;
}

std::vector<cplx> amplitudes(const LineWalk& walk, int k, double t) {
  check_vertex(walk, k, "k");
  if (!(t >= 0.0)) throw DomainError("amplitudes: t >= 0 violated", 0.0);
  const int length = walk.length();
  const auto& lambda = walk.eigenvalues();
  std::vector<cplx> weights(length);
  for (int p = 1; p <= length; ++p) {
    const double phase = -lambda[p - 1] * t;
    weights[p - 1] = cplx(std::cos(phase), std::sin(phase)) * walk.eigenvector(p, k);
  }
  std::vector<cplx> out(length);
  for (int l = 1; l <= length; ++l) {
    cplx sum = 0.0;
    for (int p = 1; p <= length; ++p) sum += weights[p - 1] * walk.eigenvector(p, l);
    out[l - 1] = sum;
  }
  return out;
}

cplx propagator_infinite(int d, double t) {
  if (d < -200 || d > 200) {
    throw DomainError("propagator_infinite: |d| <= 200 violated", 200);
  }
  if (!(t >= 0.0 && t <= 200.0)) {
    throw DomainError("propagator_infinite: 0 <= t <= 200 violated", 200);
  }
  return i_pow(-d) * bessel::bessel_j(d, 2.0 * t);
}

cplx propagator_image_sum(int length, int l, double t, int m_max) {
  if (length < 1 || length > kMaxLength) {
    throw DomainError("propagator_image_sum: 1 <= L <= 4096 violated", kMaxLength);
  }
  if (l < 1 || l > length) {
    throw DomainError("propagator_image_sum: vertex l must lie in [1, L]");
  }
  if (!(t >= 0.0)) throw DomainError("propagator_image_sum: t >= 0 violated", 0.0);
  if (m_max < 1) throw DomainError("propagator_image_sum: m_max >= 1 violated", 1);

  const int period = 2 * (length + 1);
  const int max_order = m_max * period + l + 1;
  const auto j_values = bessel::bessel_j_sequence(max_order, 2.0 * t);
  cplx sum = 0.0;
  for (int m = -m_max; m <= m_max; ++m) {
    sum += infinite_from_one(l + m * period, j_values);
    sum -= infinite_from_one(-l + m * period, j_values);
  }
  return sum;
}

cplx propagator_bessel(int l, double t) {
  if (l < 1) throw DomainError("propagator_bessel: l >= 1 violated", 1);
  if (!(t >= 0.0)) throw DomainError("propagator_bessel: t >= 0 violated", 0.0);
  if (t == 0.0) return l == 1 ? cplx(1.0) : cplx(0.0);
  const auto j_values = bessel::bessel_j_sequence(l, 2.0 * t);
  return i_pow(1 - l) * (l / t) * j_values[l];
}

ProbabilityProfile prob_profile(const LineWalk& walk, double t) {
  if (!(t >= 0.0)) throw DomainError("prob_profile: t >= 0 violated", 0.0);
  const auto amps = amplitudes(walk, 1, t);
  ProbabilityProfile profile{walk.length(), t, std::vector<double>(amps.size())};
  double total = 0.0;
  for (std::size_t i = 0; i < amps.size(); ++i) {
    const double p = std::norm(amps[i]);
    if (p < -1e-12) throw ConsistencyError("prob_profile: negative probability");
    profile.probs[i] = std::max(p, 0.0);
    total += profile.probs[i];
  }
  if (std::abs(total - 1.0) >= 1e-9) {
    throw ConsistencyError("prob_profile: total probability drifted from 1 by " +
                           std::to_string(total - 1.0));
  }
  for (auto& p : profile.probs) p /= total;
  return profile;
}

double tail_mass(const LineWalk& walk, double t) {
  check_mass_time(walk, t);
  const auto profile = prob_profile(walk, t);
  const int first = std::max(1, static_cast<int>(std::ceil(t)));
  double sum = 0.0;
  for (int l = first; l <= walk.length(); ++l) sum += profile.probs[l - 1];
  return sum;
}

double head_mass(const LineWalk& walk, double t) {
  check_mass_time(walk, t);
  const auto profile = prob_profile(walk, t);
  const int last = static_cast<int>(std::floor(t));
  double sum = 0.0;
  for (int l = 1; l <= last; ++l) sum += profile.probs[l - 1];
  return sum;
}

}  // namespace ffkit::walk
