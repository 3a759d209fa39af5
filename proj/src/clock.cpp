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

#include <bit>
#include <limits>

#include "ffkit/errors.hpp"

namespace ffkit::clock {
namespace {

// Element `rank` (0-based) of the revolving-door list R(n, k), where
//   R(n, k) = R(n-1, k), reverse(R(n-1, k-1)) + {n}.
Bits unrank(int n, int k, std::uint64_t rank) {
  Bits bits = 0;
  while (k > 0 && n > k) {
    const std::uint64_t head = binomial(n - 1, k);
    if (rank < head) {
      n -= 1;
    } else {
      bits |= Bits{1} << (n - 1);
      rank = binomial(n - 1, k - 1) - 1 - (rank - head);
      n -= 1;
      k -= 1;
    }
  }
  if (k > 0) bits |= (Bits{1} << k) - 1;  // n == k: the full set
  return bits;
}

}  // namespace

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    // result * (n - k + i) / i is exact at every step.
    const std::uint64_t factor = static_cast<std::uint64_t>(n - k + i);
    if (result > kMax / factor) return kMax;
    result = result * factor / i;
  }
  return result;
}

int min_clock_qubits(int locality, std::uint64_t times) {
  if (locality < 2) throw DomainError("min_clock_qubits: c >= 2 violated", 2);
  if (times < 1) throw DomainError("min_clock_qubits: T >= 1 violated", 1);
  const int k = locality - 1;
  int n = k;
  while (binomial(n, k) < times) ++n;
  return n;
}

int TransitionFactors::locality() const {
  return std::popcount(keep | raise | lower);
}

JohnsonClock::JohnsonClock(int qubits, int weight)
    : qubits_(qubits), weight_(weight) {
  if (weight < 1 || weight > qubits || qubits > kMaxQubits) {
    throw DomainError("build_clock: 1 <= k <= n <= 24 violated", kMaxQubits);
  }
  size_ = binomial(qubits, weight);
  if (qubits <= kMaterializeLimit) {
    path_.reserve(size_);
    for (std::uint64_t r = 0; r < size_; ++r) {
      path_.push_back(unrank(qubits, weight, r));
    }
  }
}

void JohnsonClock::check_time(std::uint64_t j, std::uint64_t last,
                              const char* op) const {
  if (j < 1 || j > last) {
    throw DomainError(std::string(op) + ": time index must lie in [1, " +
                          std::to_string(last) + "]",
                      static_cast<double>(last));
  }
}

Bits JohnsonClock::encoding(std::uint64_t j) const {
  check_time(j, size_, "encoding");
  return materialized() ? path_[j - 1] : unrank(qubits_, weight_, j - 1);
}

std::vector<int> JohnsonClock::subset(std::uint64_t j) const {
  const Bits bits = encoding(j);
  std::vector<int> out;
  for (int i = 0; i < qubits_; ++i) {
    if (bits >> i & 1U) out.push_back(i + 1);
  }
  return out;
}

std::string JohnsonClock::bitstring(std::uint64_t j) const {
  const Bits bits = encoding(j);
  std::string out(qubits_, '0');
  for (int i = 0; i < qubits_; ++i) {
    if (bits >> i & 1U) out[i] = '1';
  }
  return out;
}

TransitionFactors JohnsonClock::factors(std::uint64_t j) const {
  check_time(j, size_ - 1, "transition");
  const Bits from = encoding(j);
  const Bits to = encoding(j + 1);
  return {from & to, to & ~from, from & ~to};
}

std::optional<Bits> JohnsonClock::apply_transition(std::uint64_t j,
                                                   Bits state) const {
  const auto f = factors(j);
  if ((state & f.keep) != f.keep) return std::nullopt;
  if ((state & f.raise) != 0) return std::nullopt;
  if ((state & f.lower) != f.lower) return std::nullopt;
  return (state | f.raise) & ~f.lower;
}

std::optional<Bits> JohnsonClock::apply_transition_adjoint(std::uint64_t j,
                                                           Bits state) const {
  const auto f = factors(j);
  if ((state & f.keep) != f.keep) return std::nullopt;
  if ((state & f.raise) != f.raise) return std::nullopt;
  if ((state & f.lower) != 0) return std::nullopt;
  return (state & ~f.raise) | f.lower;
}

std::vector<std::string> path_bitstrings(const JohnsonClock& clock) {
  std::vector<std::string> out;
  out.reserve(clock.size());
  for (std::uint64_t j = 1; j <= clock.size(); ++j) out.push_back(clock.bitstring(j));
  return out;
}

}  // namespace ffkit::clock
