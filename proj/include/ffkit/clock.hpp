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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

/// Johnson-graph clock: time j is the indicator state of the j-th subset on a
/// Hamiltonian path through J_{n,k}; consecutive times differ by moving one
/// element, so each transition acts on k+1 qubits.
namespace ffkit::clock {

/// Clock basis string; qubit i (1-based) is bit i-1.
using Bits = std::uint32_t;

inline constexpr int kMaxQubits = 24;
inline constexpr int kMaterializeLimit = 16;

/// C(n, k), saturating at UINT64_MAX.
std::uint64_t binomial(int n, int k);

/// Smallest n with C(n, locality - 1) >= times.
int min_clock_qubits(int locality, std::uint64_t times);

/// The non-identity tensor factors of E_{j -> j+1} as bit masks.
struct TransitionFactors {
  Bits keep = 0;   // |1><1|: S_j and S_{j+1}
  Bits raise = 0;  // |1><0|: S_{j+1} minus S_j
  Bits lower = 0;  // |0><1|: S_j minus S_{j+1}

  int locality() const;
};

class JohnsonClock {
 public:
  /// Revolving-door Gray code through the k-subsets of [n]; 1 <= k <= n <= 24.
  JohnsonClock(int qubits, int weight);

  int qubits() const { return qubits_; }
  int weight() const { return weight_; }
  /// Number of clock times M = C(n, k).
  std::uint64_t size() const { return size_; }
  bool materialized() const { return !path_.empty(); }

  /// Encoding of S_j, 1 <= j <= M.
  Bits encoding(std::uint64_t j) const;
  /// S_j as 1-based element list, ascending.
  std::vector<int> subset(std::uint64_t j) const;
  /// "0110..." with character i-1 holding qubit i.
  std::string bitstring(std::uint64_t j) const;

  TransitionFactors factors(std::uint64_t j) const;

  /// E_{j -> j+1} applied to a basis string under the literal tensor-factor
  /// rules. std::nullopt means the string is annihilated.
  std::optional<Bits> apply_transition(std::uint64_t j, Bits state) const;
  /// E_{j -> j+1}^dagger.
  std::optional<Bits> apply_transition_adjoint(std::uint64_t j, Bits state) const;

 private:
  void check_time(std::uint64_t j, std::uint64_t last, const char* op) const;

  int qubits_;
  int weight_;
  std::uint64_t size_;
  std::vector<Bits> path_;
};

inline JohnsonClock build_clock(int qubits, int weight) {
  return JohnsonClock(qubits, weight);
}

/// Bitstring list of the whole path.
std::vector<std::string> path_bitstrings(const JohnsonClock& clock);

}  // namespace ffkit::clock
