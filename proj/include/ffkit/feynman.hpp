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
#include <variant>
#include <vector>

#include "ffkit/circuit.hpp"
#include "ffkit/clock.hpp"
#include "ffkit/random.hpp"

/// Feynman circuit-to-Hamiltonian construction
///   H = sum_j U_j (x) |j><j-1| + U_j^dagger (x) |j-1><j|
/// and the clock-measurement reduction built on it.
namespace ffkit::feynman {

inline constexpr int kMaxQubits = 10;
inline constexpr Eigen::Index kMaxDenseDim = 4096;

/// Clock register with one basis state per time 0..L; |j><j-1| is a single
/// matrix unit. Used for dense cross-checks.
class OneHotClock {
 public:
  explicit OneHotClock(int times);
  int times() const { return times_; }
  std::uint64_t dimension() const { return static_cast<std::uint64_t>(times_); }
  std::uint64_t state_of(int time) const { return static_cast<std::uint64_t>(time); }
  std::optional<std::uint64_t> forward(int term, std::uint64_t c) const;
  std::optional<std::uint64_t> backward(int term, std::uint64_t c) const;

 private:
  int times_;
};

/// Johnson clock adapter: time j is path position j+1, and |j><j-1| is the
/// transition operator E_{j -> j+1} between path positions j and j+1.
class JohnsonClockRegister {
 public:
  explicit JohnsonClockRegister(clock::JohnsonClock clock);
  const clock::JohnsonClock& clock() const { return clock_; }
  int times() const;
  std::uint64_t dimension() const { return std::uint64_t{1} << clock_.qubits(); }
  std::uint64_t state_of(int time) const;
  std::optional<std::uint64_t> forward(int term, std::uint64_t c) const;
  std::optional<std::uint64_t> backward(int term, std::uint64_t c) const;

 private:
  clock::JohnsonClock clock_;
};

using ClockRegister = std::variant<OneHotClock, JohnsonClockRegister>;

/// Matrix-free H_circuit. Basis index = circuit_index + (clock_index << n).
class FeynmanHamiltonian {
 public:
  FeynmanHamiltonian(GateCircuit circuit, ClockRegister clock);

  const GateCircuit& circuit() const { return circuit_; }
  const ClockRegister& clock() const { return clock_; }
  int gate_count() const { return static_cast<int>(circuit_.size()); }
  std::uint64_t clock_dimension() const;
  std::uint64_t dimension() const;

  StateVector apply(const StateVector& v) const;
  /// Dense matrix; CapacityError above 4096 dimensions.
  Eigen::MatrixXcd dense() const;

  /// |psi_j> = (U_j ... U_1 |input>) (x) |gamma_j> as a full vector.
  StateVector history_state(const StateVector& input, int j) const;

 private:
  GateCircuit circuit_;
  ClockRegister clock_;
};

FeynmanHamiltonian build_feynman_h(GateCircuit circuit, ClockRegister clock);

/// A state sum_j alpha_j |psi_j> on the history line.
struct HistoryState {
  std::vector<cplx> time_amplitudes;  // alpha_0 .. alpha_L
  StateVector base_input;
};

/// Amplitudes <j| exp(-i H_line t) |0> on the (L+1)-vertex line that the
/// history states span.
HistoryState evolve_restricted(const GateCircuit& circuit, const StateVector& input,
                               double t);

/// Full-space vector of a history state, for comparison with dense evolution.
StateVector materialize(const HistoryState& hs, const FeynmanHamiltonian& h);

struct ClockSample {
  int time = 0;
  StateVector state;
};

/// Samples the clock outcome l with probability |alpha_l|^2 and returns the
/// collapsed circuit register U_l ... U_1 |input>.
ClockSample sample_clock_and_collapse(const HistoryState& hs,
                                      const GateCircuit& circuit, Rng& rng);

struct ReductionOutcome {
  int clock_time = 0;        // l
  int iterations = 0;        // m = ceil(l / s)
  std::uint64_t output = 0;  // measured x_m
};

/// Evolve T copies of `block` for time t on the history line, measure the
/// clock, finish the current block, and measure the circuit register.
/// Requires 0 <= t <= s T.
ReductionOutcome run_reduction_local(const GateCircuit& block, int copies,
                                     double t, const StateVector& input, Rng& rng);

/// exp(-i H t) v by Hermitian eigendecomposition. CapacityError above 4096.
StateVector dense_evolve(const Eigen::MatrixXcd& h, const StateVector& v, double t);
StateVector dense_evolve(const FeynmanHamiltonian& h, const StateVector& v, double t);

}  // namespace ffkit::feynman
