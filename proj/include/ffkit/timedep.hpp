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

#include <nlohmann/json.hpp>

#include "ffkit/circuit.hpp"

/// Circuit to time-dependent Hamiltonian: nearest-neighbour routing with swap
/// networks, then one unit-time constant generator per gate.
namespace ffkit::timedep {

/// A circuit in which every gate acts on one wire or on (i, i+1).
///
/// Layout convention: `position[q]` is the physical wire holding logical
/// qubit q. Running `circuit` on x yields the logical output with qubit q
/// moved to wire position[q].
struct GeomLocalCircuit {
  GateCircuit circuit;
  std::vector<int> wire_permutation;
  /// Layout after each block of `block_size` original gates (only when a
  /// block size was requested). Entry k-1 belongs to the boundary after k
  /// blocks, i.e. gate index k * qubits * block_size.
  std::vector<std::vector<int>> stage_permutations;
  int stage_size = 0;  // gates per original gate, always n
};

/// Route each gate with at most n-1 adjacent swaps, padding every stage with
/// identities to exactly n-1 routing gates followed by the routed gate.
GeomLocalCircuit to_geometrically_local(const GateCircuit& circuit,
                                        int block_size = 0);

/// Moves the amplitude of each basis state so that bit q lands on bit
/// position[q].
StateVector permute_wires(const StateVector& state, const std::vector<int>& position);
/// Inverse of permute_wires.
StateVector unpermute_wires(const StateVector& state, const std::vector<int>& position);

struct Segment {
  std::vector<int> wires;
  Eigen::MatrixXcd generator;  // Hermitian, exp(-i G) == unitary
  Eigen::MatrixXcd unitary;
};

/// H(t) = G_i on [i-1, i).
struct PiecewiseHamiltonian {
  int qubits = 0;
  std::vector<Segment> segments;
  int total_time() const { return static_cast<int>(segments.size()); }
};

/// G = i log U on the principal branch, eigenphases of U in (-pi, pi] with
/// eigenvalue -1 mapped to +pi. Throws DomainError for non-unitary input.
Eigen::MatrixXcd principal_generator(const Eigen::MatrixXcd& unitary);

/// exp(-i G tau) for Hermitian G.
Eigen::MatrixXcd hermitian_exp(const Eigen::MatrixXcd& generator, double tau);

PiecewiseHamiltonian to_piecewise(const GateCircuit& circuit);

/// Time-ordered evolution from 0 to t: whole gates for finished segments,
/// then exp(-i G (t - floor t)) inside the current one. 0 <= t <= total_time.
StateVector evolve_piecewise(const PiecewiseHamiltonian& ph, const StateVector& input,
                             double t);
/// Evolution over [from, to].
StateVector evolve_piecewise(const PiecewiseHamiltonian& ph, const StateVector& state,
                             double from, double to);

nlohmann::json to_json(const PiecewiseHamiltonian& ph);

struct DepReductionOutcome {
  double time = 0.0;
  int iterations = 0;        // m = ceil(t / (n s))
  std::uint64_t output = 0;  // x_m after undoing the stage permutation
};

/// Concatenate `copies` of `block`, localize, encode as a piecewise
/// Hamiltonian, evolve to t, complete the current segment, run to the end of
/// block m, undo pi_m and measure. Requires 0 <= t <= n s T.
DepReductionOutcome run_reduction_dep(const GateCircuit& block, int copies, double t,
                                      const StateVector& input, Rng& rng);

}  // namespace ffkit::timedep
