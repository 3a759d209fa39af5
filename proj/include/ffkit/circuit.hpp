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

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include "ffkit/random.hpp"

namespace ffkit {

using cplx = std::complex<double>;
using StateVector = Eigen::VectorXcd;

/// A 1- or 2-qubit gate. Wires are 0-based; qubit w is bit w of a basis
/// index. For wires {a, b} the matrix row/column index is (bit_a << 1) | bit_b.
struct Gate {
  std::string name;
  std::vector<int> wires;
  Eigen::MatrixXcd matrix;
};

/// Named gates: I, X, H, T, CNOT (control, target), SWAP.
Gate named_gate(const std::string& name, std::vector<int> wires);

class GateCircuit {
 public:
  explicit GateCircuit(int qubits);

  int qubits() const { return qubits_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }
  const std::vector<Gate>& gates() const { return gates_; }
  const Gate& gate(std::size_t i) const { return gates_.at(i); }

  /// Validates wires and unitarity (to 1e-12) before appending.
  GateCircuit& add(Gate gate);
  GateCircuit& add(const std::string& name, std::vector<int> wires);

 private:
  int qubits_;
  std::vector<Gate> gates_;
};

inline constexpr int kMaxCircuitQubits = 20;

/// In-place application of one gate to an n-qubit state.
void apply_gate(StateVector& state, const Gate& gate);
/// In-place application of one gate's adjoint.
void apply_gate_adjoint(StateVector& state, const Gate& gate);

/// Applies gates [begin, end) in order.
void apply_range(StateVector& state, const GateCircuit& circuit,
                 std::size_t begin, std::size_t end);
StateVector run(const GateCircuit& circuit, StateVector state);

StateVector basis_state(int qubits, std::uint64_t index);

/// T back-to-back copies of `block`.
GateCircuit repeat(const GateCircuit& block, int copies);

/// Haar-random unitary of dimension `dim` (QR of a complex Gaussian matrix
/// with the R-diagonal phases divided out).
Eigen::MatrixXcd random_unitary(int dim, Rng& rng);

/// `gates` random 1- and 2-qubit Haar gates on arbitrary wire pairs.
GateCircuit random_circuit(int qubits, int gates, Rng& rng);

/// Samples a computational-basis outcome with probability |amp|^2.
std::uint64_t measure(const StateVector& state, Rng& rng);

/// Basis index whose amplitude is 1 (to 1e-9). Throws ConsistencyError if the
/// state is not a computational basis state.
std::uint64_t classical_value(const StateVector& state);

/// Circuit file format: {"qubits": n, "gates": [{"gate": "CNOT", "wires":
/// [0, 1]}, {"matrix": [[[re, im], ...], ...], "wires": [2]}, ...]}. A raw
/// matrix may also be given directly as the "gate" value.
GateCircuit circuit_from_json(const nlohmann::json& doc);
nlohmann::json circuit_to_json(const GateCircuit& circuit);

nlohmann::json matrix_to_json(const Eigen::MatrixXcd& m);
Eigen::MatrixXcd matrix_from_json(const nlohmann::json& doc);

}  // namespace ffkit
