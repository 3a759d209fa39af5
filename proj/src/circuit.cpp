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

#include "ffkit/circuit.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include "ffkit/errors.hpp"

namespace ffkit {
namespace {

constexpr double kUnitaryTol = 1e-12;

// Indices of the two amplitudes a 1-qubit gate mixes, or the four a 2-qubit
// gate mixes, for each "rest" configuration of the other qubits.
template <typename Fn>
void for_each_block(const StateVector& state, const std::vector<int>& wires,
                    Fn&& fn) {
  const std::uint64_t dim = static_cast<std::uint64_t>(state.size());
  if (wires.size() == 1) {
    const std::uint64_t bit = std::uint64_t{1} << wires[0];
    for (std::uint64_t i = 0; i < dim; ++i) {
      if (i & bit) continue;
      const std::uint64_t idx[2] = {i, i | bit};
      fn(idx, 2);
    }
  } else {
    const std::uint64_t hi = std::uint64_t{1} << wires[0];
    const std::uint64_t lo = std::uint64_t{1} << wires[1];
    for (std::uint64_t i = 0; i < dim; ++i) {
      if (i & (hi | lo)) continue;
      const std::uint64_t idx[4] = {i, i | lo, i | hi, i | hi | lo};
      fn(idx, 4);
    }
  }
}

void apply_matrix(StateVector& state, const std::vector<int>& wires,
                  const Eigen::MatrixXcd& m) {
  for_each_block(state, wires, [&](const std::uint64_t* idx, int size) {
    cplx in[4];
    for (int r = 0; r < size; ++r) in[r] = state[idx[r]];
    for (int r = 0; r < size; ++r) {
      cplx acc = 0.0;
      for (int c = 0; c < size; ++c) acc += m(r, c) * in[c];
      state[idx[r]] = acc;
    }
  });
}

}  // namespace

Gate named_gate(const std::string& name, std::vector<int> wires) {
  using M = Eigen::MatrixXcd;
  const double s = 1.0 / std::numbers::sqrt2;
  M m;
  if (name == "I") {
    m = M::Identity(1 << wires.size(), 1 << wires.size());
    if (wires.size() != 1 && wires.size() != 2) {
      throw DomainError("gate I: expects 1 or 2 wires");
    }
    return {name, std::move(wires), m};
  }
  std::size_t arity = 1;
  if (name == "X") {
    m = M::Zero(2, 2);
    m(0, 1) = m(1, 0) = 1.0;
  } else if (name == "H") {
    m.resize(2, 2);
    m << s, s, s, -s;
  } else if (name == "T") {
    m = M::Identity(2, 2);
    m(1, 1) = std::polar(1.0, std::numbers::pi / 4.0);
  } else if (name == "CNOT") {
    arity = 2;
    m = M::Identity(4, 4);
    m(2, 2) = m(3, 3) = 0.0;
    m(2, 3) = m(3, 2) = 1.0;
  } else if (name == "SWAP") {
    arity = 2;
    m = M::Identity(4, 4);
    m(1, 1) = m(2, 2) = 0.0;
    m(1, 2) = m(2, 1) = 1.0;
  } else {
    throw DomainError("unknown gate name '" + name + "'");
  }
  if (wires.size() != arity) {
    throw DomainError("gate " + name + ": expects " + std::to_string(arity) +
                      " wire(s)");
  }
  return {name, std::move(wires), m};
}

GateCircuit::GateCircuit(int qubits) : qubits_(qubits) {
  if (qubits < 1 || qubits > kMaxCircuitQubits) {
    throw DomainError("circuit: 1 <= qubits <= 20 violated", kMaxCircuitQubits);
  }
}

GateCircuit& GateCircuit::add(Gate gate) {
  const auto arity = gate.wires.size();
  if (arity != 1 && arity != 2) {
    throw DomainError("circuit: gates act on 1 or 2 wires");
  }
  for (int w : gate.wires) {
    if (w < 0 || w >= qubits_) {
      throw DomainError("circuit: wire " + std::to_string(w) + " out of range");
    }
  }
  if (arity == 2 && gate.wires[0] == gate.wires[1]) {
    throw DomainError("circuit: repeated wire in 2-qubit gate");
  }
  const int dim = 1 << arity;
  if (gate.matrix.rows() != dim || gate.matrix.cols() != dim) {
    throw DomainError("circuit: gate matrix must be " + std::to_string(dim) +
                      "x" + std::to_string(dim));
  }
  const double defect =
      (gate.matrix.adjoint() * gate.matrix - Eigen::MatrixXcd::Identity(dim, dim))
          .cwiseAbs()
          .maxCoeff();
  if (defect > kUnitaryTol) {
    throw DomainError("circuit: gate '" + gate.name + "' is not unitary", defect);
  }
  gates_.push_back(std::move(gate));
  return *this;
}

GateCircuit& GateCircuit::add(const std::string& name, std::vector<int> wires) {
  return add(named_gate(name, std::move(wires)));
}

void apply_gate(StateVector& state, const Gate& gate) {
  apply_matrix(state, gate.wires, gate.matrix);
}

void apply_gate_adjoint(StateVector& state, const Gate& gate) {
  apply_matrix(state, gate.wires, gate.matrix.adjoint());
}

void apply_range(StateVector& state, const GateCircuit& circuit,
                 std::size_t begin, std::size_t end) {
  if (state.size() != (Eigen::Index{1} << circuit.qubits())) {
    throw DomainError("apply: state dimension does not match circuit width");
  }
  if (end > circuit.size() || begin > end) {
    throw DomainError("apply: gate range out of bounds");
  }
  for (std::size_t i = begin; i < end; ++i) apply_gate(state, circuit.gate(i));
}

StateVector run(const GateCircuit& circuit, StateVector state) {
  apply_range(state, circuit, 0, circuit.size());
  return state;
}

StateVector basis_state(int qubits, std::uint64_t index) {
  const Eigen::Index dim = Eigen::Index{1} << qubits;
  if (static_cast<Eigen::Index>(index) >= dim) {
    throw DomainError("basis_state: index out of range");
  }
  StateVector v = StateVector::Zero(dim);
  v[static_cast<Eigen::Index>(index)] = 1.0;
  return v;
}

GateCircuit repeat(const GateCircuit& block, int copies) {
  if (copies < 0) throw DomainError("repeat: copies >= 0 violated", 0);
  GateCircuit out(block.qubits());
  for (int c = 0; c < copies; ++c) {
    for (const auto& g : block.gates()) out.add(g);
  }
  return out;
}

Eigen::MatrixXcd random_unitary(int dim, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXcd z(dim, dim);
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) z(r, c) = cplx(normal(rng), normal(rng));
  }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int c = 0; c < dim; ++c) {
    const cplx d = r(c, c);
    q.col(c) *= d / std::abs(d);
  }
  // One Gram-Schmidt sweep pulls the unitarity defect to ~1e-16.
  for (int c = 0; c < dim; ++c) {
    for (int p = 0; p < c; ++p) q.col(c) -= q.col(p).dot(q.col(c)) * q.col(p);
    q.col(c).normalize();
  }
  return q;
}

GateCircuit random_circuit(int qubits, int gates, Rng& rng) {
  GateCircuit circuit(qubits);
  for (int g = 0; g < gates; ++g) {
    const bool two = qubits >= 2 && (rng() & 1U);
    if (two) {
      const int a = static_cast<int>(rng() % qubits);
      int b = static_cast<int>(rng() % (qubits - 1));
      if (b >= a) ++b;
      circuit.add(Gate{"U2", {a, b}, random_unitary(4, rng)});
    } else {
      const int a = static_cast<int>(rng() % qubits);
      circuit.add(Gate{"U1", {a}, random_unitary(2, rng)});
    }
  }
  return circuit;
}

std::uint64_t measure(const StateVector& state, Rng& rng) {
  const double total = state.squaredNorm();
  if (!(total > 0.0)) throw ConsistencyError("measure: zero state");
  const double u = uniform01(rng) * total;
  double acc = 0.0;
  Eigen::Index last_nonzero = 0;
  for (Eigen::Index i = 0; i < state.size(); ++i) {
    const double p = std::norm(state[i]);
    if (p > 0.0) last_nonzero = i;
    acc += p;
    if (u < acc) return static_cast<std::uint64_t>(i);
  }
  return static_cast<std::uint64_t>(last_nonzero);
}

std::uint64_t classical_value(const StateVector& state) {
  Eigen::Index best = 0;
  state.cwiseAbs2().maxCoeff(&best);
  if (std::abs(std::abs(state[best]) - 1.0) > 1e-9) {
    throw ConsistencyError("classical_value: state is not a basis state");
  }
  return static_cast<std::uint64_t>(best);
}

nlohmann::json matrix_to_json(const Eigen::MatrixXcd& m) {
  auto rows = nlohmann::json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    auto row = nlohmann::json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      row.push_back({m(r, c).real(), m(r, c).imag()});
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Eigen::MatrixXcd matrix_from_json(const nlohmann::json& doc) {
  if (!doc.is_array() || doc.empty()) {
    throw DomainError("matrix: expected a non-empty array of rows");
  }
  const auto rows = static_cast<Eigen::Index>(doc.size());
  const auto cols = static_cast<Eigen::Index>(doc[0].size());
  Eigen::MatrixXcd m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    if (static_cast<Eigen::Index>(doc[r].size()) != cols) {
      throw DomainError("matrix: ragged rows");
    }
    for (Eigen::Index c = 0; c < cols; ++c) {
      const auto& entry = doc[r][c];
      if (entry.is_number()) {
        m(r, c) = entry.get<double>();
      } else {
        m(r, c) = cplx(entry.at(0).get<double>(), entry.at(1).get<double>());
      }
    }
  }
  return m;
}

GateCircuit circuit_from_json(const nlohmann::json& doc) {
  GateCircuit circuit(doc.at("qubits").get<int>());
  for (const auto& g : doc.at("gates")) {
    auto wires = g.at("wires").get<std::vector<int>>();
    if (g.contains("gate") && g.at("gate").is_array()) {
      circuit.add(Gate{"matrix", std::move(wires), matrix_from_json(g.at("gate"))});
    } else if (g.contains("matrix")) {
      circuit.add(Gate{g.value("gate", std::string("matrix")), std::move(wires),
                       matrix_from_json(g.at("matrix"))});
    } else {
      circuit.add(g.at("gate").get<std::string>(), std::move(wires));
    }
  }
  return circuit;
}

nlohmann::json circuit_to_json(const GateCircuit& circuit) {
  static const std::set<std::string> kNamed = {"I", "X", "H", "T", "CNOT", "SWAP"};
  auto gates = nlohmann::json::array();
  for (const auto& g : circuit.gates()) {
    nlohmann::json entry{{"gate", g.name}, {"wires", g.wires}};
    if (!kNamed.contains(g.name)) entry["matrix"] = matrix_to_json(g.matrix);
    gates.push_back(std::move(entry));
  }
  return {{"qubits", circuit.qubits()}, {"gates", std::move(gates)}};
}

}  // namespace ffkit
