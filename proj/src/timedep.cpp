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

#include "ffkit/timedep.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include <Eigen/Eigenvalues>

#include "ffkit/errors.hpp"

namespace ffkit::timedep {
namespace {

constexpr double kUnitaryTol = 1e-10;

class Layout {
 public:
  explicit Layout(int n) : position_(n), occupant_(n) {
    std::iota(position_.begin(), position_.end(), 0);
    std::iota(occupant_.begin(), occupant_.end(), 0);
  }

  int position(int logical) const { return position_[logical]; }
  const std::vector<int>& positions() const { return position_; }

  // Swap the logical qubits sitting on physical wires p and p+1.
  void swap_adjacent(int p) {
    std::swap(occupant_[p], occupant_[p + 1]);
    position_[occupant_[p]] = p;
    position_[occupant_[p + 1]] = p + 1;
  }

 private:
  std::vector<int> position_;
  std::vector<int> occupant_;
};

void check_layout(const std::vector<int>& position, Eigen::Index dim) {
  std::vector<bool> seen(position.size(), false);
  for (int p : position) {
    if (p < 0 || p >= static_cast<int>(position.size()) || seen[p]) {
      throw DomainError("permute_wires: not a permutation");
    }
    seen[p] = true;
  }
  if ((Eigen::Index{1} << position.size()) != dim) {
    throw DomainError("permute_wires: state dimension does not match layout");
  }
}

std::uint64_t move_bits(std::uint64_t index, const std::vector<int>& position) {
  std::uint64_t out = 0;
  for (std::size_t q = 0; q < position.size(); ++q) {
    out |= ((index >> q) & 1U) << position[q];
  }
  return out;
}

void apply_local(StateVector& state, const std::vector<int>& wires,
                 const Eigen::MatrixXcd& m) {
  apply_gate(state, Gate{"segment", wires, m});
}

}  // namespace

GeomLocalCircuit to_geometrically_local(const GateCircuit& circuit, int block_size) {
  const int n = circuit.qubits();
  if (block_size < 0) throw DomainError("to_geometrically_local: block_size >= 0");
  GeomLocalCircuit out{GateCircuit(n), {}, {}, n};
  Layout layout(n);
  const Gate pad = named_gate("I", {0});

  for (std::size_t g = 0; g < circuit.size(); ++g) {
    const Gate& gate = circuit.gate(g);
    std::vector<Gate> routing;
    if (gate.wires.size() == 2) {
      const int a = gate.wires[0];
      const int b = gate.wires[1];
      int pa = layout.position(a);
      const int pb = layout.position(b);
      while (pa < pb - 1) {
        routing.push_back(named_gate("SWAP", {pa, pa + 1}));
        layout.swap_adjacent(pa);
        ++pa;
      }
      while (pa > pb + 1) {
        routing.push_back(named_gate("SWAP", {pa - 1, pa}));
        layout.swap_adjacent(pa - 1);
        --pa;
      }
    }
    for (std::size_t k = routing.size(); k < static_cast<std::size_t>(n - 1); ++k) {
      out.circuit.add(pad);
    }
    for (auto& r : routing) out.circuit.add(std::move(r));

    Gate routed = gate;
    for (auto& w : routed.wires) w = layout.position(w);
    out.circuit.add(std::move(routed));

    if (block_size > 0 && (g + 1) % static_cast<std::size_t>(block_size) == 0) {
      out.stage_permutations.push_back(layout.positions());
    }
  }
  out.wire_permutation = layout.positions();
  return out;
}

StateVector permute_wires(const StateVector& state, const std::vector<int>& position) {
  check_layout(position, state.size());
  StateVector out(state.size());
  for (Eigen::Index i = 0; i < state.size(); ++i) {
    out[static_cast<Eigen::Index>(move_bits(static_cast<std::uint64_t>(i), position))] =
        state[i];
  }
  return out;
}

StateVector unpermute_wires(const StateVector& state, const std::vector<int>& position) {
  check_layout(position, state.size());
  StateVector out(state.size());
  for (Eigen::Index i = 0; i < state.size(); ++i) {
    out[i] = state[static_cast<Eigen::Index>(
        move_bits(static_cast<std::uint64_t>(i), position))];
  }
  return out;
}

Eigen::MatrixXcd principal_generator(const Eigen::MatrixXcd& unitary) {
  const auto dim = unitary.rows();
  if (unitary.cols() != dim) throw DomainError("principal_generator: non-square");
  const double defect =
      (unitary.adjoint() * unitary - Eigen::MatrixXcd::Identity(dim, dim))
          .cwiseAbs()
          .maxCoeff();
  if (defect > kUnitaryTol) {
    throw DomainError("principal_generator: input is not unitary", defect);
  }
  // A unitary is normal, so its Schur form is diagonal up to rounding.
  Eigen::ComplexSchur<Eigen::MatrixXcd> schur(unitary);
  const Eigen::MatrixXcd& q = schur.matrixU();
  const Eigen::MatrixXcd& t = schur.matrixT();
  Eigen::VectorXd phases(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    double theta = std::arg(t(i, i));
    if (theta <= -std::numbers::pi + 1e-12) theta = std::numbers::pi;
    phases[i] = -theta;
  }
  Eigen::MatrixXcd g = q * phases.cast<cplx>().asDiagonal() * q.adjoint();
  return 0.5 * (g + g.adjoint());
}

Eigen::MatrixXcd hermitian_exp(const Eigen::MatrixXcd& generator, double tau) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(generator);
  const auto& lambda = eig.eigenvalues();
  Eigen::VectorXcd phases(lambda.size());
  for (Eigen::Index i = 0; i < lambda.size(); ++i) {
    phases[i] = std::polar(1.0, -lambda[i] * tau);
  }
  return eig.eigenvectors() * phases.asDiagonal() * eig.eigenvectors().adjoint();
}

PiecewiseHamiltonian to_piecewise(const GateCircuit& circuit) {
  PiecewiseHamiltonian ph;
  ph.qubits = circuit.qubits();
  ph.segments.reserve(circuit.size());
  for (const auto& gate : circuit.gates()) {
    ph.segments.push_back({gate.wires, principal_generator(gate.matrix), gate.matrix});
  }
  return ph;
}

StateVector evolve_piecewise(const PiecewiseHamiltonian& ph, const StateVector& state,
                             double from, double to) {
  const double total = ph.total_time();
  if (!(from >= 0.0 && from <= to)) {
    throw DomainError("evolve_piecewise: need 0 <= from <= to");
  }
  if (!(to <= total)) {
    throw DomainError("evolve_piecewise: t exceeds total time " +
                          std::to_string(ph.total_time()),
                      total);
  }
  if (state.size() != (Eigen::Index{1} << ph.qubits)) {
    throw DomainError("evolve_piecewise: state dimension mismatch");
  }
  StateVector out = state;
  double now = from;
  while (now < to) {
    const int seg = static_cast<int>(std::floor(now));
    const double end = std::min(to, seg + 1.0);
    const Segment& s = ph.segments[static_cast<std::size_t>(seg)];
    if (now == seg && end == seg + 1.0) {
      apply_local(out, s.wires, s.unitary);
    } else {
      apply_local(out, s.wires, hermitian_exp(s.generator, end - now));
    }
    now = end;
  }
  return out;
}

StateVector evolve_piecewise(const PiecewiseHamiltonian& ph, const StateVector& input,
                             double t) {
  return evolve_piecewise(ph, input, 0.0, t);
}

nlohmann::json to_json(const PiecewiseHamiltonian& ph) {
  auto segments = nlohmann::json::array();
  for (std::size_t i = 0; i < ph.segments.size(); ++i) {
    const auto& s = ph.segments[i];
    segments.push_back({{"start", static_cast<double>(i)},
                        {"duration", 1.0},
                        {"wires", s.wires},
                        {"generator", matrix_to_json(s.generator)}});
  }
  return {{"qubits", ph.qubits},
          {"total_time", ph.total_time()},
          {"segments", std::move(segments)}};
}

DepReductionOutcome run_reduction_dep(const GateCircuit& block, int copies, double t,
                                      const StateVector& input, Rng& rng) {
  if (block.empty()) throw DomainError("run_reduction_dep: empty block circuit");
  if (copies < 1) throw DomainError("run_reduction_dep: T >= 1 violated", 1);
  const int n = block.qubits();
  const int s = static_cast<int>(block.size());
  const double horizon = static_cast<double>(n) * s * copies;
  if (!(t >= 0.0 && t <= horizon)) {
    throw DomainError("run_reduction_dep: t must lie in [0, n s T]", horizon);
  }
  const auto local = to_geometrically_local(repeat(block, copies), s);
  const auto ph = to_piecewise(local.circuit);

  StateVector state = evolve_piecewise(ph, input, t);
  const double ceil_t = std::ceil(t);
  state = evolve_piecewise(ph, state, t, ceil_t);

  DepReductionOutcome out;
  out.time = t;
  out.iterations = static_cast<int>(std::ceil(t / (static_cast<double>(n) * s)));
  const auto stage_end = static_cast<std::size_t>(out.iterations) * n * s;
  apply_range(state, local.circuit, static_cast<std::size_t>(ceil_t), stage_end);
  if (out.iterations > 0) {
    state = unpermute_wires(state, local.stage_permutations[out.iterations - 1]);
  }
  out.output = measure(state, rng);
  return out;
}

}  // namespace ffkit::timedep
