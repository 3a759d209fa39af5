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

#include "ffkit/feynman.hpp"

#include <cmath>
#include <string>

#include "ffkit/errors.hpp"
#include "ffkit/walk.hpp"

namespace ffkit::feynman {

OneHotClock::OneHotClock(int times) : times_(times) {
  if (times < 1) throw DomainError("one-hot clock: at least one time", 1);
}

std::optional<std::uint64_t> OneHotClock::forward(int term, std::uint64_t c) const {
  if (c == static_cast<std::uint64_t>(term - 1)) return static_cast<std::uint64_t>(term);
  return std::nullopt;
}

std::optional<std::uint64_t> OneHotClock::backward(int term, std::uint64_t c) const {
  if (c == static_cast<std::uint64_t>(term)) return static_cast<std::uint64_t>(term - 1);
  return std::nullopt;
}

JohnsonClockRegister::JohnsonClockRegister(clock::JohnsonClock clock)
    : clock_(std::move(clock)) {
  if (clock_.qubits() > 16) {
    throw DomainError("Johnson clock register: at most 16 clock qubits", 16);
  }
}

int JohnsonClockRegister::times() const { return static_cast<int>(clock_.size()); }

std::uint64_t JohnsonClockRegister::state_of(int time) const {
  return clock_.encoding(static_cast<std::uint64_t>(time) + 1);
}

std::optional<std::uint64_t> JohnsonClockRegister::forward(int term,
                                                           std::uint64_t c) const {
  const auto r = clock_.apply_transition(static_cast<std::uint64_t>(term),
                                         static_cast<clock::Bits>(c));
  if (!r) return std::nullopt;
  return *r;
}

std::optional<std::uint64_t> JohnsonClockRegister::backward(int term,
                                                            std::uint64_t c) const {
  const auto r = clock_.apply_transition_adjoint(static_cast<std::uint64_t>(term),
                                                 static_cast<clock::Bits>(c));
  if (!r) return std::nullopt;
  return *r;
}

FeynmanHamiltonian::FeynmanHamiltonian(GateCircuit circuit, ClockRegister clock)
    : circuit_(std::move(circuit)), clock_(std::move(clock)) {
  if (circuit_.qubits() > kMaxQubits) {
    throw DomainError("build_feynman_h: at most 10 circuit qubits", kMaxQubits);
  }
  const int times = std::visit([](const auto& c) { return c.times(); }, clock_);
  if (times < gate_count() + 1) {
    throw DomainError("build_feynman_h: clock supports " + std::to_string(times) +
                          " times, circuit needs " + std::to_string(gate_count() + 1),
                      gate_count() + 1);
  }
}

std::uint64_t FeynmanHamiltonian::clock_dimension() const {
  return std::visit([](const auto& c) { return c.dimension(); }, clock_);
}

std::uint64_t FeynmanHamiltonian::dimension() const {
  return clock_dimension() << circuit_.qubits();
}

StateVector FeynmanHamiltonian::apply(const StateVector& v) const {
  const auto dim = static_cast<Eigen::Index>(dimension());
  if (v.size() != dim) throw DomainError("FeynmanHamiltonian::apply: size mismatch");
  const Eigen::Index block = Eigen::Index{1} << circuit_.qubits();
  const auto clock_dim = clock_dimension();
  StateVector out = StateVector::Zero(dim);
  std::visit(
      [&](const auto& clk) {
        for (int term = 1; term <= gate_count(); ++term) {
          const Gate& gate = circuit_.gate(static_cast<std::size_t>(term - 1));
          for (std::uint64_t c = 0; c < clock_dim; ++c) {
            const auto src = static_cast<Eigen::Index>(c) * block;
            if (const auto to = clk.forward(term, c)) {
              StateVector piece = v.segment(src, block);
              apply_gate(piece, gate);
              out.segment(static_cast<Eigen::Index>(*to) * block, block) += piece;
            }
            if (const auto to = clk.backward(term, c)) {
              StateVector piece = v.segment(src, block);
              apply_gate_adjoint(piece, gate);
              out.segment(static_cast<Eigen::Index>(*to) * block, block) += piece;
            }
          }
        }
      },
      clock_);
  return out;
}

Eigen::MatrixXcd FeynmanHamiltonian::dense() const {
  const auto dim = dimension();
  if (dim > static_cast<std::uint64_t>(kMaxDenseDim)) {
    throw CapacityError("FeynmanHamiltonian::dense: dimension " + std::to_string(dim) +
                        " exceeds 4096");
  }
  const auto n = static_cast<Eigen::Index>(dim);
  Eigen::MatrixXcd m(n, n);
  for (Eigen::Index c = 0; c < n; ++c) {
    StateVector e = StateVector::Zero(n);
    e[c] = 1.0;
    m.col(c) = apply(e);
  }
  return m;
}

StateVector FeynmanHamiltonian::history_state(const StateVector& input, int j) const {
  if (j < 0 || j > gate_count()) throw DomainError("history_state: time out of range");
  StateVector phi = input;
  apply_range(phi, circuit_, 0, static_cast<std::size_t>(j));
  const Eigen::Index block = Eigen::Index{1} << circuit_.qubits();
  const auto c = std::visit([&](const auto& clk) { return clk.state_of(j); }, clock_);
  StateVector out = StateVector::Zero(static_cast<Eigen::Index>(dimension()));
  out.segment(static_cast<Eigen::Index>(c) * block, block) = phi;
  return out;
}

FeynmanHamiltonian build_feynman_h(GateCircuit circuit, ClockRegister clock) {
  return FeynmanHamiltonian(std::move(circuit), std::move(clock));
}

HistoryState evolve_restricted(const GateCircuit& circuit, const StateVector& input,
                               double t) {
  if (!(t >= 0.0)) throw DomainError("evolve_restricted: t >= 0 violated", 0.0);
  const walk::LineWalk line(static_cast<int>(circuit.size()) + 1);
  HistoryState hs;
  hs.time_amplitudes = walk::amplitudes(line, 1, t);
  hs.base_input = input;
  return hs;
}

StateVector materialize(const HistoryState& hs, const FeynmanHamiltonian& h) {
  StateVector out = StateVector::Zero(static_cast<Eigen::Index>(h.dimension()));
  for (std::size_t j = 0; j < hs.time_amplitudes.size(); ++j) {
    out += hs.time_amplitudes[j] * h.history_state(hs.base_input, static_cast<int>(j));
  }
  return out;
}

ClockSample sample_clock_and_collapse(const HistoryState& hs,
                                      const GateCircuit& circuit, Rng& rng) {
  if (hs.time_amplitudes.size() != circuit.size() + 1) {
    throw DomainError("sample_clock_and_collapse: history length does not match circuit");
  }
  double total = 0.0;
  for (const auto& a : hs.time_amplitudes) total += std::norm(a);
  if (!(total > 0.0)) {
    throw ConsistencyError("sample_clock_and_collapse: all time amplitudes vanish");
  }
  const double u = uniform01(rng) * total;
  double acc = 0.0;
  int chosen = -1;
  for (std::size_t j = 0; j < hs.time_amplitudes.size(); ++j) {
    const double p = std::norm(hs.time_amplitudes[j]);
    if (p > 0.0) chosen = static_cast<int>(j);
    acc += p;
    if (u < acc && p > 0.0) break;
  }
  ClockSample sample{chosen, hs.base_input};
  apply_range(sample.state, circuit, 0, static_cast<std::size_t>(chosen));
  return sample;
}

ReductionOutcome run_reduction_local(const GateCircuit& block, int copies, double t,
                                     const StateVector& input, Rng& rng) {
  if (block.empty()) throw DomainError("run_reduction_local: empty block circuit");
  if (copies < 1) throw DomainError("run_reduction_local: T >= 1 violated", 1);
  const int s = static_cast<int>(block.size());
  const double horizon = static_cast<double>(s) * copies;
  if (!(t >= 0.0 && t <= horizon)) {
    throw DomainError("run_reduction_local: t must lie in [0, s T]", horizon);
  }
  const GateCircuit full = repeat(block, copies);
  const auto hs = evolve_restricted(full, input, t);
  auto sample = sample_clock_and_collapse(hs, full, rng);

  ReductionOutcome out;
  out.clock_time = sample.time;
  out.iterations = (sample.time + s - 1) / s;
  apply_range(sample.state, full, static_cast<std::size_t>(sample.time),
              static_cast<std::size_t>(out.iterations) * s);
  out.output = measure(sample.state, rng);
  return out;
}

StateVector dense_evolve(const Eigen::MatrixXcd& h, const StateVector& v, double t) {
  if (h.rows() > kMaxDenseDim) {
    throw CapacityError("dense_evolve: dimension exceeds 4096");
  }
  if (h.rows() != h.cols() || h.rows() != v.size()) {
    throw DomainError("dense_evolve: dimension mismatch");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(h);
  const Eigen::MatrixXcd& vecs = eig.eigenvectors();
  StateVector coeffs = vecs.adjoint() * v;
  for (Eigen::Index i = 0; i < coeffs.size(); ++i) {
    coeffs[i] *= std::polar(1.0, -eig.eigenvalues()[i] * t);
  }
  return vecs * coeffs;
}

StateVector dense_evolve(const FeynmanHamiltonian& h, const StateVector& v, double t) {
  if (h.dimension() > static_cast<std::uint64_t>(kMaxDenseDim)) {
    throw CapacityError("dense_evolve: dimension exceeds 4096");
  }
  return dense_evolve(h.dense(), v, t);
}

}  // namespace ffkit::feynman
