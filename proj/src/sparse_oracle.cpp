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

#include "ffkit/sparse_oracle.hpp"

#include <cmath>
#include <complex>
#include <string>

#include "ffkit/errors.hpp"
#include "ffkit/walk.hpp"

namespace ffkit::sparse_oracle {

WalkGraphHamiltonian::WalkGraphHamiltonian(chains::PermutationFamily family)
    : family_(std::move(family)) {}

long long WalkGraphHamiltonian::vertex_count() const {
  return (static_cast<long long>(levels()) + 1) << bits();
}

void WalkGraphHamiltonian::check(Vertex v) const {
  if (v.column < 0 || v.column > levels()) {
    throw DomainError("walk graph: column must lie in [0, L]", levels());
  }
  if (v.x >= family_.domain_size()) throw DomainError("walk graph: x exceeds n bits");
}

long long WalkGraphHamiltonian::index(Vertex v) const {
  check(v);
  return (static_cast<long long>(v.column) << bits()) + v.x;
}

Vertex WalkGraphHamiltonian::vertex(long long index) const {
  if (index < 0 || index >= vertex_count()) throw DomainError("walk graph: index out of range");
  return {static_cast<int>(index >> bits()),
          static_cast<Word>(index & (family_.domain_size() - 1))};
}

int WalkGraphHamiltonian::degree(Vertex v) const {
  check(v);
  return (v.column == 0 || v.column == levels()) ? 1 : 2;
}

int entry_oracle(const WalkGraphHamiltonian& h, Vertex a, Vertex b) {
  h.check(a);
  h.check(b);
  const auto& fam = h.family();
  if (b.column == a.column + 1 && b.x == fam.forward(a.column + 1, a.x)) return 1;
  if (b.column == a.column - 1 && b.x == fam.inverse(a.column, a.x)) return 1;
  return 0;
}

Vertex structure_oracle(const WalkGraphHamiltonian& h, Vertex v, int slot) {
  h.check(v);
  if (slot < 1 || slot > h.degree(v)) {
    throw SlotError("structure_oracle: slot " + std::to_string(slot) +
                    " is empty at column " + std::to_string(v.column));
  }
  const auto& fam = h.family();
  const int j = v.column;
  if (j == 0) return {1, fam.forward(1, v.x)};
  if (slot == 1) return {j - 1, fam.inverse(j, v.x)};
  return {j + 1, fam.forward(j + 1, v.x)};
}

Eigen::MatrixXd materialize(const WalkGraphHamiltonian& h) {
  const long long dim = h.vertex_count();
  if (dim > kMaxDenseDim) {
    throw CapacityError("materialize: 2^n (L+1) = " + std::to_string(dim) +
                        " exceeds 4096");
  }
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
  const auto& fam = h.family();
  for (long long i = 0; i < dim; ++i) {
    const Vertex v = h.vertex(i);
    if (v.column == h.levels()) continue;
    const long long k = h.index({v.column + 1, fam.forward(v.column + 1, v.x)});
    m(i, k) = 1.0;
    m(k, i) = 1.0;
  }
  return m;
}

void write_coordinate_list(std::ostream& out, const Eigen::MatrixXd& m) {
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (m(r, c) != 0.0) out << r << ' ' << c << ' ' << m(r, c) << '\n';
    }
  }
}

OracleReductionOutcome run_reduction_oracle(const WalkGraphHamiltonian& h, double t,
                                            Rng& rng) {
  const int levels = h.levels();
  if (!(t >= 0.0 && t <= levels / 2.0)) {
    throw DomainError("run_reduction_oracle: t must lie in [0, L/2]", levels / 2.0);
  }
  OracleReductionOutcome out;
  // Identify the line through (0, 0^n): one forward query per level.
  std::vector<Word> chain{0};
  for (int level = 1; level <= levels; ++level) {
    out.transcript.add_layer({chain.back()});
    chain.push_back(h.family().forward(level, chain.back()));
  }

  const walk::LineWalk walk(levels + 1);
  const auto amp = walk::amplitudes(walk, 1, t);
  double u = uniform01(rng);
  int q = levels;
  for (int l = 0; l <= levels; ++l) {
    u -= std::norm(amp[l]);
    if (u < 0.0) {
      q = l;
      break;
    }
  }
  out.q = q;
  out.x_q = chain[q];
  return out;
}

}  // namespace ffkit::sparse_oracle
