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

#include <ostream>

#include <Eigen/Dense>

#include "ffkit/chains.hpp"
#include "ffkit/random.hpp"

// Oracle access to the permutation-chain walk graph: vertices (j, x) with
// column j in [0, L], edges (j, x) -- (j+1, Π_{j+1}(x)). The graph is 2^n
// disjoint paths of L+1 vertices.
namespace ffkit::sparse_oracle {

using chains::Word;

inline constexpr long long kMaxDenseDim = 4096;

struct Vertex {
  int column = 0;
  Word x = 0;
  friend bool operator==(const Vertex&, const Vertex&) = default;
};

class WalkGraphHamiltonian {
 public:
  explicit WalkGraphHamiltonian(chains::PermutationFamily family);

  const chains::PermutationFamily& family() const { return family_; }
  int levels() const { return family_.levels(); }
  int bits() const { return family_.bits(); }
  long long vertex_count() const;

  // j * 2^n + x.
  long long index(Vertex v) const;
  Vertex vertex(long long index) const;
  void check(Vertex v) const;
  // 1 at the end columns, 2 in the interior.
  int degree(Vertex v) const;

 private:
  chains::PermutationFamily family_;
};

// 1 iff (j', x') is a neighbour of (j, x).
int entry_oracle(const WalkGraphHamiltonian& h, Vertex a, Vertex b);

// Neighbour in slot s (1-based). End columns only have slot 1; asking for
// slot 2 there throws SlotError.
Vertex structure_oracle(const WalkGraphHamiltonian& h, Vertex v, int slot);

// Dense 0/1 matrix in the packed index; CapacityError above 4096 rows.
Eigen::MatrixXd materialize(const WalkGraphHamiltonian& h);

// One "row col value" line per nonzero entry.
void write_coordinate_list(std::ostream& out, const Eigen::MatrixXd& m);

struct OracleReductionOutcome {
  int q = 0;
  Word x_q = 0;
  chains::QueryTranscript transcript;
};

// Walk from (0, 0^n) for time t in [0, L/2] on its own line, then measure.
OracleReductionOutcome run_reduction_oracle(const WalkGraphHamiltonian& h, double t,
                                            Rng& rng);

}  // namespace ffkit::sparse_oracle
