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
#include <vector>

/// Continuous-time quantum walk on the path graph 1 - 2 - ... - L with
/// adjacency Hamiltonian H_L. Vertices are 1-based throughout.
namespace ffkit::walk {

using cplx = std::complex<double>;

inline constexpr int kMaxLength = 4096;

/// H_L with its closed-form eigensystem: lambda_p = 2 cos(p pi / (L+1)),
/// v^(p)_j = sqrt(2/(L+1)) sin(j p pi / (L+1)). Eigenvector entries are
/// produced on demand from a sine table, so memory is O(L).
class LineWalk {
 public:
  explicit LineWalk(int length);

  int length() const { return length_; }
  const std::vector<double>& eigenvalues() const { return eigenvalues_; }

  // v^(p)_j for 1 <= p, j <= L.
  double eigenvector(int p, int j) const;

  // Dense column-major L x L matrix whose column p-1 is v^(p).
  std::vector<double> eigenvector_matrix() const;

 private:
  int length_;
  double scale_;
  std::vector<double> eigenvalues_;
  std::vector<double> sines_;  // sin(m pi / (L+1)), m in [0, 2(L+1))
};

inline LineWalk build_line(int length) { return LineWalk(length); }

/// <l| exp(-i H_L t) |k> via the spectral sum.
cplx propagator_exact(const LineWalk& walk, int k, int l, double t);

/// All amplitudes <l| exp(-i H_L t) |k>, l = 1..L (index l-1).
std::vector<cplx> amplitudes(const LineWalk& walk, int k, double t);

/// Infinite-line propagator <k+d| exp(-i H t) |k> = (-i)^d J_d(2t);
/// |d| <= 200, 0 <= t <= 200. The phase is (-i)^d, not i^d: expanding
/// exp(-2it cos p) in e^{inp} gives (-i)^n J_n(2t).
cplx propagator_infinite(int d, double t);

/// Method-of-images sum over m in [-m_max, m_max] of
/// G(1, l + 2m(L+1), t) - G(1, -l + 2m(L+1), t).
cplx propagator_image_sum(int length, int l, double t, int m_max = 2);

/// Half-line form (-i)^(l-1) (l/t) J_l(2t), i.e. the m = 0 image pair only;
/// at t = 0 the limit value (1 if l == 1, else 0).
cplx propagator_bessel(int l, double t);

struct ProbabilityProfile {
  int length = 0;
  double time = 0.0;
  std::vector<double> probs;  // probs[l-1] = P(1, l, t)
};

/// P(1, l, t) for every l. Entries below zero by at most 1e-12 are clipped;
/// the total is renormalized when it drifts by less than 1e-9 and a
/// ConsistencyError is raised otherwise.
ProbabilityProfile prob_profile(const LineWalk& walk, double t);

/// Sum of P(1, l, t) over l >= ceil(t); requires 0 <= t <= L/2.
double tail_mass(const LineWalk& walk, double t);

/// Sum of P(1, l, t) over l <= floor(t); requires 0 <= t <= L/2.
double head_mass(const LineWalk& walk, double t);

/// i^n for any integer n.
cplx i_pow(int n);

}  // namespace ffkit::walk
