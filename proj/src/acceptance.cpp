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

#include "ffkit/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <numeric>

#include <Eigen/Eigenvalues>

#include "ffkit/bessel.hpp"
#include "ffkit/chains.hpp"
#include "ffkit/circuit.hpp"
#include "ffkit/clock.hpp"
#include "ffkit/errors.hpp"
#include "ffkit/feynman.hpp"
#include "ffkit/format.hpp"
#include "ffkit/random.hpp"
#include "ffkit/sparse_oracle.hpp"
#include "ffkit/timedep.hpp"
#include "ffkit/walk.hpp"

namespace ffkit::acceptance {
namespace {

using chains::Word;

struct CriterionInfo {
  const char* name;
  double budget;
};

constexpr CriterionInfo kCriteria[kCriterionCount] = {
    {"tail-mass bound", 5.0},
    {"bessel maxima", 1.0},
    {"bessel tail bound", 2.0},
    {"propagator equivalence", 10.0},
    {"wavefront location", 2.0},
    {"clock correctness", 5.0},
    {"feynman restriction", 30.0},
    {"reduction R", 60.0},
    {"swap-network identity", 20.0},
    {"piecewise evolution", 20.0},
    {"oracle family", 10.0},
    {"twisted-chain reduction", 10.0},
    {"sparse-oracle consistency", 60.0},
};

// Criterion body: fills pass/measured/threshold/detail.
using Body = std::function<void(const Options&, CriterionResult&)>;

std::string fmt(double v) { return format::number(v); }

std::uint64_t criterion_seed(const Options& o, int id) {
  return splitmix64(o.seed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(id)));
}

StateVector random_state(int qubits, Rng& rng) {
  StateVector v(Eigen::Index{1} << qubits);
  for (auto& a : v) a = cplx(uniform01(rng) - 0.5, uniform01(rng) - 0.5);
  return v / v.norm();
}

// Binomial sampling error of an empirical frequency at the threshold.
double three_sigma(double p, int samples) { return 3.0 * std::sqrt(p * (1.0 - p) / samples); }

void tail_bound(const Options& o, CriterionResult& r) {
  double min_tail = 1.0;
  double max_head = 0.0;
  for (int length : {50, 100, 200}) {
    const walk::LineWalk w(length);
    for (int t = 1; t <= length / 2; ++t) {
      min_tail = std::min(min_tail, walk::tail_mass(w, t));
      max_head = std::max(max_head, walk::head_mass(w, t));
    }
  }
  const double head_limit = 2.0 / std::numbers::pi + 1e-6;
  r.measured = min_tail;
  r.threshold = o.tail_threshold - 1e-9;
  r.pass = min_tail >= r.threshold && max_head <= head_limit;
  r.detail = "min tail; max head " + fmt(max_head) + " <= " + fmt(head_limit);
}

void bessel_maxima(const Options&, CriterionResult& r) {
  double m1 = 0.0;
  double m2 = 0.0;
  for (int i = 0; i <= 60000; ++i) {
    const double x = i * 1e-3;
    m1 = std::max(m1, std::pow(bessel::bessel_j(1, x), 2));
    m2 = std::max(m2, std::pow(bessel::bessel_j(2, x), 2));
  }
  r.measured = std::max(std::abs(m1 - 0.339), std::abs(m2 - 0.237));
  r.threshold = 0.002;
  r.pass = r.measured <= r.threshold;
  r.detail = "max J1^2 = " + fmt(m1) + " (0.339), max J2^2 = " + fmt(m2) + " (0.237)";
}

void bessel_tail(const Options& o, CriterionResult& r) {
  Rng rng(criterion_seed(o, 3));
  double worst = -1.0;
  for (int n = 1; n <= 100; ++n) {
    const double bound = bessel::tail_bound(n);
    for (int k = 0; k < 200; ++k) {
      const double x = 2.0 * n + 2.0 * n * uniform01(rng);
      worst = std::max(worst, std::pow(bessel::bessel_j(n, x), 2) - bound);
    }
  }
  r.measured = worst;
  r.threshold = 1e-12;
  r.pass = worst <= r.threshold;
  r.detail = "max of J_n(x)^2 - 2/(n pi)";
}

void propagators(const Options&, CriterionResult& r) {
  constexpr int kLength = 100;
  const walk::LineWalk w(kLength);
  double image_dev = 0.0;
  double bessel_dev = 0.0;
  int worst_t = 0;
  int worst_l = 0;
  int first_bad_t = 0;
  for (int t = 1; t <= 50; ++t) {
    const auto exact = walk::amplitudes(w, 1, t);
    for (int l = 1; l <= kLength; ++l) {
      image_dev = std::max(image_dev,
                           std::abs(exact[l - 1] - walk::propagator_image_sum(kLength, l, t, 2)));
      const double d = std::abs(exact[l - 1] - walk::propagator_bessel(l, t));
      if (d > 1e-6 && first_bad_t == 0) first_bad_t = t;
      if (d > bessel_dev) {
        bessel_dev = d;
        worst_t = t;
        worst_l = l;
      }
    }
  }
  r.measured = bessel_dev;
  r.threshold = 1e-6;
  r.pass = image_dev <= 1e-8 && bessel_dev <= 1e-6;
  r.detail = "max |exact - half-line form| at (t=" + std::to_string(worst_t) +
             ", l=" + std::to_string(worst_l) + ")" +
             (first_bad_t ? ", exceeded from t=" + std::to_string(first_bad_t) : "") +
             "; max |exact - image sum| = " + fmt(image_dev) + " <= 1e-8";
}

void wavefront(const Options&, CriterionResult& r) {
  const walk::LineWalk w(100);
  int worst = 0;
  std::string misses;
  for (int t = 10; t <= 50; ++t) {
    const auto prof = walk::prob_profile(w, t);
    const auto it = std::max_element(prof.probs.begin(), prof.probs.end());
    const int argmax = static_cast<int>(it - prof.probs.begin()) + 1;
    const int off = std::abs(argmax - 2 * t);
    worst = std::max(worst, off);
    if (off > 3) misses += " t=" + std::to_string(t) + "->" + std::to_string(argmax);
  }
  r.measured = worst;
  r.threshold = 3;
  r.pass = worst <= 3;
  r.detail = "max |argmax - 2t|" + (misses.empty() ? std::string() : ";" + misses);
}

// Pascal's triangle, independent of clock::binomial.
int brute_min_qubits(int locality, std::uint64_t times) {
  const int k = locality - 1;
  std::vector<std::uint64_t> row{1};
  for (int n = 0;; ++n) {
    if (k <= n && row[k] >= times) return n;
    std::vector<std::uint64_t> next(row.size() + 1, 1);
    for (std::size_t i = 1; i < row.size(); ++i) next[i] = row[i - 1] + row[i];
    row = std::move(next);
  }
}

void clock_check(const Options&, CriterionResult& r) {
  long long failures = 0;
  long long checked = 0;
  for (int n = 2; n <= 8; ++n) {
    for (int k = 1; k <= n - 1; ++k) {
      const clock::JohnsonClock c(n, k);
      const auto m = c.size();
      std::vector<clock::Bits> path(m);
      for (std::uint64_t j = 1; j <= m; ++j) path[j - 1] = c.encoding(j);
      // Hamiltonian path through J_{n,k}: distinct weight-k strings, adjacent
      // steps share k-1 elements.
      auto sorted = path;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) ++failures;
      for (std::uint64_t j = 0; j < m; ++j) {
        if (std::popcount(path[j]) != k) ++failures;
        if (j + 1 < m && std::popcount(path[j] ^ path[j + 1]) != 2) ++failures;
      }
      for (std::uint64_t j = 1; j < m; ++j) {
        for (std::uint64_t i = 1; i <= m; ++i) {
          const auto out = c.apply_transition(j, path[i - 1]);
          const bool ok = (i == j) ? (out && *out == path[j]) : !out.has_value();
          failures += ok ? 0 : 1;
          ++checked;
        }
      }
    }
  }
  for (int c = 2; c <= 6; ++c) {
    for (std::uint64_t times = 1; times <= 300; ++times) {
      failures += clock::min_clock_qubits(c, times) == brute_min_qubits(c, times) ? 0 : 1;
      ++checked;
    }
  }
  r.measured = static_cast<double>(failures);
  r.threshold = 0;
  r.pass = failures == 0;
  r.detail = "failed checks out of " + std::to_string(checked);
}

void feynman_restriction(const Options& o, CriterionResult& r) {
  Rng rng(criterion_seed(o, 7));
  double amp_dev = 0.0;
  double off_mass = 0.0;
  for (int c = 0; c < 20; ++c) {
    const int n = 1 + c % 3;
    const int gates = 1 + static_cast<int>(rng() % 12);
    const auto circuit = random_circuit(n, gates, rng);
    feynman::ClockRegister reg = feynman::OneHotClock(gates + 1);
    if (c % 2 == 1) {
      const int nc = clock::min_clock_qubits(3, static_cast<std::uint64_t>(gates) + 1);
      reg = feynman::JohnsonClockRegister(clock::JohnsonClock(nc, 2));
    }
    const feynman::FeynmanHamiltonian h(circuit, reg);
    const auto input = basis_state(n, rng() % (std::uint64_t{1} << n));
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(h.dense());
    const StateVector start = h.history_state(input, 0);
    const Eigen::VectorXcd coeffs = eig.eigenvectors().adjoint() * start;
    std::vector<StateVector> history;
    for (int j = 0; j <= gates; ++j) history.push_back(h.history_state(input, j));
    for (int step = 1; step <= 12; ++step) {
      const double t = 0.5 * step;
      Eigen::VectorXcd phases(coeffs.size());
      for (Eigen::Index i = 0; i < coeffs.size(); ++i) {
        phases[i] = std::polar(1.0, -eig.eigenvalues()[i] * t) * coeffs[i];
      }
      const StateVector dense = eig.eigenvectors() * phases;
      const auto hs = feynman::evolve_restricted(circuit, input, t);
      for (int j = 0; j <= gates; ++j) {
        amp_dev = std::max(amp_dev, std::abs(history[j].dot(dense) - hs.time_amplitudes[j]));
      }
      StateVector residual = dense;
      for (const auto& psi : history) residual -= psi.dot(dense) * psi;
      off_mass = std::max(off_mass, residual.squaredNorm());
    }
  }
  r.measured = amp_dev;
  r.threshold = 1e-8;
  r.pass = amp_dev <= 1e-8 && off_mass <= 1e-9;
  r.detail = "max line-amplitude deviation; off-subspace mass " + fmt(off_mass) + " <= 1e-9";
}

void reduction_r(const Options& o, CriterionResult& r) {
  Rng rng(criterion_seed(o, 8));
  constexpr int kCopies = 16;
  constexpr int kSamples = 10000;
  GateCircuit not_block(1);
  not_block.add("X", {0});
  GateCircuit perm_block(3);
  perm_block.add("CNOT", {0, 1}).add("SWAP", {1, 2}).add("CNOT", {2, 0});

  long long wrong = 0;
  double worst_freq = 1.0;
  const double limit = o.tail_threshold - three_sigma(o.tail_threshold, kSamples);
  for (const GateCircuit* block : {&not_block, &perm_block}) {
    const int n = block->qubits();
    const int s = static_cast<int>(block->size());
    const std::uint64_t inputs = std::uint64_t{1} << n;
    // g^(m)(x) by direct classical iteration.
    std::vector<std::vector<std::uint64_t>> table(kCopies + 1, std::vector<std::uint64_t>(inputs));
    for (std::uint64_t x = 0; x < inputs; ++x) {
      StateVector st = basis_state(n, x);
      table[0][x] = x;
      for (int m = 1; m <= kCopies; ++m) {
        st = run(*block, st);
        table[m][x] = classical_value(st);
      }
    }
    for (double t : {s * kCopies / 2.0, s * kCopies / 4.0}) {
      int hits = 0;
      const int floor_ts = static_cast<int>(std::floor(t / s));
      for (int i = 0; i < kSamples; ++i) {
        const std::uint64_t x = rng() % inputs;
        const auto out = feynman::run_reduction_local(*block, kCopies, t, basis_state(n, x), rng);
        if (out.output != table[out.iterations][x]) ++wrong;
        if (out.iterations != (out.clock_time + s - 1) / s) ++wrong;
        if (out.iterations >= floor_ts) ++hits;
      }
      worst_freq = std::min(worst_freq, static_cast<double>(hits) / kSamples);
    }
  }
  r.measured = worst_freq;
  r.threshold = limit;
  r.pass = wrong == 0 && worst_freq >= limit;
  r.detail = "min Pr[m >= floor(t/s)]; wrong outputs " + std::to_string(wrong);
}

std::vector<GateCircuit> swap_test_circuits(const Options& o) {
  Rng rng(criterion_seed(o, 9));
  std::vector<GateCircuit> out;
  for (int c = 0; c < 50; ++c) {
    const int n = 2 + c % 4;
    out.push_back(random_circuit(n, 1 + static_cast<int>(rng() % 10), rng));
  }
  return out;
}

void swap_network(const Options& o, CriterionResult& r) {
  Rng rng(criterion_seed(o, 90));
  double dev = 0.0;
  long long nonlocal = 0;
  for (const auto& c : swap_test_circuits(o)) {
    const auto local = timedep::to_geometrically_local(c);
    for (const auto& g : local.circuit.gates()) {
      if (g.wires.size() == 2 && std::abs(g.wires[0] - g.wires[1]) != 1) ++nonlocal;
    }
    if (local.circuit.size() != c.size() * static_cast<std::size_t>(c.qubits())) ++nonlocal;
    for (int k = 0; k < 10; ++k) {
      const auto in = random_state(c.qubits(), rng);
      const auto lhs = run(local.circuit, in);
      const auto rhs = timedep::permute_wires(run(c, in), local.wire_permutation);
      dev = std::max(dev, (lhs - rhs).cwiseAbs().maxCoeff());
    }
  }
  r.measured = dev;
  r.threshold = 1e-10;
  r.pass = dev <= 1e-10 && nonlocal == 0;
  r.detail = "max |C'(x) - pi C(x)|; non-local or mis-padded gates " + std::to_string(nonlocal);
}

void piecewise(const Options& o, CriterionResult& r) {
  Rng rng(criterion_seed(o, 10));
  double evolve_dev = 0.0;
  double round_trip = 0.0;
  for (const auto& c : swap_test_circuits(o)) {
    const auto local = timedep::to_geometrically_local(c);
    const auto ph = timedep::to_piecewise(local.circuit);
    for (const auto& seg : ph.segments) {
      round_trip = std::max(
          round_trip, (timedep::hermitian_exp(seg.generator, 1.0) - seg.unitary).cwiseAbs().maxCoeff());
    }
    const auto in = random_state(c.qubits(), rng);
    StateVector prefix = in;
    for (int i = 0; i <= ph.total_time(); ++i) {
      if (i > 0) apply_gate(prefix, local.circuit.gate(i - 1));
      const auto st = timedep::evolve_piecewise(ph, in, static_cast<double>(i));
      evolve_dev = std::max(evolve_dev, (st - prefix).cwiseAbs().maxCoeff());
    }
  }
  r.measured = evolve_dev;
  r.threshold = 1e-9;
  r.pass = evolve_dev <= 1e-9 && round_trip <= 1e-10;
  r.detail = "max integer-time deviation; generator round trip " + fmt(round_trip) + " <= 1e-10";
}

void oracle_family(const Options& o, CriterionResult& r) {
  long long failures = 0;
  for (int i = 0; i < 20; ++i) {
    const std::uint64_t seed = criterion_seed(o, 11) + static_cast<std::uint64_t>(i);
    const int n = 1 + i % 8;
    const int levels = 1 + i % 6;
    const auto fam = chains::gen_family(seed, levels, n);
    const auto random = chains::gen_family(~seed, levels, n);
    const Word size = fam.domain_size();
    const Word r_probe = static_cast<Word>(splitmix64(seed) & ((Word{2} << n) - 1));

    for (int j = 1; j <= levels; ++j) {
      for (Word x = 0; x < size; ++x) {
        for (int sj : {j, -j}) {
          if (chains::spi_apply(fam, sj, x, chains::spi_apply(fam, sj, x, r_probe)) != r_probe) {
            ++failures;
          }
        }
        if (chains::spi_apply(fam, -j, chains::spi_apply(fam, j, x, 0), 0) != x) ++failures;
      }
    }

    const chains::ErasedOracle erased(fam);
    for (int j = 1; j <= levels; ++j) {
      int fwd = 0;
      int inv = 0;
      for (Word x = 0; x < size; ++x) {
        fwd += erased.forward(j, x).has_value();
        inv += erased.inverse(j, x).has_value();
      }
      if (fwd != 1 || inv != 1) ++failures;
    }
    for (int a = 0; a <= levels; ++a) {
      for (int b = 0; b <= levels; ++b) {
        for (int j = 1; j <= std::max(a, b); ++j) {
          for (int sj : {j, -j}) {
            for (Word x = 0; x < size; ++x) {
              const Word ha = chains::hybrid_apply(erased, a, sj, x, 0);
              const Word hb = chains::hybrid_apply(erased, b, sj, x, 0);
              if (j <= std::min(a, b) && ha != hb) ++failures;
              if (j > a && ha != 0) ++failures;
            }
          }
        }
      }
    }

    const chains::MergedOracle merged(fam, random);
    const auto chain = merged.chain();
    for (int j = 1; j <= levels; ++j) {
      const int expected = random.forward(j, chain[j - 1]) != chain[j] ? 1 : 0;
      if (merged.collision_pairs(j) != expected) ++failures;
    }
    const auto repaired = chains::repair_to_permutation(merged);
    for (int j = 1; j <= levels; ++j) {
      if (!chains::is_bijection(repaired.forward_table(j))) ++failures;
      if (repaired.forward(j, chain[j - 1]) != chain[j]) ++failures;
      const auto p = merged.collision_point(j);
      for (Word x = 0; x < size; ++x) {
        if ((!p || x != *p) && repaired.forward(j, x) != merged.forward(j, x)) ++failures;
      }
    }
  }
  r.measured = static_cast<double>(failures);
  r.threshold = 0;
  r.pass = failures == 0;
  r.detail = "failed checks over 20 seeds";
}

void twisted_chain(const Options& o, CriterionResult& r) {
  Rng rng(criterion_seed(o, 12));
  long long failures = 0;
  for (int i = 0; i < 100; ++i) {
    const int n = 4 + static_cast<int>(rng() % 13);
    const chains::HashTable h(rng(), n);
    const Word x0 = static_cast<Word>(rng() & ((Word{1} << n) - 1));
    const int q = 1 + static_cast<int>(rng() % 16);
    const auto honest = chains::twisted_extend(std::cref(h), x0, q + 1);
    const auto done = chains::complete_chain_D(std::cref(h), x0, honest.elements[q],
                                               honest.elements[q + 1], q);
    if (done.chain.length() != 2 * q + 1) ++failures;
    if (!done.chain.violations(std::cref(h)).empty()) ++failures;
    if (done.synthesized_hash != h(honest.elements[q])) ++failures;
    if (done.transcript.depth() != q) ++failures;
    for (int l = 0; l < done.transcript.depth(); ++l) {
      if (done.transcript.width(l) != 2) ++failures;
    }
  }
  constexpr double kY = 1048576.0;
  double worst_ratio = 0.0;
  int bad_points = 0;
  std::string first_bad;
  for (int k = 1; k <= 64; ++k) {
    for (int q = 1; q <= 64; ++q) {
      const double kq = static_cast<double>(k) * q;
      const double ratio = chains::bound_F(k, 2 * q, kY) * kY / (kq * kq * kq * kq);
      worst_ratio = std::max(worst_ratio, ratio);
      if (ratio > 1e4) {
        if (bad_points++ == 0) first_bad = "(k=" + std::to_string(k) + ",q=" + std::to_string(q) + ")";
      }
    }
  }
  r.measured = worst_ratio;
  r.threshold = 1e4;
  r.pass = failures == 0 && bad_points == 0;
  r.detail = "max F(k,2q)|Y|/(k^4 q^4); grid violations " + std::to_string(bad_points) +
             (bad_points ? " first at " + first_bad : "") + "; chain/transcript failures " +
             std::to_string(failures);
}

int count_components(const Eigen::MatrixXd& m, bool& all_paths, int path_vertices) {
  const auto dim = m.rows();
  std::vector<Eigen::Index> parent(dim);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<Eigen::Index(Eigen::Index)> find = [&](Eigen::Index v) {
    return parent[v] == v ? v : parent[v] = find(parent[v]);
  };
  for (Eigen::Index a = 0; a < dim; ++a) {
    for (Eigen::Index b = a + 1; b < dim; ++b) {
      if (m(a, b) != 0.0) parent[find(a)] = find(b);
    }
  }
  std::vector<int> sizes(dim, 0);
  std::vector<int> edges(dim, 0);
  for (Eigen::Index a = 0; a < dim; ++a) {
    ++sizes[find(a)];
    for (Eigen::Index b = a + 1; b < dim; ++b) {
      if (m(a, b) != 0.0) ++edges[find(a)];
    }
  }
  int components = 0;
  all_paths = true;
  for (Eigen::Index v = 0; v < dim; ++v) {
    if (find(v) != v) continue;
    ++components;
    if (sizes[v] != path_vertices || edges[v] != path_vertices - 1) all_paths = false;
  }
  return components;
}

void sparse_check(const Options& o, CriterionResult& r) {
  using namespace sparse_oracle;
  long long failures = 0;
  for (int i = 0; i < 20; ++i) {
    const int n = 1 + i % 3;
    const int levels = 1 + i % 4;
    const WalkGraphHamiltonian h(chains::gen_family(criterion_seed(o, 13) + i, levels, n));
    const auto dense = materialize(h);
    const auto dim = dense.rows();
    if ((dense - dense.transpose()).cwiseAbs().maxCoeff() != 0.0) ++failures;
    for (Eigen::Index a = 0; a < dim; ++a) {
      const Vertex va = h.vertex(a);
      double row = 0.0;
      for (Eigen::Index b = 0; b < dim; ++b) {
        const double e = dense(a, b);
        if (e != 0.0 && e != 1.0) ++failures;
        row += e;
        if (entry_oracle(h, va, h.vertex(b)) != static_cast<int>(e)) ++failures;
      }
      if (row > 2.0 || row != h.degree(va)) ++failures;
      for (int s = 1; s <= h.degree(va); ++s) {
        if (dense(a, h.index(structure_oracle(h, va, s))) != 1.0) ++failures;
      }
    }
    bool paths = false;
    if (count_components(dense, paths, levels + 1) != (1 << n) || !paths) ++failures;
  }

  constexpr int kSamples = 10000;
  constexpr double kTime = 10.0;
  const auto fam = chains::gen_family(criterion_seed(o, 130), 40, 3);
  const WalkGraphHamiltonian h(fam);
  const auto chain = chains::chain_values(fam, 0);
  Rng rng(criterion_seed(o, 131));
  int beyond = 0;
  for (int s = 0; s < kSamples; ++s) {
    const auto out = run_reduction_oracle(h, kTime, rng);
    if (out.x_q != chain[out.q]) ++failures;
    if (out.transcript.depth() != 40) ++failures;
    if (out.q > kTime) ++beyond;
  }
  const double freq = static_cast<double>(beyond) / kSamples;
  r.measured = freq;
  r.threshold = o.tail_threshold - three_sigma(o.tail_threshold, kSamples);
  r.pass = failures == 0 && freq >= r.threshold;
  r.detail = "Pr[q > t] at L=40, t=10; structural failures " + std::to_string(failures);
}

const Body kBodies[kCriterionCount] = {
    tail_bound,   bessel_maxima, bessel_tail,   propagators,   wavefront,
    clock_check,  feynman_restriction, reduction_r, swap_network, piecewise,
    oracle_family, twisted_chain, sparse_check,
};

}  // namespace

CriterionResult run_criterion(int id, const Options& options) {
  if (id < 1 || id > kCriterionCount) {
    throw DomainError("acceptance: criterion id must lie in [1, 13]", kCriterionCount);
  }
  CriterionResult r;
  r.id = id;
  r.name = kCriteria[id - 1].name;
  r.budget_seconds = kCriteria[id - 1].budget;
  const auto begin = std::chrono::steady_clock::now();
  kBodies[id - 1](options, r);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - begin).count();
  if (r.seconds > r.budget_seconds) {
    r.pass = false;
    r.detail += "; over time budget";
  }
  return r;
}

std::vector<CriterionResult> run_all(const Options& options) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id, options));
  return out;
}

std::string summary_line(const CriterionResult& r) {
  char head[64];
  std::snprintf(head, sizeof head, "[%s] %02d ", r.pass ? "PASS" : "FAIL", r.id);
  char timing[64];
  std::snprintf(timing, sizeof timing, " (%.2f s / %.0f s)", r.seconds, r.budget_seconds);
  return head + r.name + ": measured=" + fmt(r.measured) + " threshold=" + fmt(r.threshold) +
         timing + " " + r.detail;
}

nlohmann::json report_json(const std::vector<CriterionResult>& results, const Options& options) {
  auto criteria = nlohmann::json::array();
  auto timing = nlohmann::json::array();
  bool all = true;
  for (const auto& r : results) {
    all = all && r.pass;
    criteria.push_back({{"id", r.id},
                        {"name", r.name},
                        {"pass", r.pass},
                        {"measured", r.measured},
                        {"threshold", r.threshold},
                        {"detail", r.detail},
                        {"budget_seconds", r.budget_seconds}});
    timing.push_back(r.seconds);
  }
  return {{"schema", "ffkit-acceptance/1"},
          {"seed", options.seed},
          {"tail_threshold", options.tail_threshold},
          {"all_pass", all},
          {"criteria", std::move(criteria)},
          {"elapsed_seconds", std::move(timing)}};
}

}  // namespace ffkit::acceptance
