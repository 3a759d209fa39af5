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

// ffkit command-line driver.
//
// Exit codes: 0 success, 1 criterion failure, 2 usage error, 3 internal
// consistency error.

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ffkit/acceptance.hpp"
#include "ffkit/bessel.hpp"
#include "ffkit/chains.hpp"
#include "ffkit/circuit.hpp"
#include "ffkit/clock.hpp"
#include "ffkit/errors.hpp"
#include "ffkit/feynman.hpp"
#include "ffkit/format.hpp"
#include "ffkit/sparse_oracle.hpp"
#include "ffkit/timedep.hpp"
#include "ffkit/walk.hpp"

namespace {

using ffkit::format::Table;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitCriterion = 1;
constexpr int kExitUsage = 2;
constexpr int kExitConsistency = 3;

struct Global {
  std::uint64_t seed = 0;
  std::string out;
  std::string format = "csv";
};

// Error raised for bad flag combinations detected after parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Output {
 public:
  explicit Output(const Global& g) : g_(g) {}

  void emit(const Table& table, const json& doc) const {
    std::ostringstream text;
    if (g_.format == "json") {
      text << doc.dump(2) << '\n';
    } else {
      table.write_csv(text);
    }
    write(text.str());
  }
  void emit(const Table& table) const { emit(table, table.to_json()); }

  void write(const std::string& text) const {
    if (g_.out.empty() || g_.out == "-") {
      std::cout << text;
      std::cout.flush();
      return;
    }
    std::ofstream file(g_.out, std::ios::binary);
    if (!file) throw UsageError("cannot open output file '" + g_.out + "'");
    file << text;
    if (!file) throw UsageError("failed writing '" + g_.out + "'");
  }

 private:
  const Global& g_;
};

ffkit::GateCircuit builtin_block(const std::string& name) {
  if (name == "not") {
    ffkit::GateCircuit c(1);
    c.add("X", {0});
    return c;
  }
  if (name == "perm3") {
    ffkit::GateCircuit c(3);
    c.add("CNOT", {0, 1}).add("SWAP", {1, 2}).add("CNOT", {2, 0});
    return c;
  }
  throw UsageError("unknown builtin circuit '" + name + "' (expected not|perm3)");
}

ffkit::GateCircuit load_block(const std::string& path, const std::string& builtin) {
  if (path.empty()) return builtin_block(builtin);
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read circuit file '" + path + "'");
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw UsageError("circuit file '" + path + "': " + e.what());
  }
  return ffkit::circuit_from_json(doc);
}

bool is_classical(const ffkit::GateCircuit& c) {
  for (const auto& g : c.gates()) {
    for (Eigen::Index i = 0; i < g.matrix.size(); ++i) {
      const auto v = g.matrix.data()[i];
      if (v != ffkit::cplx(0.0) && v != ffkit::cplx(1.0)) return false;
    }
  }
  return true;
}

// g^(m)(x) for m = 0..copies, for a classical reversible block.
std::vector<std::uint64_t> iterate_block(const ffkit::GateCircuit& block, int copies,
                                         std::uint64_t x) {
  std::vector<std::uint64_t> out{x};
  ffkit::StateVector st = ffkit::basis_state(block.qubits(), x);
  for (int m = 1; m <= copies; ++m) {
    st = ffkit::run(block, st);
    out.push_back(ffkit::classical_value(st));
  }
  return out;
}

// ---- walk ----

int cmd_walk_profile(const Global& g, int length, std::vector<double> times,
                     std::vector<int> fixed, double step) {
  const ffkit::walk::LineWalk w(length);
  if (!(step > 0.0)) throw UsageError("--t-step must be positive");
  Table table({"series", "t", "l", "P"});
  json profiles = json::array();
  for (double t : times) {
    const auto prof = ffkit::walk::prob_profile(w, t);
    for (int l = 1; l <= length; ++l) table.add_row({"profile", t, l, prof.probs[l - 1]});
    profiles.push_back({{"L", length}, {"t", t}, {"probs", prof.probs}});
  }
  json series = json::array();
  const int steps = static_cast<int>(std::floor(length / 2.0 / step + 1e-9));
  for (int l : fixed) {
    if (l < 1 || l > length) continue;
    json ts = json::array();
    json ps = json::array();
    for (int i = 0; i <= steps; ++i) {
      const double t = i * step;
      const double p = std::norm(ffkit::walk::propagator_exact(w, 1, l, t));
      table.add_row({"fixed_l", t, l, p});
      ts.push_back(t);
      ps.push_back(p);
    }
    series.push_back({{"l", l}, {"t", ts}, {"P", ps}});
  }
  Output(g).emit(table, {{"L", length}, {"profiles", profiles}, {"fixed_l", series}});
  return kExitOk;
}

int cmd_walk_tail(const Global& g, std::vector<int> lengths, double threshold) {
  Table table({"L", "t", "tail", "head", "ok"});
  bool all = true;
  const double head_limit = 2.0 / std::numbers::pi + 1e-6;
  for (int length : lengths) {
    const ffkit::walk::LineWalk w(length);
    for (int t = 1; t <= length / 2; ++t) {
      const double tail = ffkit::walk::tail_mass(w, t);
      const double head = ffkit::walk::head_mass(w, t);
      const bool ok = tail >= threshold - 1e-9 && head <= head_limit;
      all = all && ok;
      table.add_row({length, static_cast<double>(t), tail, head, ok});
    }
  }
  Output(g).emit(table);
  return all ? kExitOk : kExitCriterion;
}

// ---- bessel ----

int cmd_bessel_bounds(const Global& g, int n_max, std::vector<double> factors) {
  if (n_max < 1 || n_max > ffkit::bessel::kMaxOrder) throw UsageError("--n-max must lie in [1, 200]");
  Table table({"n", "x", "J", "J2", "tail_bound", "kra_bound", "ok"});
  bool all = true;
  for (int n = 1; n <= n_max; ++n) {
    for (double f : factors) {
      const double x = f * n;
      const double j = ffkit::bessel::bessel_j(n, x);
      const double tail = ffkit::bessel::tail_bound(n);
      json kra = nullptr;
      bool ok = j * j <= tail + 1e-12;
      if (x > ffkit::bessel::kra_threshold(n)) {
        const double k = ffkit::bessel::kra_bound(n, x);
        kra = k;
        ok = ok && j * j <= k + 1e-12;
      }
      all = all && ok;
      table.add_row({n, x, j, j * j, tail, kra, ok});
    }
  }
  Output(g).emit(table);
  return all ? kExitOk : kExitCriterion;
}

// ---- clock ----

int cmd_clock_verify(const Global& g, int n, int k) {
  const ffkit::clock::JohnsonClock c(n, k);
  if (c.size() > (std::uint64_t{1} << ffkit::clock::kMaterializeLimit)) {
    throw UsageError("clock-verify: path longer than 65536 times");
  }
  Table table({"j", "bitstring", "locality", "transition_ok"});
  json path = json::array();
  bool all = true;
  const auto m = c.size();
  for (std::uint64_t j = 1; j <= m; ++j) {
    bool ok = true;
    int locality = 0;
    if (j < m) {
      locality = c.factors(j).locality();
      for (std::uint64_t i = 1; i <= m; ++i) {
        const auto img = c.apply_transition(j, c.encoding(i));
        ok = ok && (i == j ? (img && *img == c.encoding(j + 1)) : !img);
      }
    }
    all = all && ok;
    table.add_row({static_cast<long long>(j), c.bitstring(j), locality, ok});
    path.push_back(c.bitstring(j));
  }
  const int locality = m > 1 ? c.factors(1).locality() : 0;
  Output(g).emit(table, {{"n", n},
                         {"k", k},
                         {"path_length", m},
                         {"locality", locality},
                         {"verified", all},
                         {"path", path}});
  return all ? kExitOk : kExitCriterion;
}

// ---- reductions ----

struct ReductionArgs {
  std::string circuit;
  std::string builtin = "not";
  int copies = 16;
  std::optional<double> t;
  int samples = 1000;
  std::uint64_t input = 0;
};

template <typename Run>
int reduction_driver(const Global& g, const ReductionArgs& a, double horizon, Run&& run) {
  const auto block = load_block(a.circuit, a.builtin);
  if (a.input >= (std::uint64_t{1} << block.qubits())) throw UsageError("--input exceeds qubit count");
  if (a.samples < 1) throw UsageError("--samples must be positive");
  const double t = a.t.value_or(horizon / 2.0);
  const bool classical = is_classical(block);
  const auto expected = classical ? iterate_block(block, a.copies, a.input)
                                  : std::vector<std::uint64_t>{};
  ffkit::Rng rng(g.seed);
  Table table({"sample", "t", "iterations", "output", "expected", "ok"});
  bool all = true;
  for (int s = 0; s < a.samples; ++s) {
    const auto [iterations, output] = run(block, t, rng);
    json exp = nullptr;
    bool ok = true;
    if (classical) {
      exp = expected[iterations];
      ok = output == expected[iterations];
    }
    all = all && ok;
    table.add_row({s, t, iterations, output, exp, ok});
  }
  Output(g).emit(table);
  return all ? kExitOk : kExitCriterion;
}

int cmd_feynman_run(const Global& g, const ReductionArgs& a) {
  const auto block = load_block(a.circuit, a.builtin);
  const double horizon = static_cast<double>(block.size()) * a.copies;
  const auto input = ffkit::basis_state(block.qubits(), a.input);
  return reduction_driver(g, a, horizon, [&](const ffkit::GateCircuit& b, double t, ffkit::Rng& rng) {
    const auto out = ffkit::feynman::run_reduction_local(b, a.copies, t, input, rng);
    return std::pair<int, std::uint64_t>{out.iterations, out.output};
  });
}

int cmd_timedep_run(const Global& g, const ReductionArgs& a, bool hamiltonian) {
  const auto block = load_block(a.circuit, a.builtin);
  if (hamiltonian) {
    const auto local = ffkit::timedep::to_geometrically_local(ffkit::repeat(block, a.copies));
    Output(g).write(ffkit::timedep::to_json(ffkit::timedep::to_piecewise(local.circuit)).dump(2) +
                    "\n");
    return kExitOk;
  }
  const double horizon =
      static_cast<double>(block.size()) * block.qubits() * a.copies;
  const auto input = ffkit::basis_state(block.qubits(), a.input);
  return reduction_driver(g, a, horizon, [&](const ffkit::GateCircuit& b, double t, ffkit::Rng& rng) {
    const auto out = ffkit::timedep::run_reduction_dep(b, a.copies, t, input, rng);
    return std::pair<int, std::uint64_t>{out.iterations, out.output};
  });
}

// ---- chains ----

int cmd_chain_gen(const Global& g, int levels, int bits, std::uint32_t start) {
  const auto fam = ffkit::chains::gen_family(g.seed, levels, bits);
  const auto doc = ffkit::chains::chain_to_json(fam, start);
  Table table({"i", "value"});
  const auto points = ffkit::chains::chain_values(fam, start);
  for (std::size_t i = 0; i < points.size(); ++i) {
    table.add_row({static_cast<long long>(i), points[i]});
  }
  Output(g).emit(table, doc);
  return kExitOk;
}

int cmd_chain_verify(const Global& g, int bits, std::uint32_t x0, std::uint32_t xq,
                     std::uint32_t xq1, int q) {
  const ffkit::chains::HashTable h(g.seed, bits);
  const bool ok = ffkit::chains::twisted_verify(std::cref(h), x0, xq, xq1, q);
  Table table({"x0", "xq", "xq1", "q", "verified"});
  table.add_row({x0, xq, xq1, q, ok});
  Output(g).emit(table, {{"seed", g.seed}, {"n", bits}, {"x0", x0}, {"xq", xq},
                         {"xq1", xq1}, {"q", q}, {"verified", ok}});
  return kExitOk;
}

int cmd_chain_complete(const Global& g, int bits, std::uint32_t x0, int q,
                       std::optional<std::uint32_t> xq, std::optional<std::uint32_t> xq1) {
  const ffkit::chains::HashTable h(g.seed, bits);
  if (q < 1) throw UsageError("--q must be >= 1");
  const auto honest = ffkit::chains::twisted_extend(std::cref(h), x0, q + 1);
  const auto done = ffkit::chains::complete_chain_D(
      std::cref(h), x0, xq.value_or(honest.elements[q]), xq1.value_or(honest.elements[q + 1]), q);
  Table table({"i", "value"});
  for (std::size_t i = 0; i < done.chain.elements.size(); ++i) {
    table.add_row({static_cast<long long>(i), done.chain.elements[i]});
  }
  const auto bad = done.chain.violations(std::cref(h));
  Output(g).emit(table, {{"seed", g.seed},
                         {"n", bits},
                         {"q", q},
                         {"chain", done.chain.elements},
                         {"synthesized_hash", done.synthesized_hash},
                         {"recurrence_violations", bad},
                         {"transcript", ffkit::chains::to_json(done.transcript)}});
  return kExitOk;
}

// ---- sparse oracle ----

int cmd_oracle_check(const Global& g, int levels, int bits, std::optional<double> t, int samples,
                     bool coo) {
  using namespace ffkit::sparse_oracle;
  const WalkGraphHamiltonian h(ffkit::chains::gen_family(g.seed, levels, bits));
  const auto dense = materialize(h);
  if (coo) {
    std::ostringstream text;
    write_coordinate_list(text, dense);
    Output(g).write(text.str());
    return kExitOk;
  }
  long long mismatches = 0;
  long long max_row = 0;
  for (Eigen::Index a = 0; a < dense.rows(); ++a) {
    const Vertex va = h.vertex(a);
    long long row = 0;
    for (Eigen::Index b = 0; b < dense.cols(); ++b) {
      row += dense(a, b) != 0.0;
      if (entry_oracle(h, va, h.vertex(b)) != static_cast<int>(dense(a, b))) ++mismatches;
    }
    for (int s = 1; s <= h.degree(va); ++s) {
      if (dense(a, h.index(structure_oracle(h, va, s))) != 1.0) ++mismatches;
    }
    max_row = std::max(max_row, row);
  }
  const double time = t.value_or(levels / 2.0);
  if (samples < 0) throw UsageError("--samples must be >= 0");
  const auto chain = ffkit::chains::chain_values(h.family(), 0);
  ffkit::Rng rng(g.seed);
  long long wrong = 0;
  long long beyond = 0;
  for (int s = 0; s < samples; ++s) {
    const auto out = run_reduction_oracle(h, time, rng);
    wrong += out.x_q != chain[out.q];
    beyond += out.q > time;
  }
  const bool ok = mismatches == 0 && max_row <= 2 && wrong == 0;
  Table table({"check", "value", "pass"});
  table.add_row({"oracle_dense_mismatches", mismatches, mismatches == 0});
  table.add_row({"max_row_nonzeros", max_row, max_row <= 2});
  table.add_row({"reduction_samples", samples, true});
  table.add_row({"reduction_wrong_xq", wrong, wrong == 0});
  table.add_row({"reduction_pr_q_gt_t",
                 samples ? static_cast<double>(beyond) / samples : 0.0, true});
  json doc = {{"L", levels}, {"n", bits}, {"t", time}, {"pass", ok}, {"checks", table.to_json()}};
  Output(g).emit(table, doc);
  return ok ? kExitOk : kExitCriterion;
}

// ---- acceptance ----

int cmd_acceptance(const Global& g, int only, double tail_threshold) {
  ffkit::acceptance::Options opts;
  opts.seed = g.seed;
  opts.tail_threshold = tail_threshold;
  std::vector<ffkit::acceptance::CriterionResult> results;
  for (int id = 1; id <= ffkit::acceptance::kCriterionCount; ++id) {
    if (only != 0 && id != only) continue;
    results.push_back(ffkit::acceptance::run_criterion(id, opts));
    std::cerr << ffkit::acceptance::summary_line(results.back()) << '\n';
  }
  Table table({"id", "name", "pass", "measured", "threshold", "detail"});
  bool all = true;
  for (const auto& r : results) {
    all = all && r.pass;
    table.add_row({r.id, r.name, r.pass, r.measured, r.threshold, r.detail});
  }
  Output(g).emit(table, ffkit::acceptance::report_json(results, opts));
  return all ? kExitOk : kExitCriterion;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ffkit: quantum-walk and fast-forwarding numerics"};
  app.require_subcommand(1);
  Global g;
  app.add_option("--seed", g.seed, "Seed (u64)")->capture_default_str();
  app.add_option("--out", g.out, "Output path (default stdout)");
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.fallthrough();

  std::function<int()> action;

  auto* wp = app.add_subcommand("walk-profile", "P(1,l,t) profiles and fixed-l time series");
  int wp_length = 100;
  std::vector<double> wp_times{10, 20, 30, 40, 50};
  std::vector<int> wp_fixed{1, 25, 50, 75, 100};
  double wp_step = 0.5;
  wp->add_option("--L", wp_length)->capture_default_str();
  wp->add_option("--t", wp_times, "Profile times")->delimiter(',');
  wp->add_option("--fixed-l", wp_fixed, "Vertices for the time series")->delimiter(',');
  wp->add_option("--t-step", wp_step, "Time step of the series over [0, L/2]")->capture_default_str();
  wp->callback([&] { action = [&] { return cmd_walk_profile(g, wp_length, wp_times, wp_fixed, wp_step); }; });

  auto* wt = app.add_subcommand("walk-tail", "Tail and head masses at integer t in [1, L/2]");
  std::vector<int> wt_lengths{50, 100, 200};
  double wt_threshold = 1.0 / 3.0;
  wt->add_option("--L", wt_lengths)->delimiter(',');
  wt->add_option("--tail-threshold", wt_threshold)->capture_default_str();
  wt->callback([&] { action = [&] { return cmd_walk_tail(g, wt_lengths, wt_threshold); }; });

  auto* bb = app.add_subcommand("bessel-bounds", "J_n(x)^2 against the tail and Krasikov bounds");
  int bb_nmax = 20;
  std::vector<double> bb_factors{0.5, 1, 2, 3, 4};
  bb->add_option("--n-max", bb_nmax)->capture_default_str();
  bb->add_option("--x-factor", bb_factors, "x = factor * n")->delimiter(',');
  bb->callback([&] { action = [&] { return cmd_bessel_bounds(g, bb_nmax, bb_factors); }; });

  auto* cv = app.add_subcommand("clock-verify", "Check every transition of the Johnson clock");
  int cv_n = 5;
  int cv_k = 2;
  cv->add_option("--n", cv_n)->capture_default_str();
  cv->add_option("--k", cv_k)->capture_default_str();
  cv->callback([&] { action = [&] { return cmd_clock_verify(g, cv_n, cv_k); }; });

  auto add_reduction_flags = [](CLI::App* sub, ReductionArgs& a) {
    sub->add_option("--circuit", a.circuit, "Block circuit JSON");
    sub->add_option("--builtin", a.builtin, "Builtin block: not|perm3")->capture_default_str();
    sub->add_option("--copies", a.copies, "Iterations T")->capture_default_str();
    sub->add_option("--t", a.t, "Evolution time (default: half the horizon)");
    sub->add_option("--samples", a.samples)->capture_default_str();
    sub->add_option("--input", a.input, "Input basis state")->capture_default_str();
  };

  auto* fr = app.add_subcommand("feynman-run", "Clock-measurement reduction on the history line");
  ReductionArgs fr_args;
  add_reduction_flags(fr, fr_args);
  fr->callback([&] { action = [&] { return cmd_feynman_run(g, fr_args); }; });

  auto* tr = app.add_subcommand("timedep-run", "Piecewise-Hamiltonian reduction");
  ReductionArgs tr_args;
  bool tr_hamiltonian = false;
  add_reduction_flags(tr, tr_args);
  tr->add_flag("--hamiltonian", tr_hamiltonian, "Emit the piecewise Hamiltonian as JSON");
  tr->callback([&] { action = [&] { return cmd_timedep_run(g, tr_args, tr_hamiltonian); }; });

  auto* ch = app.add_subcommand("chain", "Permutation and twisted hash chains");
  ch->require_subcommand(1);
  auto* cg = ch->add_subcommand("gen", "Generate a permutation chain");
  int cg_levels = 8;
  int cg_bits = 8;
  std::uint32_t cg_start = 0;
  cg->add_option("--L", cg_levels)->capture_default_str();
  cg->add_option("--n", cg_bits)->capture_default_str();
  cg->add_option("--start", cg_start)->capture_default_str();
  cg->callback([&] { action = [&] { return cmd_chain_gen(g, cg_levels, cg_bits, cg_start); }; });

  auto* cvf = ch->add_subcommand("verify", "Check (x0, xq, xq1) against the twisted chain");
  int tv_bits = 16;
  std::uint32_t tv_x0 = 0, tv_xq = 0, tv_xq1 = 0;
  int tv_q = 1;
  cvf->add_option("--n", tv_bits)->capture_default_str();
  cvf->add_option("--x0", tv_x0)->required();
  cvf->add_option("--xq", tv_xq)->required();
  cvf->add_option("--xq1", tv_xq1)->required();
  cvf->add_option("--q", tv_q)->required();
  cvf->callback([&] { action = [&] { return cmd_chain_verify(g, tv_bits, tv_x0, tv_xq, tv_xq1, tv_q); }; });

  auto* cc = ch->add_subcommand("complete", "Completion reduction with query transcript");
  int cc_bits = 16;
  std::uint32_t cc_x0 = 0;
  int cc_q = 4;
  std::optional<std::uint32_t> cc_xq, cc_xq1;
  cc->add_option("--n", cc_bits)->capture_default_str();
  cc->add_option("--x0", cc_x0)->capture_default_str();
  cc->add_option("--q", cc_q)->capture_default_str();
  cc->add_option("--xq", cc_xq, "Default: honest x_q");
  cc->add_option("--xq1", cc_xq1, "Default: honest x_{q+1}");
  cc->callback([&] { action = [&] { return cmd_chain_complete(g, cc_bits, cc_x0, cc_q, cc_xq, cc_xq1); }; });

  auto* oc = app.add_subcommand("oracle-check", "Entry/structure oracles against the dense matrix");
  int oc_levels = 4;
  int oc_bits = 3;
  std::optional<double> oc_t;
  int oc_samples = 1000;
  bool oc_coo = false;
  oc->add_option("--L", oc_levels)->capture_default_str();
  oc->add_option("--n", oc_bits)->capture_default_str();
  oc->add_option("--t", oc_t, "Reduction time (default L/2)");
  oc->add_option("--samples", oc_samples)->capture_default_str();
  oc->add_flag("--coo", oc_coo, "Emit the dense matrix as a coordinate list");
  oc->callback([&] { action = [&] { return cmd_oracle_check(g, oc_levels, oc_bits, oc_t, oc_samples, oc_coo); }; });

  auto* ac = app.add_subcommand("acceptance", "Run the acceptance criteria");
  int ac_only = 0;
  double ac_threshold = 1.0 / 3.0;
  ac->add_option("--only", ac_only, "Single criterion id")->check(CLI::Range(1, 13));
  ac->add_option("--tail-threshold", ac_threshold, "Fault-injection knob")->capture_default_str();
  ac->callback([&] { action = [&] { return cmd_acceptance(g, ac_only, ac_threshold); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    return action();
  } catch (const UsageError& e) {
    std::cerr << "ffkit: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ffkit::DomainError& e) {
    std::cerr << "ffkit: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ffkit::CapacityError& e) {
    std::cerr << "ffkit: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ffkit::SlotError& e) {
    std::cerr << "ffkit: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ffkit::ConsistencyError& e) {
    std::cerr << "ffkit: internal consistency: " << e.what() << '\n';
    return kExitConsistency;
  } catch (const std::exception& e) {
    std::cerr << "ffkit: internal error: " << e.what() << '\n';
    return kExitConsistency;
  }
}
