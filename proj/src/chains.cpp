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

#include "ffkit/chains.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "ffkit/errors.hpp"
#include "ffkit/random.hpp"

namespace ffkit::chains {
namespace {

void check_shape(int levels, int bits) {
  if (levels < 1 || levels > kMaxLevels) {
    throw DomainError("permutation family: levels must lie in [1, 64]", kMaxLevels);
  }
  if (bits < 1 || bits > kMaxBits) {
    throw DomainError("permutation family: bits must lie in [1, 20]", kMaxBits);
  }
}

std::vector<Word> invert(const std::vector<Word>& table) {
  std::vector<Word> inv(table.size());
  for (std::size_t x = 0; x < table.size(); ++x) inv[table[x]] = static_cast<Word>(x);
  return inv;
}

std::uint64_t level_key(std::uint64_t seed, int level) {
  return splitmix64(seed) ^ splitmix64(0xa0761d6478bd642fULL * static_cast<std::uint64_t>(level));
}

void check_level(int levels, int level, const char* who) {
  if (level < 1 || level > levels) {
    throw DomainError(std::string(who) + ": level out of [1, L]", levels);
  }
}

}  // namespace

bool is_bijection(const std::vector<Word>& table) {
  std::vector<bool> hit(table.size(), false);
  for (Word y : table) {
    if (y >= table.size() || hit[y]) return false;
    hit[y] = true;
  }
  return true;
}

PermutationFamily::PermutationFamily(std::uint64_t seed, int levels, int bits)
    : seed_(seed), bits_(bits) {
  check_shape(levels, bits);
  const Word size = domain_size();
  forward_.reserve(levels);
  for (int level = 1; level <= levels; ++level) {
    CounterStream stream(level_key(seed, level));
    std::vector<Word> table(size);
    for (Word x = 0; x < size; ++x) table[x] = x;
    for (Word i = size - 1; i > 0; --i) {
      std::swap(table[i], table[stream.below(std::uint64_t{i} + 1)]);
    }
    forward_.push_back(std::move(table));
  }
  inverse_.reserve(levels);
  for (const auto& t : forward_) inverse_.push_back(invert(t));
}

PermutationFamily::PermutationFamily(std::uint64_t seed, int bits,
                                     std::vector<std::vector<Word>> forward)
    : seed_(seed), bits_(bits), forward_(std::move(forward)) {
  check_shape(static_cast<int>(forward_.size()), bits);
  for (const auto& t : forward_) {
    if (t.size() != domain_size() || !is_bijection(t)) {
      throw DomainError("permutation family: table is not a bijection");
    }
    inverse_.push_back(invert(t));
  }
}

void PermutationFamily::check(int level, Word x) const {
  check_level(levels(), level, "permutation family");
  if (x >= domain_size()) throw DomainError("permutation family: input exceeds n bits");
}

Word PermutationFamily::forward(int level, Word x) const {
  check(level, x);
  return forward_[level - 1][x];
}

Word PermutationFamily::inverse(int level, Word x) const {
  check(level, x);
  return inverse_[level - 1][x];
}

const std::vector<Word>& PermutationFamily::forward_table(int level) const {
  check_level(levels(), level, "forward_table");
  return forward_[level - 1];
}

const std::vector<Word>& PermutationFamily::inverse_table(int level) const {
  check_level(levels(), level, "inverse_table");
  return inverse_[level - 1];
}

PermutationFamily gen_family(std::uint64_t seed, int levels, int bits) {
  return PermutationFamily(seed, levels, bits);
}

std::size_t QueryTranscript::total_queries() const {
  std::size_t total = 0;
  for (const auto& l : layers_) total += l.size();
  return total;
}

nlohmann::json to_json(const QueryTranscript& transcript) {
  return {{"depth", transcript.depth()}, {"layers", transcript.layers()}};
}

ChainPoint chain_point(const PermutationFamily& fam, int q, Word start) {
  QueryTranscript unused;
  return chain_point(fam, q, start, unused);
}

ChainPoint chain_point(const PermutationFamily& fam, int q, Word start,
                       QueryTranscript& transcript) {
  if (q < 0 || q > fam.levels()) {
    throw DomainError("chain_point: q must lie in [0, L]", fam.levels());
  }
  if (start >= fam.domain_size()) throw DomainError("chain_point: start exceeds n bits");
  Word x = start;
  for (int level = 1; level <= q; ++level) {
    transcript.add_layer({x});
    x = fam.forward(level, x);
  }
  return {q, x};
}

std::vector<Word> chain_values(const PermutationFamily& fam, Word start) {
  if (start >= fam.domain_size()) throw DomainError("chain_values: start exceeds n bits");
  std::vector<Word> out{start};
  for (int level = 1; level <= fam.levels(); ++level) {
    out.push_back(fam.forward(level, out.back()));
  }
  return out;
}

nlohmann::json chain_to_json(const PermutationFamily& fam, Word start) {
  return {{"seed", fam.seed()},
          {"L", fam.levels()},
          {"n", fam.bits()},
          {"start", start},
          {"points", chain_values(fam, start)}};
}

Word spi_apply(const PermutationFamily& fam, int j, Word x, Word r) {
  if (j == 0) throw DomainError("spi_apply: level j = 0 is not a query");
  if (r >= (Word{2} << fam.bits())) throw DomainError("spi_apply: response exceeds n+1 bits");
  return j > 0 ? r ^ fam.forward(j, x) : r ^ fam.inverse(-j, x);
}

ErasedOracle::ErasedOracle(const PermutationFamily& fam, Word start)
    : bits_(fam.bits()), chain_(chain_values(fam, start)) {}

std::optional<Word> ErasedOracle::forward(int level, Word x) const {
  check_level(levels(), level, "erased oracle");
  if (x == chain_[level - 1]) return chain_[level];
  return std::nullopt;
}

std::optional<Word> ErasedOracle::inverse(int level, Word x) const {
  check_level(levels(), level, "erased oracle");
  if (x == chain_[level]) return chain_[level - 1];
  return std::nullopt;
}

Word ErasedOracle::word(int j, Word x) const {
  if (j == 0) throw DomainError("erased oracle: level j = 0 is not a query");
  const auto y = j > 0 ? forward(j, x) : inverse(-j, x);
  return y ? *y : bottom(bits_);
}

std::optional<Word> erased_apply(const ErasedOracle& oracle, int level, Word x) {
  return oracle.forward(level, x);
}

Word hybrid_apply(const ErasedOracle& oracle, int cutoff, int j, Word x, Word r) {
  if (cutoff < 0 || cutoff > oracle.levels()) {
    throw DomainError("hybrid_apply: cutoff must lie in [0, L]", oracle.levels());
  }
  if (j == 0) throw DomainError("hybrid_apply: level j = 0 is not a query");
  if (std::abs(j) > cutoff) return r;
  return oracle.apply(j, x, r);
}

MergedOracle::MergedOracle(const PermutationFamily& chain_family,
                           PermutationFamily random_family, Word start)
    : random_(std::move(random_family)), chain_(chain_values(chain_family, start)) {
  if (chain_family.levels() != random_.levels() || chain_family.bits() != random_.bits()) {
    throw DomainError("merge_random: families differ in (L, n)");
  }
}

Word MergedOracle::forward(int level, Word x) const {
  check_level(levels(), level, "merged oracle");
  return x == chain_[level - 1] ? chain_[level] : random_.forward(level, x);
}

Word MergedOracle::inverse(int level, Word x) const {
  check_level(levels(), level, "merged oracle");
  return x == chain_[level] ? chain_[level - 1] : random_.inverse(level, x);
}

Word MergedOracle::apply(int j, Word x, Word r) const {
  if (j == 0) throw DomainError("merged oracle: level j = 0 is not a query");
  return r ^ (j > 0 ? forward(j, x) : inverse(-j, x));
}

std::optional<Word> MergedOracle::collision_point(int level) const {
  check_level(levels(), level, "merged oracle");
  if (random_.forward(level, chain_[level - 1]) == chain_[level]) return std::nullopt;
  return random_.inverse(level, chain_[level]);
}

std::optional<Word> MergedOracle::collision_image(int level) const {
  check_level(levels(), level, "merged oracle");
  if (random_.forward(level, chain_[level - 1]) == chain_[level]) return std::nullopt;
  return random_.forward(level, chain_[level - 1]);
}

int MergedOracle::collision_pairs(int level) const {
  check_level(levels(), level, "merged oracle");
  std::vector<int> hits(random_.domain_size(), 0);
  for (Word x = 0; x < random_.domain_size(); ++x) ++hits[forward(level, x)];
  int pairs = 0;
  for (int h : hits) pairs += h * (h - 1) / 2;
  return pairs;
}

MergedOracle merge_random(const PermutationFamily& chain_family,
                          const PermutationFamily& random_family, Word start) {
  return MergedOracle(chain_family, random_family, start);
}

PermutationFamily repair_to_permutation(const MergedOracle& merged) {
  std::vector<std::vector<Word>> tables;
  for (int level = 1; level <= merged.levels(); ++level) {
    std::vector<Word> t(merged.random_family().domain_size());
    for (Word x = 0; x < t.size(); ++x) t[x] = merged.forward(level, x);
    if (const auto p = merged.collision_point(level)) t[*p] = *merged.collision_image(level);
    tables.push_back(std::move(t));
  }
  return PermutationFamily(merged.random_family().seed(), merged.bits(), std::move(tables));
}

HashTable::HashTable(std::uint64_t seed, int bits) : bits_(bits) {
  if (bits < 1 || bits > kMaxBits) throw DomainError("HashTable: bits must lie in [1, 20]", kMaxBits);
  CounterStream stream(seed ^ 0x6a09e667f3bcc909ULL);
  const Word size = Word{1} << bits;
  table_.resize(size);
  for (auto& y : table_) y = static_cast<Word>(stream.next() & (size - 1));
}

std::vector<int> TwistedChain::violations(const HashFn& h) const {
  std::vector<int> bad;
  for (std::size_t i = 1; i < elements.size(); ++i) {
    const Word prev2 = i >= 2 ? elements[i - 2] : 0;
    if (elements[i] != (h(elements[i - 1]) ^ prev2)) bad.push_back(static_cast<int>(i));
  }
  return bad;
}

TwistedChain twisted_extend(const HashFn& h, Word x0, int s) {
  if (s < 0) throw DomainError("twisted_extend: s >= 0 violated");
  TwistedChain chain;
  chain.elements.reserve(static_cast<std::size_t>(s) + 1);
  chain.elements.push_back(x0);
  Word prev2 = 0;
  for (int i = 1; i <= s; ++i) {
    const Word prev = chain.elements.back();
    chain.elements.push_back(h(prev) ^ prev2);
    prev2 = prev;
  }
  return chain;
}

bool twisted_verify(const HashFn& h, Word x0, Word xq, Word xq1, int q) {
  if (q < 1) throw DomainError("twisted_verify: q >= 1 violated", 1);
  const auto chain = twisted_extend(h, x0, q + 1);
  return chain.elements[q] == xq && chain.elements[q + 1] == xq1;
}

Completion complete_chain_D(const HashFn& h, Word x0, Word xq, Word xq1, int q,
                            QueryTranscript transcript) {
  if (q < 1) throw DomainError("complete_chain_D: q >= 1 violated", 1);
  std::vector<Word> x(2 * static_cast<std::size_t>(q) + 2, 0);
  x[0] = x0;
  x[q] = xq;
  x[q + 1] = xq1;
  for (int i = 1; i <= q; ++i) {
    transcript.add_layer({x[i - 1], x[q + i]});
    const Word low = h(x[i - 1]);
    const Word high = h(x[q + i]);
    // The last low query would recompute x_q, which is given.
    if (i < q) x[i] = low ^ (i >= 2 ? x[i - 2] : 0);
    x[q + i + 1] = high ^ x[q + i - 1];
  }
  Completion out;
  out.chain.elements = std::move(x);
  out.synthesized_hash = out.chain.elements[q - 1] ^ out.chain.elements[q + 1];
  out.transcript = std::move(transcript);
  return out;
}

double bound_F(long long k, long long q, double y_size) {
  if (k < 1 || q < 1) throw DomainError("bound_F: k, q >= 1 violated", 1);
  if (!(y_size >= 2)) throw DomainError("bound_F: |Y| >= 2 violated", 2);
  const double e = std::numbers::e;
  const double kd = static_cast<double>(k);
  const double qd = static_cast<double>(q);
  const double a = qd * e * kd * std::sqrt(5 * kd * qd * (kd * qd + 1) / y_size);
  const double b = e * (qd + 2) * std::sqrt(5 * (qd + 2) * (qd + 3) / y_size);
  const double c = std::sqrt((qd + 2) / y_size);
  return (a + b + c) * (a + b + c);
}

}  // namespace ffkit::chains
