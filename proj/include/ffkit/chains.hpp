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

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

// Permutation chains, their oracle family, and twisted hash chains.
//
// Levels are 1-based. Response words are n+1 bits wide: bit n is the flag for
// the dummy value, so the dummy is (1 << n) and never collides with a real
// n-bit element.
namespace ffkit::chains {

using Word = std::uint32_t;

inline constexpr int kMaxLevels = 64;
inline constexpr int kMaxBits = 20;

inline Word bottom(int bits) { return Word{1} << bits; }

class PermutationFamily {
 public:
  // Fisher-Yates per level, each level drawing from its own counter stream.
  PermutationFamily(std::uint64_t seed, int levels, int bits);
  // Takes explicit forward tables; throws DomainError unless each is a
  // bijection on n-bit strings.
  PermutationFamily(std::uint64_t seed, int bits, std::vector<std::vector<Word>> forward);

  std::uint64_t seed() const { return seed_; }
  int levels() const { return static_cast<int>(forward_.size()); }
  int bits() const { return bits_; }
  Word domain_size() const { return Word{1} << bits_; }

  Word forward(int level, Word x) const;
  Word inverse(int level, Word x) const;
  const std::vector<Word>& forward_table(int level) const;
  const std::vector<Word>& inverse_table(int level) const;

  friend bool operator==(const PermutationFamily&, const PermutationFamily&) = default;

 private:
  void check(int level, Word x) const;

  std::uint64_t seed_;
  int bits_;
  std::vector<std::vector<Word>> forward_;
  std::vector<std::vector<Word>> inverse_;
};

PermutationFamily gen_family(std::uint64_t seed, int levels, int bits);

// True when every entry of `table` is hit exactly once.
bool is_bijection(const std::vector<Word>& table);

// Query batches; one inner vector per parallel layer.
class QueryTranscript {
 public:
  void add_layer(std::vector<Word> queries) { layers_.push_back(std::move(queries)); }
  int depth() const { return static_cast<int>(layers_.size()); }
  int width(int layer) const { return static_cast<int>(layers_.at(layer).size()); }
  std::size_t total_queries() const;
  const std::vector<std::vector<Word>>& layers() const { return layers_; }

 private:
  std::vector<std::vector<Word>> layers_;
};

nlohmann::json to_json(const QueryTranscript& transcript);

struct ChainPoint {
  int index = 0;   // q
  Word value = 0;  // x̄_{q+1} = Π_q(...Π_1(start)...)
};

ChainPoint chain_point(const PermutationFamily& fam, int q, Word start = 0);
// Same value, recording one single-query layer per level used.
ChainPoint chain_point(const PermutationFamily& fam, int q, Word start,
                       QueryTranscript& transcript);
// x̄_1 .. x̄_{L+1}; element i is the chain after i levels.
std::vector<Word> chain_values(const PermutationFamily& fam, Word start = 0);

nlohmann::json chain_to_json(const PermutationFamily& fam, Word start);

// SΠ on |j, x, r>: returns r ^ Π_j(x) for j > 0, r ^ Π_{|j|}^{-1}(x) for j < 0.
Word spi_apply(const PermutationFamily& fam, int j, Word x, Word r);

// Π̃: only the chain edges survive. Level i maps x̄_i to x̄_{i+1}; every other
// input goes to the dummy.
class ErasedOracle {
 public:
  ErasedOracle(const PermutationFamily& fam, Word start = 0);

  int levels() const { return static_cast<int>(chain_.size()) - 1; }
  int bits() const { return bits_; }
  const std::vector<Word>& chain() const { return chain_; }

  std::optional<Word> forward(int level, Word x) const;
  std::optional<Word> inverse(int level, Word x) const;
  // Encoded response for signed level j (nonzero), dummy as bottom(n).
  Word word(int j, Word x) const;
  // SΠ̃ on |j, x, r>.
  Word apply(int j, Word x, Word r) const { return r ^ word(j, x); }

 private:
  int bits_;
  std::vector<Word> chain_;
};

std::optional<Word> erased_apply(const ErasedOracle& oracle, int level, Word x);

// SΠ̃_ℓ: the erased oracle on |j| <= cutoff, identity beyond it.
Word hybrid_apply(const ErasedOracle& oracle, int cutoff, int j, Word x, Word r);

// Π̃': chain edges from `chain_family` spliced into the random family. Level i
// sends x̄_i to x̄_{i+1} and everything else through Π^R_i, so it can have one
// colliding pair per level.
class MergedOracle {
 public:
  MergedOracle(const PermutationFamily& chain_family, PermutationFamily random_family,
               Word start = 0);

  int levels() const { return random_.levels(); }
  int bits() const { return random_.bits(); }
  const std::vector<Word>& chain() const { return chain_; }
  const PermutationFamily& random_family() const { return random_; }

  Word forward(int level, Word x) const;
  Word inverse(int level, Word x) const;
  Word apply(int j, Word x, Word r) const;

  // x̄'_i = (Π^R_i)^{-1}(x̄_{i+1}) and x̄'_{-i} = Π^R_i(x̄_i); empty when the
  // random level already contains the chain edge.
  std::optional<Word> collision_point(int level) const;
  std::optional<Word> collision_image(int level) const;
  // Number of colliding input pairs at a level, by exhaustive image scan.
  int collision_pairs(int level) const;

 private:
  PermutationFamily random_;
  std::vector<Word> chain_;
};

MergedOracle merge_random(const PermutationFamily& chain_family,
                          const PermutationFamily& random_family, Word start = 0);

// H(Π̃'): reroute x̄'_i to x̄'_{-i} so every level is a bijection again.
PermutationFamily repair_to_permutation(const MergedOracle& merged);

using HashFn = std::function<Word(Word)>;

// Seeded pseudorandom function on n-bit strings, stored as a table.
class HashTable {
 public:
  HashTable(std::uint64_t seed, int bits);
  Word operator()(Word x) const { return table_.at(x); }
  int bits() const { return bits_; }

 private:
  int bits_;
  std::vector<Word> table_;
};

struct TwistedChain {
  std::vector<Word> elements;  // x_0 .. x_s

  int length() const { return static_cast<int>(elements.size()) - 1; }
  // Indices i in [1, s] where x_i != h(x_{i-1}) ^ x_{i-2} (x_{-1} = 0).
  std::vector<int> violations(const HashFn& h) const;
};

TwistedChain twisted_extend(const HashFn& h, Word x0, int s);
bool twisted_verify(const HashFn& h, Word x0, Word xq, Word xq1, int q);

struct Completion {
  TwistedChain chain;  // x_0 .. x_{2q+1}
  Word synthesized_hash = 0;  // H'(x_q) = x_{q-1} ^ x_{q+1}
  QueryTranscript transcript;
};

// Fill x_1..x_{q-1} from x_0 and x_{q+2}..x_{2q+1} from (x_q, x_{q+1}) with q
// layers of 2-parallel queries. Layers are appended to `transcript`.
Completion complete_chain_D(const HashFn& h, Word x0, Word xq, Word xq1, int q,
                            QueryTranscript transcript = {});

double bound_F(long long k, long long q, double y_size);

}  // namespace ffkit::chains
