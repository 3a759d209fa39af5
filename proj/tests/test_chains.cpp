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

#include <algorithm>
#include <cmath>

#include "gtest/gtest.h"

#include "ffkit/errors.hpp"
#include "ffkit/random.hpp"

namespace ffkit::chains {
namespace {

// Image counting, independent of is_bijection.
bool EveryValueHitOnce(const std::vector<Word>& table) {
  std::vector<int> count(table.size(), 0);
  for (Word y : table) {
    if (y >= table.size()) return false;
    ++count[y];
  }
  return std::all_of(count.begin(), count.end(), [](int c) { return c == 1; });
}

TEST(Family, DeterministicInSeed) {
  EXPECT_EQ(gen_family(11, 5, 6), gen_family(11, 5, 6));
  EXPECT_FALSE(gen_family(11, 5, 6) == gen_family(12, 5, 6));
}

TEST(Family, SingleBitLevelsAreIdentityOrSwap) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto fam = gen_family(seed, 8, 1);
    for (int i = 1; i <= 8; ++i) {
      const auto& t = fam.forward_table(i);
      EXPECT_TRUE((t == std::vector<Word>{0, 1}) || (t == std::vector<Word>{1, 0}));
      for (Word x = 0; x < 2; ++x) EXPECT_EQ(fam.inverse(i, fam.forward(i, x)), x);
    }
  }
}

TEST(Family, LevelsAreBijections) {
  const auto fam = gen_family(7, 4, 8);
  for (int i = 1; i <= 4; ++i) {
    EXPECT_TRUE(EveryValueHitOnce(fam.forward_table(i)));
    EXPECT_TRUE(is_bijection(fam.forward_table(i)));
    for (Word x = 0; x < 256; ++x) EXPECT_EQ(fam.inverse(i, fam.forward(i, x)), x);
  }
}

TEST(Family, RangeChecks) {
  EXPECT_THROW(gen_family(0, 65, 4), DomainError);
  EXPECT_THROW(gen_family(0, 4, 21), DomainError);
  const auto fam = gen_family(0, 3, 4);
  EXPECT_THROW(fam.forward(0, 1), DomainError);
  EXPECT_THROW(fam.forward(4, 1), DomainError);
  EXPECT_THROW(fam.forward(1, 16), DomainError);
  EXPECT_THROW(PermutationFamily(0, 1, {{0, 0}}), DomainError);
}

TEST(ChainPointTest, DirectIteration) {
  const auto fam = gen_family(3, 8, 10);
  EXPECT_EQ(chain_point(fam, 0, 17).value, 17u);
  EXPECT_EQ(chain_point(fam, 1, 17).value, fam.forward_table(1)[17]);
  Word x = 17;
  for (int i = 1; i <= 5; ++i) x = fam.forward_table(i)[x];
  EXPECT_EQ(chain_point(fam, 5, 17).value, x);
  EXPECT_EQ(chain_point(fam, 5, 17).index, 5);
  EXPECT_THROW(chain_point(fam, 9, 0), DomainError);
  EXPECT_THROW(chain_point(fam, -1, 0), DomainError);
}

TEST(ChainPointTest, HonestTranscriptIsSequential) {
  const auto fam = gen_family(5, 12, 6);
  for (int q : {1, 4, 12}) {
    QueryTranscript tr;
    chain_point(fam, q, 0, tr);
    EXPECT_EQ(tr.depth(), q);
    for (int l = 0; l < q; ++l) EXPECT_EQ(tr.width(l), 1);
    EXPECT_EQ(tr.total_queries(), static_cast<std::size_t>(q));
  }
}

TEST(ChainPointTest, ValuesAndJson) {
  const auto fam = gen_family(9, 6, 5);
  const auto values = chain_values(fam, 3);
  ASSERT_EQ(values.size(), 7u);
  for (int i = 0; i <= 6; ++i) EXPECT_EQ(values[i], chain_point(fam, i, 3).value);
  const auto doc = chain_to_json(fam, 3);
  EXPECT_EQ(doc.at("seed"), 9u);
  EXPECT_EQ(doc.at("L"), 6);
  EXPECT_EQ(doc.at("n"), 5);
  EXPECT_EQ(doc.at("start"), 3u);
  EXPECT_EQ(doc.at("points").size(), 7u);
}

TEST(Spi, InvolutionAndInverse) {
  const auto fam = gen_family(21, 4, 8);
  Rng rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    const int j = static_cast<int>(rng() % 4) + 1;
    const Word x = static_cast<Word>(rng() % 256);
    const Word r = static_cast<Word>(rng() % 512);
    EXPECT_EQ(spi_apply(fam, j, x, spi_apply(fam, j, x, r)), r);
    EXPECT_EQ(spi_apply(fam, -j, fam.forward(j, x), 0), x);
  }
  EXPECT_EQ(spi_apply(fam, 1, 0, 0), chain_point(fam, 1, 0).value);
  EXPECT_THROW(spi_apply(fam, 0, 0, 0), DomainError);
  EXPECT_THROW(spi_apply(fam, 5, 0, 0), DomainError);
  EXPECT_THROW(spi_apply(fam, 1, 0, 512), DomainError);
}

TEST(Spi, ForwardThenInverseExhaustive) {
  const auto fam = gen_family(2, 3, 8);
  for (int j = 1; j <= 3; ++j) {
    for (Word x = 0; x < 256; ++x) EXPECT_EQ(spi_apply(fam, -j, spi_apply(fam, j, x, 0), 0), x);
  }
}

TEST(Spi, UnitaryLiftIsAPermutation) {
  const auto fam = gen_family(4, 2, 2);
  // |j, x, r> over j in {-2,-1,1,2}, x in [4], r in [8].
  std::vector<int> hits(4 * 4 * 8, 0);
  const int js[] = {-2, -1, 1, 2};
  for (int a = 0; a < 4; ++a) {
    for (Word x = 0; x < 4; ++x) {
      for (Word r = 0; r < 8; ++r) ++hits[(a * 4 + x) * 8 + spi_apply(fam, js[a], x, r)];
    }
  }
  EXPECT_TRUE(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
}

TEST(Erased, TruthTableMatchesBruteForce) {
  const auto fam = gen_family(8, 5, 3);
  const ErasedOracle oracle(fam, 2);
  Word cur = 2;
  for (int i = 1; i <= 5; ++i) {
    const Word next = fam.forward(i, cur);
    int defined = 0;
    for (Word x = 0; x < 8; ++x) {
      const auto got = erased_apply(oracle, i, x);
      if (x == cur) {
        ASSERT_TRUE(got.has_value());
        EXPECT_EQ(*got, next);
        EXPECT_EQ(oracle.word(i, x), next);
      } else {
        EXPECT_FALSE(got.has_value());
        EXPECT_EQ(oracle.word(i, x), bottom(3));
      }
      defined += got.has_value();
    }
    EXPECT_EQ(defined, 1);
    EXPECT_EQ(oracle.inverse(i, next), cur);
    EXPECT_EQ(oracle.word(-i, next), cur);
    cur = next;
  }
}

TEST(Erased, DummyWordHasEmptyPayload) {
  const auto fam = gen_family(1, 3, 4);
  const ErasedOracle oracle(fam);
  for (int j : {-3, -1, 2}) {
    for (Word x = 0; x < 16; ++x) {
      const Word w = oracle.word(j, x);
      if (w & bottom(4)) {
        EXPECT_EQ(w & (bottom(4) - 1), 0u);
      }
      EXPECT_EQ(oracle.apply(j, x, oracle.apply(j, x, 5)), 5u);
    }
  }
}

TEST(Hybrid, CutoffBehaviour) {
  const auto fam = gen_family(30, 4, 3);
  const ErasedOracle oracle(fam);
  for (int j : {-4, -3, -2, -1, 1, 2, 3, 4}) {
    for (Word x = 0; x < 8; ++x) {
      for (Word r : {0u, 3u, 9u}) {
        EXPECT_EQ(hybrid_apply(oracle, 4, j, x, r), oracle.apply(j, x, r));
        EXPECT_EQ(hybrid_apply(oracle, 0, j, x, r), r);
        for (int l1 = 0; l1 <= 4; ++l1) {
          for (int l2 = 0; l2 <= 4; ++l2) {
            if (std::abs(j) <= std::min(l1, l2)) {
              EXPECT_EQ(hybrid_apply(oracle, l1, j, x, r), hybrid_apply(oracle, l2, j, x, r));
            }
          }
        }
      }
    }
  }
  EXPECT_EQ(hybrid_apply(oracle, 2, 3, oracle.chain()[2], 0), 0u);
  EXPECT_THROW(hybrid_apply(oracle, 5, 1, 0, 0), DomainError);
}

TEST(Merged, ChainEdgesAndCollisions) {
  int with = 0, without = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto chain = gen_family(seed, 4, 3);
    const auto random = gen_family(seed + 1000, 4, 3);
    const auto merged = merge_random(chain, random);
    const auto& xs = merged.chain();
    for (int i = 1; i <= 4; ++i) {
      EXPECT_EQ(merged.forward(i, xs[i - 1]), xs[i]);
      for (Word x = 0; x < 8; ++x) {
        if (x != xs[i - 1]) {
          EXPECT_EQ(merged.forward(i, x), random.forward(i, x));
        }
      }
      // Brute-force collision count.
      std::vector<int> hits(8, 0);
      for (Word x = 0; x < 8; ++x) ++hits[merged.forward(i, x)];
      const int pairs = static_cast<int>(std::count(hits.begin(), hits.end(), 2));
      EXPECT_EQ(merged.collision_pairs(i), pairs);
      const bool edge_present = random.forward(i, xs[i - 1]) == xs[i];
      EXPECT_EQ(pairs, edge_present ? 0 : 1);
      EXPECT_EQ(merged.collision_point(i).has_value(), !edge_present);
      (edge_present ? with : without) += 1;
    }
  }
  EXPECT_GT(without, 0);
  EXPECT_GT(with, 0);
}

TEST(Repair, ValidFamilyAgreeingOffTheCollision) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto chain = gen_family(seed, 4, 6);
    const auto random = gen_family(~seed, 4, 6);
    const auto merged = merge_random(chain, random);
    const auto repaired = repair_to_permutation(merged);
    const auto& xs = merged.chain();
    for (int i = 1; i <= 4; ++i) {
      EXPECT_TRUE(EveryValueHitOnce(repaired.forward_table(i)));
      EXPECT_EQ(repaired.forward(i, xs[i - 1]), xs[i]);
      const auto point = merged.collision_point(i);
      if (point) {
        EXPECT_EQ(*point, random.inverse(i, xs[i]));
        EXPECT_EQ(repaired.forward(i, *point), random.forward(i, xs[i - 1]));
        EXPECT_EQ(*merged.collision_image(i), random.forward(i, xs[i - 1]));
      } else {
        EXPECT_EQ(repaired.forward_table(i), random.forward_table(i));
      }
      for (Word x = 0; x < 64; ++x) {
        if (!point || x != *point) {
          EXPECT_EQ(repaired.forward(i, x), merged.forward(i, x));
        }
      }
    }
  }
}

TEST(Twisted, ExtendFollowsTheRecurrence) {
  const HashTable h(5, 10);
  EXPECT_EQ(twisted_extend(h, 77, 0).elements, std::vector<Word>{77});
  const auto c = twisted_extend(h, 77, 6);
  ASSERT_EQ(c.length(), 6);
  EXPECT_EQ(c.elements[1], h(77));
  Word prev2 = 0, prev = 77;
  for (int i = 1; i <= 6; ++i) {
    const Word next = h(prev) ^ prev2;
    EXPECT_EQ(c.elements[i], next);
    prev2 = prev;
    prev = next;
  }
  EXPECT_TRUE(c.violations(h).empty());
  EXPECT_EQ(twisted_extend(h, 77, 6).elements, c.elements);
}

TEST(Twisted, VerifyAcceptsHonestRejectsOthers) {
  const HashTable h(8, 16);
  const auto c = twisted_extend(h, 1234, 9);
  EXPECT_TRUE(twisted_verify(h, 1234, c.elements[8], c.elements[9], 8));
  EXPECT_FALSE(twisted_verify(h, 1234, c.elements[8], c.elements[9] ^ 1, 8));
  Rng rng(3);
  int accepted = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    accepted += twisted_verify(h, 1234, static_cast<Word>(rng() & 0xffff),
                               static_cast<Word>(rng() & 0xffff), 8);
  }
  EXPECT_LE(accepted / 10000.0, std::ldexp(1.0, -14));
}

TEST(CompletionD, HonestInputsReproduceTheChain) {
  const HashTable h(13, 12);
  for (int q : {1, 2, 5, 16}) {
    const auto honest = twisted_extend(h, 99, 2 * q + 1);
    const auto out = complete_chain_D(h, 99, honest.elements[q], honest.elements[q + 1], q);
    EXPECT_EQ(out.chain.elements, honest.elements) << "q=" << q;
    EXPECT_TRUE(out.chain.violations(h).empty());
    EXPECT_EQ(out.synthesized_hash, h(honest.elements[q]));
    EXPECT_EQ(out.transcript.depth(), q);
    for (int l = 0; l < q; ++l) EXPECT_EQ(out.transcript.width(l), 2);
    EXPECT_EQ(out.transcript.total_queries(), static_cast<std::size_t>(2 * q));
  }
  EXPECT_THROW(complete_chain_D(h, 0, 0, 0, 0), DomainError);
}

TEST(CompletionD, ArbitraryMiddleOnlyBreaksTheSeam) {
  const HashTable h(14, 12);
  Rng rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    const int q = 1 + static_cast<int>(rng() % 8);
    const auto out = complete_chain_D(h, static_cast<Word>(rng() & 0xfff),
                                      static_cast<Word>(rng() & 0xfff),
                                      static_cast<Word>(rng() & 0xfff), q);
    EXPECT_EQ(out.chain.length(), 2 * q + 1);
    for (int v : out.chain.violations(h)) EXPECT_TRUE(v == q || v == q + 1) << v;
  }
}

TEST(CompletionD, AppendsToCallerTranscript) {
  const HashTable h(1, 8);
  QueryTranscript prior;
  prior.add_layer({1});
  prior.add_layer({2, 3, 4});
  const auto out = complete_chain_D(h, 0, 5, 6, 3, prior);
  EXPECT_EQ(out.transcript.depth(), 5);
  EXPECT_EQ(out.transcript.width(1), 3);
  EXPECT_EQ(out.transcript.width(4), 2);
  EXPECT_EQ(to_json(out.transcript).at("depth"), 5);
}

TEST(BoundF, HighPrecisionValues) {
  // 40-digit evaluations of the closed form.
  EXPECT_NEAR(bound_F(4, 8, std::ldexp(1.0, 20)), 46.21478505846273442881814961345075122767,
              1e-12);
  EXPECT_NEAR(bound_F(1, 1, std::ldexp(1.0, 60)), 4.685089671705287661583159765689033614844e-15,
              1e-28);
  EXPECT_LT(bound_F(1, 1, std::ldexp(1.0, 60)), 1e-14);
  EXPECT_THROW(bound_F(0, 1, 4), DomainError);
  EXPECT_THROW(bound_F(1, 1, 1), DomainError);
}

TEST(BoundF, MonotoneAndInverseInY) {
  const double y = std::ldexp(1.0, 30);
  for (int k = 1; k < 64; ++k) {
    for (int q = 1; q < 64; ++q) {
      EXPECT_LE(bound_F(k, q, y), bound_F(k + 1, q, y));
      EXPECT_LE(bound_F(k, q, y), bound_F(k, q + 1, y));
    }
  }
  EXPECT_NEAR(bound_F(3, 5, 1024.0) * 1024.0, bound_F(3, 5, 4096.0) * 4096.0, 1e-9);
}

}  // namespace
}  // namespace ffkit::chains
