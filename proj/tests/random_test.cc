// Copyright 2026 The diverse-match Authors.
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

#include "diverse_match/random.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <vector>

namespace diverse_match {
namespace {

TEST(SplitMix64Test, ReferenceOutputs) {
  SplitMix64 zero(0);
  EXPECT_EQ(zero.Next(), 0xe220a8397b1dcdafULL);
  EXPECT_EQ(zero.Next(), 0x6e789e6aa1b965f4ULL);
  EXPECT_EQ(zero.Next(), 0x06c45d188009454fULL);
  SplitMix64 other(1234567);
  EXPECT_EQ(other.Next(), 0x599ed017fb08fc85ULL);
  EXPECT_EQ(other.Next(), 0x2c73f08458540fa5ULL);
  EXPECT_EQ(other.Next(), 0x883ebce5a3f27c77ULL);
}

TEST(SplitMix64Test, BelowStaysInRangeAndCoversIt) {
  SplitMix64 rng(9);
  std::vector<int> hits(7, 0);
  for (int t = 0; t < 7000; ++t) {
    auto v = rng.Below(7);
    ASSERT_LT(v, 7u);
    ++hits[v];
  }
  for (int h : hits) EXPECT_GT(h, 800);
}

TEST(SplitMix64Test, UniformInclusive) {
  SplitMix64 rng(3);
  bool lo = false, hi = false;
  for (int t = 0; t < 1000; ++t) {
    auto v = rng.Uniform(-2, 2);
    ASSERT_GE(v, -2);
    ASSERT_LE(v, 2);
    lo |= v == -2;
    hi |= v == 2;
  }
  EXPECT_TRUE(lo && hi);
}

TEST(SplitMix64Test, UnitDoubleAndBernoulliEdges) {
  SplitMix64 rng(5);
  for (int t = 0; t < 1000; ++t) {
    double u = rng.UnitDouble();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    ASSERT_FALSE(rng.Bernoulli(0.0));
    ASSERT_TRUE(rng.Bernoulli(1.0));
  }
}

TEST(SamplePrefixTest, DistinctAndPermutation) {
  SplitMix64 rng(11);
  std::vector<int> pool(20);
  std::iota(pool.begin(), pool.end(), 0);
  for (int t = 0; t < 100; ++t) {
    SamplePrefix(pool, 8, rng);
    std::vector<int> sorted = pool;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < 20; ++i) ASSERT_EQ(sorted[i], i);
  }
}

TEST(MixKeyTest, DependsOnBothInputs) {
  EXPECT_EQ(MixKey(1, 2), MixKey(1, 2));
  EXPECT_NE(MixKey(1, 2), MixKey(2, 2));
  EXPECT_NE(MixKey(1, 2), MixKey(1, 3));
}

}  // namespace
}  // namespace diverse_match
