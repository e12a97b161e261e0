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

#include "diverse_match/generators.h"

#include <gtest/gtest.h>

#include <vector>

#include "diverse_match/harness.h"
#include "diverse_match/validate.h"

namespace diverse_match {
namespace {

std::int64_t EdgeCount(const LbInstance& inst) {
  std::int64_t edges = 0;
  for (const auto& p : inst.platforms) edges += p.neighbors.size();
  return edges;
}

TEST(ErPartitionTest, DensityExtremes) {
  LbInstance full = GenErPartition(5, 3, 1.0, 4, 2, 1);
  EXPECT_EQ(full.item_count, 15);
  ASSERT_EQ(full.platforms.size(), 4u);
  for (const auto& p : full.platforms) {
    EXPECT_EQ(p.neighbors.size(), 15u);
    EXPECT_EQ(p.lb, 0);
    ASSERT_EQ(p.groups.size(), 3u);
    for (int g = 0; g < 3; ++g) {
      EXPECT_EQ(p.groups[g].lb, 2);
      EXPECT_EQ(p.groups[g].members,
                (std::vector<ItemId>{5 * g, 5 * g + 1, 5 * g + 2, 5 * g + 3,
                                     5 * g + 4}));
    }
  }
  LbInstance empty = GenErPartition(5, 3, 0.0, 4, 2, 1);
  EXPECT_EQ(EdgeCount(empty), 0);
  EXPECT_FALSE(HasErrors(ValidateLbInstance(full)));
  EXPECT_THROW(GenErPartition(5, 3, 1.5, 4, 2, 1), std::invalid_argument);
}

TEST(ErPartitionTest, SameSeedSameInstance) {
  auto a = GenErPartition(200, 4, 0.05, 100, 2, 42);
  auto b = GenErPartition(200, 4, 0.05, 100, 2, 42);
  auto c = GenErPartition(200, 4, 0.05, 100, 2, 43);
  bool differs = false;
  for (int j = 0; j < 100; ++j) {
    EXPECT_EQ(a.platforms[j].neighbors, b.platforms[j].neighbors);
    differs |= a.platforms[j].neighbors != c.platforms[j].neighbors;
  }
  EXPECT_TRUE(differs);
}

TEST(DegreeCappedTest, DegreeOne) {
  LbInstance inst = GenDegreeCapped(500, 20, 1, 5, 1, 7);
  std::vector<int> degree(500, 0);
  for (const auto& p : inst.platforms) {
    for (ItemId i : p.neighbors) ++degree[i];
  }
  for (int d : degree) EXPECT_EQ(d, 1);
}

TEST(DegreeCappedTest, SweepShape) {
  LbInstance inst =
      GenDegreeCapped(10000, 250, MaxDegreeForAverage(3), 20, 2, 5);
  EXPECT_EQ(inst.item_count, 10000);
  ASSERT_EQ(inst.platforms.size(), 250u);
  for (const auto& p : inst.platforms) {
    ASSERT_EQ(p.groups.size(), 20u);
    EXPECT_EQ(p.lb, 0);
    std::size_t listed = 0;
    for (int g = 0; g < 20; ++g) {
      EXPECT_EQ(p.groups[g].lb, 2);
      for (ItemId i : p.groups[g].members) {
        EXPECT_EQ(i / 500, g);
      }
      listed += p.groups[g].members.size();
    }
    EXPECT_EQ(listed, p.neighbors.size());
  }
  EXPECT_FALSE(HasErrors(ValidateLbInstance(inst)));
}

TEST(DegreeCappedTest, MeanDegreeMatchesTarget) {
  for (int average : {2, 20, 60}) {
    std::int64_t edges = 0;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      edges += EdgeCount(GenDegreeCapped(
          10000, 250, MaxDegreeForAverage(average), 20, 2, seed));
    }
    const double mean = static_cast<double>(edges) / (10 * 10000.0);
    EXPECT_NEAR(mean, average, 0.05 * average);
  }
}

TEST(DegreeCappedTest, RejectsDegreeAbovePlatformCount) {
  EXPECT_THROW(GenDegreeCapped(10, 5, 6, 1, 1, 0), std::invalid_argument);
  EXPECT_THROW(GenDegreeCapped(10, 5, 0, 1, 1, 0), std::invalid_argument);
}

TEST(RealLikeTest, Shape) {
  LbInstance inst = GenRealLike(3);
  EXPECT_EQ(inst.item_count, 3000);
  ASSERT_EQ(inst.platforms.size(), 100u);
  for (const auto& p : inst.platforms) {
    EXPECT_EQ(p.lb, 5);
    ASSERT_EQ(p.groups.size(), 5u);
    for (const auto& g : p.groups) EXPECT_EQ(g.lb, 1);
  }
}

TEST(FairGenTest, Defaults) {
  FairGenParams params;
  FairInstance inst = GenFair(params, 9);
  EXPECT_EQ(inst.item_count, 2000);
  ASSERT_EQ(inst.platforms.size(), 100u);
  for (const auto& p : inst.platforms) {
    EXPECT_EQ(p.lb, 10);
    EXPECT_EQ(p.ub, 30);
    ASSERT_EQ(p.groups.size(), 20u);
    for (const auto& g : p.groups) {
      EXPECT_EQ(g.alpha, (Rational{1, 40}));
      EXPECT_EQ(g.beta, (Rational{1, 10}));
    }
  }
  EXPECT_FALSE(HasErrors(ValidateFairInstance(inst)));
}

TEST(TreeGenTest, AlwaysValid) {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    TreeGenParams params;
    params.nodes = 1 + static_cast<int>(seed % 12);
    params.groups = static_cast<int>(seed % 3);
    TreeInstance inst = GenTree(params, seed);
    ASSERT_EQ(static_cast<int>(inst.nodes.size()), params.nodes);
    EXPECT_FALSE(HasErrors(ValidateTreeInstance(inst)))
        << "seed " << seed << "\n"
        << DescribeAll(ValidateTreeInstance(inst));
    for (auto b : inst.budget) EXPECT_LE(b, params.max_budget);
  }
}

TEST(TreeGenTest, SingleNode) {
  TreeGenParams params;
  params.nodes = 1;
  TreeInstance inst = GenTree(params, 4);
  ASSERT_EQ(inst.nodes.size(), 1u);
  EXPECT_FALSE(inst.nodes[0].parent.has_value());
  EXPECT_FALSE(HasErrors(ValidateTreeInstance(inst)));
}

TEST(SmallGenTest, ValidAndWithinLimits) {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    LbInstance lb = GenSmallLb(SmallLbParams{}, seed);
    EXPECT_LE(lb.item_count, 12);
    EXPECT_FALSE(HasErrors(ValidateLbInstance(lb)));
    FairInstance fair = GenSmallFair(SmallFairParams{}, seed);
    EXPECT_LE(fair.item_count, 12);
    EXPECT_FALSE(HasErrors(ValidateFairInstance(fair)));
  }
}

}  // namespace
}  // namespace diverse_match
