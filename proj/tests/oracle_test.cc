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

#include "diverse_match/oracle.h"

#include <gtest/gtest.h>

#include <vector>

#include "diverse_match/evaluate.h"
#include "diverse_match/generators.h"
#include "diverse_match/harness.h"
#include "diverse_match/lb_solver.h"
#include "diverse_match/tree_solver.h"

namespace diverse_match {
namespace {

TEST(ExactLbTest, HypergraphPerfectMatching) {
  // Platforms are the edges of a 3-uniform hypergraph; three of them form a
  // perfect matching of the nine items.
  LbInstance inst;
  inst.item_count = 9;
  for (std::vector<ItemId> edge : {std::vector<ItemId>{2, 3, 4},
                                   {0, 1, 2},
                                   {5, 6, 7},
                                   {3, 4, 5},
                                   {6, 7, 8},
                                   {1, 4, 7}}) {
    inst.platforms.push_back({edge, 3, {}});
  }
  auto exact = ExactLb(inst);
  EXPECT_EQ(exact.value, 3);
  EXPECT_EQ(SatisfiedLbPlatforms(inst, exact.witness).size(), 3u);
  // Greedy in id order takes {2,3,4} and then only {5,6,7}.
  EXPECT_EQ(SolveLb(inst, LbStrategy{}).satisfied.size(), 2u);
}

TEST(ExactLbTest, NoPlatforms) {
  LbInstance inst;
  inst.item_count = 4;
  EXPECT_EQ(ExactLb(inst).value, 0);
  EXPECT_EQ(ExactLbByAssignment(inst), 0);
}

TEST(ExactLbTest, MinimalSets) {
  LbPlatform p{{0, 1, 2}, 2, {}};
  EXPECT_EQ(MinimalSatisfyingSets(p),
            (std::vector<std::uint32_t>{0b011, 0b101, 0b110}));
  LbPlatform vacuous{{0, 1}, 0, {}};
  EXPECT_EQ(MinimalSatisfyingSets(vacuous), std::vector<std::uint32_t>{0});
}

TEST(ExactLbTest, AgreesWithAssignmentSearch) {
  SmallLbParams params;
  params.max_items = 8;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    LbInstance inst = GenSmallLb(params, seed);
    auto exact = ExactLb(inst);
    EXPECT_EQ(exact.value, ExactLbByAssignment(inst)) << "seed " << seed;
    EXPECT_EQ(static_cast<std::int64_t>(
                  SatisfiedLbPlatforms(inst, exact.witness).size()),
              exact.value);
  }
}

TEST(ExactLbTest, AtLeastEveryGreedy) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    LbInstance inst = GenSmallLb(SmallLbParams{}, seed + 300);
    const auto opt = ExactLb(inst).value;
    for (auto v :
         {LbVariant::kBase, LbVariant::kMinDegree, LbVariant::kAugmenting}) {
      EXPECT_GE(opt, static_cast<std::int64_t>(
                         SolveLb(inst, LbStrategy{v, 0}).satisfied.size()));
    }
  }
}

TEST(ExactLbTest, RefusesLargeInstances) {
  LbInstance inst;
  inst.item_count = 17;
  EXPECT_THROW(ExactLb(inst), LimitExceededError);
  inst.item_count = 9;
  EXPECT_THROW(ExactLbByAssignment(inst), LimitExceededError);
  OracleLimits tight;
  tight.max_candidates = 2;
  LbInstance many;
  many.item_count = 6;
  many.platforms.push_back({{0, 1, 2, 3, 4, 5}, 3, {}});
  EXPECT_THROW(ExactLb(many, tight), LimitExceededError);
}

TEST(ExactFairTest, WitnessIsStrictlyFeasible) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    FairInstance inst = GenSmallFair(SmallFairParams{}, seed);
    auto exact = ExactFair(inst);
    auto score = ScoreFair(inst, exact.witness, FairMode::kStrict);
    EXPECT_EQ(score.matched_to_satisfied, exact.value) << "seed " << seed;
    // No matched item sits on an unsatisfied platform.
    for (ItemId i = 0; i < inst.item_count; ++i) {
      if (exact.witness.is_matched(i)) {
        EXPECT_TRUE(Contains(score.satisfied, exact.witness.platform_of(i)));
      }
    }
    EXPECT_GE(exact.value, SolveFairNaive(inst).score.matched_to_satisfied);
  }
}

TEST(ExactFairTest, SmallExamples) {
  FairInstance inst;
  inst.item_count = 6;
  FairPlatform p;
  p.neighbors = {0, 1, 2, 3, 4, 5};
  p.lb = 3;
  p.ub = 5;
  p.groups.push_back({{0, 1, 2}, {1, 2}, {1, 1}});
  p.groups.push_back({{3, 4, 5}, {1, 2}, {1, 1}});
  inst.platforms.push_back(p);
  // Sizes 3 and 5 are impossible with two halves; 4 is the best.
  EXPECT_EQ(ExactFair(inst).value, 4);
  inst.platforms[0].ub = 3;
  EXPECT_EQ(ExactFair(inst).value, 0);
}

TEST(ExactTreeTest, WorkedExample) {
  TreeInstance fig = WorkedExampleTree();
  TreeSolution best = ExactTree(fig);
  EXPECT_EQ(best.total_reward, 7);
  EXPECT_TRUE(CheckTreeSolution(fig, best).empty());
}

TEST(ExactTreeTest, WitnessesAreFeasible) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    TreeGenParams params;
    params.nodes = 1 + static_cast<int>(seed % 10);
    params.groups = 1 + static_cast<int>(seed % 2);
    TreeInstance inst = GenTree(params, seed);
    LinkTree(inst);
    auto best = ExactTree(inst);
    EXPECT_TRUE(CheckTreeSolution(inst, best).empty()) << "seed " << seed;
  }
}

TEST(ExactTreeTest, RefusesLargeTrees) {
  TreeGenParams params;
  params.nodes = 21;
  EXPECT_THROW(ExactTree(GenTree(params, 1)), LimitExceededError);
}

TEST(BruteForceSteinerTest, WorkedExample) {
  CostTree steiner =
      ReduceIntermediateToSteiner(ReduceBaseToIntermediate(WorkedExampleTree()));
  EXPECT_EQ(BruteForceSteinerValue(steiner), 7);
}

}  // namespace
}  // namespace diverse_match
