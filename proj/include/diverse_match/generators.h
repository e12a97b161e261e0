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

// Seeded random instance generators. Every generator is a pure function of its
// parameters and seed, and every emitted instance passes its validator
// (warnings allowed).

#ifndef DIVERSE_MATCH_GENERATORS_H_
#define DIVERSE_MATCH_GENERATORS_H_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "diverse_match/model.h"
#include "diverse_match/random.h"
#include "diverse_match/rational.h"

namespace diverse_match {

// n_per_group * groups items; item i is in global group i / n_per_group. Each
// (platform, item) edge is present with probability rho, drawn platform by
// platform. Every platform lists all global groups restricted to its
// neighbors, each with lower bound `ell`, and has overall bound 0.
inline LbInstance GenErPartition(int n_per_group, int groups, double rho,
                                 int platform_count, int ell,
                                 std::uint64_t seed) {
  if (n_per_group < 0 || groups < 0 || platform_count < 0 || ell < 0) {
    throw std::invalid_argument("generator counts must be non-negative");
  }
  if (!(rho >= 0.0 && rho <= 1.0)) {
    throw std::invalid_argument("edge probability must lie in [0, 1]");
  }
  SplitMix64 rng(seed);
  LbInstance inst;
  inst.item_count = n_per_group * groups;
  inst.platforms.resize(platform_count);
  for (auto& p : inst.platforms) {
    p.groups.resize(groups);
    for (int g = 0; g < groups; ++g) {
      p.groups[g].lb = ell;
      for (int t = 0; t < n_per_group; ++t) {
        if (rng.Bernoulli(rho)) {
          ItemId i = g * n_per_group + t;
          p.neighbors.push_back(i);
          p.groups[g].members.push_back(i);
        }
      }
    }
  }
  return inst;
}

// Global group of item i when `items` items are split into `groups` nearly
// equal consecutive ranges.
inline int PartitionGroup(int items, int groups, ItemId i) {
  return static_cast<int>(static_cast<std::int64_t>(i) * groups / items);
}

// Picks each item's neighbor platforms: a degree uniform in [1, max_degree],
// then that many distinct platforms uniformly. Returns per-platform sorted
// neighbor lists.
inline std::vector<std::vector<ItemId>> SampleItemSide(int items, int platforms,
                                                       int max_degree,
                                                       SplitMix64& rng) {
  if (max_degree < 1 || max_degree > platforms) {
    throw std::invalid_argument("max degree " + std::to_string(max_degree) +
                                " must lie in [1, platform count " +
                                std::to_string(platforms) + "]");
  }
  std::vector<std::vector<ItemId>> neighbors(platforms);
  std::vector<PlatformId> pool(platforms);
  std::iota(pool.begin(), pool.end(), 0);
  for (ItemId i = 0; i < items; ++i) {
    const auto degree = static_cast<std::size_t>(rng.Uniform(1, max_degree));
    SamplePrefix(pool, degree, rng);
    for (std::size_t t = 0; t < degree; ++t) neighbors[pool[t]].push_back(i);
  }
  return neighbors;
}

// Item-side sampling with an equal-size global group partition. Every
// platform lists all `group_count` groups restricted to its neighbors, each
// with lower bound `ell_group`, plus overall bound `overall_lb`.
inline LbInstance GenDegreeCapped(int items, int platforms, int max_degree,
                                  int group_count, int ell_group,
                                  std::uint64_t seed, int overall_lb = 0) {
  if (items < 0 || group_count < 1 || ell_group < 0 || overall_lb < 0) {
    throw std::invalid_argument("invalid degree-capped generator parameters");
  }
  SplitMix64 rng(seed);
  auto neighbors = SampleItemSide(items, platforms, max_degree, rng);
  LbInstance inst;
  inst.item_count = items;
  inst.platforms.resize(platforms);
  for (PlatformId j = 0; j < platforms; ++j) {
    LbPlatform& p = inst.platforms[j];
    p.neighbors = std::move(neighbors[j]);
    p.lb = overall_lb;
    p.groups.resize(group_count);
    for (auto& g : p.groups) g.lb = ell_group;
    for (ItemId i : p.neighbors) {
      p.groups[PartitionGroup(items, group_count, i)].members.push_back(i);
    }
  }
  return inst;
}

// Analogue of a small course-allocation data set: 3000 items, 100 platforms,
// overall bound 5 and five major groups with bound 1 each.
inline LbInstance GenRealLike(std::uint64_t seed, int max_degree = 6) {
  return GenDegreeCapped(3000, 100, max_degree, 5, 1, seed, 5);
}

struct FairGenParams {
  int items = 2000;
  int platforms = 100;
  int groups = 20;
  int lb = 10;
  int ub = 30;
  Rational alpha{1, 40};
  Rational beta{1, 10};
  int max_degree = 10;
};

// Same sampling as GenDegreeCapped; every platform lists all groups.
inline FairInstance GenFair(const FairGenParams& params, std::uint64_t seed) {
  if (params.items < 0 || params.groups < 1) {
    throw std::invalid_argument("invalid fair generator parameters");
  }
  SplitMix64 rng(seed);
  auto neighbors =
      SampleItemSide(params.items, params.platforms, params.max_degree, rng);
  FairInstance inst;
  inst.item_count = params.items;
  inst.platforms.resize(params.platforms);
  for (PlatformId j = 0; j < params.platforms; ++j) {
    FairPlatform& p = inst.platforms[j];
    p.neighbors = std::move(neighbors[j]);
    p.lb = params.lb;
    p.ub = params.ub;
    p.groups.resize(params.groups);
    for (auto& g : p.groups) {
      g.alpha = params.alpha;
      g.beta = params.beta;
    }
    for (ItemId i : p.neighbors) {
      p.groups[PartitionGroup(params.items, params.groups, i)]
          .members.push_back(i);
    }
  }
  return inst;
}

struct TreeGenParams {
  int nodes = 7;
  int groups = 1;
  std::int64_t max_leaf_lb = 3;
  std::int64_t max_leaf_reward = 5;
  std::int64_t max_budget = 12;
};

// Node 0 is the root and node i > 0 hangs below a uniform node in [0, i).
// Leaves draw their bounds and rewards directly; internal nodes draw each
// entry uniformly up to the sum over their children, so both monotonicity
// conditions hold by construction. Overall bounds sometimes exceed the group
// sum, and the total item count sometimes falls below the summed budget.
inline TreeInstance GenTree(const TreeGenParams& params, std::uint64_t seed) {
  if (params.nodes < 1 || params.groups < 0) {
    throw std::invalid_argument("invalid tree generator parameters");
  }
  SplitMix64 rng(seed);
  const int n = params.nodes;
  const int k = params.groups;
  TreeInstance inst;
  inst.group_count = k;
  inst.nodes.resize(n);
  for (NodeId v = 1; v < n; ++v) {
    inst.nodes[v].parent = static_cast<NodeId>(rng.Below(v));
  }
  LinkTree(inst);
  for (NodeId v = n - 1; v >= 0; --v) {
    TreeNode& node = inst.nodes[v];
    node.group_lb.assign(k, 0);
    if (node.children.empty()) {
      std::int64_t sum = 0;
      for (auto& c : node.group_lb) {
        c = rng.Uniform(0, params.max_leaf_lb);
        sum += c;
      }
      node.overall_lb = rng.Bernoulli(0.3) ? sum + rng.Uniform(1, 2) : sum;
      node.reward = rng.Uniform(0, params.max_leaf_reward);
      continue;
    }
    std::vector<std::int64_t> lb_sum(k, 0);
    std::int64_t overall_sum = 0;
    std::int64_t reward_sum = 0;
    for (NodeId c : node.children) {
      for (int g = 0; g < k; ++g) lb_sum[g] += inst.nodes[c].group_lb[g];
      overall_sum += inst.nodes[c].overall_lb;
      reward_sum += inst.nodes[c].reward;
    }
    std::int64_t sum = 0;
    for (int g = 0; g < k; ++g) {
      node.group_lb[g] = rng.Uniform(0, lb_sum[g]);
      sum += node.group_lb[g];
    }
    node.overall_lb = rng.Uniform(std::min(sum, overall_sum), overall_sum);
    node.reward = rng.Uniform(0, reward_sum);
  }
  inst.budget.assign(k, 0);
  std::int64_t budget_sum = 0;
  for (auto& b : inst.budget) {
    b = rng.Uniform(0, params.max_budget);
    budget_sum += b;
  }
  inst.total_items = rng.Bernoulli(0.25)
                         ? rng.Uniform(budget_sum / 2, budget_sum)
                         : budget_sum + rng.Uniform(0, 2);
  return inst;
}

struct SmallLbParams {
  int max_items = 12;
  int max_platforms = 4;
  int max_bound = 3;
  int max_groups = 2;
  bool disjoint_groups = false;
};

// Small random instances for oracle comparisons. Bounds never exceed the
// available members, so every platform is satisfiable on its own.
inline LbInstance GenSmallLb(const SmallLbParams& params, std::uint64_t seed) {
  SplitMix64 rng(seed);
  LbInstance inst;
  inst.item_count = static_cast<int>(rng.Uniform(1, params.max_items));
  const int m = static_cast<int>(rng.Uniform(0, params.max_platforms));
  inst.platforms.resize(m);
  for (auto& p : inst.platforms) {
    const double density = 0.2 + 0.6 * rng.UnitDouble();
    for (ItemId i = 0; i < inst.item_count; ++i) {
      if (rng.Bernoulli(density)) p.neighbors.push_back(i);
    }
    const int deg = static_cast<int>(p.neighbors.size());
    p.lb = static_cast<int>(rng.Uniform(0, std::min(params.max_bound, deg)));
    const int groups = static_cast<int>(rng.Uniform(0, params.max_groups));
    if (params.disjoint_groups) {
      std::vector<int> label(deg);
      for (auto& l : label) l = static_cast<int>(rng.Below(groups + 1)) - 1;
      for (int g = 0; g < groups; ++g) {
        LbGroup group;
        for (int t = 0; t < deg; ++t) {
          if (label[t] == g) group.members.push_back(p.neighbors[t]);
        }
        p.groups.push_back(std::move(group));
      }
    } else {
      for (int g = 0; g < groups; ++g) {
        LbGroup group;
        for (ItemId i : p.neighbors) {
          if (rng.Bernoulli(0.5)) group.members.push_back(i);
        }
        p.groups.push_back(std::move(group));
      }
    }
    for (auto& group : p.groups) {
      group.lb = static_cast<int>(rng.Uniform(
          0, std::min<int>(params.max_bound,
                           static_cast<int>(group.members.size()))));
    }
  }
  return inst;
}

struct SmallFairParams {
  int max_items = 12;
  int max_platforms = 3;
  int max_groups = 3;
  int max_lb = 4;
  int max_den = 6;
};

// Small random instances with groups partitioning each neighbor set.
inline FairInstance GenSmallFair(const SmallFairParams& params,
                                 std::uint64_t seed) {
  SplitMix64 rng(seed);
  FairInstance inst;
  inst.item_count = static_cast<int>(rng.Uniform(1, params.max_items));
  const int m = static_cast<int>(rng.Uniform(1, params.max_platforms));
  inst.platforms.resize(m);
  auto fraction = [&] {
    auto den = rng.Uniform(1, params.max_den);
    return Rational{rng.Uniform(0, den), den};
  };
  for (auto& p : inst.platforms) {
    const double density = 0.3 + 0.7 * rng.UnitDouble();
    for (ItemId i = 0; i < inst.item_count; ++i) {
      if (rng.Bernoulli(density)) p.neighbors.push_back(i);
    }
    p.lb = static_cast<int>(rng.Uniform(1, params.max_lb));
    p.ub = p.lb * static_cast<int>(rng.Uniform(1, 3)) +
           static_cast<int>(rng.Uniform(0, 1));
    const int groups = static_cast<int>(rng.Uniform(1, params.max_groups));
    p.groups.resize(groups);
    for (ItemId i : p.neighbors) {
      p.groups[rng.Below(groups)].members.push_back(i);
    }
    for (auto& g : p.groups) {
      Rational a = fraction();
      Rational b = fraction();
      if (!LessEq(a, b)) std::swap(a, b);
      g.alpha = a;
      g.beta = b;
    }
  }
  return inst;
}

}  // namespace diverse_match

#endif  // DIVERSE_MATCH_GENERATORS_H_
