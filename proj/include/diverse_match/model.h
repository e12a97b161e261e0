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

// Instance and solution types for the three matching problems:
//
//  * LbInstance: platforms with an overall lower bound and per-group lower
//    bounds; the goal is to maximize the number of satisfied platforms.
//  * FairInstance: platforms with a size window [lb, ub] and a proportional
//    window [alpha, beta] per group; the goal is to maximize the number of
//    items matched to satisfied platforms.
//  * TreeInstance: a rooted hierarchy of platforms with vector lower bounds and
//    rewards under a global item budget; exactly one node on every root-leaf
//    path is opened.
//
// All identifier sets are stored as sorted vectors of dense 0-based ids.

#ifndef DIVERSE_MATCH_MODEL_H_
#define DIVERSE_MATCH_MODEL_H_

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "diverse_match/rational.h"

namespace diverse_match {

using ItemId = int;
using PlatformId = int;
using NodeId = int;
using GroupId = int;

inline constexpr PlatformId kUnassigned = -1;

struct LbGroup {
  std::vector<ItemId> members;
  int lb = 0;
};

struct LbPlatform {
  std::vector<ItemId> neighbors;
  int lb = 0;
  std::vector<LbGroup> groups;
};

struct LbInstance {
  int item_count = 0;
  std::vector<LbPlatform> platforms;
};

struct FairGroup {
  std::vector<ItemId> members;
  Rational alpha;
  Rational beta;
};

struct FairPlatform {
  std::vector<ItemId> neighbors;
  int lb = 1;
  int ub = 1;
  std::vector<FairGroup> groups;
};

struct FairInstance {
  int item_count = 0;
  std::vector<FairPlatform> platforms;
};

struct TreeNode {
  std::optional<NodeId> parent;
  std::vector<NodeId> children;
  std::vector<std::int64_t> group_lb;  // one entry per global group
  std::int64_t overall_lb = 0;
  std::int64_t reward = 0;
};

struct TreeInstance {
  std::vector<TreeNode> nodes;
  NodeId root = 0;
  int group_count = 0;
  std::vector<std::int64_t> budget;  // items available per global group
  std::int64_t total_items = 0;
};

// Fills `children` and `root` from the parent links. Children are listed in
// ascending id order. Leaves `root` at -1 when there is no unique root; the
// validator reports that case.
inline void LinkTree(TreeInstance& tree) {
  tree.root = -1;
  int roots = 0;
  for (auto& node : tree.nodes) node.children.clear();
  for (NodeId id = 0; id < static_cast<NodeId>(tree.nodes.size()); ++id) {
    const auto& parent = tree.nodes[id].parent;
    if (!parent) {
      tree.root = id;
      ++roots;
    } else if (*parent >= 0 &&
               *parent < static_cast<NodeId>(tree.nodes.size())) {
      tree.nodes[*parent].children.push_back(id);
    }
  }
  if (roots != 1) tree.root = -1;
}

// Item -> platform map. Unmatched items hold kUnassigned.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(int item_count) : platform_of_(item_count, kUnassigned) {}

  int item_count() const { return static_cast<int>(platform_of_.size()); }
  PlatformId platform_of(ItemId item) const { return platform_of_[item]; }
  bool is_matched(ItemId item) const {
    return platform_of_[item] != kUnassigned;
  }
  void Assign(ItemId item, PlatformId platform) {
    platform_of_[item] = platform;
  }
  void Unassign(ItemId item) { platform_of_[item] = kUnassigned; }
  const std::vector<PlatformId>& raw() const { return platform_of_; }

  // M_j for every platform id below `platform_count`, each sorted.
  std::vector<std::vector<ItemId>> MatchedSets(int platform_count) const {
    std::vector<std::vector<ItemId>> sets(platform_count);
    for (ItemId i = 0; i < item_count(); ++i) {
      PlatformId p = platform_of_[i];
      if (p >= 0 && p < platform_count) sets[p].push_back(i);
    }
    return sets;
  }

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  std::vector<PlatformId> platform_of_;
};

struct TreeSolution {
  // Sorted node ids. When no original node can be opened the only entry is
  // the id of the virtual root added by the reduction, which equals the
  // number of nodes of the instance (see `added_root`).
  std::vector<NodeId> satisfied_nodes;
  bool added_root = false;
  std::map<NodeId, std::vector<std::int64_t>> allocation;
  std::int64_t total_reward = 0;

  friend bool operator==(const TreeSolution&, const TreeSolution&) = default;
};

inline bool Contains(const std::vector<int>& sorted, int value) {
  return std::binary_search(sorted.begin(), sorted.end(), value);
}

}  // namespace diverse_match

#endif  // DIVERSE_MATCH_MODEL_H_
