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

// Structural validation for all instance kinds. Violations are data: every
// problem found is reported with its location, and callers decide whether to
// reject. Warnings mark well-formed but degenerate inputs (a platform whose
// bounds are vacuous, or one that can never be satisfied).

#ifndef DIVERSE_MATCH_VALIDATE_H_
#define DIVERSE_MATCH_VALIDATE_H_

#include <cstdint>
#include <string>
#include <vector>

#include "diverse_match/errors.h"
#include "diverse_match/model.h"
#include "diverse_match/rational.h"

namespace diverse_match {

enum class ViolationKind {
  kNegativeCount,
  kIdOutOfRange,
  kUnsortedIds,
  kGroupNotSubset,
  kGroupLbExceedsSize,
  kDegeneratePlatform,
  kLbBelowOne,
  kLbExceedsUb,
  kBadRational,
  kAlphaExceedsBeta,
  kGroupsOverlap,
  kGroupsDoNotCover,
  kEmptyTree,
  kBadParent,
  kRootCount,
  kUnreachableNode,
  kVectorSize,
  kGroupMonotonicity,
  kOverallMonotonicity,
  kRewardMonotonicity,
};

enum class Severity { kError, kWarning };

struct Violation {
  ViolationKind kind;
  Severity severity = Severity::kError;
  std::string location;
  std::string message;
};

inline bool HasErrors(const std::vector<Violation>& violations) {
  for (const auto& v : violations) {
    if (v.severity == Severity::kError) return true;
  }
  return false;
}

inline std::string Describe(const Violation& v) {
  return std::string(v.severity == Severity::kError ? "error" : "warning") +
         ": " + v.location + ": " + v.message;
}

inline std::string DescribeAll(const std::vector<Violation>& violations) {
  std::string out;
  for (const auto& v : violations) {
    if (!out.empty()) out += "\n";
    out += Describe(v);
  }
  return out;
}

inline void RequireValid(const std::vector<Violation>& violations) {
  if (HasErrors(violations)) throw ValidationError(DescribeAll(violations));
}

namespace internal {

inline void CheckIdList(const std::vector<int>& ids, int bound,
                        const std::string& where, std::vector<Violation>& out) {
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (ids[i] < 0 || ids[i] >= bound) {
      out.push_back({ViolationKind::kIdOutOfRange, Severity::kError, where,
                     "id " + std::to_string(ids[i]) + " out of range [0, " +
                         std::to_string(bound) + ")"});
    }
    if (i > 0 && ids[i] <= ids[i - 1]) {
      out.push_back({ViolationKind::kUnsortedIds, Severity::kError, where,
                     "ids must be strictly increasing (duplicate or unsorted " +
                         std::to_string(ids[i]) + ")"});
    }
  }
}

// Members not contained in `neighbors`, both sorted.
inline std::vector<int> Outside(const std::vector<int>& members,
                                const std::vector<int>& neighbors) {
  std::vector<int> out;
  for (int m : members) {
    if (!Contains(neighbors, m)) out.push_back(m);
  }
  return out;
}

inline std::string PlatformLoc(int j) {
  return "platform " + std::to_string(j);
}

inline std::string GroupLoc(int j, int g) {
  return "platform " + std::to_string(j) + " group " + std::to_string(g);
}

}  // namespace internal

inline std::vector<Violation> ValidateLbInstance(const LbInstance& inst) {
  using internal::GroupLoc;
  using internal::PlatformLoc;
  std::vector<Violation> out;
  if (inst.item_count < 0) {
    out.push_back({ViolationKind::kNegativeCount, Severity::kError, "instance",
                   "item count is negative"});
    return out;
  }
  for (int j = 0; j < static_cast<int>(inst.platforms.size()); ++j) {
    const LbPlatform& p = inst.platforms[j];
    internal::CheckIdList(p.neighbors, inst.item_count, PlatformLoc(j), out);
    if (p.lb < 0) {
      out.push_back({ViolationKind::kNegativeCount, Severity::kError,
                     PlatformLoc(j), "overall lower bound is negative"});
    }
    if (p.lb == 0 && p.groups.empty()) {
      out.push_back({ViolationKind::kDegeneratePlatform, Severity::kWarning,
                     PlatformLoc(j),
                     "no bounds: platform is satisfied even when empty"});
    }
    for (int g = 0; g < static_cast<int>(p.groups.size()); ++g) {
      const LbGroup& group = p.groups[g];
      internal::CheckIdList(group.members, inst.item_count, GroupLoc(j, g),
                            out);
      auto outside = internal::Outside(group.members, p.neighbors);
      if (!outside.empty()) {
        out.push_back({ViolationKind::kGroupNotSubset, Severity::kError,
                       GroupLoc(j, g),
                       "group not a subset of neighbors (item " +
                           std::to_string(outside.front()) + ")"});
      }
      if (group.lb < 0) {
        out.push_back({ViolationKind::kNegativeCount, Severity::kError,
                       GroupLoc(j, g), "group lower bound is negative"});
      } else if (group.lb > static_cast<int>(group.members.size())) {
        out.push_back({ViolationKind::kGroupLbExceedsSize, Severity::kWarning,
                       GroupLoc(j, g),
                       "group lb exceeds group size (" +
                           std::to_string(group.lb) + " > " +
                           std::to_string(group.members.size()) +
                           "); platform can never be satisfied"});
      }
    }
  }
  return out;
}

inline std::vector<Violation> ValidateFairInstance(const FairInstance& inst) {
  using internal::GroupLoc;
  using internal::PlatformLoc;
  std::vector<Violation> out;
  if (inst.item_count < 0) {
    out.push_back({ViolationKind::kNegativeCount, Severity::kError, "instance",
                   "item count is negative"});
    return out;
  }
  std::vector<int> owner(inst.item_count, -1);
  for (int j = 0; j < static_cast<int>(inst.platforms.size()); ++j) {
    const FairPlatform& p = inst.platforms[j];
    internal::CheckIdList(p.neighbors, inst.item_count, PlatformLoc(j), out);
    if (p.lb < 1) {
      out.push_back({ViolationKind::kLbBelowOne, Severity::kError,
                     PlatformLoc(j), "lower bound must be at least 1"});
    }
    if (p.ub < p.lb) {
      out.push_back({ViolationKind::kLbExceedsUb, Severity::kError,
                     PlatformLoc(j), "upper bound below lower bound"});
    }
    std::vector<int> covered;
    for (int g = 0; g < static_cast<int>(p.groups.size()); ++g) {
      const FairGroup& group = p.groups[g];
      internal::CheckIdList(group.members, inst.item_count, GroupLoc(j, g),
                            out);
      if (!IsUnitInterval(group.alpha) || !IsUnitInterval(group.beta)) {
        out.push_back({ViolationKind::kBadRational, Severity::kError,
                       GroupLoc(j, g),
                       "alpha and beta must be fractions in [0, 1]"});
      } else if (!LessEq(group.alpha, group.beta)) {
        out.push_back({ViolationKind::kAlphaExceedsBeta, Severity::kError,
                       GroupLoc(j, g),
                       "alpha " + ToString(group.alpha) + " exceeds beta " +
                           ToString(group.beta)});
      }
      auto outside = internal::Outside(group.members, p.neighbors);
      if (!outside.empty()) {
        out.push_back({ViolationKind::kGroupNotSubset, Severity::kError,
                       GroupLoc(j, g),
                       "group not a subset of neighbors (item " +
                           std::to_string(outside.front()) + ")"});
      }
      for (ItemId m : group.members) {
        if (m < 0 || m >= inst.item_count) continue;
        if (owner[m] == j) {
          out.push_back({ViolationKind::kGroupsOverlap, Severity::kError,
                         GroupLoc(j, g),
                         "item " + std::to_string(m) +
                             " belongs to more than one group"});
        }
        owner[m] = j;
        covered.push_back(m);
      }
    }
    std::sort(covered.begin(), covered.end());
    auto uncovered = internal::Outside(p.neighbors, covered);
    if (!uncovered.empty()) {
      out.push_back({ViolationKind::kGroupsDoNotCover, Severity::kError,
                     PlatformLoc(j),
                     "neighbor " + std::to_string(uncovered.front()) +
                         " is not in any group"});
    }
  }
  return out;
}

inline std::vector<Violation> ValidateTreeInstance(const TreeInstance& inst) {
  std::vector<Violation> out;
  const int n = static_cast<int>(inst.nodes.size());
  auto loc = [](int id) { return "node " + std::to_string(id); };
  if (n == 0) {
    out.push_back({ViolationKind::kEmptyTree, Severity::kError, "tree",
                   "tree has no nodes"});
    return out;
  }
  if (inst.group_count < 0 || inst.total_items < 0) {
    out.push_back({ViolationKind::kNegativeCount, Severity::kError, "tree",
                   "group count and total items must be non-negative"});
    return out;
  }
  if (static_cast<int>(inst.budget.size()) != inst.group_count) {
    out.push_back({ViolationKind::kVectorSize, Severity::kError, "tree",
                   "budget has " + std::to_string(inst.budget.size()) +
                       " entries, expected " +
                       std::to_string(inst.group_count)});
  }
  for (std::int64_t b : inst.budget) {
    if (b < 0) {
      out.push_back({ViolationKind::kNegativeCount, Severity::kError, "tree",
                     "budget entries must be non-negative"});
      break;
    }
  }
  int roots = 0;
  bool links_ok = true;
  for (int id = 0; id < n; ++id) {
    const TreeNode& node = inst.nodes[id];
    if (!node.parent) {
      ++roots;
    } else if (*node.parent < 0 || *node.parent >= n || *node.parent == id) {
      out.push_back(
          {ViolationKind::kBadParent, Severity::kError, loc(id),
           "parent " + std::to_string(*node.parent) + " is not a valid node"});
      links_ok = false;
    }
    if (static_cast<int>(node.group_lb.size()) != inst.group_count) {
      out.push_back(
          {ViolationKind::kVectorSize, Severity::kError, loc(id),
           "group bound vector has " + std::to_string(node.group_lb.size()) +
               " entries, expected " + std::to_string(inst.group_count)});
      links_ok = false;
    }
    bool negative = node.overall_lb < 0 || node.reward < 0;
    for (std::int64_t v : node.group_lb) negative = negative || v < 0;
    if (negative) {
      out.push_back({ViolationKind::kNegativeCount, Severity::kError, loc(id),
                     "bounds and reward must be non-negative"});
    }
  }
  if (roots != 1) {
    out.push_back(
        {ViolationKind::kRootCount, Severity::kError, "tree",
         "expected exactly one root, found " + std::to_string(roots)});
    return out;
  }
  if (!links_ok) return out;

  // Reachability from the root rules out cycles among the parent links.
  std::vector<std::vector<int>> children(n);
  int root = -1;
  for (int id = 0; id < n; ++id) {
    if (inst.nodes[id].parent) {
      children[*inst.nodes[id].parent].push_back(id);
    } else {
      root = id;
    }
  }
  std::vector<bool> seen(n, false);
  std::vector<int> stack{root};
  seen[root] = true;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int c : children[v]) {
      if (!seen[c]) {
        seen[c] = true;
        stack.push_back(c);
      }
    }
  }
  for (int id = 0; id < n; ++id) {
    if (!seen[id]) {
      out.push_back({ViolationKind::kUnreachableNode, Severity::kError, loc(id),
                     "node is not reachable from the root (cycle)"});
    }
  }
  if (HasErrors(out)) return out;

  for (int id = 0; id < n; ++id) {
    if (children[id].empty()) continue;
    const TreeNode& node = inst.nodes[id];
    std::int64_t overall = 0, reward = 0;
    std::vector<std::int64_t> sum(inst.group_count, 0);
    for (int c : children[id]) {
      const TreeNode& child = inst.nodes[c];
      overall += child.overall_lb;
      reward += child.reward;
      for (int g = 0; g < inst.group_count; ++g) sum[g] += child.group_lb[g];
    }
    for (int g = 0; g < inst.group_count; ++g) {
      if (node.group_lb[g] > sum[g]) {
        out.push_back(
            {ViolationKind::kGroupMonotonicity, Severity::kError, loc(id),
             "group " + std::to_string(g) + " bound " +
                 std::to_string(node.group_lb[g]) +
                 " exceeds the children's sum " + std::to_string(sum[g])});
      }
    }
    if (node.overall_lb > overall) {
      out.push_back(
          {ViolationKind::kOverallMonotonicity, Severity::kError, loc(id),
           "overall bound " + std::to_string(node.overall_lb) +
               " exceeds the children's sum " + std::to_string(overall)});
    }
    if (node.reward > reward) {
      out.push_back(
          {ViolationKind::kRewardMonotonicity, Severity::kError, loc(id),
           "reward " + std::to_string(node.reward) +
               " exceeds the children's sum " + std::to_string(reward)});
    }
  }
  return out;
}

}  // namespace diverse_match

#endif  // DIVERSE_MATCH_VALIDATE_H_
