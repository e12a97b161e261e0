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

// Read-only evaluation of assignments and tree solutions. Every solver result
// in this library is re-checked through these functions in tests.

#ifndef DIVERSE_MATCH_EVALUATE_H_
#define DIVERSE_MATCH_EVALUATE_H_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "diverse_match/errors.h"
#include "diverse_match/model.h"
#include "diverse_match/rational.h"

namespace diverse_match {

// Platforms in the fixed, instance-independent processing order used by the
// offline solvers: ascending id.
inline std::vector<PlatformId> CanonicalOrder(int platform_count) {
  std::vector<PlatformId> order(platform_count);
  std::iota(order.begin(), order.end(), 0);
  return order;
}

// max_j max(lb_j, sum_k lb_j^(k)): the hyperedge-size parameter of the
// lower-bound greedy's (ell + 2) guarantee.
inline int EllThm1(const LbInstance& inst) {
  int ell = 0;
  for (const auto& p : inst.platforms) {
    int group_sum = 0;
    for (const auto& g : p.groups) group_sum += g.lb;
    ell = std::max({ell, p.lb, group_sum});
  }
  return ell;
}

// max_j lb_j: the block size parameter of the proportional solver's
// 2(ell + 2) guarantee.
inline int EllThm2(const LbInstance& inst) {
  int ell = 0;
  for (const auto& p : inst.platforms) ell = std::max(ell, p.lb);
  return ell;
}

inline int EllThm2(const FairInstance& inst) {
  int ell = 0;
  for (const auto& p : inst.platforms) ell = std::max(ell, p.lb);
  return ell;
}

namespace internal {

template <typename Platform>
void CheckAssignmentAgainst(int item_count,
                            const std::vector<Platform>& platforms,
                            const Assignment& a) {
  if (a.item_count() != item_count) {
    throw InvalidAssignmentError(
        -1, -1,
        "assignment covers " + std::to_string(a.item_count()) +
            " items, instance has " + std::to_string(item_count));
  }
  for (ItemId i = 0; i < item_count; ++i) {
    PlatformId p = a.platform_of(i);
    if (p == kUnassigned) continue;
    if (p < 0 || p >= static_cast<int>(platforms.size())) {
      throw InvalidAssignmentError(i, p,
                                   "item " + std::to_string(i) +
                                       " mapped to unknown platform " +
                                       std::to_string(p));
    }
    if (!Contains(platforms[p].neighbors, i)) {
      throw InvalidAssignmentError(i, p,
                                   "edge (item " + std::to_string(i) +
                                       ", platform " + std::to_string(p) +
                                       ") is not in the graph");
    }
  }
}

inline int CountIn(const std::vector<ItemId>& sorted_set,
                   const std::vector<ItemId>& sorted_members) {
  int count = 0;
  auto it = sorted_members.begin();
  for (ItemId x : sorted_set) {
    it = std::lower_bound(it, sorted_members.end(), x);
    if (it == sorted_members.end()) break;
    if (*it == x) ++count;
  }
  return count;
}

}  // namespace internal

inline void CheckAssignment(const LbInstance& inst, const Assignment& a) {
  internal::CheckAssignmentAgainst(inst.item_count, inst.platforms, a);
}

inline void CheckAssignment(const FairInstance& inst, const Assignment& a) {
  internal::CheckAssignmentAgainst(inst.item_count, inst.platforms, a);
}

// Whether `matched` (sorted) meets every bound of `p`.
inline bool SatisfiesLbPlatform(const LbPlatform& p,
                                const std::vector<ItemId>& matched) {
  if (static_cast<int>(matched.size()) < p.lb) return false;
  for (const auto& g : p.groups) {
    if (internal::CountIn(matched, g.members) < g.lb) return false;
  }
  return true;
}

// Platforms p_j with |M_j| >= lb_j and |M_j ∩ C_j^(k)| >= lb_j^(k) for all k.
// Throws InvalidAssignmentError on an assignment that does not fit the graph.
inline std::vector<PlatformId> SatisfiedLbPlatforms(const LbInstance& inst,
                                                    const Assignment& a) {
  CheckAssignment(inst, a);
  const int m = static_cast<int>(inst.platforms.size());
  auto matched = a.MatchedSets(m);
  std::vector<PlatformId> satisfied;
  for (PlatformId j = 0; j < m; ++j) {
    if (SatisfiesLbPlatform(inst.platforms[j], matched[j])) {
      satisfied.push_back(j);
    }
  }
  return satisfied;
}

enum class FairMode {
  kStrict,                 // alpha|M| <= |M ∩ C| <= beta|M|
  kRelaxed,                // (alpha - 3/lb)|M| <= |M ∩ C| <= (beta + 3/lb)|M|
  kRelaxedMultiplicative,  // alpha|M|(1 - 3/lb) <= ... <= beta|M|(1 + 3/lb)
};

struct FairScore {
  std::vector<PlatformId> satisfied;
  std::int64_t matched_to_satisfied = 0;

  friend bool operator==(const FairScore&, const FairScore&) = default;
};

inline bool SatisfiesFairPlatform(const FairPlatform& p,
                                  const std::vector<ItemId>& matched,
                                  FairMode mode) {
  const std::int64_t size = static_cast<std::int64_t>(matched.size());
  if (size < p.lb || size > p.ub) return false;
  for (const auto& g : p.groups) {
    const std::int64_t count = internal::CountIn(matched, g.members);
    bool ok = false;
    switch (mode) {
      case FairMode::kStrict:
        ok = InStrictWindow(g.alpha, g.beta, size, count);
        break;
      case FairMode::kRelaxed:
        ok = InAdditiveWindow(g.alpha, g.beta, p.lb, size, count);
        break;
      case FairMode::kRelaxedMultiplicative:
        ok = InMultiplicativeWindow(g.alpha, g.beta, p.lb, size, count);
        break;
    }
    if (!ok) return false;
  }
  return true;
}

inline FairScore ScoreFair(const FairInstance& inst, const Assignment& a,
                           FairMode mode) {
  CheckAssignment(inst, a);
  const int m = static_cast<int>(inst.platforms.size());
  auto matched = a.MatchedSets(m);
  FairScore score;
  for (PlatformId j = 0; j < m; ++j) {
    if (SatisfiesFairPlatform(inst.platforms[j], matched[j], mode)) {
      score.satisfied.push_back(j);
      score.matched_to_satisfied +=
          static_cast<std::int64_t>(matched[j].size());
    }
  }
  return score;
}

// Items a node must receive when opened: max(lb_j, sum of its group bounds).
inline std::int64_t RequiredItems(const TreeNode& node) {
  std::int64_t sum = 0;
  for (std::int64_t v : node.group_lb) sum += v;
  return std::max(node.overall_lb, sum);
}

inline std::int64_t ItemCapacity(const TreeInstance& inst) {
  std::int64_t sum = 0;
  for (std::int64_t b : inst.budget) sum += b;
  return std::min(inst.total_items, sum);
}

// Every broken TreeSolution invariant, as readable messages; empty when the
// solution is feasible for `inst`.
inline std::vector<std::string> CheckTreeSolution(const TreeInstance& inst,
                                                  const TreeSolution& sol) {
  std::vector<std::string> problems;
  const int n = static_cast<int>(inst.nodes.size());
  const int k = inst.group_count;
  if (sol.added_root) {
    if (sol.satisfied_nodes != std::vector<NodeId>{n}) {
      problems.push_back("added-root solution must list only node " +
                         std::to_string(n));
    }
    if (!sol.allocation.empty()) {
      problems.push_back("added-root solution must not allocate items");
    }
    if (sol.total_reward != 0) {
      problems.push_back("added-root solution must have zero reward");
    }
    return problems;
  }
  std::vector<bool> chosen(n, false);
  for (NodeId v : sol.satisfied_nodes) {
    if (v < 0 || v >= n) {
      problems.push_back("satisfied node " + std::to_string(v) +
                         " is not in the tree");
      return problems;
    }
    chosen[v] = true;
  }
  if (!std::is_sorted(sol.satisfied_nodes.begin(), sol.satisfied_nodes.end())) {
    problems.push_back("satisfied nodes are not sorted");
  }

  // Depth-first walk carrying the number of chosen nodes on the current path.
  std::vector<std::pair<NodeId, int>> stack{{inst.root, 0}};
  while (!stack.empty()) {
    auto [v, hits] = stack.back();
    stack.pop_back();
    hits += chosen[v] ? 1 : 0;
    if (hits > 1) {
      problems.push_back("path to node " + std::to_string(v) +
                         " contains more than one satisfied node");
      continue;
    }
    const auto& children = inst.nodes[v].children;
    if (children.empty() && hits != 1) {
      problems.push_back("root-leaf path ending at node " + std::to_string(v) +
                         " contains no satisfied node");
    }
    for (NodeId c : children) stack.push_back({c, hits});
  }

  std::vector<std::int64_t> used(k, 0);
  std::int64_t used_total = 0;
  std::int64_t reward = 0;
  for (NodeId v : sol.satisfied_nodes) {
    reward += inst.nodes[v].reward;
    auto it = sol.allocation.find(v);
    if (it == sol.allocation.end()) {
      bool needs_items = RequiredItems(inst.nodes[v]) > 0;
      if (needs_items) {
        problems.push_back("satisfied node " + std::to_string(v) +
                           " has no allocation");
      }
      continue;
    }
    const auto& counts = it->second;
    if (static_cast<int>(counts.size()) != k) {
      problems.push_back("allocation of node " + std::to_string(v) +
                         " has the wrong length");
      continue;
    }
    std::int64_t total = 0;
    for (int g = 0; g < k; ++g) {
      if (counts[g] < inst.nodes[v].group_lb[g]) {
        problems.push_back("node " + std::to_string(v) + " group " +
                           std::to_string(g) + " below its lower bound");
      }
      used[g] += counts[g];
      total += counts[g];
    }
    if (total < inst.nodes[v].overall_lb) {
      problems.push_back("node " + std::to_string(v) +
                         " below its overall lower bound");
    }
    used_total += total;
  }
  for (const auto& [v, counts] : sol.allocation) {
    if (v < 0 || v >= n || !chosen[v]) {
      problems.push_back("items allocated to unsatisfied node " +
                         std::to_string(v));
    }
  }
  for (int g = 0; g < k; ++g) {
    if (used[g] > inst.budget[g]) {
      problems.push_back("group " + std::to_string(g) + " over budget");
    }
  }
  if (used_total > inst.total_items) {
    problems.push_back("allocation exceeds the total number of items");
  }
  if (reward != sol.total_reward) {
    problems.push_back("total reward " + std::to_string(sol.total_reward) +
                       " differs from the recomputed " +
                       std::to_string(reward));
  }
  return problems;
}

}  // namespace diverse_match

#endif  // DIVERSE_MATCH_EVALUATE_H_
