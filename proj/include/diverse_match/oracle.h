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

// Exact exhaustive solvers for small instances. They refuse, with
// LimitExceededError, any instance outside their limits.

#ifndef DIVERSE_MATCH_ORACLE_H_
#define DIVERSE_MATCH_ORACLE_H_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "diverse_match/errors.h"
#include "diverse_match/evaluate.h"
#include "diverse_match/model.h"
#include "diverse_match/rational.h"
#include "diverse_match/tree_solver.h"
#include "diverse_match/validate.h"

namespace diverse_match {

struct OracleLimits {
  int max_items = 16;
  std::int64_t max_candidates = 1'000'000;
  int max_tree_nodes = 20;
};

struct ExactMatching {
  std::int64_t value = 0;  // platforms satisfied, or items matched
  Assignment witness;
};

namespace internal {

using Mask = std::uint32_t;

inline Mask ToMask(const std::vector<ItemId>& items) {
  Mask m = 0;
  for (ItemId i : items) m |= Mask{1} << i;
  return m;
}

inline void RequireSmall(int item_count, const OracleLimits& limits) {
  if (item_count > limits.max_items || item_count > 31) {
    throw LimitExceededError("oracle refuses " + std::to_string(item_count) +
                             " items (limit " +
                             std::to_string(limits.max_items) + ")");
  }
}

// Calls fn(subset_mask) for every subset of `universe`.
template <typename Fn>
void ForEachSubset(Mask universe, Fn&& fn) {
  Mask sub = 0;
  while (true) {
    fn(sub);
    if (sub == universe) return;
    sub = (sub - universe) & universe;
  }
}

// Maximizes the summed value of disjoint per-platform choices. candidates[j]
// lists (mask, value) options for platform j; skipping a platform is always
// allowed and worth 0.
class DisjointChoiceSearch {
 public:
  explicit DisjointChoiceSearch(
      std::vector<std::vector<std::pair<Mask, int>>> candidates)
      : candidates_(std::move(candidates)), memo_(candidates_.size()) {}

  std::int64_t Best() { return Solve(0, 0); }

  // Chosen candidate index per platform (-1 = skipped) for an optimum.
  std::vector<int> Witness() {
    std::vector<int> pick(candidates_.size(), -1);
    Mask used = 0;
    for (std::size_t j = 0; j < candidates_.size(); ++j) {
      const std::int64_t target = Solve(j, used);
      if (Solve(j + 1, used) == target) continue;
      for (std::size_t c = 0; c < candidates_[j].size(); ++c) {
        auto [mask, value] = candidates_[j][c];
        if ((mask & used) == 0 && value + Solve(j + 1, used | mask) == target) {
          pick[j] = static_cast<int>(c);
          used |= mask;
          break;
        }
      }
    }
    return pick;
  }

 private:
  std::int64_t Solve(std::size_t j, Mask used) {
    if (j == candidates_.size()) return 0;
    auto it = memo_[j].find(used);
    if (it != memo_[j].end()) return it->second;
    std::int64_t best = Solve(j + 1, used);
    for (auto [mask, value] : candidates_[j]) {
      if ((mask & used) == 0) {
        best = std::max(best, value + Solve(j + 1, used | mask));
      }
    }
    memo_[j].emplace(used, best);
    return best;
  }

  std::vector<std::vector<std::pair<Mask, int>>> candidates_;
  std::vector<std::unordered_map<Mask, std::int64_t>> memo_;
};

inline bool LbSatisfiedBy(const LbPlatform& p, Mask set) {
  if (std::popcount(set) < p.lb) return false;
  for (const auto& g : p.groups) {
    if (std::popcount(set & ToMask(g.members)) < g.lb) return false;
  }
  return true;
}

}  // namespace internal

// Inclusion-minimal subsets of N(p) that satisfy p, as bit masks. Satisfaction
// is upward closed, so a set is minimal when no single removal keeps it
// satisfied.
inline std::vector<std::uint32_t> MinimalSatisfyingSets(const LbPlatform& p) {
  std::vector<std::uint32_t> out;
  internal::ForEachSubset(internal::ToMask(p.neighbors), [&](internal::Mask s) {
    if (!internal::LbSatisfiedBy(p, s)) return;
    for (internal::Mask rest = s; rest; rest &= rest - 1) {
      if (internal::LbSatisfiedBy(p, s & ~(rest & -rest))) return;
    }
    out.push_back(s);
  });
  return out;
}

// Maximum number of simultaneously satisfiable platforms, searching over
// minimal satisfying sets.
inline ExactMatching ExactLb(const LbInstance& inst,
                             const OracleLimits& limits = {}) {
  RequireValid(ValidateLbInstance(inst));
  internal::RequireSmall(inst.item_count, limits);
  std::vector<std::vector<std::pair<internal::Mask, int>>> candidates;
  std::int64_t total = 0;
  for (const auto& p : inst.platforms) {
    auto& options = candidates.emplace_back();
    for (auto mask : MinimalSatisfyingSets(p)) options.push_back({mask, 1});
    total += static_cast<std::int64_t>(options.size());
    if (total > limits.max_candidates) {
      throw LimitExceededError("oracle candidate sets exceed " +
                               std::to_string(limits.max_candidates));
    }
  }
  internal::DisjointChoiceSearch search(candidates);
  ExactMatching result{search.Best(), Assignment(inst.item_count)};
  auto pick = search.Witness();
  for (std::size_t j = 0; j < pick.size(); ++j) {
    if (pick[j] < 0) continue;
    for (auto m = candidates[j][pick[j]].first; m; m &= m - 1) {
      result.witness.Assign(std::countr_zero(m), static_cast<PlatformId>(j));
    }
  }
  return result;
}

// Same optimum by trying every item-to-platform map. Exponential in the item
// count; meant for cross-checking ExactLb on tiny instances.
inline std::int64_t ExactLbByAssignment(const LbInstance& inst,
                                        int max_items = 8) {
  RequireValid(ValidateLbInstance(inst));
  if (inst.item_count > max_items) {
    throw LimitExceededError("full assignment search refuses " +
                             std::to_string(inst.item_count) + " items");
  }
  const int m = static_cast<int>(inst.platforms.size());
  std::vector<std::vector<PlatformId>> options(inst.item_count);
  for (PlatformId j = 0; j < m; ++j) {
    for (ItemId i : inst.platforms[j].neighbors) options[i].push_back(j);
  }
  Assignment a(inst.item_count);
  std::int64_t best = 0;
  auto recurse = [&](auto&& self, ItemId i) -> void {
    if (i == inst.item_count) {
      best = std::max<std::int64_t>(
          best,
          static_cast<std::int64_t>(SatisfiedLbPlatforms(inst, a).size()));
      return;
    }
    a.Unassign(i);
    self(self, i + 1);
    for (PlatformId j : options[i]) {
      a.Assign(i, j);
      self(self, i + 1);
    }
    a.Unassign(i);
  };
  recurse(recurse, 0);
  return best;
}

// Maximum number of items matched to platforms that meet their strict size and
// proportion windows.
inline ExactMatching ExactFair(const FairInstance& inst,
                               const OracleLimits& limits = {}) {
  RequireValid(ValidateFairInstance(inst));
  internal::RequireSmall(inst.item_count, limits);
  std::vector<std::vector<std::pair<internal::Mask, int>>> candidates;
  std::int64_t total = 0;
  for (const auto& p : inst.platforms) {
    auto& options = candidates.emplace_back();
    std::vector<internal::Mask> group_masks;
    for (const auto& g : p.groups)
      group_masks.push_back(internal::ToMask(g.members));
    internal::ForEachSubset(
        internal::ToMask(p.neighbors), [&](internal::Mask s) {
          const int size = std::popcount(s);
          if (size < p.lb || size > p.ub) return;
          for (std::size_t g = 0; g < p.groups.size(); ++g) {
            if (!InStrictWindow(p.groups[g].alpha, p.groups[g].beta, size,
                                std::popcount(s & group_masks[g]))) {
              return;
            }
          }
          options.push_back({s, size});
        });
    total += static_cast<std::int64_t>(options.size());
    if (total > limits.max_candidates) {
      throw LimitExceededError("oracle candidate sets exceed " +
                               std::to_string(limits.max_candidates));
    }
  }
  internal::DisjointChoiceSearch search(candidates);
  ExactMatching result{search.Best(), Assignment(inst.item_count)};
  auto pick = search.Witness();
  for (std::size_t j = 0; j < pick.size(); ++j) {
    if (pick[j] < 0) continue;
    for (auto m = candidates[j][pick[j]].first; m; m &= m - 1) {
      result.witness.Assign(std::countr_zero(m), static_cast<PlatformId>(j));
    }
  }
  return result;
}

// Best reward over all antichains that meet every root-leaf path once and fit
// the budget. The witness allocation tops up from the group with the most
// remaining items. When no antichain fits, the witness is the added-root
// solution.
inline TreeSolution ExactTree(const TreeInstance& raw,
                              const OracleLimits& limits = {}) {
  RequireValid(ValidateTreeInstance(raw));
  if (static_cast<int>(raw.nodes.size()) > limits.max_tree_nodes) {
    throw LimitExceededError("tree oracle refuses " +
                             std::to_string(raw.nodes.size()) + " nodes");
  }
  TreeInstance inst = raw;
  LinkTree(inst);
  const int k = inst.group_count;

  // covers(v): every antichain of v's subtree meeting all its paths once.
  auto covers = [&](auto&& self, NodeId v) -> std::vector<std::vector<NodeId>> {
    std::vector<std::vector<NodeId>> out{{v}};
    const auto& children = inst.nodes[v].children;
    if (children.empty()) return out;
    std::vector<std::vector<NodeId>> partial{{}};
    for (NodeId c : children) {
      auto sub = self(self, c);
      std::vector<std::vector<NodeId>> next;
      for (const auto& a : partial) {
        for (const auto& b : sub) {
          auto merged = a;
          merged.insert(merged.end(), b.begin(), b.end());
          next.push_back(std::move(merged));
        }
      }
      partial = std::move(next);
    }
    out.insert(out.end(), partial.begin(), partial.end());
    return out;
  };

  auto allocate =
      [&](const std::vector<NodeId>& cover) -> std::optional<TreeSolution> {
    TreeSolution sol;
    std::vector<std::int64_t> left = inst.budget;
    std::int64_t left_total = inst.total_items;
    for (NodeId v : cover) {
      for (int g = 0; g < k; ++g) left[g] -= inst.nodes[v].group_lb[g];
    }
    for (int g = 0; g < k; ++g) {
      if (left[g] < 0) return std::nullopt;
    }
    for (NodeId v : cover) {
      const TreeNode& node = inst.nodes[v];
      auto counts = node.group_lb;
      std::int64_t have = 0;
      for (auto c : counts) have += c;
      while (have < node.overall_lb) {
        int g = static_cast<int>(std::max_element(left.begin(), left.end()) -
                                 left.begin());
        if (k == 0 || left[g] == 0) return std::nullopt;
        --left[g];
        ++counts[g];
        ++have;
      }
      left_total -= have;
      if (left_total < 0) return std::nullopt;
      sol.total_reward += node.reward;
      sol.allocation.emplace(v, std::move(counts));
    }
    sol.satisfied_nodes = cover;
    std::sort(sol.satisfied_nodes.begin(), sol.satisfied_nodes.end());
    return sol;
  };

  TreeSolution best;
  best.satisfied_nodes = {static_cast<NodeId>(inst.nodes.size())};
  best.added_root = true;
  bool found = false;
  for (const auto& cover : covers(covers, inst.root)) {
    auto sol = allocate(cover);
    if (sol && (!found || sol->total_reward > best.total_reward)) {
      best = std::move(*sol);
      found = true;
    }
  }
  return best;
}

// Best reward of a rooted connected subtree (possibly empty) within budget,
// by enumerating node subsets.
inline std::int64_t BruteForceSteinerValue(const CostTree& tree,
                                           const OracleLimits& limits = {}) {
  const int n = static_cast<int>(tree.nodes.size());
  if (n > limits.max_tree_nodes || n > 30) {
    throw LimitExceededError("Steiner brute force refuses " +
                             std::to_string(n) + " nodes");
  }
  std::int64_t best = 0;
  std::vector<std::int64_t> cost(tree.dims());
  for (std::uint32_t s = 1; s < (std::uint32_t{1} << n); ++s) {
    if (!(s >> tree.root & 1)) continue;
    bool ok = true;
    std::int64_t reward = 0;
    std::fill(cost.begin(), cost.end(), 0);
    for (int v = 0; v < n && ok; ++v) {
      if (!(s >> v & 1)) continue;
      const auto& node = tree.nodes[v];
      if (v != tree.root && !(s >> *node.parent & 1)) ok = false;
      reward += node.reward;
      for (int d = 0; d < tree.dims(); ++d) cost[d] += node.cost[d];
    }
    for (int d = 0; d < tree.dims() && ok; ++d) ok = cost[d] <= tree.budget[d];
    if (ok) best = std::max(best, reward);
  }
  return best;
}

}  // namespace diverse_match

#endif  // DIVERSE_MATCH_ORACLE_H_
