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

// Greedy solver for maximizing the number of satisfied platforms under overall
// and per-group lower bounds.
//
// Each platform in turn tries to build a satisfying set S from the items that
// are still free. S is then matched and removed from the pool. This is the
// folklore greedy for hypergraph matching, run on the implicit hypergraph
// whose hyperedges are {platform} ∪ S. The hypergraph is never built. Every
// S has lb_j <= |S| <= max(lb_j, sum_k lb_j^(k)), so the greedy is an
// (ell + 2)-approximation with ell = EllThm1(instance). It is also an online
// algorithm: platforms may arrive one at a time (OnlineNewPlatform).
//
// Variants:
//  * kBase: candidate items in ascending id order.
//  * kMinDegree: candidates ordered by ascending remaining degree, i.e. the
//    number of not-yet-processed platforms adjacent to the item. Ties use a
//    seeded hash of the item id.
//  * kAugmenting: kMinDegree ordering. When no satisfying set exists among
//    the free items, items are pulled from already-satisfied platforms along
//    alternating paths of at most two reassignments. Each donor platform stays
//    satisfied.

#ifndef DIVERSE_MATCH_LB_SOLVER_H_
#define DIVERSE_MATCH_LB_SOLVER_H_

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "diverse_match/evaluate.h"
#include "diverse_match/model.h"
#include "diverse_match/random.h"
#include "diverse_match/validate.h"

namespace diverse_match {

enum class LbVariant { kBase, kMinDegree, kAugmenting };

struct LbStrategy {
  LbVariant variant = LbVariant::kBase;
  std::uint64_t rng_seed = 0;
};

inline const char* VariantName(LbVariant v) {
  switch (v) {
    case LbVariant::kBase:
      return "base";
    case LbVariant::kMinDegree:
      return "min-degree";
    case LbVariant::kAugmenting:
      return "augment";
  }
  return "?";
}

inline std::optional<LbVariant> ParseVariant(const std::string& name) {
  if (name == "base") return LbVariant::kBase;
  if (name == "min-degree" || name == "min_degree") {
    return LbVariant::kMinDegree;
  }
  if (name == "augment" || name == "augmenting") {
    return LbVariant::kAugmenting;
  }
  return std::nullopt;
}

namespace internal {

// Sorts candidate items into the order in which a strategy consumes them.
class CandidateOrder {
 public:
  CandidateOrder(const LbStrategy& strategy, std::span<const int> degree)
      : strategy_(strategy), degree_(degree) {}

  void Sort(std::vector<ItemId>& items) const {
    if (strategy_.variant == LbVariant::kBase) {
      std::sort(items.begin(), items.end());
      return;
    }
    auto key = [&](ItemId i) {
      int d = degree_.empty() ? 0 : degree_[i];
      return std::make_tuple(d, MixKey(strategy_.rng_seed, i), i);
    };
    std::sort(items.begin(), items.end(),
              [&](ItemId a, ItemId b) { return key(a) < key(b); });
  }

 private:
  LbStrategy strategy_;
  std::span<const int> degree_;
};

}  // namespace internal

// Builds S ⊆ N(p) ∩ free with |S ∩ C^(k)| >= lb^(k) for every group and
// lb <= |S| <= max(lb, sum_k lb^(k)). Groups are filled in declaration order;
// an item already in S counts toward every group that contains it. Then S is
// topped up to lb with any free neighbors. Returns nullopt when this fails.
// For pairwise disjoint groups the construction fails only if no satisfying
// subset exists.
//
// `remaining_degree` is only read by the degree-ordered variants; when empty,
// every item has degree 0.
inline std::optional<std::vector<ItemId>> ConstructSatisfyingSet(
    const LbPlatform& p, const std::vector<bool>& free,
    const LbStrategy& strategy, std::span<const int> remaining_degree = {}) {
  internal::CandidateOrder order(strategy, remaining_degree);
  std::vector<bool> in_s(free.size(), false);
  std::vector<ItemId> s;
  std::vector<ItemId> candidates;

  auto take = [&](const std::vector<ItemId>& pool, int need) {
    candidates.clear();
    for (ItemId i : pool) {
      if (free[i] && !in_s[i]) candidates.push_back(i);
    }
    if (static_cast<int>(candidates.size()) < need) return false;
    if (strategy.variant != LbVariant::kBase) order.Sort(candidates);
    for (int t = 0; t < need; ++t) {
      in_s[candidates[t]] = true;
      s.push_back(candidates[t]);
    }
    return true;
  };

  for (const auto& group : p.groups) {
    int have = 0;
    for (ItemId i : group.members) have += in_s[i] ? 1 : 0;
    int need = group.lb - have;
    if (need > 0 && !take(group.members, need)) return std::nullopt;
  }
  int need = p.lb - static_cast<int>(s.size());
  if (need > 0 && !take(p.neighbors, need)) return std::nullopt;
  std::sort(s.begin(), s.end());
  return s;
}

enum class ArrivalDecision { kSatisfied, kSkipped };

// A platform that has arrived, with its current matched set.
struct ArrivedPlatform {
  LbPlatform platform;
  std::vector<ItemId> matched;   // sorted
  std::vector<int> group_count;  // |matched ∩ C^(k)|
  bool satisfied = false;
};

// Greedy state across platform arrivals.
//
// Invariants: free[i] iff item i is unmatched; an item once matched is only
// moved again by an augmentation that keeps its donor platform satisfied; the
// satisfied list only grows.
struct OnlineState {
  explicit OnlineState(int item_count, std::vector<int> item_degree = {})
      : free(item_count, true),
        free_count(item_count),
        assignment(item_count),
        remaining_degree(std::move(item_degree)) {}

  std::vector<bool> free;
  int free_count = 0;
  Assignment assignment;
  std::vector<PlatformId> satisfied;  // arrival order
  // Adjacent platforms not yet processed, per item; empty when unknown.
  std::vector<int> remaining_degree;
  std::unordered_map<PlatformId, ArrivedPlatform> arrived;
};

namespace internal {

inline void AddToPlatform(ArrivedPlatform& ap, ItemId x) {
  ap.matched.insert(std::upper_bound(ap.matched.begin(), ap.matched.end(), x),
                    x);
  for (std::size_t g = 0; g < ap.platform.groups.size(); ++g) {
    if (Contains(ap.platform.groups[g].members, x)) ++ap.group_count[g];
  }
}

inline void RemoveFromPlatform(ArrivedPlatform& ap, ItemId x) {
  auto it = std::lower_bound(ap.matched.begin(), ap.matched.end(), x);
  ap.matched.erase(it);
  for (std::size_t g = 0; g < ap.platform.groups.size(); ++g) {
    if (Contains(ap.platform.groups[g].members, x)) --ap.group_count[g];
  }
}

// Groups of `ap` that contain x.
inline std::vector<int> GroupsContaining(const ArrivedPlatform& ap, ItemId x) {
  std::vector<int> out;
  for (std::size_t g = 0; g < ap.platform.groups.size(); ++g) {
    if (Contains(ap.platform.groups[g].members, x)) {
      out.push_back(static_cast<int>(g));
    }
  }
  return out;
}

// Pulls items for a platform out of already-satisfied platforms. Every move is
// journaled so a failed attempt leaves the state untouched.
class Augmenter {
 public:
  Augmenter(OnlineState& state, const LbPlatform& p, const LbStrategy& strategy)
      : state_(state),
        p_(p),
        order_(strategy, state.remaining_degree),
        in_s_(state.free.size(), false) {}

  // On success the returned set is reserved: items taken from donors are
  // already unassigned and items pulled into donors are already matched. The
  // caller assigns the set to the new platform.
  std::optional<std::vector<ItemId>> Run() {
    if (static_cast<int>(p_.neighbors.size()) < p_.lb) return std::nullopt;
    for (const auto& g : p_.groups) {
      if (static_cast<int>(g.members.size()) < g.lb) return std::nullopt;
    }
    for (const auto& g : p_.groups) {
      int have = 0;
      for (ItemId i : g.members) have += in_s_[i] ? 1 : 0;
      if (g.lb - have > 0 && !Obtain(g.members, g.lb - have)) {
        Rollback();
        return std::nullopt;
      }
    }
    int need = p_.lb - static_cast<int>(s_.size());
    if (need > 0 && !Obtain(p_.neighbors, need)) {
      Rollback();
      return std::nullopt;
    }
    std::sort(s_.begin(), s_.end());
    return s_;
  }

 private:
  struct Move {
    ItemId item;
    PlatformId from;  // kUnassigned: the item was free
    PlatformId to;    // kUnassigned: the item went into S
  };

  bool Obtain(const std::vector<ItemId>& pool, int need) {
    std::vector<ItemId> free_items;
    for (ItemId i : pool) {
      if (state_.free[i] && !in_s_[i]) free_items.push_back(i);
    }
    order_.Sort(free_items);
    for (ItemId i : free_items) {
      if (need == 0) return true;
      in_s_[i] = true;
      s_.push_back(i);
      --need;
    }
    for (ItemId x : pool) {
      if (need == 0) return true;
      if (in_s_[x] || state_.free[x]) continue;
      PlatformId q = state_.assignment.platform_of(x);
      if (q == kUnassigned) continue;
      if (TryRelease(q, x) || TrySwap(q, x)) {
        in_s_[x] = true;
        s_.push_back(x);
        --need;
      }
    }
    return need == 0;
  }

  // Moves x out of q when q stays satisfied without it.
  bool TryRelease(PlatformId q, ItemId x) {
    ArrivedPlatform& donor = state_.arrived.at(q);
    if (static_cast<int>(donor.matched.size()) - 1 < donor.platform.lb) {
      return false;
    }
    for (int g : GroupsContaining(donor, x)) {
      if (donor.group_count[g] - 1 < donor.platform.groups[g].lb) return false;
    }
    RemoveFromPlatform(donor, x);
    state_.assignment.Unassign(x);
    journal_.push_back({x, q, kUnassigned});
    return true;
  }

  // Replaces x in q by a free neighbor y of q that lies in every group of q
  // containing x, so no count of q drops. Prefers y outside N(p).
  bool TrySwap(PlatformId q, ItemId x) {
    ArrivedPlatform& donor = state_.arrived.at(q);
    std::vector<int> groups = GroupsContaining(donor, x);
    auto key = std::make_pair(q, groups);
    if (failed_swaps_.count(key)) return false;
    for (int pass = 0; pass < 2; ++pass) {
      for (ItemId y : donor.platform.neighbors) {
        if (!state_.free[y] || in_s_[y]) continue;
        if (Contains(p_.neighbors, y) != (pass == 1)) continue;
        bool covers = true;
        for (int g : groups) {
          if (!Contains(donor.platform.groups[g].members, y)) {
            covers = false;
            break;
          }
        }
        if (!covers) continue;
        AddToPlatform(donor, y);
        state_.assignment.Assign(y, q);
        state_.free[y] = false;
        --state_.free_count;
        journal_.push_back({y, kUnassigned, q});
        RemoveFromPlatform(donor, x);
        state_.assignment.Unassign(x);
        journal_.push_back({x, q, kUnassigned});
        return true;
      }
    }
    // The free pool only shrinks during one attempt, so a failure is final.
    failed_swaps_.insert(std::move(key));
    return false;
  }

  void Rollback() {
    for (auto it = journal_.rbegin(); it != journal_.rend(); ++it) {
      if (it->to != kUnassigned) {
        RemoveFromPlatform(state_.arrived.at(it->to), it->item);
      }
      if (it->from != kUnassigned) {
        AddToPlatform(state_.arrived.at(it->from), it->item);
        state_.assignment.Assign(it->item, it->from);
      } else {
        state_.assignment.Unassign(it->item);
        state_.free[it->item] = true;
        ++state_.free_count;
      }
    }
    journal_.clear();
  }

  OnlineState& state_;
  const LbPlatform& p_;
  CandidateOrder order_;
  std::vector<bool> in_s_;
  std::vector<ItemId> s_;
  std::vector<Move> journal_;
  std::set<std::pair<PlatformId, std::vector<int>>> failed_swaps_;
};

}  // namespace internal

// Processes one arriving platform: one iteration of the greedy loop. Throws
// std::invalid_argument when `id` has already arrived or `p` refers to items
// outside the state.
inline ArrivalDecision OnlineNewPlatform(OnlineState& state, PlatformId id,
                                         const LbPlatform& p,
                                         const LbStrategy& strategy) {
  if (id < 0) throw std::invalid_argument("negative platform id");
  if (state.arrived.count(id)) {
    throw std::invalid_argument("platform " + std::to_string(id) +
                                " has already arrived");
  }
  const int n = static_cast<int>(state.free.size());
  for (ItemId i : p.neighbors) {
    if (i < 0 || i >= n) {
      throw std::invalid_argument("platform " + std::to_string(id) +
                                  " has unknown neighbor " + std::to_string(i));
    }
  }

  auto s =
      ConstructSatisfyingSet(p, state.free, strategy, state.remaining_degree);
  if (!s && strategy.variant == LbVariant::kAugmenting) {
    s = internal::Augmenter(state, p, strategy).Run();
  }

  ArrivedPlatform entry;
  entry.platform = p;
  entry.group_count.assign(p.groups.size(), 0);
  auto& ap = state.arrived.emplace(id, std::move(entry)).first->second;
  if (s) {
    for (ItemId x : *s) {
      if (state.free[x]) {
        state.free[x] = false;
        --state.free_count;
      }
      state.assignment.Assign(x, id);
    }
    ap.matched = *s;
    for (std::size_t g = 0; g < p.groups.size(); ++g) {
      ap.group_count[g] = internal::CountIn(ap.matched, p.groups[g].members);
    }
    ap.satisfied = true;
    state.satisfied.push_back(id);
  }
  if (!state.remaining_degree.empty()) {
    for (ItemId i : p.neighbors) --state.remaining_degree[i];
  }
  return s ? ArrivalDecision::kSatisfied : ArrivalDecision::kSkipped;
}

struct LbResult {
  Assignment assignment;
  std::vector<PlatformId> satisfied;  // sorted
};

// Number of platforms adjacent to each item.
inline std::vector<int> ItemDegrees(const LbInstance& inst) {
  std::vector<int> degree(inst.item_count, 0);
  for (const auto& p : inst.platforms) {
    for (ItemId i : p.neighbors) ++degree[i];
  }
  return degree;
}

// Runs the greedy over `order`, which must be a permutation of the platform
// ids. Throws ValidationError on a malformed instance.
inline LbResult SolveLb(const LbInstance& inst,
                        const std::vector<PlatformId>& order,
                        const LbStrategy& strategy) {
  RequireValid(ValidateLbInstance(inst));
  const int m = static_cast<int>(inst.platforms.size());
  std::vector<bool> seen(m, false);
  if (static_cast<int>(order.size()) != m) {
    throw std::invalid_argument("order is not a permutation of the platforms");
  }
  for (PlatformId j : order) {
    if (j < 0 || j >= m || seen[j]) {
      throw std::invalid_argument(
          "order is not a permutation of the platforms (at " +
          std::to_string(j) + ")");
    }
    seen[j] = true;
  }
  std::vector<int> degree;
  if (strategy.variant != LbVariant::kBase) degree = ItemDegrees(inst);
  OnlineState state(inst.item_count, std::move(degree));
  for (PlatformId j : order) {
    OnlineNewPlatform(state, j, inst.platforms[j], strategy);
  }
  LbResult result{std::move(state.assignment), std::move(state.satisfied)};
  std::sort(result.satisfied.begin(), result.satisfied.end());
  return result;
}

inline LbResult SolveLb(const LbInstance& inst, const LbStrategy& strategy) {
  return SolveLb(inst, CanonicalOrder(static_cast<int>(inst.platforms.size())),
                 strategy);
}

}  // namespace diverse_match

#endif  // DIVERSE_MATCH_LB_SOLVER_H_
