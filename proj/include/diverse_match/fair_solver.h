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

// Solvers for maximizing items matched to platforms whose size lies in
// [lb_j, ub_j] and whose per-group shares lie in [alpha, beta].
//
// SolveFair is the block algorithm. Each platform repeatedly takes disjoint
// blocks of exactly lb_j items, with per-group counts inside
//   [max(0, ceil(alpha * lb_j) - 3), floor(beta * lb_j) + 3],
// up to floor(ub_j / lb_j) blocks. A union of t' blocks has size t' * lb_j and
// meets the window (alpha - 3/lb_j)|M| <= |M ∩ C| <= (beta + 3/lb_j)|M|. In
// exchange, the matched-item count is within 2(ell + 2) of the exact optimum,
// where ell = max_j lb_j.
//
// SolveFairNaive meets the windows exactly. Per platform it takes the
// smallest feasible size s in [lb_j, ub_j].
//
// Both solvers require each platform's groups to partition its neighbors.

#ifndef DIVERSE_MATCH_FAIR_SOLVER_H_
#define DIVERSE_MATCH_FAIR_SOLVER_H_

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "diverse_match/evaluate.h"
#include "diverse_match/model.h"
#include "diverse_match/rational.h"
#include "diverse_match/validate.h"

namespace diverse_match {

struct BlockSpec {
  PlatformId platform = 0;
  int size = 0;         // lb_j
  std::vector<int> lo;  // per group
  std::vector<int> hi;
};

inline BlockSpec ComputeBlockSpec(PlatformId id, const FairPlatform& p) {
  BlockSpec spec;
  spec.platform = id;
  spec.size = p.lb;
  for (const auto& g : p.groups) {
    std::int64_t lo = CeilTimes(g.alpha, p.lb) - 3;
    std::int64_t hi = FloorTimes(g.beta, p.lb) + 3;
    spec.lo.push_back(static_cast<int>(std::max<std::int64_t>(0, lo)));
    spec.hi.push_back(static_cast<int>(hi));
  }
  return spec;
}

namespace internal {

inline std::vector<int> FreeCounts(const FairPlatform& p,
                                   const std::vector<bool>& free) {
  std::vector<int> counts;
  for (const auto& g : p.groups) {
    int c = 0;
    for (ItemId i : g.members) c += free[i] ? 1 : 0;
    counts.push_back(c);
  }
  return counts;
}

// (item, group index) for every neighbor, ascending by item.
inline std::vector<std::pair<ItemId, int>> NeighborGroups(
    const FairPlatform& p) {
  std::vector<std::pair<ItemId, int>> out;
  for (int g = 0; g < static_cast<int>(p.groups.size()); ++g) {
    for (ItemId i : p.groups[g].members) out.push_back({i, g});
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Takes `lo[g]` free members of each group, then tops up in item id order
// without exceeding `hi[g]`, until `size` items are taken. Returns the items,
// sorted, or nullopt if fewer than `size` could be taken.
inline std::optional<std::vector<ItemId>> FillWindows(
    const FairPlatform& p, const std::vector<bool>& free,
    const std::vector<int>& lo, const std::vector<int>& hi, int size) {
  std::vector<ItemId> s;
  std::vector<bool> in_s(free.size(), false);
  std::vector<int> count(p.groups.size(), 0);
  for (std::size_t g = 0; g < p.groups.size(); ++g) {
    for (ItemId i : p.groups[g].members) {
      if (count[g] >= lo[g]) break;
      if (!free[i]) continue;
      in_s[i] = true;
      s.push_back(i);
      ++count[g];
    }
    if (count[g] < lo[g]) return std::nullopt;
  }
  if (static_cast<int>(s.size()) > size) return std::nullopt;
  for (auto [i, g] : NeighborGroups(p)) {
    if (static_cast<int>(s.size()) == size) break;
    if (!free[i] || in_s[i] || count[g] >= hi[g]) continue;
    in_s[i] = true;
    s.push_back(i);
    ++count[g];
  }
  if (static_cast<int>(s.size()) != size) return std::nullopt;
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace internal

// One block of exactly spec.size free items within the spec's windows. Since
// the groups partition N(p), a block exists iff every lo_i <= free_i,
// sum lo_i <= size and sum min(hi_i, free_i) >= size. This returns one
// whenever it exists.
inline std::optional<std::vector<ItemId>> ConstructBlock(
    const FairPlatform& p, const std::vector<bool>& free,
    const BlockSpec& spec) {
  auto free_counts = internal::FreeCounts(p, free);
  std::int64_t lo_sum = 0, hi_sum = 0;
  for (std::size_t g = 0; g < p.groups.size(); ++g) {
    if (spec.lo[g] > free_counts[g]) return std::nullopt;
    lo_sum += spec.lo[g];
    hi_sum += std::min(spec.hi[g], free_counts[g]);
  }
  if (lo_sum > spec.size || hi_sum < spec.size) return std::nullopt;
  return internal::FillWindows(p, free, spec.lo, spec.hi, spec.size);
}

struct FairResult {
  Assignment assignment;
  // The algorithm's own objective: relaxed for SolveFair, strict for
  // SolveFairNaive.
  FairScore score;
  std::vector<int> blocks;  // per platform; SolveFairNaive reports 0 or 1
};

inline FairResult SolveFair(const FairInstance& inst,
                            const std::vector<PlatformId>& order) {
  RequireValid(ValidateFairInstance(inst));
  const int m = static_cast<int>(inst.platforms.size());
  FairResult result{Assignment(inst.item_count), {}, std::vector<int>(m, 0)};
  std::vector<bool> free(inst.item_count, true);
  for (PlatformId j : order) {
    if (j < 0 || j >= m) {
      throw std::invalid_argument("unknown platform " + std::to_string(j));
    }
    const FairPlatform& p = inst.platforms[j];
    BlockSpec spec = ComputeBlockSpec(j, p);
    const int cap = p.ub / p.lb;
    while (result.blocks[j] < cap) {
      auto block = ConstructBlock(p, free, spec);
      if (!block) break;
      for (ItemId i : *block) {
        free[i] = false;
        result.assignment.Assign(i, j);
      }
      ++result.blocks[j];
    }
  }
  result.score = ScoreFair(inst, result.assignment, FairMode::kRelaxed);
  return result;
}

inline FairResult SolveFairNaive(const FairInstance& inst,
                                 const std::vector<PlatformId>& order) {
  RequireValid(ValidateFairInstance(inst));
  const int m = static_cast<int>(inst.platforms.size());
  FairResult result{Assignment(inst.item_count), {}, std::vector<int>(m, 0)};
  std::vector<bool> free(inst.item_count, true);
  for (PlatformId j : order) {
    if (j < 0 || j >= m) {
      throw std::invalid_argument("unknown platform " + std::to_string(j));
    }
    const FairPlatform& p = inst.platforms[j];
    auto free_counts = internal::FreeCounts(p, free);
    const std::size_t k = p.groups.size();
    for (int s = p.lb; s <= p.ub; ++s) {
      std::vector<int> lo(k), hi(k);
      std::int64_t lo_sum = 0, hi_sum = 0;
      bool ok = true;
      for (std::size_t g = 0; g < k; ++g) {
        lo[g] = static_cast<int>(CeilTimes(p.groups[g].alpha, s));
        hi[g] = static_cast<int>(std::min<std::int64_t>(
            FloorTimes(p.groups[g].beta, s), free_counts[g]));
        ok = ok && lo[g] <= hi[g];
        lo_sum += lo[g];
        hi_sum += hi[g];
      }
      if (!ok || lo_sum > s || hi_sum < s) continue;
      auto chosen = internal::FillWindows(p, free, lo, hi, s);
      if (!chosen) continue;
      for (ItemId i : *chosen) {
        free[i] = false;
        result.assignment.Assign(i, j);
      }
      result.blocks[j] = 1;
      break;
    }
  }
  result.score = ScoreFair(inst, result.assignment, FairMode::kStrict);
  return result;
}

inline FairResult SolveFair(const FairInstance& inst) {
  return SolveFair(inst,
                   CanonicalOrder(static_cast<int>(inst.platforms.size())));
}

inline FairResult SolveFairNaive(const FairInstance& inst) {
  return SolveFairNaive(
      inst, CanonicalOrder(static_cast<int>(inst.platforms.size())));
}

}  // namespace diverse_match

#endif  // DIVERSE_MATCH_FAIR_SOLVER_H_
