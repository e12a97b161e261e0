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

// Exact solver for opening platforms in a rooted hierarchy.
//
// Pipeline:
//   1. ReduceBaseToIntermediate: adds a zero-cost root above the original root
//      and rewrites every child's bounds and reward so that a sibling-closed
//      subtree's summed cost equals the summed original bounds of its
//      frontier. Each parent's original bound is peeled off its children in
//      child order.
//   2. ReduceIntermediateToSteiner: every node takes the summed cost and
//      reward of its children; leaves become free. Choosing a node now means
//      opening all of its children.
//   3. Binarize: nodes with more than two children get a balanced gadget of
//      zero-cost filler nodes.
//   4. SteinerDp: a table X_v[c] per node over the budget lattice, holding
//      the best reward of a rooted subtree at v with cost <= c coordinate-wise.
//   5. ExtractSolution: maps the chosen subtree back to the antichain of
//      opened nodes and allocates item counts to them.
//
// Cost vectors have one coordinate per global group. When some node's overall
// bound exceeds the sum of its group bounds, or the total item count is below
// the summed group budget, one more coordinate is added. It carries each
// node's total requirement max(lb_j, sum_g lb_j^(g)) against
// min(total_items, sum_g budget_g). That coordinate is monotone under the
// same conditions as the others, so both reductions apply to it unchanged.

#ifndef DIVERSE_MATCH_TREE_SOLVER_H_
#define DIVERSE_MATCH_TREE_SOLVER_H_

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "diverse_match/errors.h"
#include "diverse_match/evaluate.h"
#include "diverse_match/model.h"
#include "diverse_match/validate.h"

namespace diverse_match {

inline constexpr NodeId kFiller = -1;

struct CostNode {
  std::optional<NodeId> parent;
  std::vector<NodeId> children;
  std::vector<std::int64_t> cost;
  std::int64_t reward = 0;
  NodeId origin = kFiller;  // node of the pre-binarization tree, or kFiller
};

// A rooted tree with vector costs and a vector budget, used for the
// intermediate and Steiner forms.
struct CostTree {
  std::vector<CostNode> nodes;
  NodeId root = 0;
  std::vector<std::int64_t> budget;

  int dims() const { return static_cast<int>(budget.size()); }
};

// Whether the total-items coordinate is needed for `inst`.
inline bool NeedsTotalCoordinate(const TreeInstance& inst) {
  std::int64_t budget_sum = 0;
  for (std::int64_t b : inst.budget) budget_sum += b;
  if (inst.total_items < budget_sum) return true;
  for (const auto& node : inst.nodes) {
    std::int64_t group_sum = 0;
    for (std::int64_t v : node.group_lb) group_sum += v;
    if (node.overall_lb > group_sum) return true;
  }
  return false;
}

// Per-node cost vectors of the original instance (group bounds, plus the
// total requirement when needed) and the matching budget.
inline std::pair<std::vector<std::vector<std::int64_t>>,
                 std::vector<std::int64_t>>
OriginalCosts(const TreeInstance& inst) {
  const bool total = NeedsTotalCoordinate(inst);
  std::vector<std::vector<std::int64_t>> costs;
  costs.reserve(inst.nodes.size());
  for (const auto& node : inst.nodes) {
    auto c = node.group_lb;
    if (total) c.push_back(RequiredItems(node));
    costs.push_back(std::move(c));
  }
  auto budget = inst.budget;
  if (total) budget.push_back(ItemCapacity(inst));
  return {std::move(costs), std::move(budget)};
}

// Node ids 0..N-1 are the original nodes; node N is the added root.
inline CostTree ReduceBaseToIntermediate(const TreeInstance& inst) {
  RequireValid(ValidateTreeInstance(inst));
  TreeInstance linked = inst;
  LinkTree(linked);
  const int n = static_cast<int>(linked.nodes.size());
  auto [costs, budget] = OriginalCosts(linked);
  const int dims = static_cast<int>(budget.size());

  CostTree out;
  out.budget = budget;
  out.root = n;
  out.nodes.resize(n + 1);
  for (NodeId v = 0; v < n; ++v) {
    CostNode& node = out.nodes[v];
    node.parent = linked.nodes[v].parent ? *linked.nodes[v].parent : n;
    node.children = linked.nodes[v].children;
    node.cost = costs[v];
    node.reward = linked.nodes[v].reward;
    node.origin = v;
  }
  CostNode& top = out.nodes[n];
  top.children = {linked.root};
  top.cost.assign(dims, 0);
  top.origin = n;

  // Each parent's original cost is split greedily over its children's
  // original costs; the remainder becomes the child's new cost.
  for (NodeId v = 0; v < n; ++v) {
    const auto& children = linked.nodes[v].children;
    if (children.empty()) continue;
    for (int d = 0; d < dims; ++d) {
      std::int64_t remaining = costs[v][d];
      for (NodeId c : children) {
        std::int64_t x = std::min(costs[c][d], remaining);
        remaining -= x;
        out.nodes[c].cost[d] = costs[c][d] - x;
      }
      if (remaining > 0) {
        throw ValidationError("node " + std::to_string(v) +
                              " violates cost monotonicity");
      }
    }
    std::int64_t remaining = linked.nodes[v].reward;
    for (NodeId c : children) {
      std::int64_t y = std::min(linked.nodes[c].reward, remaining);
      remaining -= y;
      out.nodes[c].reward = linked.nodes[c].reward - y;
    }
    if (remaining > 0) {
      throw ValidationError("node " + std::to_string(v) +
                            " violates reward monotonicity");
    }
  }
  return out;
}

inline CostTree ReduceIntermediateToSteiner(const CostTree& inter) {
  CostTree out = inter;
  for (auto& node : out.nodes) {
    node.cost.assign(inter.dims(), 0);
    node.reward = 0;
    for (NodeId c : node.children) {
      const CostNode& child = inter.nodes[c];
      for (int d = 0; d < inter.dims(); ++d) node.cost[d] += child.cost[d];
      node.reward += child.reward;
    }
  }
  return out;
}

// Every node keeps its id and gets origin = its id; fillers are appended.
inline CostTree Binarize(const CostTree& tree) {
  CostTree out;
  out.root = tree.root;
  out.budget = tree.budget;
  out.nodes = tree.nodes;
  for (NodeId v = 0; v < static_cast<NodeId>(tree.nodes.size()); ++v) {
    out.nodes[v].origin = v;
  }

  // Attaches `kids` below `parent` as a balanced binary gadget.
  auto attach = [&](auto&& self, NodeId parent,
                    std::vector<NodeId> kids) -> void {
    out.nodes[parent].children.clear();
    if (kids.size() <= 2) {
      for (NodeId c : kids) {
        out.nodes[parent].children.push_back(c);
        out.nodes[c].parent = parent;
      }
      return;
    }
    const std::size_t half = (kids.size() + 1) / 2;
    std::vector<NodeId> parts[2] = {
        std::vector<NodeId>(kids.begin(), kids.begin() + half),
        std::vector<NodeId>(kids.begin() + half, kids.end())};
    for (auto& part : parts) {
      if (part.size() == 1) {
        out.nodes[parent].children.push_back(part.front());
        out.nodes[part.front()].parent = parent;
        continue;
      }
      const NodeId filler = static_cast<NodeId>(out.nodes.size());
      CostNode node;
      node.parent = parent;
      node.cost.assign(tree.dims(), 0);
      node.origin = kFiller;
      out.nodes.push_back(std::move(node));
      out.nodes[parent].children.push_back(filler);
      self(self, filler, std::move(part));
    }
  };
  const NodeId original = static_cast<NodeId>(tree.nodes.size());
  for (NodeId v = 0; v < original; ++v) {
    if (tree.nodes[v].children.size() > 2) {
      attach(attach, v, tree.nodes[v].children);
    }
  }
  return out;
}

// Mixed-radix indexing of the budget lattice {c : 0 <= c <= budget}. The
// index is linear in the coordinates, so idx(a - b) = idx(a) - idx(b).
class BudgetLattice {
 public:
  explicit BudgetLattice(const std::vector<std::int64_t>& budget)
      : budget_(budget), stride_(budget.size()) {
    size_ = 1;
    for (std::size_t d = 0; d < budget.size(); ++d) {
      stride_[d] = size_;
      if (budget[d] + 1 > std::numeric_limits<std::int64_t>::max() / size_) {
        size_ = std::numeric_limits<std::int64_t>::max();
        return;
      }
      size_ *= budget[d] + 1;
    }
  }

  std::int64_t size() const { return size_; }
  int dims() const { return static_cast<int>(budget_.size()); }
  const std::vector<std::int64_t>& budget() const { return budget_; }

  std::int64_t Index(const std::vector<std::int64_t>& c) const {
    std::int64_t idx = 0;
    for (std::size_t d = 0; d < c.size(); ++d) idx += c[d] * stride_[d];
    return idx;
  }

  std::vector<std::int64_t> Coords(std::int64_t idx) const {
    std::vector<std::int64_t> c(budget_.size());
    for (std::size_t d = 0; d < budget_.size(); ++d) {
      c[d] = idx % (budget_[d] + 1);
      idx /= budget_[d] + 1;
    }
    return c;
  }

  bool Fits(const std::vector<std::int64_t>& c) const {
    for (std::size_t d = 0; d < c.size(); ++d) {
      if (c[d] > budget_[d]) return false;
    }
    return true;
  }

  // Calls fn(index_of_c) for every c <= limit, in increasing index order.
  template <typename Fn>
  void ForEachBelow(const std::vector<std::int64_t>& limit, Fn&& fn) const {
    const int dims = this->dims();
    std::vector<std::int64_t> c(dims, 0);
    std::int64_t idx = 0;
    while (true) {
      fn(idx);
      int d = 0;
      for (; d < dims; ++d) {
        if (c[d] < limit[d]) {
          ++c[d];
          idx += stride_[d];
          break;
        }
        idx -= c[d] * stride_[d];
        c[d] = 0;
      }
      if (d == dims) return;
    }
  }

 private:
  std::vector<std::int64_t> budget_;
  std::vector<std::int64_t> stride_;
  std::int64_t size_;
};

struct DpOptions {
  // Upper bound on lattice size times node count.
  std::int64_t cell_limit = 100'000'000;
  // Keep every node's table in the result (tests only; memory heavy).
  bool keep_tables = false;
};

struct DpResult {
  std::int64_t reward = 0;
  std::vector<NodeId> chosen;  // sorted ids of the input tree; may be empty
  std::vector<std::int64_t> root_table;
  std::vector<std::vector<std::int64_t>> tables;  // when keep_tables
};

// Best rooted subtree of a tree whose nodes have at most two children. On
// equal reward a node is left out, and a two-child split gives the first
// child the largest lattice index among the optimal splits.
inline DpResult SteinerDp(const CostTree& tree, const DpOptions& options = {}) {
  const int n = static_cast<int>(tree.nodes.size());
  BudgetLattice lattice(tree.budget);
  if (lattice.size() == std::numeric_limits<std::int64_t>::max() ||
      lattice.size() > options.cell_limit / std::max(n, 1) ||
      lattice.size() > std::numeric_limits<std::int32_t>::max()) {
    throw LimitExceededError(
        "DP table of " + std::to_string(n) +
        " nodes over a budget lattice "
        "of " +
        (lattice.size() == std::numeric_limits<std::int64_t>::max()
             ? std::string("overflowing")
             : std::to_string(lattice.size())) +
        " cells exceeds the cell limit " + std::to_string(options.cell_limit));
  }
  for (const auto& node : tree.nodes) {
    if (node.children.size() > 2) {
      throw std::invalid_argument("SteinerDp needs a binarized tree");
    }
  }
  const std::int64_t cells = lattice.size();

  // Post-order.
  std::vector<NodeId> order;
  order.reserve(n);
  {
    std::vector<std::pair<NodeId, bool>> stack{{tree.root, false}};
    while (!stack.empty()) {
      auto [v, expanded] = stack.back();
      stack.pop_back();
      if (expanded) {
        order.push_back(v);
        continue;
      }
      stack.push_back({v, true});
      for (NodeId c : tree.nodes[v].children) stack.push_back({c, false});
    }
  }

  constexpr std::int32_t kExcluded = -1;
  std::vector<std::vector<std::int64_t>> value(n);
  std::vector<std::vector<std::int32_t>> choice(n);
  std::vector<std::int64_t> pair_best(cells);
  std::vector<std::int32_t> pair_split(cells);

  for (NodeId v : order) {
    const CostNode& node = tree.nodes[v];
    auto& x = value[v];
    auto& ch = choice[v];
    x.assign(cells, 0);
    ch.assign(cells, kExcluded);
    if (!lattice.Fits(node.cost)) continue;
    const std::int64_t offset = lattice.Index(node.cost);

    // best[s] for the children given exact budget s; split[s] for two.
    const std::int64_t* best = nullptr;
    if (node.children.size() == 1) {
      best = value[node.children[0]].data();
    } else if (node.children.size() == 2) {
      const auto& left = value[node.children[0]];
      const auto& right = value[node.children[1]];
      lattice.ForEachBelow(lattice.budget(), [&](std::int64_t s) {
        std::int64_t top = -1;
        std::int32_t arg = 0;
        lattice.ForEachBelow(lattice.Coords(s), [&](std::int64_t ci) {
          std::int64_t val = left[ci] + right[s - ci];
          if (val >= top) {
            top = val;
            arg = static_cast<std::int32_t>(ci);
          }
        });
        pair_best[s] = top;
        pair_split[s] = arg;
      });
      best = pair_best.data();
    }

    lattice.ForEachBelow(lattice.budget(), [&](std::int64_t ci) {
      // Cells below the node's own cost stay excluded.
      std::int64_t rest = ci - offset;
      if (rest < 0) return;
      auto c = lattice.Coords(ci);
      if (!lattice.Fits(c) || [&] {
            for (int d = 0; d < lattice.dims(); ++d) {
              if (c[d] < node.cost[d]) return true;
            }
            return false;
          }()) {
        return;
      }
      std::int64_t with = node.reward + (best ? best[rest] : 0);
      if (with > 0) {
        x[ci] = with;
        ch[ci] = node.children.size() == 2 ? pair_split[rest] : 0;
      }
    });

    if (!options.keep_tables) {
      for (NodeId c : node.children) {
        std::vector<std::int64_t>().swap(value[c]);
      }
    }
  }

  DpResult result;
  const std::int64_t full = cells - 1;
  result.reward = value[tree.root][full];
  std::vector<std::pair<NodeId, std::int64_t>> stack{{tree.root, full}};
  while (!stack.empty()) {
    auto [v, ci] = stack.back();
    stack.pop_back();
    const std::int32_t pick = choice[v][ci];
    if (pick == kExcluded) continue;
    result.chosen.push_back(v);
    const CostNode& node = tree.nodes[v];
    const std::int64_t rest = ci - lattice.Index(node.cost);
    if (node.children.size() == 1) {
      stack.push_back({node.children[0], rest});
    } else if (node.children.size() == 2) {
      stack.push_back({node.children[0], pick});
      stack.push_back({node.children[1], rest - pick});
    }
  }
  std::sort(result.chosen.begin(), result.chosen.end());
  if (options.keep_tables) {
    result.tables = value;
  }
  result.root_table = std::move(value[tree.root]);
  return result;
}

// Optimal Steiner reward on a tree of any degree. Children are folded one at
// a time with a (max, +) convolution over the lattice. It computes the value
// only, and is used to check that binarization preserves the optimum.
inline std::int64_t SteinerOptimumAnyDegree(const CostTree& tree) {
  BudgetLattice lattice(tree.budget);
  const std::int64_t cells = lattice.size();
  auto table = [&](auto&& self, NodeId v) -> std::vector<std::int64_t> {
    const CostNode& node = tree.nodes[v];
    // acc[s]: best total over the children folded so far within budget s.
    std::vector<std::int64_t> acc(cells, 0);
    for (NodeId c : node.children) {
      auto child = self(self, c);
      std::vector<std::int64_t> next(cells, 0);
      for (std::int64_t s = 0; s < cells; ++s) {
        lattice.ForEachBelow(lattice.Coords(s), [&](std::int64_t a) {
          next[s] = std::max(next[s], acc[a] + child[s - a]);
        });
      }
      acc = std::move(next);
    }
    std::vector<std::int64_t> out(cells, 0);
    if (!lattice.Fits(node.cost)) return out;
    const std::int64_t offset = lattice.Index(node.cost);
    for (std::int64_t s = 0; s < cells; ++s) {
      auto c = lattice.Coords(s);
      bool fits = true;
      for (int d = 0; d < lattice.dims(); ++d) fits &= c[d] >= node.cost[d];
      if (fits)
        out[s] = std::max<std::int64_t>(0, node.reward + acc[s - offset]);
    }
    return out;
  };
  return table(table, tree.root)[cells - 1];
}

// Opened nodes and item counts for a Steiner choice on the reduced tree of
// `inst` (ids 0..N-1 original, N the added root). Throws InternalError if the
// result is infeasible, which would mean a bug in the reductions.
inline TreeSolution ExtractSolution(const TreeInstance& inst,
                                    const std::vector<NodeId>& steiner_chosen) {
  TreeInstance linked = inst;
  LinkTree(linked);
  const int n = static_cast<int>(linked.nodes.size());
  const int k = linked.group_count;
  std::vector<bool> in_s(n + 1, false);
  for (NodeId v : steiner_chosen) {
    if (v < 0 || v > n) {
      throw InternalError("chosen node " + std::to_string(v) + " out of range");
    }
    in_s[v] = true;
  }
  TreeSolution sol;
  if (!in_s[n]) {
    if (!steiner_chosen.empty()) {
      throw InternalError("chosen subtree does not contain the root");
    }
    sol.satisfied_nodes = {n};
    sol.added_root = true;
    return sol;
  }
  for (NodeId v = 0; v < n; ++v) {
    NodeId parent = linked.nodes[v].parent ? *linked.nodes[v].parent : n;
    if (in_s[v] && !in_s[parent]) {
      throw InternalError("chosen subtree is not connected at node " +
                          std::to_string(v));
    }
  }
  // Opened nodes: children of chosen nodes that are not expanded themselves,
  // plus chosen leaves.
  for (NodeId v = 0; v < n; ++v) {
    NodeId parent = linked.nodes[v].parent ? *linked.nodes[v].parent : n;
    if (!in_s[parent]) continue;
    if (!in_s[v] || linked.nodes[v].children.empty()) {
      sol.satisfied_nodes.push_back(v);
    }
  }

  std::vector<std::int64_t> remaining = linked.budget;
  for (NodeId v : sol.satisfied_nodes) {
    for (int g = 0; g < k; ++g) remaining[g] -= linked.nodes[v].group_lb[g];
  }
  std::int64_t used_total = 0;
  for (NodeId v : sol.satisfied_nodes) {
    const TreeNode& node = linked.nodes[v];
    auto counts = node.group_lb;
    std::int64_t topup = RequiredItems(node);
    for (std::int64_t c : counts) topup -= c;
    for (int g = 0; g < k && topup > 0; ++g) {
      std::int64_t t = std::min(topup, std::max<std::int64_t>(0, remaining[g]));
      counts[g] += t;
      remaining[g] -= t;
      topup -= t;
    }
    if (topup > 0) {
      throw InternalError("not enough items to top up node " +
                          std::to_string(v));
    }
    used_total += RequiredItems(node);
    sol.total_reward += node.reward;
    sol.allocation.emplace(v, std::move(counts));
  }
  if (used_total > linked.total_items) {
    throw InternalError("allocation exceeds the total number of items");
  }
  auto problems = CheckTreeSolution(linked, sol);
  if (!problems.empty()) throw InternalError(problems.front());
  return sol;
}

struct TreeSolveResult {
  TreeSolution solution;
  std::int64_t lattice_cells = 0;
  int binarized_nodes = 0;
};

inline TreeSolveResult SolveTree(const TreeInstance& inst,
                                 const DpOptions& options = {}) {
  CostTree inter = ReduceBaseToIntermediate(inst);
  CostTree steiner = ReduceIntermediateToSteiner(inter);
  CostTree binary = Binarize(steiner);
  DpResult dp = SteinerDp(binary, options);
  std::vector<NodeId> chosen;
  for (NodeId v : dp.chosen) {
    if (binary.nodes[v].origin != kFiller) chosen.push_back(v);
  }
  TreeSolveResult result;
  result.solution = ExtractSolution(inst, chosen);
  if (result.solution.total_reward != dp.reward) {
    throw InternalError(
        "extracted reward " + std::to_string(result.solution.total_reward) +
        " differs from the DP optimum " + std::to_string(dp.reward));
  }
  result.lattice_cells = BudgetLattice(binary.budget).size();
  result.binarized_nodes = static_cast<int>(binary.nodes.size());
  return result;
}

}  // namespace diverse_match

#endif  // DIVERSE_MATCH_TREE_SOLVER_H_
