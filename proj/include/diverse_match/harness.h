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

// Command implementations behind the diverse-match CLI. Each Run* function
// returns a process exit code and writes human-readable output to the given
// streams.

#ifndef DIVERSE_MATCH_HARNESS_H_
#define DIVERSE_MATCH_HARNESS_H_

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

#include "diverse_match/errors.h"
#include "diverse_match/evaluate.h"
#include "diverse_match/fair_solver.h"
#include "diverse_match/generators.h"
#include "diverse_match/json_io.h"
#include "diverse_match/lb_solver.h"
#include "diverse_match/model.h"
#include "diverse_match/oracle.h"
#include "diverse_match/tree_solver.h"
#include "diverse_match/validate.h"

#ifndef DM_BUILD_ID
#define DM_BUILD_ID "unknown"
#endif

namespace diverse_match {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,       // bad arguments or unreadable/unwritable files
  kExitValidation = 2,  // instance violates its invariants
  kExitLimit = 3,       // oracle or DP size limit refused the instance
  kExitParse = 4,       // malformed JSON
  kExitSchema = 5,      // well-formed JSON with the wrong shape
  kExitInternal = 6,    // a self-check failed
  kExitVerifyFailed = 7,
};

inline const char* BuildId() { return DM_BUILD_ID; }

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Runs `body` and maps library exceptions to exit codes, printing the message.
inline int Guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const LimitExceededError& e) {
    err << "limit exceeded: " << e.what() << "\n";
    return kExitLimit;
  } catch (const ParseError& e) {
    err << "malformed JSON: " << e.what() << "\n";
    return kExitParse;
  } catch (const SchemaError& e) {
    err << "schema error: " << e.what() << "\n";
    return kExitSchema;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const InvalidAssignmentError& e) {
    err << "invalid assignment: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

inline double MillisSince(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

inline std::string FormatFixed(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, value);
  return buf;
}

// ----- Generator parameters -----

// "key=value" options. Getters consume keys; Finish() rejects leftovers.
class Params {
 public:
  Params() = default;
  explicit Params(const std::vector<std::string>& items) {
    for (const auto& item : items) {
      auto eq = item.find('=');
      if (eq == std::string::npos || eq == 0) {
        throw UsageError("parameter \"" + item + "\" is not key=value");
      }
      values_[item.substr(0, eq)] = item.substr(eq + 1);
    }
  }

  std::int64_t Int(const std::string& key, std::int64_t fallback) {
    auto v = Take(key);
    if (!v) return fallback;
    std::size_t used = 0;
    std::int64_t out = 0;
    try {
      out = std::stoll(*v, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != v->size()) {
      throw UsageError("parameter " + key + " needs an integer");
    }
    record_[key] = *v;
    return out;
  }

  double Real(const std::string& key, double fallback) {
    auto v = Take(key);
    if (!v) return fallback;
    std::size_t used = 0;
    double out = 0;
    try {
      out = std::stod(*v, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != v->size()) {
      throw UsageError("parameter " + key + " needs a number");
    }
    record_[key] = *v;
    return out;
  }

  Rational Fraction(const std::string& key, Rational fallback) {
    auto v = Take(key);
    if (!v) return fallback;
    auto slash = v->find('/');
    try {
      Rational r{
          std::stoll(v->substr(0, slash)),
          slash == std::string::npos ? 1 : std::stoll(v->substr(slash + 1))};
      record_[key] = *v;
      return r;
    } catch (const std::exception&) {
      throw UsageError("parameter " + key + " needs a fraction like 1/40");
    }
  }

  bool Has(const std::string& key) const { return values_.count(key) > 0; }

  void Finish() const {
    if (!values_.empty()) {
      throw UsageError("unknown parameter \"" + values_.begin()->first + "\"");
    }
  }

  // Parameters that were consumed, for provenance records.
  const std::map<std::string, std::string>& recorded() const { return record_; }

 private:
  std::optional<std::string> Take(const std::string& key) {
    auto it = values_.find(key);
    if (it == values_.end()) return std::nullopt;
    std::string v = it->second;
    values_.erase(it);
    return v;
  }

  std::map<std::string, std::string> values_;
  std::map<std::string, std::string> record_;
};

// Maximum item degree used for a target average degree: degrees are uniform
// on [1, 2a - 1], whose mean is a.
inline int MaxDegreeForAverage(int average) { return 2 * average - 1; }

// The worked example with one group: a root with two children, each with two
// leaves, and 10 items.
inline TreeInstance WorkedExampleTree() {
  TreeInstance t;
  t.group_count = 1;
  t.budget = {10};
  t.total_items = 10;
  const int parent[7] = {-1, 0, 0, 1, 1, 2, 2};
  const std::int64_t lb[7] = {6, 4, 4, 3, 3, 3, 3};
  const std::int64_t reward[7] = {0, 3, 3, 2, 2, 2, 2};
  for (int v = 0; v < 7; ++v) {
    TreeNode node;
    if (parent[v] >= 0) node.parent = parent[v];
    node.group_lb = {lb[v]};
    node.overall_lb = lb[v];
    node.reward = reward[v];
    t.nodes.push_back(std::move(node));
  }
  LinkTree(t);
  return t;
}

struct GeneratedInstance {
  ProblemKind problem = ProblemKind::kLb;
  LbInstance lb;
  FairInstance fair;
  TreeInstance tree;
};

// Default generator name for a problem.
inline std::string DefaultGenerator(ProblemKind problem) {
  switch (problem) {
    case ProblemKind::kLb:
      return "degree-capped";
    case ProblemKind::kFair:
      return "fair";
    case ProblemKind::kTree:
      return "tree";
  }
  return "";
}

// Degree-capped generators accept either max_degree or avg_degree.
inline int MaxDegreeParam(Params& params, int fallback) {
  if (params.Has("avg_degree")) {
    if (params.Has("max_degree")) {
      throw UsageError("give either avg_degree or max_degree, not both");
    }
    return MaxDegreeForAverage(static_cast<int>(params.Int("avg_degree", 1)));
  }
  return static_cast<int>(params.Int("max_degree", fallback));
}

inline GeneratedInstance Generate(ProblemKind problem,
                                  const std::string& generator, Params& params,
                                  std::uint64_t seed) {
  GeneratedInstance out;
  out.problem = problem;
  auto i32 = [&](const char* key, std::int64_t fallback) {
    return static_cast<int>(params.Int(key, fallback));
  };
  if (problem == ProblemKind::kLb && generator == "degree-capped") {
    int items = i32("items", 10000);
    int platforms = i32("platforms", 250);
    int max_degree = MaxDegreeParam(params, 9);
    int groups = i32("groups", 20);
    int group_lb = i32("group_lb", 2);
    int overall_lb = i32("overall_lb", 0);
    params.Finish();
    out.lb = GenDegreeCapped(items, platforms, max_degree, groups, group_lb,
                             seed, overall_lb);
  } else if (problem == ProblemKind::kLb && generator == "er") {
    int per_group = i32("per_group", 200);
    int groups = i32("groups", 4);
    int platforms = i32("platforms", 100);
    int ell = i32("ell", 2);
    double rho = params.Real("rho", 8.0 * std::log(double(per_group) * groups) /
                                        (double(per_group) * groups));
    params.Finish();
    out.lb = GenErPartition(per_group, groups, rho, platforms, ell, seed);
  } else if (problem == ProblemKind::kLb && generator == "real-like") {
    int max_degree = MaxDegreeParam(params, 6);
    params.Finish();
    out.lb = GenRealLike(seed, max_degree);
  } else if (problem == ProblemKind::kLb && generator == "small") {
    SmallLbParams p;
    p.max_items = i32("max_items", p.max_items);
    p.max_platforms = i32("max_platforms", p.max_platforms);
    p.max_bound = i32("max_bound", p.max_bound);
    p.max_groups = i32("max_groups", p.max_groups);
    p.disjoint_groups = params.Int("disjoint", 0) != 0;
    params.Finish();
    out.lb = GenSmallLb(p, seed);
  } else if (problem == ProblemKind::kFair && generator == "fair") {
    FairGenParams p;
    p.items = i32("items", p.items);
    p.platforms = i32("platforms", p.platforms);
    p.groups = i32("groups", p.groups);
    p.lb = i32("lb", p.lb);
    p.ub = i32("ub", p.ub);
    p.alpha = params.Fraction("alpha", p.alpha);
    p.beta = params.Fraction("beta", p.beta);
    p.max_degree = MaxDegreeParam(params, p.max_degree);
    params.Finish();
    out.fair = GenFair(p, seed);
  } else if (problem == ProblemKind::kFair && generator == "small") {
    SmallFairParams p;
    p.max_items = i32("max_items", p.max_items);
    p.max_platforms = i32("max_platforms", p.max_platforms);
    p.max_groups = i32("max_groups", p.max_groups);
    p.max_lb = i32("max_lb", p.max_lb);
    p.max_den = i32("max_den", p.max_den);
    params.Finish();
    out.fair = GenSmallFair(p, seed);
  } else if (problem == ProblemKind::kTree && generator == "tree") {
    TreeGenParams p;
    p.nodes = i32("nodes", p.nodes);
    p.groups = i32("k", p.groups);
    p.max_leaf_lb = params.Int("max_leaf_lb", p.max_leaf_lb);
    p.max_leaf_reward = params.Int("max_leaf_reward", p.max_leaf_reward);
    p.max_budget = params.Int("max_budget", p.max_budget);
    params.Finish();
    out.tree = GenTree(p, seed);
  } else if (problem == ProblemKind::kTree && generator == "worked-example") {
    params.Finish();
    out.tree = WorkedExampleTree();
  } else {
    throw UsageError("unknown generator \"" + generator + "\" for problem " +
                     ProblemName(problem));
  }
  return out;
}

// ----- solve -----

struct SolveOptions {
  std::optional<ProblemKind> problem;
  std::string input;
  std::string out;  // empty: solution to `out` stream, summary to `err`
  std::string strategy = "base";
  std::uint64_t seed = 0;
  std::int64_t cell_limit = DpOptions{}.cell_limit;
  bool oracle = false;
};

// Parses "cells=N[,items=M]" into the option fields.
inline void ParseLimits(const std::string& spec, SolveOptions& options,
                        OracleLimits* oracle_limits = nullptr) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (start <= spec.size()) {
    auto comma = spec.find(',', start);
    if (comma == std::string::npos) comma = spec.size();
    if (comma > start) parts.push_back(spec.substr(start, comma - start));
    start = comma + 1;
  }
  Params p(parts);
  options.cell_limit = p.Int("cells", options.cell_limit);
  if (oracle_limits) {
    oracle_limits->max_items =
        static_cast<int>(p.Int("items", oracle_limits->max_items));
  } else {
    p.Int("items", 0);
  }
  p.Finish();
}

inline LbStrategy ParseLbStrategy(const std::string& name, std::uint64_t seed) {
  auto variant = ParseVariant(name);
  if (!variant) throw UsageError("unknown lb strategy \"" + name + "\"");
  return LbStrategy{*variant, seed};
}

// Fair strategies: "base" (block algorithm) or "naive".
inline bool ParseFairStrategy(const std::string& name) {
  if (name == "base" || name == "block") return false;
  if (name == "naive") return true;
  throw UsageError("unknown fair strategy \"" + name + "\"");
}

inline int RunSolve(const SolveOptions& options, std::ostream& out,
                    std::ostream& err) {
  return Guarded(err, [&]() -> int {
    if (options.input.empty()) throw UsageError("solve needs --input");
    Json doc = ParseJson(ReadFile(options.input));
    ProblemKind problem = ProblemOf(doc);
    if (options.problem && *options.problem != problem) {
      throw UsageError(std::string("--problem ") +
                       ProblemName(*options.problem) + " but the file holds " +
                       ProblemName(problem));
    }
    std::string solution;
    std::string summary;
    std::function<void(const Json&)> recheck;

    if (problem == ProblemKind::kLb) {
      LbInstance inst = LbFromJson(doc);
      RequireValid(ValidateLbInstance(inst));
      LbStrategy strategy = ParseLbStrategy(options.strategy, options.seed);
      auto start = std::chrono::steady_clock::now();
      LbResult result = SolveLb(inst, strategy);
      double millis = MillisSince(start);
      LbSolutionInfo info{options.strategy, options.seed, EllThm1(inst),
                          EllThm2(inst)};
      solution =
          Dump(LbSolutionJson(result.assignment, result.satisfied, info));
      summary = "problem=lb strategy=" + options.strategy +
                " platforms=" + std::to_string(inst.platforms.size()) +
                " satisfied=" + std::to_string(result.satisfied.size()) +
                " ell_thm1=" + std::to_string(info.ell_thm1) +
                " ell_thm2=" + std::to_string(info.ell_thm2);
      if (options.oracle) {
        summary += " opt=" + std::to_string(ExactLb(inst).value);
      }
      summary += " millis=" + FormatFixed(millis, 3);
      recheck = [inst, expected = result.satisfied](const Json& back) {
        Assignment a =
            AssignmentFromJson(back.at("assignment"), inst.item_count);
        if (SatisfiedLbPlatforms(inst, a) != expected ||
            back.at("satisfied_count").get<std::size_t>() != expected.size()) {
          throw InternalError(
              "written lb solution does not re-evaluate to "
              "the reported satisfied set");
        }
      };
    } else if (problem == ProblemKind::kFair) {
      FairInstance inst = FairFromJson(doc);
      RequireValid(ValidateFairInstance(inst));
      const bool naive = ParseFairStrategy(options.strategy);
      auto start = std::chrono::steady_clock::now();
      FairResult result = naive ? SolveFairNaive(inst) : SolveFair(inst);
      double millis = MillisSince(start);
      auto strict = ScoreFair(inst, result.assignment, FairMode::kStrict);
      auto relaxed = ScoreFair(inst, result.assignment, FairMode::kRelaxed);
      auto mult =
          ScoreFair(inst, result.assignment, FairMode::kRelaxedMultiplicative);
      solution =
          Dump(FairSolutionJson(inst, result, options.strategy, EllThm2(inst)));
      summary =
          "problem=fair strategy=" + options.strategy +
          " platforms=" + std::to_string(inst.platforms.size()) +
          " strict_satisfied=" + std::to_string(strict.satisfied.size()) +
          " strict_matched=" + std::to_string(strict.matched_to_satisfied) +
          " relaxed_satisfied=" + std::to_string(relaxed.satisfied.size()) +
          " relaxed_matched=" + std::to_string(relaxed.matched_to_satisfied) +
          " relaxed_mult_satisfied=" + std::to_string(mult.satisfied.size()) +
          " relaxed_mult_matched=" + std::to_string(mult.matched_to_satisfied) +
          " ell_thm2=" + std::to_string(EllThm2(inst));
      if (options.oracle) {
        summary += " opt=" + std::to_string(ExactFair(inst).value);
      }
      summary += " millis=" + FormatFixed(millis, 3);
      recheck = [inst, strict, relaxed, mult](const Json& back) {
        Assignment a =
            AssignmentFromJson(back.at("assignment"), inst.item_count);
        const std::pair<const char*, std::pair<FairMode, FairScore>> modes[] = {
            {"strict", {FairMode::kStrict, strict}},
            {"relaxed", {FairMode::kRelaxed, relaxed}},
            {"relaxed_multiplicative",
             {FairMode::kRelaxedMultiplicative, mult}}};
        for (const auto& [key, mode_score] : modes) {
          auto again = ScoreFair(inst, a, mode_score.first);
          if (again != mode_score.second ||
              back.at(key).at("matched").get<std::int64_t>() !=
                  again.matched_to_satisfied) {
            throw InternalError(std::string("written fair solution does not "
                                            "re-evaluate to the reported ") +
                                key + " score");
          }
        }
      };
    } else {
      TreeInstance inst = TreeFromJson(doc);
      RequireValid(ValidateTreeInstance(inst));
      if (options.strategy != "base") {
        throw UsageError("the tree solver has no strategy \"" +
                         options.strategy + "\"");
      }
      DpOptions dp;
      dp.cell_limit = options.cell_limit;
      auto start = std::chrono::steady_clock::now();
      TreeSolveResult result = SolveTree(inst, dp);
      double millis = MillisSince(start);
      solution = Dump(TreeSolutionJson(result.solution));
      const auto& sol = result.solution;
      summary = "problem=tree nodes=" + std::to_string(inst.nodes.size()) +
                " satisfied=" + std::to_string(sol.satisfied_nodes.size()) +
                " reward=" + std::to_string(sol.total_reward) +
                " added_root=" + (sol.added_root ? "1" : "0") +
                " cells=" + std::to_string(result.lattice_cells);
      if (options.oracle) {
        summary += " opt=" + std::to_string(ExactTree(inst).total_reward);
      }
      summary += " millis=" + FormatFixed(millis, 3);
      recheck = [inst, sol](const Json& back) {
        TreeSolution again = TreeSolutionFromJson(back);
        if (!(again == sol) || !CheckTreeSolution(inst, again).empty()) {
          throw InternalError(
              "written tree solution does not re-evaluate "
              "to the reported one");
        }
      };
    }

    if (options.out.empty()) {
      out << solution;
      recheck(ParseJson(solution));
      err << summary << "\n";
    } else {
      WriteFile(options.out, solution);
      recheck(ParseJson(ReadFile(options.out)));
      out << summary << "\n";
    }
    return kExitOk;
  });
}

// ----- gen -----

struct GenOptions {
  ProblemKind problem = ProblemKind::kLb;
  std::string generator;  // empty: DefaultGenerator(problem)
  std::vector<std::string> params;
  std::uint64_t seed = 0;
  std::string out;
};

inline int RunGen(const GenOptions& options, std::ostream& out,
                  std::ostream& err) {
  return Guarded(err, [&]() -> int {
    const std::string generator = options.generator.empty()
                                      ? DefaultGenerator(options.problem)
                                      : options.generator;
    Params params(options.params);
    GeneratedInstance g =
        Generate(options.problem, generator, params, options.seed);
    Json meta = {{"generator", generator},
                 {"seed", options.seed},
                 {"params", params.recorded()}};
    OrderedJson doc;
    switch (options.problem) {
      case ProblemKind::kLb:
        doc = ToJson(g.lb, meta);
        break;
      case ProblemKind::kFair:
        doc = ToJson(g.fair, meta);
        break;
      case ProblemKind::kTree:
        doc = ToJson(g.tree, meta);
        break;
    }
    std::string text = Dump(doc);
    if (options.out.empty()) {
      out << text;
    } else {
      WriteFile(options.out, text);
      out << "wrote " << options.out << "\n";
    }
    return kExitOk;
  });
}

// ----- sweep -----

struct SweepSpec {
  ProblemKind problem = ProblemKind::kLb;
  std::string generator;  // empty: DefaultGenerator(problem)
  std::vector<std::string> params;
  int degree_from = 1;
  int degree_to = 125;
  int degree_step = 5;
  int seeds = 15;
  std::uint64_t seed_base = 0;
  std::vector<std::string> strategies;  // empty: all for the problem
  bool use_oracle = true;               // when the instance is small enough
  OracleLimits oracle_limits;
  bool timing = false;  // median of 3 timed runs in the millis column
  int threads = 0;      // 0: DM_THREADS or the hardware concurrency
};

struct SweepRow {
  int degree = 0;
  std::uint64_t seed = 0;
  std::string strategy;
  std::optional<std::int64_t> value;  // empty when the row failed
  std::int64_t opt_or_bound = 0;
  bool is_bound = true;
  double millis = 0;  // always measured, printed only with timing
  std::string error;
};

inline std::vector<std::string> AllStrategies(ProblemKind problem) {
  if (problem == ProblemKind::kFair) return {"base", "naive"};
  return {"base", "min-degree", "augment"};
}

// Upper bound on the number of satisfiable platforms: no more than the
// platform count, and each satisfied platform needs at least l_min items.
inline std::int64_t LbUpperBound(const LbInstance& inst) {
  const auto m = static_cast<std::int64_t>(inst.platforms.size());
  std::int64_t l_min = -1;
  for (const auto& p : inst.platforms) {
    std::int64_t need = p.lb;
    std::int64_t group_max = 0;
    std::int64_t group_sum = 0;
    bool disjoint = true;
    std::vector<ItemId> seen;
    for (const auto& g : p.groups) {
      group_max = std::max<std::int64_t>(group_max, g.lb);
      group_sum += g.lb;
      seen.insert(seen.end(), g.members.begin(), g.members.end());
    }
    std::sort(seen.begin(), seen.end());
    disjoint = std::adjacent_find(seen.begin(), seen.end()) == seen.end();
    need = std::max(need, disjoint ? group_sum : group_max);
    l_min = l_min < 0 ? need : std::min(l_min, need);
  }
  if (l_min <= 0) return m;
  return std::min(m, inst.item_count / l_min);
}

inline std::int64_t FairUpperBound(const FairInstance& inst) {
  std::int64_t ub_sum = 0;
  for (const auto& p : inst.platforms) ub_sum += p.ub;
  return std::min<std::int64_t>(inst.item_count, ub_sum);
}

inline int ThreadCount(int requested, std::size_t tasks) {
  int n = requested;
  if (n <= 0) {
    if (const char* env = std::getenv("DM_THREADS")) n = std::atoi(env);
  }
  if (n <= 0) n = static_cast<int>(std::thread::hardware_concurrency());
  n = std::max(n, 1);
  return static_cast<int>(
      std::min<std::size_t>(n, std::max<std::size_t>(tasks, 1)));
}

// Rows for one (degree, seed) point. The instance seed mixes the row seed
// with the degree so that different degrees draw independent instances.
inline std::vector<SweepRow> SweepPoint(const SweepSpec& spec,
                                        const std::vector<std::string>& strats,
                                        int degree, std::uint64_t seed) {
  std::vector<SweepRow> rows;
  for (const auto& s : strats) {
    SweepRow row;
    row.degree = degree;
    row.seed = seed;
    row.strategy = s;
    rows.push_back(std::move(row));
  }
  auto fail_all = [&](const std::string& message) {
    for (auto& row : rows) {
      if (!row.value && row.error.empty()) row.error = message;
    }
  };
  try {
    std::vector<std::string> raw = spec.params;
    raw.push_back("avg_degree=" + std::to_string(degree));
    Params params(raw);
    const std::string generator = spec.generator.empty()
                                      ? DefaultGenerator(spec.problem)
                                      : spec.generator;
    GeneratedInstance g =
        Generate(spec.problem, generator, params,
                 MixKey(seed, static_cast<std::uint64_t>(degree)));
    std::int64_t opt = 0;
    bool is_bound = true;
    if (spec.problem == ProblemKind::kLb) {
      opt = LbUpperBound(g.lb);
      if (spec.use_oracle && g.lb.item_count <= spec.oracle_limits.max_items) {
        try {
          opt = ExactLb(g.lb, spec.oracle_limits).value;
          is_bound = false;
        } catch (const LimitExceededError&) {
        }
      }
    } else if (spec.problem == ProblemKind::kFair) {
      opt = FairUpperBound(g.fair);
      if (spec.use_oracle &&
          g.fair.item_count <= spec.oracle_limits.max_items) {
        try {
          opt = ExactFair(g.fair, spec.oracle_limits).value;
          is_bound = false;
        } catch (const LimitExceededError&) {
        }
      }
    } else {
      throw UsageError("sweep supports the lb and fair problems");
    }
    for (auto& row : rows) {
      row.opt_or_bound = opt;
      row.is_bound = is_bound;
      try {
        std::vector<double> times;
        std::int64_t value = 0;
        const int runs = spec.timing ? 3 : 1;
        for (int r = 0; r < runs; ++r) {
          auto start = std::chrono::steady_clock::now();
          if (spec.problem == ProblemKind::kLb) {
            value = static_cast<std::int64_t>(
                SolveLb(g.lb, ParseLbStrategy(row.strategy, seed))
                    .satisfied.size());
          } else {
            value = ParseFairStrategy(row.strategy)
                        ? SolveFairNaive(g.fair).score.matched_to_satisfied
                        : SolveFair(g.fair).score.matched_to_satisfied;
          }
          times.push_back(MillisSince(start));
        }
        std::sort(times.begin(), times.end());
        row.millis = times[times.size() / 2];
        row.value = value;
      } catch (const std::exception& e) {
        row.error = e.what();
      }
    }
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    fail_all(e.what());
  }
  return rows;
}

// Evaluates the whole sweep on a worker pool. Rows come back sorted by
// (degree, seed, strategy).
inline std::vector<SweepRow> ComputeSweep(const SweepSpec& spec) {
  if (spec.degree_step < 1 || spec.degree_from < 1 ||
      spec.degree_to < spec.degree_from || spec.seeds < 0) {
    throw UsageError("empty or invalid degree/seed range");
  }
  auto strategies =
      spec.strategies.empty() ? AllStrategies(spec.problem) : spec.strategies;
  for (const auto& s : strategies) {
    if (spec.problem == ProblemKind::kFair) {
      ParseFairStrategy(s);
    } else {
      ParseLbStrategy(s, 0);
    }
  }
  std::vector<std::pair<int, std::uint64_t>> tasks;
  for (int d = spec.degree_from; d <= spec.degree_to; d += spec.degree_step) {
    for (int s = 0; s < spec.seeds; ++s) {
      tasks.push_back({d, spec.seed_base + static_cast<std::uint64_t>(s)});
    }
  }
  std::vector<std::vector<SweepRow>> results(tasks.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    while (!failed) {
      std::size_t t = next++;
      if (t >= tasks.size()) return;
      try {
        results[t] =
            SweepPoint(spec, strategies, tasks[t].first, tasks[t].second);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    }
  };
  const int threads = ThreadCount(spec.threads, tasks.size());
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
  std::vector<SweepRow> rows;
  for (auto& r : results) {
    for (auto& row : r) rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end(), [](const SweepRow& a, const SweepRow& b) {
    return std::tie(a.degree, a.seed, a.strategy) <
           std::tie(b.degree, b.seed, b.strategy);
  });
  return rows;
}

inline constexpr const char* kSweepCsvHeader =
    "degree,seed,strategy,value,opt_or_bound,is_bound,ratio,millis";

inline std::string RatioText(const SweepRow& row) {
  if (!row.value) return "NA";
  if (row.opt_or_bound == 0) return *row.value == 0 ? "1.000000" : "NA";
  return FormatFixed(
      static_cast<double>(*row.value) / static_cast<double>(row.opt_or_bound),
      6);
}

inline std::string SweepCsv(const std::vector<SweepRow>& rows, bool timing) {
  std::string out = std::string(kSweepCsvHeader) + "\n";
  for (const auto& row : rows) {
    out +=
        std::to_string(row.degree) + "," + std::to_string(row.seed) + "," +
        row.strategy + "," +
        (row.value ? std::to_string(*row.value) : std::string("error")) + "," +
        std::to_string(row.opt_or_bound) + "," + (row.is_bound ? "1" : "0") +
        "," + RatioText(row) + "," +
        (timing && row.value ? FormatFixed(row.millis, 3) : std::string("NA")) +
        "\n";
  }
  return out;
}

inline OrderedJson SweepJson(const std::vector<SweepRow>& rows, bool timing) {
  auto out = OrderedJson::array();
  for (const auto& row : rows) {
    OrderedJson r;
    r["degree"] = row.degree;
    r["seed"] = row.seed;
    r["strategy"] = row.strategy;
    r["value"] = row.value ? OrderedJson(*row.value) : OrderedJson();
    r["opt_or_bound"] = row.opt_or_bound;
    r["is_bound"] = row.is_bound ? 1 : 0;
    r["ratio"] = RatioText(row);
    r["millis"] = timing && row.value ? OrderedJson(row.millis) : OrderedJson();
    if (!row.error.empty()) r["error"] = row.error;
    out.push_back(std::move(r));
  }
  return out;
}

struct SweepOptions {
  SweepSpec spec;
  std::string out;
  std::string format = "csv";
};

inline int RunSweep(const SweepOptions& options, std::ostream& out,
                    std::ostream& err) {
  return Guarded(err, [&]() -> int {
    if (options.format != "csv" && options.format != "json") {
      throw UsageError("sweep --format must be csv or json");
    }
    auto rows = ComputeSweep(options.spec);
    std::size_t failures = 0;
    for (const auto& row : rows) {
      if (!row.value) {
        ++failures;
        err << "row degree=" << row.degree << " seed=" << row.seed
            << " strategy=" << row.strategy << " failed: " << row.error << "\n";
      }
    }
    std::string text = options.format == "csv"
                           ? SweepCsv(rows, options.spec.timing)
                           : Dump(SweepJson(rows, options.spec.timing));
    if (options.out.empty()) {
      out << text;
      return kExitOk;
    }
    WriteFile(options.out, text);
    const auto& spec = options.spec;
    OrderedJson meta;
    meta["build"] = BuildId();
    meta["problem"] = ProblemName(spec.problem);
    meta["generator"] = spec.generator.empty() ? DefaultGenerator(spec.problem)
                                               : spec.generator;
    meta["params"] = spec.params;
    meta["degrees"] = {spec.degree_from, spec.degree_to, spec.degree_step};
    meta["seeds"] = {spec.seed_base, spec.seed_base + spec.seeds};
    meta["strategies"] =
        spec.strategies.empty() ? AllStrategies(spec.problem) : spec.strategies;
    meta["rows"] = rows.size();
    meta["failed_rows"] = failures;
    WriteFile(options.out + ".meta.json", Dump(meta));
    out << "wrote " << rows.size() << " rows to " << options.out << "\n";
    return kExitOk;
  });
}

}  // namespace diverse_match

#endif  // DIVERSE_MATCH_HARNESS_H_
