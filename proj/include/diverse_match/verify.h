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

// End-to-end verification suites, shared by `diverse-match verify` and the
// acceptance test.

#ifndef DIVERSE_MATCH_VERIFY_H_
#define DIVERSE_MATCH_VERIFY_H_

#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "diverse_match/evaluate.h"
#include "diverse_match/fair_solver.h"
#include "diverse_match/generators.h"
#include "diverse_match/harness.h"
#include "diverse_match/json_io.h"
#include "diverse_match/lb_solver.h"
#include "diverse_match/oracle.h"
#include "diverse_match/random.h"
#include "diverse_match/tree_solver.h"

namespace diverse_match {

struct SuiteReport {
  std::string name;
  bool passed = false;
  std::string summary;               // one line of measured quantities
  std::vector<std::string> details;  // extra lines, e.g. exceptions
  double seconds = 0;
};

namespace internal {

inline double SecondsSince(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

template <typename T>
std::string Join(const std::vector<T>& values, const char* sep = ",") {
  std::ostringstream ss;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) ss << sep;
    ss << values[i];
  }
  return ss.str();
}

}  // namespace internal

inline SuiteReport VerifyWorkedExample() {
  SuiteReport r;
  r.name = "fig1";
  auto start = std::chrono::steady_clock::now();
  TreeSolveResult result = SolveTree(WorkedExampleTree());
  r.seconds = internal::SecondsSince(start);
  const auto& sol = result.solution;
  std::int64_t items = 0;
  for (const auto& [node, counts] : sol.allocation) {
    for (auto c : counts) items += c;
  }
  r.passed = sol.total_reward == 7 &&
             sol.satisfied_nodes == std::vector<NodeId>{2, 3, 4} &&
             items == 10 && r.seconds < 0.1;
  r.summary = "reward=" + std::to_string(sol.total_reward) + " satisfied={" +
              internal::Join(sol.satisfied_nodes) +
              "} items=" + std::to_string(items) +
              "/10 seconds=" + FormatFixed(r.seconds, 4);
  return r;
}

inline SuiteReport VerifyRatioLb(int instances = 500) {
  SuiteReport r;
  r.name = "ratio-lb";
  auto start = std::chrono::steady_clock::now();
  int violations = 0;
  int with_opt = 0;
  double worst = 0;
  for (int s = 0; s < instances; ++s) {
    LbInstance inst =
        GenSmallLb(SmallLbParams{}, static_cast<std::uint64_t>(s));
    auto greedy =
        static_cast<std::int64_t>(SolveLb(inst, LbStrategy{}).satisfied.size());
    std::int64_t opt = ExactLb(inst).value;
    if (opt > 0) {
      ++with_opt;
      worst = std::max(worst, greedy == 0 ? INFINITY : double(opt) / greedy);
    }
    if (greedy * (EllThm1(inst) + 2) < opt) {
      ++violations;
      if (violations <= 5) {
        r.details.push_back("seed " + std::to_string(s) + ": greedy " +
                            std::to_string(greedy) + " opt " +
                            std::to_string(opt));
      }
    }
  }
  r.seconds = internal::SecondsSince(start);
  r.passed = violations == 0 && r.seconds < 60;
  r.summary = "instances=" + std::to_string(instances) +
              " violations=" + std::to_string(violations) +
              " max_opt_over_greedy=" + FormatFixed(worst, 3) +
              " nonzero_opt=" + std::to_string(with_opt) +
              " seconds=" + FormatFixed(r.seconds, 2);
  return r;
}

inline SuiteReport VerifyRatioFair(int instances = 300) {
  SuiteReport r;
  r.name = "ratio-fair";
  auto start = std::chrono::steady_clock::now();
  int window_failures = 0;
  int size_failures = 0;
  int ratio_failures = 0;
  int beats_opt = 0;
  int multiplicative_ok = 0;
  int served_total = 0;
  for (int s = 0; s < instances; ++s) {
    FairInstance inst =
        GenSmallFair(SmallFairParams{}, static_cast<std::uint64_t>(s));
    FairResult result = SolveFair(inst);
    auto matched =
        result.assignment.MatchedSets(static_cast<int>(inst.platforms.size()));
    for (std::size_t j = 0; j < inst.platforms.size(); ++j) {
      const FairPlatform& p = inst.platforms[j];
      const int size = static_cast<int>(matched[j].size());
      if (size == 0) continue;
      ++served_total;
      if (!SatisfiesFairPlatform(p, matched[j], FairMode::kRelaxed)) {
        ++window_failures;
      }
      if (SatisfiesFairPlatform(p, matched[j],
                                FairMode::kRelaxedMultiplicative)) {
        ++multiplicative_ok;
      }
      if (size % p.lb != 0 || size < p.lb || size > p.ub) ++size_failures;
    }
    const std::int64_t value =
        ScoreFair(inst, result.assignment, FairMode::kRelaxed)
            .matched_to_satisfied;
    const std::int64_t opt = ExactFair(inst).value;
    if (value * 2 * (EllThm2(inst) + 2) < opt) {
      ++ratio_failures;
      if (ratio_failures <= 5) {
        r.details.push_back("seed " + std::to_string(s) + ": matched " +
                            std::to_string(value) + " strict opt " +
                            std::to_string(opt));
      }
    }
    if (value > opt) ++beats_opt;
  }
  r.seconds = internal::SecondsSince(start);
  r.passed = window_failures == 0 && size_failures == 0 &&
             ratio_failures == 0 && r.seconds < 120;
  r.summary = "instances=" + std::to_string(instances) +
              " served_platforms=" + std::to_string(served_total) +
              " (a)window_failures=" + std::to_string(window_failures) +
              " (b)size_failures=" + std::to_string(size_failures) +
              " (c)ratio_failures=" + std::to_string(ratio_failures) +
              " multiplicative_window_ok=" + std::to_string(multiplicative_ok) +
              " above_strict_opt=" + std::to_string(beats_opt) +
              " seconds=" + FormatFixed(r.seconds, 2);
  return r;
}

// Parameters of the i-th random tree of the equivalence suite.
inline TreeGenParams EquivalenceTreeParams(std::uint64_t seed) {
  SplitMix64 rng(MixKey(seed, 0x7472656565ULL));
  TreeGenParams p;
  p.nodes = static_cast<int>(rng.Uniform(1, 10));
  p.groups = static_cast<int>(rng.Uniform(1, 2));
  p.max_budget = 12;
  return p;
}

inline SuiteReport VerifyTreeDp(int instances = 300) {
  SuiteReport r;
  r.name = "tree-dp";
  auto start = std::chrono::steady_clock::now();
  int mismatches = 0;
  int binarize_mismatches = 0;
  int infeasible = 0;
  int positive = 0;
  for (int s = 0; s < instances; ++s) {
    const auto seed = static_cast<std::uint64_t>(s);
    TreeInstance inst = GenTree(EquivalenceTreeParams(seed), seed);
    TreeSolution oracle = ExactTree(inst);
    TreeSolution dp = SolveTree(inst).solution;
    LinkTree(inst);
    if (dp.total_reward != oracle.total_reward ||
        !CheckTreeSolution(inst, dp).empty() ||
        !CheckTreeSolution(inst, oracle).empty()) {
      ++mismatches;
      if (mismatches <= 5) {
        r.details.push_back("seed " + std::to_string(s) + ": dp " +
                            std::to_string(dp.total_reward) + " oracle " +
                            std::to_string(oracle.total_reward));
      }
    }
    CostTree steiner =
        ReduceIntermediateToSteiner(ReduceBaseToIntermediate(inst));
    const std::int64_t general = SteinerOptimumAnyDegree(steiner);
    const std::int64_t binary = SteinerDp(Binarize(steiner)).reward;
    const std::int64_t brute = BruteForceSteinerValue(steiner);
    if (general != binary || binary != brute || binary != oracle.total_reward) {
      ++binarize_mismatches;
      if (binarize_mismatches <= 5) {
        r.details.push_back("seed " + std::to_string(s) + ": unbinarized " +
                            std::to_string(general) + " binarized " +
                            std::to_string(binary) + " brute force " +
                            std::to_string(brute));
      }
    }
    infeasible += oracle.added_root ? 1 : 0;
    positive += oracle.total_reward > 0 ? 1 : 0;
  }
  r.seconds = internal::SecondsSince(start);
  r.passed = mismatches == 0 && binarize_mismatches == 0 && r.seconds < 60;
  r.summary = "instances=" + std::to_string(instances) +
              " dp_vs_oracle_mismatches=" + std::to_string(mismatches) +
              " binarize_mismatches=" + std::to_string(binarize_mismatches) +
              " positive_reward=" + std::to_string(positive) +
              " added_root=" + std::to_string(infeasible) +
              " seconds=" + FormatFixed(r.seconds, 2);
  return r;
}

inline SuiteReport VerifyRandomGraph(int seeds = 20) {
  SuiteReport r;
  r.name = "random-graph";
  auto start = std::chrono::steady_clock::now();
  const double rho = 8.0 * std::log(800.0) / 800.0;
  std::map<std::string, std::vector<int>> counts;
  const char* names[] = {"base", "min-degree", "augment"};
  for (int s = 0; s < seeds; ++s) {
    LbInstance inst =
        GenErPartition(200, 4, rho, 100, 2, static_cast<std::uint64_t>(s));
    for (const char* name : names) {
      counts[name].push_back(static_cast<int>(
          SolveLb(inst, ParseLbStrategy(name, static_cast<std::uint64_t>(s)))
              .satisfied.size()));
    }
  }
  r.seconds = internal::SecondsSince(start);
  auto good = [](const std::vector<int>& v) {
    return static_cast<int>(
        std::count_if(v.begin(), v.end(), [](int c) { return c >= 95; }));
  };
  const int base_good = good(counts["base"]);
  r.passed = base_good >= 18 && r.seconds < 30;
  r.summary = "runs_with_95_or_more=" + std::to_string(base_good) + "/" +
              std::to_string(seeds) + " (need 18) base={" +
              internal::Join(counts["base"]) +
              "} seconds=" + FormatFixed(r.seconds, 2);
  r.details.push_back(
      "min-degree={" + internal::Join(counts["min-degree"]) +
      "} runs_with_95_or_more=" + std::to_string(good(counts["min-degree"])));
  r.details.push_back(
      "augment={" + internal::Join(counts["augment"]) +
      "} runs_with_95_or_more=" + std::to_string(good(counts["augment"])));
  return r;
}

// The full-scale degree sweep: 250 platforms, 10000 items in 20 groups of
// 500 with group bound 2, average degree 1..121 in steps of 5, 15 seeds,
// all three strategies. Computed once per process.
inline SweepSpec FullScaleSweepSpec() {
  SweepSpec spec;
  spec.problem = ProblemKind::kLb;
  spec.generator = "degree-capped";
  spec.params = {"items=10000", "platforms=250", "groups=20", "group_lb=2"};
  spec.degree_from = 1;
  spec.degree_to = 125;
  spec.degree_step = 5;
  spec.seeds = 15;
  spec.use_oracle = false;
  return spec;
}

inline const std::vector<SweepRow>& FullScaleSweep() {
  static const std::vector<SweepRow> rows = ComputeSweep(FullScaleSweepSpec());
  return rows;
}

struct PointStats {
  double mean = 0;
  double stderr_ = 0;
  std::int64_t min = 0;
  double max_millis = 0;
  int n = 0;
};

// Per-degree statistics of one strategy.
inline std::map<int, PointStats> StatsByDegree(
    const std::vector<SweepRow>& rows, const std::string& strategy) {
  std::map<int, std::vector<const SweepRow*>> by_degree;
  for (const auto& row : rows) {
    if (row.strategy == strategy) by_degree[row.degree].push_back(&row);
  }
  std::map<int, PointStats> out;
  for (const auto& [degree, list] : by_degree) {
    PointStats st;
    double sum = 0, sq = 0;
    st.min = INT64_MAX;
    for (const SweepRow* row : list) {
      const double v = row->value ? double(*row->value) : 0.0;
      sum += v;
      sq += v * v;
      st.min = std::min<std::int64_t>(st.min, row->value.value_or(0));
      st.max_millis = std::max(st.max_millis, row->millis);
      ++st.n;
    }
    st.mean = sum / st.n;
    const double var =
        st.n > 1 ? std::max(0.0, (sq - sum * sum / st.n) / (st.n - 1)) : 0.0;
    st.stderr_ = std::sqrt(var / st.n);
    out[degree] = st;
  }
  return out;
}

inline SuiteReport VerifyTrend() {
  SuiteReport r;
  r.name = "trend";
  auto start = std::chrono::steady_clock::now();
  const auto& rows = FullScaleSweep();
  r.seconds = internal::SecondsSince(start);
  int failed_rows = 0;
  for (const auto& row : rows) failed_rows += row.value ? 0 : 1;
  auto stats = StatsByDegree(rows, "base");
  const double target = 0.95 * 250;

  // Monotone in expectation: no drop between consecutive points larger than
  // two standard errors of the difference, and an overall rise.
  std::vector<std::string> drops;
  const PointStats* prev = nullptr;
  int prev_degree = 0;
  for (const auto& [degree, st] : stats) {
    if (prev) {
      const double tol = 2.0 * std::sqrt(prev->stderr_ * prev->stderr_ +
                                         st.stderr_ * st.stderr_);
      if (st.mean < prev->mean - tol) {
        drops.push_back(std::to_string(prev_degree) + "->" +
                        std::to_string(degree));
      }
    }
    prev = &st;
    prev_degree = degree;
  }
  const bool rises = !stats.empty() &&
                     stats.rbegin()->second.mean > stats.begin()->second.mean;

  // Smallest degree from which every point's mean reaches 95% of platforms.
  int threshold = -1;
  for (auto it = stats.rbegin(); it != stats.rend(); ++it) {
    if (it->second.mean < target) break;
    threshold = it->first;
  }
  double max_base_millis = 0;
  for (const auto& [degree, st] : stats) {
    max_base_millis = std::max(max_base_millis, st.max_millis);
  }
  r.passed = failed_rows == 0 && drops.empty() && rises && threshold > 0 &&
             threshold < stats.rbegin()->first && max_base_millis < 1000.0;
  std::vector<std::string> means;
  for (const auto& [degree, st] : stats) {
    means.push_back(std::to_string(degree) + ":" + FormatFixed(st.mean, 1));
  }
  r.summary =
      "threshold_avg_degree=" +
      (threshold > 0 ? std::to_string(threshold) : std::string("none")) +
      " drops=" +
      (drops.empty() ? std::string("none") : internal::Join(drops, ";")) +
      " max_greedy_millis=" + FormatFixed(max_base_millis, 1) +
      " failed_rows=" + std::to_string(failed_rows) +
      " sweep_seconds=" + FormatFixed(r.seconds, 1);
  r.details.push_back("mean satisfied by average degree: " +
                      internal::Join(means, " "));
  return r;
}

inline SuiteReport VerifyHeuristics() {
  SuiteReport r;
  r.name = "heuristics";
  auto start = std::chrono::steady_clock::now();
  const auto& rows = FullScaleSweep();
  r.seconds = internal::SecondsSince(start);
  auto base = StatsByDegree(rows, "base");
  auto min_degree = StatsByDegree(rows, "min-degree");
  auto augment = StatsByDegree(rows, "augment");
  double sum_base = 0, sum_min = 0, sum_aug = 0;
  std::vector<std::string> exceptions;
  std::vector<std::string> exceptions_min;
  for (const auto& [degree, st] : base) {
    sum_base += st.mean;
    sum_min += min_degree[degree].mean;
    sum_aug += augment[degree].mean;
    if (augment[degree].mean < st.mean) {
      exceptions.push_back(std::to_string(degree) + "(" +
                           FormatFixed(augment[degree].mean, 2) + "<" +
                           FormatFixed(st.mean, 2) + ")");
    }
    if (min_degree[degree].mean < st.mean) {
      exceptions_min.push_back(std::to_string(degree));
    }
  }
  const double points = std::max<std::size_t>(base.size(), 1);
  r.passed = !base.empty() && sum_aug >= sum_base;
  r.summary = "mean base=" + FormatFixed(sum_base / points, 2) +
              " min-degree=" + FormatFixed(sum_min / points, 2) +
              " augment=" + FormatFixed(sum_aug / points, 2) +
              " augment_below_base_at=" +
              (exceptions.empty() ? std::string("none")
                                  : internal::Join(exceptions, ";"));
  r.details.push_back("min-degree below base at average degrees: " +
                      (exceptions_min.empty()
                           ? std::string("none")
                           : internal::Join(exceptions_min, ",")));
  return r;
}

namespace internal {

class TempDir {
 public:
  TempDir() {
    std::string pattern =
        (std::filesystem::temp_directory_path() / "diverse-match-XXXXXX")
            .string();
    if (!mkdtemp(pattern.data())) {
      throw std::runtime_error("cannot create a temporary directory");
    }
    path_ = pattern;
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  std::string File(const std::string& name) const {
    return (path_ / name).string();
  }

 private:
  std::filesystem::path path_;
};

}  // namespace internal

// Runs every file-producing command twice with the same seeds and compares
// the outputs byte for byte.
inline SuiteReport VerifyDeterminism() {
  SuiteReport r;
  r.name = "determinism";
  auto start = std::chrono::steady_clock::now();
  internal::TempDir dir;
  std::ostringstream sink;
  int compared = 0;
  std::vector<std::string> differing;
  int failures = 0;
  auto twice = [&](const std::string& name,
                   const std::function<int(const std::string&)>& produce) {
    const std::string a = dir.File(name + ".a"), b = dir.File(name + ".b");
    if (produce(a) != kExitOk || produce(b) != kExitOk) {
      ++failures;
      differing.push_back(name + "(failed)");
      return;
    }
    ++compared;
    if (ReadFile(a) != ReadFile(b)) differing.push_back(name);
  };
  const std::pair<ProblemKind, std::vector<std::string>> gens[] = {
      {ProblemKind::kLb, {"items=2000", "platforms=60", "max_degree=7"}},
      {ProblemKind::kFair, {"items=400", "platforms=20", "max_degree=5"}},
      {ProblemKind::kTree, {"nodes=9", "k=2"}}};
  for (const auto& [problem, params] : gens) {
    const std::string name = ProblemName(problem);
    GenOptions g;
    g.problem = problem;
    g.params = params;
    g.seed = 11;
    g.out = dir.File(name + ".json");
    if (RunGen(g, sink, sink) != kExitOk) ++failures;
    twice("gen-" + name, [&](const std::string& path) {
      GenOptions again = g;
      again.out = path;
      return RunGen(again, sink, sink);
    });
    const std::vector<std::string> strategies =
        problem == ProblemKind::kLb     ? AllStrategies(problem)
        : problem == ProblemKind::kFair ? AllStrategies(problem)
                                        : std::vector<std::string>{"base"};
    for (const auto& strategy : strategies) {
      twice("solve-" + name + "-" + strategy, [&](const std::string& path) {
        SolveOptions s;
        s.input = g.out;
        s.out = path;
        s.strategy = strategy;
        s.seed = 5;
        return RunSolve(s, sink, sink);
      });
    }
  }
  for (ProblemKind problem : {ProblemKind::kLb, ProblemKind::kFair}) {
    twice(std::string("sweep-") + ProblemName(problem),
          [&](const std::string& path) {
            SweepOptions s;
            s.spec.problem = problem;
            s.spec.params =
                problem == ProblemKind::kLb
                    ? std::vector<std::string>{"items=600", "platforms=40"}
                    : std::vector<std::string>{"items=300", "platforms=20"};
            s.spec.degree_from = 1;
            s.spec.degree_to = 11;
            s.spec.degree_step = 5;
            s.spec.seeds = 3;
            s.out = path;
            return RunSweep(s, sink, sink);
          });
  }
  r.seconds = internal::SecondsSince(start);
  r.passed = failures == 0 && differing.empty() && compared > 0;
  r.summary =
      "outputs_compared=" + std::to_string(compared) + " differing=" +
      (differing.empty() ? std::string("none") : internal::Join(differing)) +
      " seconds=" + FormatFixed(r.seconds, 2);
  return r;
}

inline const std::vector<std::string>& SuiteNames() {
  static const std::vector<std::string> names = {
      "fig1",         "ratio-lb", "ratio-fair", "tree-dp",
      "random-graph", "trend",    "heuristics", "determinism"};
  return names;
}

inline SuiteReport RunSuite(const std::string& name) {
  if (name == "fig1") return VerifyWorkedExample();
  if (name == "ratio-lb") return VerifyRatioLb();
  if (name == "ratio-fair") return VerifyRatioFair();
  if (name == "tree-dp") return VerifyTreeDp();
  if (name == "random-graph") return VerifyRandomGraph();
  if (name == "trend") return VerifyTrend();
  if (name == "heuristics") return VerifyHeuristics();
  if (name == "determinism") return VerifyDeterminism();
  throw UsageError("unknown suite \"" + name + "\"");
}

inline void PrintReport(const SuiteReport& r, std::ostream& out) {
  out << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << ": " << r.summary
      << "\n";
  for (const auto& line : r.details) out << "       " << line << "\n";
}

inline int RunVerify(const std::string& suite, std::ostream& out,
                     std::ostream& err) {
  return Guarded(err, [&]() -> int {
    std::vector<std::string> names =
        suite == "all" ? SuiteNames() : std::vector<std::string>{suite};
    bool all_passed = true;
    for (const auto& name : names) {
      SuiteReport r = RunSuite(name);
      PrintReport(r, out);
      out.flush();
      all_passed &= r.passed;
    }
    return all_passed ? kExitOk : kExitVerifyFailed;
  });
}

}  // namespace diverse_match

#endif  // DIVERSE_MATCH_VERIFY_H_
