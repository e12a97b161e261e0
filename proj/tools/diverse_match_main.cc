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

// diverse-match: solve, generate, sweep and verify matching instances.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "diverse_match/harness.h"
#include "diverse_match/json_io.h"
#include "diverse_match/verify.h"

namespace {

using diverse_match::ProblemKind;

std::optional<ProblemKind> ProblemFromFlag(const std::string& flag) {
  if (flag.empty()) return std::nullopt;
  auto kind = diverse_match::ParseProblem(flag);
  if (!kind)
    throw CLI::ValidationError("--problem", "must be lb, fair or tree");
  return kind;
}

// Parses "a:b:c" (or a single value) into a degree range.
void ParseDegrees(const std::string& text, diverse_match::SweepSpec& spec) {
  std::vector<int> parts;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto colon = text.find(':', start);
    if (colon == std::string::npos) colon = text.size();
    parts.push_back(std::stoi(text.substr(start, colon - start)));
    start = colon + 1;
  }
  if (parts.empty() || parts.size() > 3) {
    throw CLI::ValidationError("--degrees", "expected FROM[:TO[:STEP]]");
  }
  spec.degree_from = parts[0];
  spec.degree_to = parts.size() > 1 ? parts[1] : parts[0];
  spec.degree_step = parts.size() > 2 ? parts[2] : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bipartite matching under diversity constraints"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(diverse_match::BuildId()));

  std::string problem_flag;
  std::string input;
  std::string out;
  std::string strategy;
  std::string format = "json";
  std::string limits;
  std::uint64_t seed = 0;
  bool oracle = false;

  auto* solve = app.add_subcommand("solve", "Solve one instance file");
  solve->add_option("--problem", problem_flag, "lb, fair or tree");
  solve->add_option("--input", input, "Instance JSON (.gz accepted)")
      ->required();
  solve->add_option("--out", out, "Solution JSON (default: stdout)");
  solve->add_option("--strategy", strategy,
                    "lb: base|min-degree|augment; fair: base|naive");
  solve->add_option("--seed", seed, "Tie-break seed");
  solve->add_option("--format", format, "Output format (json)");
  solve->add_option("--limits", limits, "Size limits, e.g. cells=100000000");
  solve->add_flag("--oracle", oracle, "Also report the exact optimum");

  std::string generator;
  std::vector<std::string> params;
  auto* gen = app.add_subcommand("gen", "Generate a random instance");
  gen->add_option("--problem", problem_flag, "lb, fair or tree")->required();
  gen->add_option("--generator", generator,
                  "lb: degree-capped|er|real-like|small; fair: fair|small; "
                  "tree: tree|worked-example");
  gen->add_option("--param", params, "Generator parameter key=value");
  gen->add_option("--seed", seed, "Generator seed");
  gen->add_option("--out", out, "Instance JSON (default: stdout)");
  gen->add_option("--format", format, "Output format (json)");

  std::string degrees = "1:125:5";
  int seeds = 15;
  std::vector<std::string> strategies;
  bool timing = false;
  bool no_oracle = false;
  int threads = 0;
  auto* sweep = app.add_subcommand("sweep", "Run a degree sweep to CSV");
  sweep->add_option("--problem", problem_flag, "lb or fair")->required();
  sweep->add_option("--generator", generator, "Instance generator");
  sweep->add_option("--param", params, "Generator parameter key=value");
  sweep->add_option("--degrees", degrees, "Average degrees FROM:TO:STEP");
  sweep->add_option("--seeds", seeds, "Seeds per degree point");
  sweep->add_option("--seed", seed, "First seed");
  sweep->add_option("--strategy", strategies,
                    "Strategies to run (default: all)");
  sweep->add_option("--out", out, "CSV or JSON file (default: stdout)");
  sweep->add_option("--format", format, "csv or json");
  sweep->add_option("--limits", limits, "Oracle limits, e.g. items=16");
  sweep->add_option("--threads", threads,
                    "Worker threads (default: DM_THREADS)");
  sweep->add_flag("--timing", timing, "Fill the millis column");
  sweep->add_flag("--no-oracle", no_oracle, "Always compare to the bound");

  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "Run an acceptance suite");
  verify->add_option("suite", suite,
                     "fig1|ratio-lb|ratio-fair|tree-dp|random-graph|trend|"
                     "heuristics|determinism|all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : diverse_match::kExitUsage;
  }

  try {
    if (*solve) {
      if (format != "json") {
        std::cerr << "solve writes json only\n";
        return diverse_match::kExitUsage;
      }
      diverse_match::SolveOptions options;
      options.problem = ProblemFromFlag(problem_flag);
      options.input = input;
      options.out = out;
      options.strategy = strategy.empty() ? "base" : strategy;
      options.seed = seed;
      options.oracle = oracle;
      if (!limits.empty()) diverse_match::ParseLimits(limits, options);
      return diverse_match::RunSolve(options, std::cout, std::cerr);
    }
    if (*gen) {
      if (format != "json") {
        std::cerr << "gen writes json only\n";
        return diverse_match::kExitUsage;
      }
      diverse_match::GenOptions options;
      options.problem = *ProblemFromFlag(problem_flag);
      options.generator = generator;
      options.params = params;
      options.seed = seed;
      options.out = out;
      return diverse_match::RunGen(options, std::cout, std::cerr);
    }
    if (*sweep) {
      diverse_match::SweepOptions options;
      options.spec.problem = *ProblemFromFlag(problem_flag);
      options.spec.generator = generator;
      options.spec.params = params;
      ParseDegrees(degrees, options.spec);
      options.spec.seeds = seeds;
      options.spec.seed_base = seed;
      options.spec.strategies = strategies;
      options.spec.timing = timing;
      options.spec.use_oracle = !no_oracle;
      options.spec.threads = threads;
      if (!limits.empty()) {
        diverse_match::SolveOptions unused;
        diverse_match::ParseLimits(limits, unused, &options.spec.oracle_limits);
      }
      options.out = out;
      options.format =
          format == "json" && !sweep->count("--format") ? "csv" : format;
      return diverse_match::RunSweep(options, std::cout, std::cerr);
    }
    return diverse_match::RunVerify(suite, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return diverse_match::kExitUsage;
  }
}
