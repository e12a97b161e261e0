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

// Acceptance criteria. Each test prints one [PASS]/[FAIL] line.

#include <gtest/gtest.h>

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "diverse_match/json_io.h"
#include "diverse_match/verify.h"

namespace diverse_match {
namespace {

void Report(int number, const SuiteReport& r) {
  std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << "criterion " << number
            << " (" << r.name << "): " << r.summary << std::endl;
  for (const auto& line : r.details) std::cout << "       " << line << "\n";
  std::cout.flush();
}

void Check(int number, const std::string& suite) {
  SuiteReport r = RunSuite(suite);
  Report(number, r);
  EXPECT_TRUE(r.passed) << r.summary;
}

TEST(Acceptance, C1WorkedExample) { Check(1, "fig1"); }
TEST(Acceptance, C2LbApproximation) { Check(2, "ratio-lb"); }
TEST(Acceptance, C3FairApproximation) { Check(3, "ratio-fair"); }
TEST(Acceptance, C4TreeDp) { Check(4, "tree-dp"); }
TEST(Acceptance, C5RandomGraph) { Check(5, "random-graph"); }
TEST(Acceptance, C6Trend) { Check(6, "trend"); }
TEST(Acceptance, C7Heuristics) { Check(7, "heuristics"); }

// Runs the command-line tool as separate processes, twice per command.
SuiteReport CliDeterminism() {
  SuiteReport r;
  r.name = "determinism-cli";
  internal::TempDir dir;
  const std::string cli = DM_CLI_PATH;
  const std::string quiet = " > " + dir.File("log.txt") + " 2>&1";
  struct Command {
    std::string name;
    std::string args;  // "{out}" is replaced by the output path
  };
  const std::string lb_in = dir.File("lb.json");
  const std::string fair_in = dir.File("fair.json");
  const std::string tree_in = dir.File("tree.json");
  const std::vector<Command> commands = {
      {"gen-lb",
       "gen --problem lb --param items=3000 --param platforms=80 "
       "--param avg_degree=4 --seed 21 --out {out}"},
      {"gen-fair",
       "gen --problem fair --param items=500 --param platforms=25 "
       "--seed 21 --out {out}"},
      {"gen-tree",
       "gen --problem tree --param nodes=9 --param k=2 --seed 21 "
       "--out {out}"},
      {"solve-lb-base", "solve --input " + lb_in + " --out {out}"},
      {"solve-lb-min-degree",
       "solve --input " + lb_in +
           " --strategy min-degree --seed 3 --out {out}"},
      {"solve-lb-augment",
       "solve --input " + lb_in + " --strategy augment --seed 3 --out {out}"},
      {"solve-fair-base", "solve --input " + fair_in + " --out {out}"},
      {"solve-fair-naive",
       "solve --input " + fair_in + " --strategy naive --out {out}"},
      {"solve-tree", "solve --input " + tree_in + " --out {out}"},
      {"sweep-lb",
       "sweep --problem lb --param items=800 --param platforms=40 "
       "--degrees 1:16:5 --seeds 3 --out {out}"},
      {"sweep-fair",
       "sweep --problem fair --param items=300 "
       "--param platforms=20 --degrees 1:9:4 --seeds 2 "
       "--format json --out {out}"},
  };
  std::vector<std::string> differing;
  int compared = 0;
  for (const auto& c : commands) {
    std::vector<std::string> outputs;
    for (const char* run : {"a", "b"}) {
      std::string out = dir.File(c.name + "." + run + ".out");
      std::string args = c.args;
      args.replace(args.find("{out}"), 5, out);
      if (std::system(("\"" + cli + "\" " + args + quiet).c_str()) != 0) {
        differing.push_back(c.name + "(failed)");
        break;
      }
      outputs.push_back(ReadFile(out));
    }
    if (outputs.size() != 2) continue;
    ++compared;
    if (outputs[0] != outputs[1]) differing.push_back(c.name);
    if (c.name == "gen-lb") WriteFile(lb_in, outputs[0]);
    if (c.name == "gen-fair") WriteFile(fair_in, outputs[0]);
    if (c.name == "gen-tree") WriteFile(tree_in, outputs[0]);
  }
  r.passed = differing.empty() && compared == static_cast<int>(commands.size());
  std::string list;
  for (const auto& d : differing) list += (list.empty() ? "" : ",") + d;
  r.summary = "processes_compared=" + std::to_string(compared) +
              " differing=" + (list.empty() ? "none" : list);
  return r;
}

TEST(Acceptance, C8Determinism) {
  SuiteReport in_process = RunSuite("determinism");
  SuiteReport cli = CliDeterminism();
  SuiteReport both;
  both.name = "determinism";
  both.passed = in_process.passed && cli.passed;
  both.summary = "in-process " + in_process.summary + "; cli " + cli.summary;
  Report(8, both);
  EXPECT_TRUE(both.passed) << both.summary;
}

}  // namespace
}  // namespace diverse_match
