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

#include "diverse_match/harness.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>
#include <string>

#include "diverse_match/verify.h"

namespace diverse_match {
namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun Solve(SolveOptions options) {
  std::ostringstream out, err;
  int code = RunSolve(options, out, err);
  return {code, out.str(), err.str()};
}

SolveOptions ForFile(const std::string& path) {
  SolveOptions options;
  options.input = path;
  return options;
}

class HarnessTest : public ::testing::Test {
 protected:
  std::string Write(const std::string& name, const std::string& text) {
    WriteFile(dir_.File(name), text);
    return dir_.File(name);
  }
  std::string Path(const std::string& name) { return dir_.File(name); }

  internal::TempDir dir_;
};

TEST_F(HarnessTest, SolveLbWritesSolutionAndSummary) {
  const auto in =
      Write("lb.json", Dump(ToJson(GenSmallLb(SmallLbParams{}, 5))));
  SolveOptions options = ForFile(in);
  options.out = Path("sol.json");
  options.oracle = true;
  CliRun r = Solve(options);
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("problem=lb"), std::string::npos);
  EXPECT_NE(r.out.find(" satisfied="), std::string::npos);
  EXPECT_NE(r.out.find(" opt="), std::string::npos);
  Json sol = ParseJson(ReadFile(options.out));
  EXPECT_EQ(sol["strategy"], "base");
  EXPECT_TRUE(sol.contains("ell_thm1"));
}

TEST_F(HarnessTest, SolveAllLbStrategies) {
  const auto in =
      Write("lb.json", Dump(ToJson(GenDegreeCapped(300, 20, 5, 3, 2, 1))));
  for (const auto& s : AllStrategies(ProblemKind::kLb)) {
    SolveOptions options = ForFile(in);
    options.strategy = s;
    CliRun r = Solve(options);
    EXPECT_EQ(r.code, kExitOk) << s << ": " << r.err;
    EXPECT_NE(r.err.find("strategy=" + s), std::string::npos);
  }
  SolveOptions bad = ForFile(in);
  bad.strategy = "fastest";
  EXPECT_EQ(Solve(bad).code, kExitUsage);
}

TEST_F(HarnessTest, SolveFairSummaryMatchesEvaluator) {
  FairInstance inst = GenFair(FairGenParams{}, 2);
  const auto in = Write("fair.json", Dump(ToJson(inst)));
  for (const std::string strategy : {"base", "naive"}) {
    SolveOptions options = ForFile(in);
    options.strategy = strategy;
    options.out = Path("fair_sol.json");
    CliRun r = Solve(options);
    ASSERT_EQ(r.code, kExitOk) << r.err;
    FairResult expected =
        strategy == "naive" ? SolveFairNaive(inst) : SolveFair(inst);
    auto strict = ScoreFair(inst, expected.assignment, FairMode::kStrict);
    auto relaxed = ScoreFair(inst, expected.assignment, FairMode::kRelaxed);
    EXPECT_NE(r.out.find("strict_matched=" +
                         std::to_string(strict.matched_to_satisfied) + " "),
              std::string::npos)
        << r.out;
    EXPECT_NE(r.out.find("relaxed_matched=" +
                         std::to_string(relaxed.matched_to_satisfied) + " "),
              std::string::npos)
        << r.out;
    Json sol = ParseJson(ReadFile(options.out));
    EXPECT_EQ(sol["blocks"].get<std::vector<int>>(), expected.blocks);
  }
}

TEST_F(HarnessTest, SolveTreeWorkedExample) {
  const auto in = Write("worked_example.json", Dump(ToJson(WorkedExampleTree())));
  SolveOptions options = ForFile(in);
  options.oracle = true;
  CliRun r = Solve(options);
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.err.find("reward=7"), std::string::npos);
  EXPECT_NE(r.err.find("opt=7"), std::string::npos);
  Json sol = ParseJson(r.out);
  EXPECT_EQ(sol["satisfied"], Json::parse("[2, 3, 4]"));
}

TEST_F(HarnessTest, SolveExitCodes) {
  TreeInstance bad = WorkedExampleTree();
  bad.nodes[2].group_lb = {9};
  bad.nodes[2].overall_lb = 9;
  CliRun invalid = Solve(ForFile(Write("bad.json", Dump(ToJson(bad)))));
  EXPECT_EQ(invalid.code, kExitValidation);
  EXPECT_NE(invalid.err.find("node 2"), std::string::npos) << invalid.err;

  EXPECT_EQ(Solve(ForFile(Write("broken.json", "{\"problem\": "))).code,
            kExitParse);
  EXPECT_EQ(
      Solve(ForFile(Write("shape.json", "{\"problem\":\"lb\",\"items\":2}")))
          .code,
      kExitSchema);
  EXPECT_EQ(Solve(ForFile(Path("missing.json"))).code, kExitUsage);

  SolveOptions limited =
      ForFile(Write("worked_example.json", Dump(ToJson(WorkedExampleTree()))));
  ParseLimits("cells=10", limited);
  EXPECT_EQ(limited.cell_limit, 10);
  EXPECT_EQ(Solve(limited).code, kExitLimit);

  SolveOptions wrong = ForFile(Path("worked_example.json"));
  wrong.problem = ProblemKind::kLb;
  EXPECT_EQ(Solve(wrong).code, kExitUsage);
}

TEST_F(HarnessTest, GenIsDeterministicAndRecordsParams) {
  GenOptions options;
  options.problem = ProblemKind::kLb;
  options.params = {"items=200", "platforms=10", "avg_degree=3"};
  options.seed = 9;
  std::ostringstream a, b, err;
  ASSERT_EQ(RunGen(options, a, err), kExitOk) << err.str();
  ASSERT_EQ(RunGen(options, b, err), kExitOk);
  EXPECT_EQ(a.str(), b.str());
  Json doc = ParseJson(a.str());
  EXPECT_EQ(doc["meta"]["generator"], "degree-capped");
  EXPECT_EQ(doc["meta"]["params"]["avg_degree"], "3");
  EXPECT_EQ(doc["items"], 200);

  options.params = {"bogus=1"};
  std::ostringstream c;
  EXPECT_EQ(RunGen(options, c, err), kExitUsage);
}

TEST(SamplesTest, EverySampleSolves) {
  int files = 0;
  for (const auto& entry :
       std::filesystem::directory_iterator(DM_SAMPLES_DIR)) {
    if (entry.path().extension() != ".json") continue;
    ++files;
    CliRun r = Solve(ForFile(entry.path().string()));
    EXPECT_EQ(r.code, kExitOk) << entry.path() << ": " << r.err;
  }
  EXPECT_GE(files, 5);
}

TEST(SamplesTest, KnownValues) {
  const std::string dir = DM_SAMPLES_DIR;
  SolveOptions fig = ForFile(dir + "/worked_example_tree.json");
  EXPECT_NE(Solve(fig).err.find("reward=7 "), std::string::npos);
  SolveOptions hyper = ForFile(dir + "/hypergraph_lb.json");
  hyper.oracle = true;
  CliRun r = Solve(hyper);
  EXPECT_NE(r.err.find("satisfied=2 "), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("opt=3 "), std::string::npos) << r.err;
}

SweepSpec SmallSweep() {
  SweepSpec spec;
  spec.params = {"items=12", "platforms=4", "groups=2", "group_lb=1"};
  spec.degree_from = 1;
  spec.degree_to = 2;
  spec.degree_step = 1;
  spec.seeds = 3;
  spec.threads = 2;
  return spec;
}

TEST(SweepTest, RowCountOrderAndOracleFlag) {
  auto rows = ComputeSweep(SmallSweep());
  ASSERT_EQ(rows.size(), 2u * 3u * 3u);
  for (std::size_t t = 1; t < rows.size(); ++t) {
    auto key = [](const SweepRow& r) {
      return std::make_tuple(r.degree, r.seed, r.strategy);
    };
    EXPECT_LT(key(rows[t - 1]), key(rows[t]));
  }
  for (const auto& row : rows) {
    ASSERT_TRUE(row.value.has_value()) << row.error;
    EXPECT_FALSE(row.is_bound);
    EXPECT_LE(*row.value, row.opt_or_bound);
  }

  SweepSpec big = SmallSweep();
  big.params = {"items=40", "platforms=4", "groups=2", "group_lb=1"};
  for (const auto& row : ComputeSweep(big)) EXPECT_TRUE(row.is_bound);

  SweepSpec no_oracle = SmallSweep();
  no_oracle.use_oracle = false;
  for (const auto& row : ComputeSweep(no_oracle)) EXPECT_TRUE(row.is_bound);
}

TEST(SweepTest, CsvHeaderAndUntimedMillis) {
  SweepOptions options;
  options.spec = SmallSweep();
  std::ostringstream out, err;
  ASSERT_EQ(RunSweep(options, out, err), kExitOk) << err.str();
  std::istringstream lines(out.str());
  std::string header;
  std::getline(lines, header);
  EXPECT_EQ(header,
            "degree,seed,strategy,value,opt_or_bound,is_bound,ratio,millis");
  int count = 0;
  for (std::string line; std::getline(lines, line); ++count) {
    EXPECT_EQ(line.substr(line.rfind(',') + 1), "NA");
  }
  EXPECT_EQ(count, 18);
}

TEST(SweepTest, FairSweepUsesBound) {
  SweepSpec spec;
  spec.problem = ProblemKind::kFair;
  spec.params = {"items=200", "platforms=10", "groups=4", "lb=4",
                 "ub=8",      "alpha=1/8",    "beta=1/2"};
  spec.degree_from = 2;
  spec.degree_to = 4;
  spec.degree_step = 2;
  spec.seeds = 2;
  auto rows = ComputeSweep(spec);
  ASSERT_EQ(rows.size(), 2u * 2u * 2u);
  for (const auto& row : rows) {
    ASSERT_TRUE(row.value.has_value()) << row.error;
    EXPECT_TRUE(row.is_bound);
    EXPECT_LE(*row.value, row.opt_or_bound);
  }
}

TEST(SweepTest, InvalidRangesAreUsageErrors) {
  SweepSpec spec = SmallSweep();
  spec.degree_to = 0;
  EXPECT_THROW(ComputeSweep(spec), UsageError);
  spec = SmallSweep();
  spec.problem = ProblemKind::kTree;
  spec.strategies = {"base"};
  std::ostringstream out, err;
  SweepOptions options;
  options.spec = spec;
  EXPECT_EQ(RunSweep(options, out, err), kExitUsage);
}

TEST(ParamsTest, ParsesAndRejects) {
  Params p({"a=3", "b=0.5", "c=1/40"});
  EXPECT_EQ(p.Int("a", 0), 3);
  EXPECT_DOUBLE_EQ(p.Real("b", 0), 0.5);
  EXPECT_EQ(p.Fraction("c", {}), (Rational{1, 40}));
  EXPECT_EQ(p.Int("missing", 7), 7);
  EXPECT_NO_THROW(p.Finish());
  EXPECT_THROW(Params({"novalue"}), UsageError);
  Params q({"a=x"});
  EXPECT_THROW(q.Int("a", 0), UsageError);
  Params r({"avg_degree=3", "max_degree=5"});
  EXPECT_THROW(MaxDegreeParam(r, 1), UsageError);
  EXPECT_EQ(MaxDegreeForAverage(3), 5);
}

TEST(RatioTest, Text) {
  SweepRow row;
  EXPECT_EQ(RatioText(row), "NA");
  row.value = 0;
  row.opt_or_bound = 0;
  EXPECT_EQ(RatioText(row), "1.000000");
  row.value = 1;
  row.opt_or_bound = 3;
  EXPECT_EQ(RatioText(row), "0.333333");
}

}  // namespace
}  // namespace diverse_match
