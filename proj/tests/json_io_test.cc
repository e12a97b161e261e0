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

#include "diverse_match/json_io.h"

#include <gtest/gtest.h>

#include <fstream>
#include <string>

#include "diverse_match/generators.h"
#include "diverse_match/harness.h"
#include "diverse_match/tree_solver.h"
#include "diverse_match/verify.h"

namespace diverse_match {
namespace {

template <typename Instance, typename FromJson>
void ExpectRoundTrip(const Instance& inst, FromJson from_json) {
  const std::string first = Dump(ToJson(inst));
  const std::string second = Dump(ToJson(from_json(ParseJson(first))));
  EXPECT_EQ(first, second);
}

TEST(JsonIoTest, InstanceRoundTrips) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    ExpectRoundTrip(GenSmallLb(SmallLbParams{}, seed), LbFromJson);
    ExpectRoundTrip(GenSmallFair(SmallFairParams{}, seed), FairFromJson);
    TreeGenParams params;
    params.groups = 2;
    ExpectRoundTrip(GenTree(params, seed), TreeFromJson);
  }
  ExpectRoundTrip(WorkedExampleTree(), TreeFromJson);
}

TEST(JsonIoTest, MetaIsAcceptedAndIgnored) {
  auto doc = ToJson(GenSmallLb(SmallLbParams{}, 1), Json{{"seed", 1}});
  EXPECT_TRUE(doc.contains("meta"));
  EXPECT_NO_THROW(LbFromJson(ParseJson(Dump(doc))));
}

TEST(JsonIoTest, UnknownFieldIsSchemaError) {
  Json doc = ParseJson(Dump(ToJson(GenSmallLb(SmallLbParams{}, 2))));
  doc["extra"] = 1;
  EXPECT_THROW(LbFromJson(doc), SchemaError);
  Json tree = ParseJson(Dump(ToJson(WorkedExampleTree())));
  tree["nodes"][0]["colour"] = "red";
  EXPECT_THROW(TreeFromJson(tree), SchemaError);
}

TEST(JsonIoTest, WrongTypesAreSchemaErrors) {
  EXPECT_THROW(LbFromJson(ParseJson(R"({"problem":"lb","items":"3",)"
                                    R"("platforms":[]})")),
               SchemaError);
  EXPECT_THROW(ProblemOf(ParseJson(R"({"problem":"knapsack"})")), SchemaError);
  EXPECT_THROW(ProblemOf(ParseJson("[1, 2]")), SchemaError);
  EXPECT_THROW(FairFromJson(ParseJson(R"({"problem":"lb","items":1,)"
                                      R"("platforms":[]})")),
               SchemaError);
}

TEST(JsonIoTest, MalformedJsonIsParseError) {
  EXPECT_THROW(ParseJson("{\"problem\": "), ParseError);
  EXPECT_THROW(ParseJson("not json"), ParseError);
}

TEST(JsonIoTest, GzipFiles) {
  internal::TempDir dir;
  const std::string text = Dump(ToJson(GenFair(FairGenParams{}, 3)));
  WriteFile(dir.File("fair.json.gz"), text);
  EXPECT_EQ(ReadFile(dir.File("fair.json.gz")), text);
  WriteFile(dir.File("plain.json"), text);
  EXPECT_EQ(ReadFile(dir.File("plain.json")), text);
  std::ifstream raw(dir.File("fair.json.gz"), std::ios::binary);
  unsigned char magic[2] = {0, 0};
  raw.read(reinterpret_cast<char*>(magic), 2);
  EXPECT_EQ(magic[0], 0x1f);
  EXPECT_EQ(magic[1], 0x8b);
  EXPECT_THROW(ReadFile(dir.File("missing.json")), std::runtime_error);
}

TEST(JsonIoTest, TreeSolutionRoundTrip) {
  TreeSolution sol = SolveTree(WorkedExampleTree()).solution;
  TreeSolution back =
      TreeSolutionFromJson(ParseJson(Dump(TreeSolutionJson(sol))));
  EXPECT_EQ(back, sol);
  TreeSolution none = ExtractSolution(WorkedExampleTree(), {});
  EXPECT_EQ(TreeSolutionFromJson(ParseJson(Dump(TreeSolutionJson(none)))),
            none);
}

TEST(JsonIoTest, AssignmentRoundTripAndRange) {
  Assignment a(4);
  a.Assign(1, 0);
  a.Assign(3, 2);
  Json j = ParseJson(Dump(AssignmentJson(a)));
  EXPECT_EQ(AssignmentFromJson(j, 4), a);
  EXPECT_THROW(AssignmentFromJson(j, 3), SchemaError);
}

}  // namespace
}  // namespace diverse_match
