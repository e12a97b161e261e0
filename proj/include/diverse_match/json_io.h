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

// JSON documents for instances and solutions, with optional gzip compression
// selected by a ".gz" file extension.

#ifndef DIVERSE_MATCH_JSON_IO_H_
#define DIVERSE_MATCH_JSON_IO_H_

#include <zlib.h>

#include <cstdint>
#include <fstream>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "diverse_match/errors.h"
#include "diverse_match/evaluate.h"
#include "diverse_match/fair_solver.h"
#include "diverse_match/model.h"
#include "diverse_match/rational.h"
#include "json.hpp"

namespace diverse_match {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

enum class ProblemKind { kLb, kFair, kTree };

inline const char* ProblemName(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::kLb:
      return "lb";
    case ProblemKind::kFair:
      return "fair";
    case ProblemKind::kTree:
      return "tree";
  }
  return "?";
}

inline std::optional<ProblemKind> ParseProblem(std::string_view name) {
  if (name == "lb") return ProblemKind::kLb;
  if (name == "fair") return ProblemKind::kFair;
  if (name == "tree") return ProblemKind::kTree;
  return std::nullopt;
}

inline bool HasGzipExtension(const std::string& path) {
  return path.size() >= 3 && path.compare(path.size() - 3, 3, ".gz") == 0;
}

// Throws std::runtime_error when the file cannot be read.
inline std::string ReadFile(const std::string& path) {
  if (HasGzipExtension(path)) {
    gzFile f = gzopen(path.c_str(), "rb");
    if (!f) throw std::runtime_error("cannot open " + path);
    std::string out;
    char buf[1 << 16];
    int got;
    while ((got = gzread(f, buf, sizeof buf)) > 0) out.append(buf, got);
    const bool failed = got < 0;
    gzclose(f);
    if (failed) throw std::runtime_error("corrupt gzip stream in " + path);
    return out;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Throws std::runtime_error when the file cannot be written.
inline void WriteFile(const std::string& path, std::string_view content) {
  if (HasGzipExtension(path)) {
    gzFile f = gzopen(path.c_str(), "wb9");
    if (!f) throw std::runtime_error("cannot write " + path);
    const bool ok =
        content.empty() ||
        gzwrite(f, content.data(), static_cast<unsigned>(content.size())) ==
            static_cast<int>(content.size());
    if (gzclose(f) != Z_OK || !ok) {
      throw std::runtime_error("cannot write " + path);
    }
    return;
  }
  std::ofstream out(path, std::ios::binary);
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw std::runtime_error("cannot write " + path);
}

// Throws ParseError on malformed JSON.
inline Json ParseJson(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(e.what());
  }
}

inline std::string Dump(const OrderedJson& doc) { return doc.dump(2) + "\n"; }

namespace internal {

inline void ExpectObject(const Json& j, std::string_view where,
                         std::initializer_list<std::string_view> required,
                         std::initializer_list<std::string_view> optional) {
  if (!j.is_object()) {
    throw SchemaError(std::string(where) + ": expected an object");
  }
  for (auto key : required) {
    if (!j.contains(key)) {
      throw SchemaError(std::string(where) + ": missing field \"" +
                        std::string(key) + "\"");
    }
  }
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (auto k : required) known |= key == k;
    for (auto k : optional) known |= key == k;
    if (!known) {
      throw SchemaError(std::string(where) + ": unknown field \"" + key + "\"");
    }
  }
}

inline std::int64_t GetInt(const Json& j, std::string_view where) {
  if (!j.is_number_integer()) {
    throw SchemaError(std::string(where) + ": expected an integer");
  }
  return j.get<std::int64_t>();
}

inline int GetInt32(const Json& j, std::string_view where) {
  auto v = GetInt(j, where);
  if (v < INT32_MIN || v > INT32_MAX) {
    throw SchemaError(std::string(where) + ": integer out of range");
  }
  return static_cast<int>(v);
}

inline const Json& GetArray(const Json& j, std::string_view where) {
  if (!j.is_array()) {
    throw SchemaError(std::string(where) + ": expected an array");
  }
  return j;
}

inline std::vector<int> GetIds(const Json& j, const std::string& where) {
  std::vector<int> out;
  for (std::size_t t = 0; t < GetArray(j, where).size(); ++t) {
    out.push_back(GetInt32(j[t], where + "[" + std::to_string(t) + "]"));
  }
  return out;
}

inline std::vector<std::int64_t> GetInts(const Json& j,
                                         const std::string& where) {
  std::vector<std::int64_t> out;
  for (std::size_t t = 0; t < GetArray(j, where).size(); ++t) {
    out.push_back(GetInt(j[t], where + "[" + std::to_string(t) + "]"));
  }
  return out;
}

inline Rational GetRational(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) {
    throw SchemaError(where + ": expected [numerator, denominator]");
  }
  return Rational{GetInt(j[0], where), GetInt(j[1], where)};
}

inline OrderedJson RationalJson(const Rational& r) {
  return OrderedJson::array({r.num, r.den});
}

inline OrderedJson WithMeta(OrderedJson doc, const Json& meta) {
  if (!meta.is_null()) doc["meta"] = OrderedJson::parse(meta.dump());
  return doc;
}

inline std::string Loc(const char* kind, std::size_t index) {
  return std::string(kind) + "[" + std::to_string(index) + "]";
}

}  // namespace internal

// Reads "problem"; throws SchemaError when absent or unknown.
inline ProblemKind ProblemOf(const Json& doc) {
  if (!doc.is_object() || !doc.contains("problem") ||
      !doc["problem"].is_string()) {
    throw SchemaError("document: missing string field \"problem\"");
  }
  auto kind = ParseProblem(doc["problem"].get<std::string>());
  if (!kind) {
    throw SchemaError("document: unknown problem \"" +
                      doc["problem"].get<std::string>() + "\"");
  }
  return *kind;
}

// ----- Instances -----

inline OrderedJson ToJson(const LbInstance& inst, const Json& meta = {}) {
  OrderedJson doc;
  doc["problem"] = "lb";
  doc["items"] = inst.item_count;
  auto& platforms = doc["platforms"] = OrderedJson::array();
  for (const auto& p : inst.platforms) {
    OrderedJson pj;
    pj["neighbors"] = p.neighbors;
    pj["lb"] = p.lb;
    pj["groups"] = OrderedJson::array();
    for (const auto& g : p.groups) {
      pj["groups"].push_back({{"members", g.members}, {"lb", g.lb}});
    }
    platforms.push_back(std::move(pj));
  }
  return internal::WithMeta(std::move(doc), meta);
}

inline OrderedJson ToJson(const FairInstance& inst, const Json& meta = {}) {
  OrderedJson doc;
  doc["problem"] = "fair";
  doc["items"] = inst.item_count;
  auto& platforms = doc["platforms"] = OrderedJson::array();
  for (const auto& p : inst.platforms) {
    OrderedJson pj;
    pj["neighbors"] = p.neighbors;
    pj["lb"] = p.lb;
    pj["ub"] = p.ub;
    pj["groups"] = OrderedJson::array();
    for (const auto& g : p.groups) {
      pj["groups"].push_back({{"members", g.members},
                              {"alpha", internal::RationalJson(g.alpha)},
                              {"beta", internal::RationalJson(g.beta)}});
    }
    platforms.push_back(std::move(pj));
  }
  return internal::WithMeta(std::move(doc), meta);
}

inline OrderedJson ToJson(const TreeInstance& inst, const Json& meta = {}) {
  OrderedJson doc;
  doc["problem"] = "tree";
  doc["k"] = inst.group_count;
  doc["budget"] = inst.budget;
  doc["total"] = inst.total_items;
  auto& nodes = doc["nodes"] = OrderedJson::array();
  for (const auto& node : inst.nodes) {
    OrderedJson nj;
    nj["parent"] = node.parent ? OrderedJson(*node.parent) : OrderedJson();
    nj["l"] = node.group_lb;
    nj["lb"] = node.overall_lb;
    nj["reward"] = node.reward;
    nodes.push_back(std::move(nj));
  }
  return internal::WithMeta(std::move(doc), meta);
}

inline LbInstance LbFromJson(const Json& doc) {
  using namespace internal;
  ExpectObject(doc, "document", {"problem", "items", "platforms"}, {"meta"});
  if (ProblemOf(doc) != ProblemKind::kLb) {
    throw SchemaError("document: expected problem \"lb\"");
  }
  LbInstance inst;
  inst.item_count = GetInt32(doc["items"], "items");
  const auto& platforms = GetArray(doc["platforms"], "platforms");
  for (std::size_t j = 0; j < platforms.size(); ++j) {
    const auto where = Loc("platforms", j);
    const Json& pj = platforms[j];
    ExpectObject(pj, where, {"neighbors", "lb"}, {"groups"});
    LbPlatform p;
    p.neighbors = GetIds(pj["neighbors"], where + ".neighbors");
    p.lb = GetInt32(pj["lb"], where + ".lb");
    if (pj.contains("groups")) {
      const auto& groups = GetArray(pj["groups"], where + ".groups");
      for (std::size_t g = 0; g < groups.size(); ++g) {
        const auto gwhere = where + "." + Loc("groups", g);
        ExpectObject(groups[g], gwhere, {"members", "lb"}, {});
        p.groups.push_back({GetIds(groups[g]["members"], gwhere + ".members"),
                            GetInt32(groups[g]["lb"], gwhere + ".lb")});
      }
    }
    inst.platforms.push_back(std::move(p));
  }
  return inst;
}

inline FairInstance FairFromJson(const Json& doc) {
  using namespace internal;
  ExpectObject(doc, "document", {"problem", "items", "platforms"}, {"meta"});
  if (ProblemOf(doc) != ProblemKind::kFair) {
    throw SchemaError("document: expected problem \"fair\"");
  }
  FairInstance inst;
  inst.item_count = GetInt32(doc["items"], "items");
  const auto& platforms = GetArray(doc["platforms"], "platforms");
  for (std::size_t j = 0; j < platforms.size(); ++j) {
    const auto where = Loc("platforms", j);
    const Json& pj = platforms[j];
    ExpectObject(pj, where, {"neighbors", "lb", "ub"}, {"groups"});
    FairPlatform p;
    p.neighbors = GetIds(pj["neighbors"], where + ".neighbors");
    p.lb = GetInt32(pj["lb"], where + ".lb");
    p.ub = GetInt32(pj["ub"], where + ".ub");
    if (pj.contains("groups")) {
      const auto& groups = GetArray(pj["groups"], where + ".groups");
      for (std::size_t g = 0; g < groups.size(); ++g) {
        const auto gwhere = where + "." + Loc("groups", g);
        ExpectObject(groups[g], gwhere, {"members", "alpha", "beta"}, {});
        p.groups.push_back({GetIds(groups[g]["members"], gwhere + ".members"),
                            GetRational(groups[g]["alpha"], gwhere + ".alpha"),
                            GetRational(groups[g]["beta"], gwhere + ".beta")});
      }
    }
    inst.platforms.push_back(std::move(p));
  }
  return inst;
}

inline TreeInstance TreeFromJson(const Json& doc) {
  using namespace internal;
  ExpectObject(doc, "document", {"problem", "k", "budget", "total", "nodes"},
               {"meta"});
  if (ProblemOf(doc) != ProblemKind::kTree) {
    throw SchemaError("document: expected problem \"tree\"");
  }
  TreeInstance inst;
  inst.group_count = GetInt32(doc["k"], "k");
  inst.budget = GetInts(doc["budget"], "budget");
  inst.total_items = GetInt(doc["total"], "total");
  const auto& nodes = GetArray(doc["nodes"], "nodes");
  for (std::size_t v = 0; v < nodes.size(); ++v) {
    const auto where = Loc("nodes", v);
    const Json& nj = nodes[v];
    ExpectObject(nj, where, {"parent", "l", "lb", "reward"}, {});
    TreeNode node;
    if (!nj["parent"].is_null()) {
      node.parent = GetInt32(nj["parent"], where + ".parent");
    }
    node.group_lb = GetInts(nj["l"], where + ".l");
    node.overall_lb = GetInt(nj["lb"], where + ".lb");
    node.reward = GetInt(nj["reward"], where + ".reward");
    inst.nodes.push_back(std::move(node));
  }
  LinkTree(inst);
  return inst;
}

// ----- Solutions -----

inline OrderedJson AssignmentJson(const Assignment& a) {
  auto out = OrderedJson::array();
  for (PlatformId p : a.raw()) {
    out.push_back(p == kUnassigned ? OrderedJson() : OrderedJson(p));
  }
  return out;
}

inline Assignment AssignmentFromJson(const Json& j, int item_count) {
  const auto& arr = internal::GetArray(j, "assignment");
  if (static_cast<int>(arr.size()) != item_count) {
    throw SchemaError("assignment: expected one entry per item");
  }
  Assignment a(item_count);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (!arr[i].is_null()) {
      a.Assign(static_cast<ItemId>(i),
               internal::GetInt32(arr[i], internal::Loc("assignment", i)));
    }
  }
  return a;
}

struct LbSolutionInfo {
  std::string strategy;
  std::uint64_t seed = 0;
  int ell_thm1 = 0;
  int ell_thm2 = 0;
};

inline OrderedJson LbSolutionJson(const Assignment& a,
                                  const std::vector<PlatformId>& satisfied,
                                  const LbSolutionInfo& info) {
  OrderedJson doc;
  doc["problem"] = "lb";
  doc["strategy"] = info.strategy;
  doc["seed"] = info.seed;
  doc["ell_thm1"] = info.ell_thm1;
  doc["ell_thm2"] = info.ell_thm2;
  doc["satisfied_count"] = satisfied.size();
  doc["satisfied"] = satisfied;
  doc["assignment"] = AssignmentJson(a);
  return doc;
}

inline OrderedJson FairScoreJson(const FairScore& score) {
  return {{"satisfied_count", score.satisfied.size()},
          {"matched", score.matched_to_satisfied},
          {"satisfied", score.satisfied}};
}

inline OrderedJson FairSolutionJson(const FairInstance& inst,
                                    const FairResult& result,
                                    const std::string& strategy, int ell_thm2) {
  OrderedJson doc;
  doc["problem"] = "fair";
  doc["strategy"] = strategy;
  doc["ell_thm2"] = ell_thm2;
  doc["strict"] =
      FairScoreJson(ScoreFair(inst, result.assignment, FairMode::kStrict));
  doc["relaxed"] =
      FairScoreJson(ScoreFair(inst, result.assignment, FairMode::kRelaxed));
  doc["relaxed_multiplicative"] = FairScoreJson(
      ScoreFair(inst, result.assignment, FairMode::kRelaxedMultiplicative));
  doc["blocks"] = result.blocks;
  doc["assignment"] = AssignmentJson(result.assignment);
  return doc;
}

inline OrderedJson TreeSolutionJson(const TreeSolution& sol) {
  OrderedJson doc;
  doc["problem"] = "tree";
  doc["satisfied"] = sol.satisfied_nodes;
  doc["added_root"] = sol.added_root;
  auto& alloc = doc["allocation"] = OrderedJson::array();
  for (const auto& [node, counts] : sol.allocation) {
    alloc.push_back({{"node", node}, {"counts", counts}});
  }
  doc["total_reward"] = sol.total_reward;
  return doc;
}

inline TreeSolution TreeSolutionFromJson(const Json& doc) {
  using namespace internal;
  ExpectObject(
      doc, "solution",
      {"problem", "satisfied", "added_root", "allocation", "total_reward"}, {});
  TreeSolution sol;
  sol.satisfied_nodes = GetIds(doc["satisfied"], "satisfied");
  if (!doc["added_root"].is_boolean()) {
    throw SchemaError("added_root: expected a boolean");
  }
  sol.added_root = doc["added_root"].get<bool>();
  const auto& alloc = GetArray(doc["allocation"], "allocation");
  for (std::size_t t = 0; t < alloc.size(); ++t) {
    const auto where = Loc("allocation", t);
    ExpectObject(alloc[t], where, {"node", "counts"}, {});
    sol.allocation[GetInt32(alloc[t]["node"], where + ".node")] =
        GetInts(alloc[t]["counts"], where + ".counts");
  }
  sol.total_reward = GetInt(doc["total_reward"], "total_reward");
  return sol;
}

}  // namespace diverse_match

#endif  // DIVERSE_MATCH_JSON_IO_H_
