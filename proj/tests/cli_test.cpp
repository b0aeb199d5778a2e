// Copyright 2026 The dbcayley Authors.
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

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <json.hpp>

#include "dbcayley/cli.hpp"

namespace dbcayley::cli {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json parse(const Outcome& o) { return nlohmann::json::parse(o.out); }

TEST(Cli, VerifyJsonSchema) {
  const Outcome o = invoke({"verify", "thm1:k=4,d=3", "--format", "json"});
  ASSERT_EQ(o.code, kSuccess) << o.err;
  const auto j = parse(o);
  for (const char* key : {"spec", "order", "degree", "directed", "diameter", "claimed_diameter",
                          "histogram", "moore_ratio", "validation"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j.size(), 9U);
  EXPECT_EQ(j["order"], 24);
  EXPECT_EQ(j["diameter"], 4);
  EXPECT_EQ(j["histogram"], nlohmann::json({1, 3, 5, 10, 5}));
  EXPECT_EQ(j["moore_ratio"], "24/121");
  EXPECT_TRUE(j["validation"]["ok"].get<bool>());
}

TEST(Cli, VerifyUndirectedBlocks) {
  const Outcome o = invoke({"verify", "thm4:k=2,l=2,t=2,m=1"});
  ASSERT_EQ(o.code, kSuccess) << o.err;
  const auto j = parse(o);
  EXPECT_EQ(j["histogram"], nlohmann::json({1, 11, 12}));
  EXPECT_EQ(j["validation"]["symmetric"], true);
}

TEST(Cli, TableOutputShowsFormulas) {
  const Outcome o = invoke({"verify", "thm1:k=4,d=3", "--format", "table"});
  ASSERT_EQ(o.code, kSuccess);
  EXPECT_NE(o.out.find("(k-1)(d-k+3)^(k-1) = 24"), std::string::npos);
  EXPECT_NE(o.out.find("histogram         1 3 5 10 5"), std::string::npos);
}

TEST(Cli, RefusesAboveCap) {
  const Outcome o = invoke({"verify", "thm3:k=3,l=9,t=2,m=3", "--cap", "30000000"});
  EXPECT_EQ(o.code, kResourceRefusal);
  EXPECT_NE(o.err.find("44040192"), std::string::npos);
  const Outcome big = invoke({"verify", "cor:k=4"});
  EXPECT_EQ(big.code, kResourceRefusal);
  EXPECT_NE(big.err.find("283467841536"), std::string::npos);
}

TEST(Cli, BuildReportsPreconditions) {
  const Outcome o = invoke({"build", "thm3:k=3,l=2,t=2,m=2"});
  EXPECT_EQ(o.code, kUsageError);
  EXPECT_NE(o.err.find("m < l"), std::string::npos);
}

TEST(Cli, BuildResolvesCorollary) {
  const Outcome o = invoke({"build", "cor:k=3"});
  ASSERT_EQ(o.code, kSuccess) << o.err;
  const auto j = parse(o);
  EXPECT_EQ(j["spec"], "thm3:k=3,l=9,t=2,m=3");
  EXPECT_EQ(j["degree"], 671);
  EXPECT_EQ(j["order"], 44040192);
  EXPECT_TRUE(j["diameter"].is_null());
}

TEST(Cli, CompareCrossover) {
  const Outcome o = invoke({"compare", "--k", "4", "--d", "5..10", "--format", "json"});
  ASSERT_EQ(o.code, kSuccess) << o.err;
  const auto rows = parse(o)["rows"];
  ASSERT_EQ(rows.size(), 6U);
  for (const auto& row : rows) EXPECT_EQ(row["crossover"].get<bool>(), row["d"] == 10);
  EXPECT_EQ(rows[3]["our_order"], 1029);
  EXPECT_EQ(rows[3]["competitor_orders"]["vetrik"], 1024);
  EXPECT_EQ(rows[5]["winner"], "vetrik");

  const Outcome table = invoke({"compare", "--k", "4", "--d", "5..10", "--format", "table"});
  EXPECT_NE(table.out.find("2500            10000           11111           vetrik  <- crossover"),
            std::string::npos);
}

TEST(Cli, CompareBigNumbersAsStrings) {
  const Outcome o = invoke({"compare", "--k", "20", "--d", "100..100", "--undirected"});
  ASSERT_EQ(o.code, kSuccess) << o.err;
  const auto row = parse(o)["rows"][0];
  EXPECT_EQ(row["our_order"], "131974528324751587481241433669632");
  EXPECT_EQ(row["competitor_orders"]["mssv"], "46914683762073585741569265472020");
  EXPECT_EQ(row["winner"], "thm2");
}

TEST(Cli, ExportIsDeterministicAndWritesFiles) {
  const Outcome a = invoke({"export", "thm1:k=4,d=3", "--format", "edge-list"});
  const Outcome b = invoke({"export", "thm1:k=4,d=3", "--format", "edge-list"});
  ASSERT_EQ(a.code, kSuccess);
  EXPECT_EQ(a.out, b.out);
  EXPECT_TRUE(a.out.starts_with("0 8\n0 9\n0 16\n"));

  const auto path = std::filesystem::temp_directory_path() / "dbcayley_cli_test.dot";
  const Outcome c = invoke({"export", "thm1:k=4,d=3", "--format", "dot", "--out", path.string()});
  ASSERT_EQ(c.code, kSuccess) << c.err;
  std::ifstream in(path);
  std::string first;
  std::getline(in, first);
  EXPECT_EQ(first, "digraph G {");
  std::filesystem::remove(path);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(invoke({}).code, kUsageError);
  EXPECT_EQ(invoke({"verify"}).code, kUsageError);
  EXPECT_EQ(invoke({"verify", "thm9:k=1"}).code, kUsageError);
  EXPECT_EQ(invoke({"verify", "thm1:k=4,d=3,x=1"}).code, kUsageError);
  EXPECT_EQ(invoke({"export", "thm1:k=4,d=3", "--format", "png"}).code, kUsageError);
  EXPECT_EQ(invoke({"compare", "--k", "4", "--d", "10..5"}).code, kUsageError);
  EXPECT_EQ(invoke({"optimal", "--k", "3", "--t", "2", "--r", "3"}).code, kUsageError);
}

TEST(Cli, OverlapFlaggedUnlessWarnOnly) {
  const Outcome strict = invoke({"verify", "thm4:k=2,l=3,t=2,m=2"});
  EXPECT_EQ(strict.code, kInvariantFailure);
  EXPECT_NE(strict.err.find("size 37 differs from the closed-form count 39"), std::string::npos);
  const auto j = parse(strict);
  EXPECT_EQ(j["diameter"], 2);
  EXPECT_FALSE(j["validation"]["ok"].get<bool>());
  EXPECT_EQ(invoke({"verify", "thm4:k=2,l=3,t=2,m=2", "--warn-only"}).code, kSuccess);
}

TEST(Cli, OptimalAndCertificate) {
  const Outcome o = invoke({"optimal", "--k", "3", "--t", "2", "--r", "21"});
  ASSERT_EQ(o.code, kSuccess);
  EXPECT_EQ(parse(o)["l"], 9);
  EXPECT_EQ(parse(o)["degree"], 671);
  const Outcome c = invoke({"certificate", "--k", "3"});
  ASSERT_EQ(c.code, kSuccess) << c.err;
  EXPECT_TRUE(parse(c)["inequality_holds"].get<bool>());
  EXPECT_EQ(invoke({"certificate", "--k", "3", "--undirected", "--l", "auto"}).code, kSuccess);
}

}  // namespace
}  // namespace dbcayley::cli
