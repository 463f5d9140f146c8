// Copyright 2026 The Authors.
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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "cyclomatroid/catalog.hpp"
#include "cyclomatroid/representation.hpp"
#include "json.hpp"

namespace cyclomatroid::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result Invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "cyclomatroid");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = RunCli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("cyclomatroid_cli_" + std::string(
                ::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string Path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(CliTest, FindExitCodes) {
  EXPECT_EQ(Invoke({"find-ordinary", "ag23", "--k", "2", "--method", "brute"}).code, kExitNone);
  EXPECT_EQ(Invoke({"find-ordinary", "motzkin", "--k", "3", "--method", "brute"}).code, kExitFound);
  EXPECT_EQ(Invoke({"find-elementary", "ag23_power:2", "--k", "3"}).code, kExitNone);
  EXPECT_EQ(Invoke({"find-elementary", "motzkin", "--k", "2"}).code, kExitFound);
  EXPECT_EQ(Invoke({"find-ordinary", "motzkin", "--k", "3", "--method", "constructive"}).code,
            kExitPrecondition);
  EXPECT_EQ(Invoke({"find-elementary", "ag23_power:2", "--k", "3", "--method", "brute", "--budget",
                 "5"})
                .code,
            kExitBudget);
}

TEST_F(CliTest, ConstructiveWithTrace) {
  const Result r = Invoke({"find-ordinary", "random:8,12,1,3", "--k", "3", "--method",
                        "constructive", "--trace"});
  EXPECT_EQ(r.code, kExitFound) << r.err;
  EXPECT_NE(r.out.find("level"), std::string::npos) << r.out;

  const Result j = Invoke({"find-ordinary", "random:8,12,1,3", "--k", "3", "--trace", "--json"});
  ASSERT_EQ(j.code, kExitFound);
  const auto doc = nlohmann::ordered_json::parse(j.out);
  EXPECT_EQ(doc["outcome"], "witness_found");
  EXPECT_EQ(doc["k"], 3);
  EXPECT_EQ(doc["rank"], 8);
  EXPECT_EQ(doc["witness"]["flat"].size(),
            doc["witness"]["point"].size() + doc["witness"]["complement"].size());
  EXPECT_EQ(doc["trace"]["levels"].size(), 2u);
  EXPECT_TRUE(doc["stats"]["ms"].is_null());
}

TEST_F(CliTest, ParseErrors) {
  {
    std::ofstream f(Path("broken.mat"));
    f << "conductor 1\nsize 2 2\n1 0 3\n0 1\n";
  }
  const Result r = Invoke({"analyze", Path("broken.mat")});
  EXPECT_EQ(r.code, kExitParse);
  EXPECT_NE(r.err.find("broken.mat:3:"), std::string::npos) << r.err;

  EXPECT_EQ(Invoke({"analyze", Path("missing.mat")}).code, kExitParse);
  EXPECT_EQ(Invoke({}).code, kExitParse);
  EXPECT_EQ(Invoke({"find-ordinary", "ag23"}).code, kExitParse);
  EXPECT_EQ(Invoke({"find-ordinary", "ag23", "--k", "two"}).code, kExitParse);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(Invoke({"verify", "--suite", "kelly", "--k", "3"}).code, kExitPrecondition);
  EXPECT_EQ(Invoke({"verify", "--suite", "sylvester"}).code, kExitPrecondition);
  EXPECT_EQ(Invoke({"search", "--conjecture", "3"}).code, kExitPrecondition);
  EXPECT_EQ(Invoke({"search", "--conjecture", "1", "--k", "1"}).code, kExitPrecondition);
  EXPECT_EQ(Invoke({"analyze", "ag23", "--flats", "7"}).code, kExitPrecondition);
}

TEST_F(CliTest, ExportRoundTripsThroughAnalyze) {
  for (const std::string ref : {"ag23", "motzkin", "uniform:3,5", "random:4,8,4,1,10"}) {
    const std::string file = Path("exported.mat");
    ASSERT_EQ(Invoke({"catalog", "--export", ref, file}).code, 0);
    const Result from_file = Invoke({"analyze", file, "--summary"});
    const Result from_ref = Invoke({"analyze", ref, "--summary"});
    EXPECT_EQ(from_file.code, 0);
    EXPECT_EQ(from_file.out, from_ref.out) << ref;
    EXPECT_EQ(ReadMatrixFile(file), BuildCatalogRef(ref));
  }
}

TEST_F(CliTest, AnalyzeListsFlats) {
  const Result r = Invoke({"analyze", "ag23", "--flats", "2"});
  EXPECT_EQ(r.code, 0);
  std::istringstream lines(r.out);
  int three_point = 0;
  for (std::string line; std::getline(lines, line);)
    if (line.find("3 points") != std::string::npos) ++three_point;
  EXPECT_EQ(three_point, 12);
}

TEST_F(CliTest, CatalogListsEveryEntry) {
  const Result r = Invoke({"catalog"});
  EXPECT_EQ(r.code, 0);
  for (const CatalogEntry& e : CatalogEntries()) EXPECT_NE(r.out.find(e.name), std::string::npos);
}

TEST_F(CliTest, VerifySuitesPass) {
  EXPECT_EQ(Invoke({"verify", "--suite", "kelly", "--trials", "10", "--seed", "7"}).code, 0);
  EXPECT_EQ(Invoke({"verify", "--suite", "corollary", "--k", "2", "--trials", "10"}).code, 0);
  EXPECT_EQ(Invoke({"verify", "--suite", "main-theorem", "--k", "3", "--trials", "2", "--conductor",
                 "3"})
                .code,
            0);
}

TEST_F(CliTest, JsonIsByteIdenticalAcrossRunsAndThreads) {
  const std::vector<std::string> args{"verify", "--suite", "kelly", "--trials", "12",
                                      "--seed", "5",       "--json"};
  const Result a = Invoke(args);
  const Result b = Invoke(args);
  std::vector<std::string> threaded = args;
  threaded.insert(threaded.end(), {"--threads", "3"});
  const Result c = Invoke(threaded);
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, c.out);
  const auto doc = nlohmann::ordered_json::parse(a.out);
  EXPECT_EQ(doc["passed"], 12);
  EXPECT_EQ(doc["reports"].size(), 12u);
}

TEST_F(CliTest, SearchReportsVerifyPass) {
  EXPECT_EQ(Invoke({"search", "--conjecture", "1", "--k", "2", "--trials", "10"}).code, 0);
  EXPECT_EQ(Invoke({"search", "--conjecture", "2", "--k", "2", "--trials", "10"}).code, 0);
  const Result tight = Invoke({"search", "--conjecture", "2", "--k", "3", "--trials", "1", "--budget",
                            "10", "--out-dir", Path("")});
  EXPECT_EQ(tight.code, kExitBudget);
  EXPECT_TRUE(fs::is_empty(dir_));
}

}  // namespace
}  // namespace cyclomatroid::cli
