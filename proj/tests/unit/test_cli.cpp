// Copyright 2026 The coselect Authors.
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

#include "app/cli.hpp"
#include "json.hpp"
#include "support/oracles.hpp"

using namespace coselect::app;
namespace fs = std::filesystem;

namespace {

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() / (std::string("coselect_cli_") + info->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  void write(const std::string& name, const std::string& text) const {
    std::ofstream(dir_ / name, std::ios::binary) << text;
  }

  std::string read(const std::string& name) const {
    std::ifstream in(dir_ / name, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }

  int run(std::vector<std::string> args) {
    args.insert(args.begin(), "coselect");
    out_.str("");
    err_.str("");
    return run_cli(args, out_, err_);
  }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

}  // namespace

TEST_F(CliTest, MissingItemColumnIsADataError) {
  write("bad.csv", "campaign,width_mm\nA,1\n");
  EXPECT_EQ(run({"mine", path("bad.csv"), "--out", path("o")}), kExitData);
  EXPECT_NE(err_.str().find("grade"), std::string::npos);
}

TEST_F(CliTest, HeaderOnlyMineSucceedsWithEmptyExports) {
  write("empty.csv", "campaign,grade,width_mm,thickness_mm,carbon,manganese,silicon,titanium\n");
  EXPECT_EQ(run({"mine", path("empty.csv"), "--out", path("o")}), kExitOk) << err_.str();
  EXPECT_TRUE(fs::exists(path("o/network.graphml")));
  EXPECT_EQ(read("o/edges.csv"), "source,target,pair_count,support,lift\n");
}

TEST_F(CliTest, HeaderOnlyAnalyzeIsADataError) {
  write("empty.csv", "campaign,grade,width_mm,thickness_mm,carbon,manganese,silicon,titanium\n");
  EXPECT_EQ(run({"analyze", path("empty.csv"), "--out", path("o")}), kExitData);
}

TEST_F(CliTest, FixtureMine) {
  write("t1.csv", coselect::testing::two_campaign_csv());
  ASSERT_EQ(run({"mine", path("t1.csv"), "--out", path("o"), "--windows", "2", "--communities"}), kExitOk)
      << err_.str();
  const auto edges = read("o/edges.csv");
  EXPECT_NE(edges.find("1,2,1,0.5,2\n"), std::string::npos);
  EXPECT_NE(edges.find("3,4,1,0.5,2\n"), std::string::npos);
  const auto dot = read("o/network.dot");
  EXPECT_NE(dot.find("\"1\" -- \"2\""), std::string::npos);
  EXPECT_EQ(read("o/hist_campaign_diversity.csv"), "items_per_campaign,campaigns\n2,2\n");
}

TEST_F(CliTest, UsageErrors) {
  write("t1.csv", coselect::testing::two_campaign_csv());
  EXPECT_EQ(run({}), kExitUsage);
  EXPECT_EQ(run({"frobnicate"}), kExitUsage);
  EXPECT_EQ(run({"analyze", path("t1.csv"), "--out", path("o"), "--corr", "cosine"}), kExitUsage);
  EXPECT_EQ(run({"analyze", path("t1.csv"), "--out", path("o"), "--windows", "0"}), kExitUsage);
  EXPECT_EQ(run({"analyze", path("t1.csv"), "--out", path("o"), "--models", "er,ba"}), kExitUsage);
  EXPECT_EQ(run({"analyze", path("t1.csv"), "--out", path("o"), "--windows", "3"}), kExitUsage);
  EXPECT_EQ(run({"--help"}), kExitOk);
}

TEST_F(CliTest, MissingInputFile) {
  EXPECT_EQ(run({"mine", path("nope.csv"), "--out", path("o")}), kExitData);
}

TEST_F(CliTest, SynthConfigErrors) {
  write("broken.json", "{ not json");
  EXPECT_NE(run({"synth", path("broken.json"), path("x.csv")}), kExitOk);
  write("zero.json", R"({"preset": "two_band", "campaigns": 0})");
  EXPECT_EQ(run({"synth", path("zero.json"), path("x.csv")}), kExitUsage);
  EXPECT_FALSE(fs::exists(path("x.csv")));
}

TEST_F(CliTest, SynthThenAnalyzeIsReproducible) {
  write("cfg.json", R"({"preset": "two_band", "grades": 16, "campaigns": 400, "late_items": 1})");
  ASSERT_EQ(run({"synth", path("cfg.json"), path("data.csv"), "--seed", "4"}), kExitOk) << err_.str();
  const std::vector<std::string> common = {"--windows", "3", "--ensemble", "20", "--seed", "9"};
  auto analyze_to = [&](const std::string& out, const std::string& threads) {
    std::vector<std::string> args = {"analyze", path("data.csv"), "--out", path(out), "--threads", threads};
    args.insert(args.end(), common.begin(), common.end());
    return run(args);
  };
  ASSERT_EQ(analyze_to("a", "1"), kExitOk) << err_.str();
  ASSERT_EQ(analyze_to("b", "2"), kExitOk) << err_.str();
  EXPECT_EQ(read("a/report.json"), read("b/report.json"));
  EXPECT_EQ(read("a/zscores.csv"), read("b/zscores.csv"));
  for (const char* f : {"report.json", "zscores.csv", "network.graphml", "network.dot", "nodes.csv",
                        "edges.csv", "hist_campaign_diversity.csv", "hist_slabs_per_grade.csv"}) {
    EXPECT_TRUE(fs::exists(dir_ / "a" / f)) << f;
  }
  const auto report = nlohmann::json::parse(read("a/report.json"));
  EXPECT_EQ(report["format"], "coselect-report/1");
  EXPECT_EQ(report["stages"].size(), 3u);
  EXPECT_EQ(report["ensembles"].size(), 2u * 3u * 3u * 2u);
  EXPECT_EQ(report["input"]["campaigns"], 400);

  // A different seed changes the ensembles.
  std::vector<std::string> other = {"analyze", path("data.csv"), "--out", path("c"), "--windows", "3",
                                    "--ensemble", "20", "--seed", "10"};
  ASSERT_EQ(run(other), kExitOk);
  EXPECT_NE(read("a/report.json"), read("c/report.json"));
}
