// Copyright 2026 The FTFP Authors
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

#include "cli.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ftfp/instance_io.h"
#include "gtest/gtest.h"

namespace ftfp {
namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

CliRun RunArgs(std::vector<std::string> args) {
  args.insert(args.begin(), "ftfp");
  std::ostringstream out, err;
  CliRun run;
  run.code = RunCli(args, out, err);
  run.out = out.str();
  run.err = err.str();
  return run;
}

std::string ReadFile(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path FreshDir(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / ("ftfp_cli_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

fs::path SampleInstance() { return fs::path(FTFP_SOURCE_DIR) / "data" / "sample.ftfp"; }

TEST(CliTest, UsageErrors) {
  EXPECT_EQ(RunArgs({}).code, 1);
  EXPECT_EQ(RunArgs({"nonsense"}).code, 1);
  EXPECT_EQ(RunArgs({"solve"}).code, 1);
  EXPECT_EQ(RunArgs({"gap", "--alpha", "0.5"}).code, 1);
}

TEST(CliTest, MissingInputFile) {
  CliRun run = RunArgs({"solve", "--input", "/nonexistent/file.ftfp", "--output", FreshDir("missing").string()});
  EXPECT_EQ(run.code, 1);
  EXPECT_FALSE(run.err.empty());
}

TEST(CliTest, MalformedInputFile) {
  fs::path dir = FreshDir("malformed");
  std::ofstream(dir / "bad.ftfp") << "ftfp 1\nfacilities two\n";
  EXPECT_EQ(RunArgs({"oracle", "--input", (dir / "bad.ftfp").string()}).code, 1);
}

TEST(CliTest, SampleInstanceRoundTrips) {
  Instance inst = LoadInstance(SampleInstance().string());
  EXPECT_EQ(ParseInstance(FormatInstance(inst)), inst);
}

TEST(CliTest, BoundOptimize) {
  fs::path dir = FreshDir("bound");
  CliRun run = RunArgs({"bound", "--optimize", "--output", dir.string()});
  ASSERT_EQ(run.code, 0) << run.err;
  EXPECT_NE(run.out.find("1.2784"), std::string::npos) << run.out;
  EXPECT_TRUE(fs::exists(dir / "bounds.csv"));
}

TEST(CliTest, GapEvaluation) {
  fs::path dir = FreshDir("gap");
  CliRun run = RunArgs({"gap", "--r", "1", "--l", "1000", "--alpha", "0.5", "--fc", "1", "--output", dir.string()});
  ASSERT_EQ(run.code, 0) << run.err;
  const std::string csv = ReadFile(dir / "gap_table.csv");
  EXPECT_EQ(csv.rfind("r,IG,alpha,f_c,l\n", 0), 0u) << csv;
}

TEST(CliTest, SmallFrlp) {
  fs::path dir = FreshDir("frlp");
  CliRun run = RunArgs({"frlp", "--r", "2", "--n", "20", "--output", dir.string()});
  ASSERT_EQ(run.code, 0) << run.err;
  EXPECT_NE(run.out.find("lambda 1.4221"), std::string::npos) << run.out;
  EXPECT_TRUE(fs::exists(dir / "frlp_profile_r2.csv"));
}

TEST(CliTest, SolveMatchesOracleOnSample) {
  fs::path dir = FreshDir("solve");
  CliRun solve = RunArgs({"solve", "--input", SampleInstance().string(), "--grid", "20", "--output", dir.string()});
  ASSERT_EQ(solve.code, 0) << solve.err;
  for (const char* f : {"report.csv", "gamma_stats.csv", "solution.txt"}) EXPECT_TRUE(fs::exists(dir / f)) << f;
  CliRun oracle = RunArgs({"oracle", "--input", SampleInstance().string()});
  ASSERT_EQ(oracle.code, 0) << oracle.err;
  EXPECT_NE(oracle.out.find("opt "), std::string::npos);
}

TEST(CliTest, SameSeedGivesIdenticalFiles) {
  fs::path a = FreshDir("det_a"), b = FreshDir("det_b");
  for (const fs::path& dir : {a, b}) {
    ASSERT_EQ(RunArgs({"solve", "--input", SampleInstance().string(), "--grid", "15", "--trials", "2", "--seed", "5",
                   "--output", dir.string()}).code,
              0);
  }
  for (const char* f : {"report.csv", "gamma_stats.csv", "solution.txt"}) {
    EXPECT_EQ(ReadFile(a / f), ReadFile(b / f)) << f;
  }
}

TEST(CliTest, GenWritesParsableInstance) {
  fs::path dir = FreshDir("gen");
  ASSERT_EQ(RunArgs({"gen", "--kind", "gap", "--n", "4", "--l", "2", "--r", "2", "--fc", "3", "--write", "--output",
                 dir.string()}).code,
            0);
  Instance inst = LoadInstance((dir / "instance.ftfp").string());
  EXPECT_EQ(inst.num_facilities(), 8);
}

}  // namespace
}  // namespace ftfp
