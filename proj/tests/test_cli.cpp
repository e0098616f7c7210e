/*
 * Copyright 2026 The asymptree Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Result {
  int code;
  std::string out;
};

Result run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " \"" ASYMPTREE_CLI "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string data(const std::string& name) { return std::string("\"" ASYMPTREE_DATA "/") + name + "\""; }

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST(Cli, VerifyMetricDefault) {
  const auto r = run("verify-metric");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("property,checks,violations\n", 0), 0u);
  EXPECT_EQ(r.out.find(",1000,1"), std::string::npos);
}

TEST(Cli, VerifyMetricDeterministic) {
  const auto a = run("verify-metric --seed 5 --trials 200 --format json");
  const auto b = run("verify-metric --seed 5 --trials 200 --format json");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("\"seed\": 5"), std::string::npos);
}

TEST(Cli, SeedFromEnvironmentFlagWins) {
  EXPECT_NE(run("verify-metric --trials 1 --format json", "ASYMPTREE_SEED=77").out.find("\"seed\": 77"),
            std::string::npos);
  EXPECT_NE(run("verify-metric --trials 1 --seed 3 --format json", "ASYMPTREE_SEED=77").out.find("\"seed\": 3"),
            std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("verify-metric --trials 0").code, 2);
  EXPECT_EQ(run("no-such-command").code, 2);
  EXPECT_EQ(run("convergence-grid --scales 50,25").code, 2);
  EXPECT_EQ(run("convergence-grid --format xml").code, 2);
  EXPECT_EQ(run("decompose \"3*u^ + 1\"").code, 2);
}

TEST(Cli, ConvergenceGridShape) {
  const auto r = run("convergence-grid --scales 400");
  ASSERT_EQ(r.code, 0);
  std::istringstream in(r.out);
  std::string line, last;
  int lines = 0;
  while (std::getline(in, line)) {
    ++lines;
    last = line;
  }
  EXPECT_EQ(lines, 1 + 216 + 1);
  EXPECT_EQ(last.rfind("max,,,,400,", 0), 0u);
  EXPECT_LE(std::stod(last.substr(last.rfind(',') + 1)), 0.05);
  EXPECT_EQ(r.out.find('\r'), std::string::npos);
}

TEST(Cli, EmbedPair) {
  auto r = run("embed-pair " + data("demo_pair_a.json") + " " + data("demo_pair_a.json"));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("0-1,400,0,0,0\n"), std::string::npos);
  r = run("embed-pair " + data("radial_a.json") + " " + data("radial_b.json"));
  EXPECT_EQ(r.code, 0);
  r = run("embed-pair " + data("demo_pair_a.json") + " " + data("demo_pair_b.json") + " --threshold 0.001");
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(run("embed-pair /nonexistent.json " + data("radial_a.json")).code, 3);
}

TEST(Cli, SubconeMatchesFixture) {
  const auto r = run("subcone-demo");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, slurp(ASYMPTREE_FIXTURES "/subcone_demo.csv"));
}

TEST(Cli, OutFile) {
  const auto path = std::filesystem::temp_directory_path() / "asymptree_cli_out.csv";
  ASSERT_EQ(run("subcone-demo --out \"" + path.string() + "\"").code, 0);
  EXPECT_EQ(slurp(path), slurp(ASYMPTREE_FIXTURES "/subcone_demo.csv"));
  std::filesystem::remove(path);
  EXPECT_EQ(run("subcone-demo --out /nonexistent-dir/x.csv").code, 3);
}

TEST(Cli, Decompose) {
  EXPECT_EQ(run("decompose 0").out, "[]\n");
  EXPECT_EQ(run("decompose \"-2*u^1/2 + 3*u^0\"").out, "[(3, 0), (-2, 1/2)]\n");
}

}  // namespace
