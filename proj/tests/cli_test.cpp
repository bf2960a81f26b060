// Copyright 2026 The lieorbit Authors.
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
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, bool fault = false) {
  args.insert(args.begin(), "lieorbit");
  std::ostringstream out, err;
  const int code = lieorbit::cli::run(args, out, err, {fault});
  return {code, out.str(), err.str()};
}

std::size_t lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("lieorbit_cli_test_" + name);
}

int shell(const std::string& command) {
  const int status = std::system(command.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

TEST(Cli, EnumerateWritesEightRowCsv) {
  const auto path = temp_file("vs_f2.csv");
  const Result r = run({"enumerate", "--system", "S", "--prime", "2", "--out", path.string()});
  EXPECT_EQ(r.code, 0) << r.err;
  std::ifstream in(path);
  std::stringstream body;
  body << in.rdbuf();
  EXPECT_EQ(lines(body.str()), 9u);
  EXPECT_EQ(body.str().substr(0, body.str().find('\n')), "g121,g122,g123,g131,g132,g133,g231,g232,g233");
  std::filesystem::remove(path);
}

TEST(Cli, OrbitPrintsSevenVectors) {
  const Result r = run({"orbit", "--base", "eta", "--prime", "2"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(lines(r.out), 8u);
  EXPECT_EQ(lines(run({"orbit", "--base", "rho", "--prime", "3"}).out), 313u);
}

TEST(Cli, VerifyJsonIsDeterministic) {
  const std::vector<std::string> args{"verify", "--suite", "witness", "--trials", "30", "--seed", "5", "--format", "json"};
  const Result a = run(args);
  const Result b = run(args);
  EXPECT_EQ(a.code, 0) << a.out;
  EXPECT_EQ(a.out, b.out);
  const auto j = nlohmann::json::parse(a.out);
  EXPECT_EQ(j["suite"], "witness");
  EXPECT_EQ(j["seed"], 5);
  EXPECT_EQ(j["totals"]["fail"], 0);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({"verify", "--bogus"}).code, 2);
  EXPECT_EQ(run({"verify", "--primes", "4"}).code, 2);
  EXPECT_EQ(run({"verify", "--primes", "7"}).code, 2);
  EXPECT_EQ(run({"verify", "--trials", "0"}).code, 2);
  EXPECT_EQ(run({"verify", "--suite", "everything"}).code, 2);
  EXPECT_EQ(run({"enumerate", "--system", "S", "--prime", "6"}).code, 2);
  EXPECT_EQ(run({"enumerate", "--system", "S3", "--prime", "2"}).code, 2);
  EXPECT_EQ(run({"enumerate", "--system", "S", "--prime", "7"}).code, 2);
  EXPECT_EQ(run({"orbit", "--base", "sl2", "--prime", "2"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

// The flipped term is the X121 in X121 - X233, invisible in characteristic 2.
TEST(Cli, InjectedFaultExitsOne) {
  EXPECT_EQ(run({"verify", "--suite", "sets", "--primes", "2"}, true).code, 0);
  const Result r = run({"verify", "--suite", "sets", "--primes", "3"}, true);
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("counterexample"), std::string::npos);
}

TEST(CliBinary, ExitCodes) {
  const std::string tool = LIEORBIT_TOOL_PATH;
  const std::string faulty = LIEORBIT_FAULTY_PATH;
  EXPECT_EQ(shell(tool + " orbit --base eta --prime 2 > /dev/null"), 0);
  EXPECT_EQ(shell(tool + " verify --suite cover --trials 10 > /dev/null"), 0);
  EXPECT_EQ(shell(faulty + " verify --suite cover --trials 10 > /dev/null"), 1);
  EXPECT_EQ(shell(tool + " verify --unknown > /dev/null 2>&1"), 2);
  EXPECT_EQ(shell("LIEORBIT_BUDGET=100 " + tool + " orbit --base eta --prime 2 > /dev/null 2>&1"), 2);
  EXPECT_EQ(shell("LIEORBIT_BUDGET=oops " + tool + " orbit --base eta --prime 2 > /dev/null 2>&1"), 2);
  EXPECT_EQ(shell("LIEORBIT_BUDGET=1000 " + tool + " enumerate --system S --prime 2 > /dev/null"), 0);
}

}  // namespace
