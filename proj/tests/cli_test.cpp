// Copyright 2026 The dire Authors.
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

// Drives the dire_cli binary end to end.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace dire {
namespace {

struct Run {
  int code = -1;
  std::string out;

  // First value of a `key value` record.
  std::string Get(const std::string& key) const {
    std::istringstream in(out);
    for (std::string line; std::getline(in, line);) {
      if (line.rfind(key + " ", 0) == 0) return line.substr(key.size() + 1);
    }
    return "<missing " + key + ">";
  }
};

Run Cli(const std::string& args, const std::string& env = "") {
  const std::string cmd =
      env + " " + std::string(DIRE_CLI_PATH) + " " + args + " 2>/dev/null";
  Run run;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return run;
  std::array<char, 4096> buf;
  while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) {
    run.out.append(buf.data(), got);
  }
  const int status = pclose(pipe);
  run.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return run;
}

std::string Data(const std::string& name) {
  return std::string(DIRE_TEST_DATA) + "/" + name;
}

std::string TempPath(const std::string& name) {
  return (std::filesystem::temp_directory_path() /
          ("dire_cli_test_" + std::to_string(::getpid()) + "_" + name))
      .string();
}

TEST(CliValidate, ExitCodes) {
  EXPECT_EQ(Cli("validate " + Data("small.elect")).code, 0);
  const auto dup = Cli("validate " + Data("dup_ranking.elect"));
  EXPECT_EQ(dup.code, 3);
  EXPECT_NE(dup.out.find("line 6 ranking not a permutation"), std::string::npos)
      << dup.out;
  EXPECT_EQ(Cli("validate " + Data("bad_header.elect")).code, 2);
  EXPECT_EQ(Cli("validate " + Data("no_such_file.elect")).code, 3);
  EXPECT_EQ(Cli("validate --mode sloppy " + Data("small.elect")).code, 2);
  EXPECT_EQ(Cli("frobnicate").code, 2);
  EXPECT_EQ(Cli("").code, 2);
}

TEST(CliSolve, UnconstrainedIsKBorda) {
  const auto run = Cli("solve " + Data("small.elect"));
  EXPECT_EQ(run.code, 0);
  EXPECT_EQ(run.Get("status"), "optimal");
  EXPECT_EQ(run.Get("committee"), "c1 c2");
  EXPECT_EQ(run.Get("score"), "11");
}

TEST(CliSolve, OracleAgrees) {
  for (const char* file : {"small.elect", "constrained.elect", "two_states.elect"}) {
    const auto fast = Cli(std::string("solve ") + Data(file));
    const auto slow = Cli(std::string("solve --oracle ") + Data(file));
    EXPECT_EQ(fast.code, slow.code);
    EXPECT_EQ(fast.Get("committee"), slow.Get("committee"));
    EXPECT_EQ(fast.Get("score"), slow.Get("score"));
  }
}

TEST(CliSolve, InfeasibleAndCap) {
  const auto run = Cli("solve " + Data("contradictory.elect"));
  EXPECT_EQ(run.code, 1);
  EXPECT_EQ(run.Get("status"), "infeasible");
  EXPECT_EQ(Cli("solve --oracle " + Data("small.elect"), "DIRE_ORACLE_CAP=3").code, 4);
  EXPECT_EQ(Cli("solve --oracle " + Data("small.elect"), "DIRE_ORACLE_CAP=6").code, 0);
}

TEST(CliScore, Scores) {
  const auto run = Cli("score " + Data("small.elect") + " --committee c3 c4");
  EXPECT_EQ(run.code, 0);
  EXPECT_EQ(run.Get("candidate c2"), "6");
  EXPECT_EQ(run.Get("k_borda"), "c1 c2");
  EXPECT_EQ(run.Get("committee_score"), "7");
  EXPECT_EQ(Cli("score " + Data("small.elect") + " --committee zz").code, 3);
}

TEST(CliFairness, TwoStatesExample) {
  const auto run = Cli("fairness " + Data("two_states.elect") +
                       " --committee c1 c6 c3 c8");
  EXPECT_EQ(run.code, 0);
  EXPECT_EQ(run.Get("population state/IL"),
            "utility 10 weighted 10/13 favorite_rank 2");
  EXPECT_EQ(run.Get("population state/CA"),
            "utility 12 weighted 12/13 favorite_rank 1");
  EXPECT_EQ(run.Get("wec_spread"), "2/13");
  EXPECT_EQ(run.Get("min_fec_x"), "1");
  EXPECT_EQ(run.Get("is_wec"), "false");
}

TEST(CliFairness, SpreadsAndUnbounded) {
  const auto same = Cli("fairness " + Data("identical.elect") + " --committee c1 c2");
  EXPECT_EQ(same.Get("uec_spread"), "0");
  EXPECT_EQ(same.Get("wec_spread"), "0/1");
  EXPECT_EQ(same.Get("is_fec"), "true");
  const auto miss = Cli("fairness " + Data("two_states.elect") +
                        " --committee c1 c3 c4 c7");
  EXPECT_EQ(miss.Get("min_fec_x"), "unbounded");
  EXPECT_EQ(Cli("fairness " + Data("two_states.elect") + " --committee c1").code, 3);
  EXPECT_EQ(Cli("fairness " + Data("two_states.elect")).code, 2);
  EXPECT_EQ(Cli("fairness " + Data("two_states.elect") +
                " --committee c1 --optimal fec").code, 2);
}

TEST(CliFairness, Optimal) {
  const auto run = Cli("fairness " + Data("two_states.elect") + " --optimal wec");
  EXPECT_EQ(run.code, 0);
  EXPECT_EQ(run.Get("wec_spread"), "0/1");
  const auto bad = Cli("fairness " + Data("contradictory.elect") + " --optimal uec");
  EXPECT_EQ(bad.code, 3);  // no populations
}

TEST(CliReduce, WritesElectionAndMap) {
  const auto out = TempPath("k4.elect");
  const auto run = Cli("reduce " + Data("k4.graph") + " --mu 3 --k 3 --out " + out);
  ASSERT_EQ(run.code, 0) << run.out;
  EXPECT_EQ(run.Get("candidates"), "196");
  EXPECT_EQ(run.Get("committee_size"), "147");
  const auto r = ReduceOdd(CompleteGraph(4), 3, 3, 1);
  std::ifstream in(out);
  EXPECT_EQ(ParseElection(in), r.instance);
  std::ifstream map(out + ".map");
  std::stringstream text;
  text << map.rdbuf();
  EXPECT_NE(text.str().find("map d4 B2:1:4"), std::string::npos);
  EXPECT_EQ(Cli("validate --mode relaxed " + out).code, 0);
  std::filesystem::remove(out);
  std::filesystem::remove(out + ".map");

  EXPECT_EQ(Cli("reduce " + Data("path.graph") + " --mu 3 --k 1 --out " + out).code, 3);
  EXPECT_EQ(Cli("reduce " + Data("k4.graph") + " --mu 2 --k 1 --out " + out).code, 3);
  const auto even = Cli("reduce " + Data("k4.graph") + " --mu 4 --k 3 --out " + out);
  EXPECT_EQ(even.code, 0);
  EXPECT_EQ(even.Get("construction"), "even");
  std::filesystem::remove(out);
  std::filesystem::remove(out + ".map");
}

TEST(CliVerify, K4) {
  const auto yes = Cli("verify " + Data("k4.graph") + " --mu 3 --k 3");
  EXPECT_EQ(yes.code, 0);
  EXPECT_EQ(yes.Get("vc_exists"), "true");
  EXPECT_EQ(yes.Get("dire_exists"), "true");
  EXPECT_EQ(yes.Get("agree"), "true");
  const auto no = Cli("verify " + Data("k4.graph") + " --mu 3 --k 2");
  EXPECT_EQ(no.code, 0);
  EXPECT_EQ(no.Get("vc_exists"), "false");
  EXPECT_EQ(no.Get("agree"), "true");
  EXPECT_EQ(Cli("verify " + Data("path.graph") + " --mu 3 --k 1").code, 3);
}

TEST(CliGraph, K4AndDeterminism) {
  const auto k4 = Cli("graph --vertices 4 --seed 9");
  EXPECT_EQ(k4.code, 0);
  EXPECT_EQ(ParseGraph(k4.out), CompleteGraph(4));
  EXPECT_EQ(Cli("graph --vertices 10 --seed 3").out,
            Cli("graph --vertices 10 --seed 3").out);
  EXPECT_EQ(Cli("graph --vertices 5").code, 3);
}

TEST(CliVc, Petersen) {
  const auto none = Cli("vc " + Data("petersen.graph") + " --k 5");
  EXPECT_EQ(none.code, 1);
  EXPECT_EQ(none.Get("cover"), "none");
  const auto six = Cli("vc " + Data("petersen.graph") + " --k 6");
  EXPECT_EQ(six.code, 0);
  EXPECT_EQ(six.Get("size"), "6");
  EXPECT_EQ(six.Get("verified"), "true");
  std::vector<Vertex> cover;
  std::istringstream in(six.Get("cover"));
  for (Vertex v; in >> v;) cover.push_back(v - 1);
  EXPECT_TRUE(IsVertexCover(testing::Petersen(), cover));
  const auto big = TempPath("big.graph");
  EXPECT_EQ(Cli("graph --vertices 30 --out " + big).code, 0);
  EXPECT_EQ(Cli("vc " + big + " --k 10").code, 4);
  std::filesystem::remove(big);
}

}  // namespace
}  // namespace dire
