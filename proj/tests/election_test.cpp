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

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace dire {
namespace {

using testing::AddGroup;
using testing::Idx;
using testing::MakeInstance;

TEST(PositionOf, DirectIndex) {
  const auto inst = MakeInstance(4, {{1, 2, 3, 4}, {2, 1, 4, 3}}, 2);
  const auto& e = inst.election;
  EXPECT_EQ(PositionOf(e, e.voters[0], "c1"), 1u);
  EXPECT_EQ(PositionOf(e, e.voters[0], "c3"), 3u);
  EXPECT_EQ(PositionOf(e, e.voters[1], "c4"), 3u);
}

TEST(PositionOf, UnknownCandidateIsNamed) {
  const auto inst = MakeInstance(3, {{1, 2, 3}}, 1);
  try {
    PositionOf(inst.election, inst.election.voters[0], "zed");
    FAIL() << "expected InvalidInput";
  } catch (const InvalidInput& e) {
    EXPECT_NE(std::string(e.what()).find("zed"), std::string::npos);
  }
}

TEST(PositionOf, TopKCountNeverExceedsK) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const auto inst = testing::RandomInstance(rng, {});
    const std::size_t k = inst.election.committee_size;
    const auto w = testing::RandomCommittee(rng, inst.election.num_candidates(), k);
    for (const auto& voter : inst.election.voters) {
      std::size_t top = 0;
      for (auto c : w) top += PositionOf(voter, c) <= k ? 1 : 0;
      EXPECT_LE(top, k);
    }
  }
}

TEST(Validate, CleanInstanceHasEmptyReport) {
  auto inst = MakeInstance(3, {{1, 2, 3}, {3, 2, 1}}, 2);
  AddGroup(inst, "A", "G1", {1, 2}, 1);
  AddGroup(inst, "A", "G2", {3}, 1);
  EXPECT_TRUE(Validate(inst).empty());
}

TEST(Validate, RankingMissingCandidate) {
  auto inst = MakeInstance(3, {{1, 2, 3}, {1, 2}}, 1);
  const auto report = Validate(inst);
  EXPECT_FALSE(report.valid());
  ASSERT_TRUE(report.HasRule("ranking not a permutation"));
  EXPECT_EQ(report.issues[0].subject, SubjectKind::kVoter);
  EXPECT_EQ(report.issues[0].index, 1u);
}

TEST(Validate, OverlappingGroupsInOneAttribute) {
  auto inst = MakeInstance(3, {{1, 2, 3}}, 1);
  AddGroup(inst, "A", "G1", {1, 2}, 1);
  AddGroup(inst, "A", "G2", {2, 3}, 1);
  EXPECT_TRUE(Validate(inst).HasRule("attribute not a partition"));
  // Overlap across attributes is fine.
  inst.groups.groups[1].attribute = "B";
  EXPECT_TRUE(Validate(inst).valid());
}

TEST(Validate, BoundAboveCommitteeSize) {
  auto inst = MakeInstance(4, {{1, 2, 3, 4}}, 2);
  AddGroup(inst, "A", "G", {1, 2, 3, 4}, 3);
  EXPECT_TRUE(Validate(inst).HasRule("bound exceeds min(k,|G|)"));
}

TEST(Validate, ZeroBoundsOnlyInRelaxedMode) {
  auto inst = MakeInstance(2, {{1, 2}}, 1);
  AddGroup(inst, "A", "G", {1, 2}, 0);
  EXPECT_TRUE(Validate(inst, BoundMode::kStrict).HasRule("zero bound in strict mode"));
  EXPECT_TRUE(Validate(inst, BoundMode::kRelaxed).empty());
}

TEST(Validate, TiebreakAndDuplicates) {
  auto inst = MakeInstance(3, {{1, 2, 3}, {1, 2, 3}}, 1);
  inst.election.tiebreak = Idx({1, 1, 2});
  inst.election.candidates[2] = "c1";
  inst.election.voters[1].id = "v1";
  const auto report = Validate(inst);
  EXPECT_TRUE(report.HasRule("tiebreak not a permutation"));
  EXPECT_TRUE(report.HasRule("duplicate candidate"));
  EXPECT_TRUE(report.HasRule("duplicate voter"));
}

TEST(Validate, CommitteeSizeAndRuleShape) {
  auto inst = MakeInstance(3, {{1, 2, 3}}, 4);
  inst.rule = ScoringRule::Vector({1, 2});
  const auto report = Validate(inst);
  EXPECT_TRUE(report.HasRule("committee size out of range"));
  EXPECT_TRUE(report.HasRule("rule length mismatch"));
  EXPECT_TRUE(report.HasRule("rule not non-increasing"));
  inst.rule = ScoringRule::Vector({2, 1, -1});
  EXPECT_TRUE(Validate(inst).HasRule("negative score"));
}

TEST(Validate, IdenticalAttributesAreOnlyAWarning) {
  auto inst = MakeInstance(2, {{1, 2}}, 1);
  AddGroup(inst, "A", "G", {1, 2}, 1);
  AddGroup(inst, "B", "G", {1, 2}, 1);
  const auto report = Validate(inst);
  EXPECT_TRUE(report.HasRule("duplicate attribute"));
  EXPECT_TRUE(report.valid());
}

TEST(Validate, PopulationChecks) {
  auto inst = MakeInstance(3, {{1, 2, 3}, {2, 3, 1}}, 2);
  inst.populations.populations.push_back({"X", "P", {0}, 3, std::nullopt});
  inst.populations.populations.push_back({"X", "Q", {0, 1}, 1, Idx({1})});
  inst.populations.populations.push_back({"Y", "E", {}, 1, std::nullopt});
  const auto report = Validate(inst);
  EXPECT_TRUE(report.HasRule("bound exceeds k"));
  EXPECT_TRUE(report.HasRule("given committee malformed"));
  EXPECT_TRUE(report.HasRule("empty population"));
  EXPECT_TRUE(report.HasRule("attribute not a partition"));
}

TEST(Validate, RandomInstancesAreValidInRelaxedMode) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const auto inst = testing::RandomInstance(rng, {});
    EXPECT_TRUE(Validate(inst, BoundMode::kRelaxed).valid());
  }
}

}  // namespace
}  // namespace dire
