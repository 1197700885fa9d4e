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

#include "reduction_checks.hpp"
#include "test_support.hpp"

namespace dire {
namespace {

TEST(ReduceOdd, K4MuThreeCounts) {
  const auto r = ReduceOdd(CompleteGraph(4), 3, 3, 1);
  EXPECT_EQ(r.num_dummies(), 192u);
  EXPECT_EQ(r.instance.election.num_candidates(), 196u);
  EXPECT_TRUE(r.b1_blocks.empty());
  EXPECT_EQ(r.b2_blocks.size(), 48u);
  EXPECT_EQ(r.instance.election.committee_size, 3u + 144u);
  EXPECT_EQ(r.instance.election.num_voters(), 72u);
  EXPECT_EQ(r.representation_bound, 145u);
  EXPECT_EQ(testing::CheckAll(r), "");
}

TEST(ReduceOdd, K4MuFiveCounts) {
  const auto r = ReduceOdd(CompleteGraph(4), 5, 2, 1);
  // 2*25*4 - 7*5*4 + 2*5*4*6 + 2*4*6 + 3*4
  EXPECT_EQ(r.num_dummies(), 200u - 140u + 240u + 48u + 12u);
  EXPECT_EQ(r.instance.election.num_candidates(), 364u);
  EXPECT_EQ(r.b1_blocks.size(), 8u);
  EXPECT_EQ(r.instance.election.committee_size, 2u + 280u);
  EXPECT_EQ(testing::CheckAll(r), "");
}

TEST(ReduceOdd, RandomGraphsSatisfyInvariants) {
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    const auto g = GenerateThreeRegular(8, seed);
    for (std::size_t mu : {3u, 5u}) {
      for (std::size_t pi : {1u, 3u}) {
        const auto r = ReduceOdd(g, mu, 4, seed, pi);
        EXPECT_EQ(testing::CheckAll(r), "") << "seed " << seed << " mu " << mu;
      }
    }
  }
}

TEST(ReduceOdd, DeterministicUnderSeed) {
  const auto g = GenerateThreeRegular(8, 5);
  EXPECT_EQ(ReduceOdd(g, 5, 3, 7).instance, ReduceOdd(g, 5, 3, 7).instance);
}

TEST(ReduceOdd, Preconditions) {
  const auto k4 = CompleteGraph(4);
  EXPECT_THROW(ReduceOdd(k4, 4, 3, 1), InvalidInput);
  EXPECT_THROW(ReduceOdd(k4, 1, 3, 1), InvalidInput);
  EXPECT_THROW(ReduceOdd(k4, 3, 0, 1), InvalidInput);
  EXPECT_THROW(ReduceOdd(k4, 3, 5, 1), InvalidInput);
  EXPECT_THROW(ReduceOdd(Graph{3, {{0, 1}, {1, 2}}}, 3, 1, 1), InvalidInput);
  EXPECT_THROW(ReduceEven(k4, 5, 3, 1), InvalidInput);
  EXPECT_THROW(ReduceEven(k4, 2, 3, 1), InvalidInput);
}

TEST(ReduceOdd, TopOfEveryRankingIsAnEdge) {
  const auto r = ReduceOdd(CompleteGraph(4), 3, 3, 1);
  const auto& e = r.instance.election;
  for (std::size_t v = 0; v < e.num_voters(); ++v) {
    const auto a = r.voter_kind[v];
    const auto edge = r.graph.edges[(a - 1) / 2];
    const auto lo = r.vertex_candidates[edge.first];
    const auto hi = r.vertex_candidates[edge.second];
    const auto& ranking = e.voters[v].ranking;
    if (a % 2 == 1) {
      EXPECT_EQ(ranking[0], lo);
      EXPECT_EQ(ranking[1], hi);
    } else {
      EXPECT_EQ(ranking[0], hi);
      EXPECT_EQ(ranking[1], lo);
    }
  }
}

TEST(ReduceEven, K4MuFourStructure) {
  const auto r = ReduceEven(CompleteGraph(4), 4, 3, 1);
  EXPECT_EQ(r.vertex_candidates.size(), 8u);
  EXPECT_EQ(r.num_dummies(), 2u * (128u - 112u + 192u + 48u + 12u));
  EXPECT_EQ(r.instance.election.committee_size, 2u * (3u + 64u + 192u - 48u));
  EXPECT_EQ(r.representation_bound, 2u * (1u + 64u - 48u + 192u));
  EXPECT_EQ(r.instance.election.num_voters(), 4u * 36u);
  EXPECT_EQ(testing::CheckAll(r), "");
}

TEST(ReduceEven, LargerMu) {
  const auto r = ReduceEven(GenerateThreeRegular(6, 2), 6, 2, 3, 2);
  EXPECT_EQ(testing::CheckAll(r), "");
}

std::vector<Committee> AllWitnesses(const ReductionInstance& r) {
  std::vector<Committee> out;
  for (const auto& cover : AllVertexCoversOfSize(r.graph, r.k)) {
    out.push_back(WitnessCommittee(r, cover));
  }
  return out;
}

TEST(WitnessCommittee, FeasibleForEveryCover) {
  for (std::size_t mu : {3u, 5u}) {
    const auto r = ReduceOdd(CompleteGraph(4), mu, 3, 1);
    const auto witnesses = AllWitnesses(r);
    ASSERT_EQ(witnesses.size(), 4u);
    for (const auto& w : witnesses) {
      EXPECT_EQ(w.size(), r.instance.election.committee_size);
      EXPECT_TRUE(IsDire(r.instance, w).feasible);
    }
  }
  const auto even = ReduceEven(CompleteGraph(4), 4, 3, 1);
  for (const auto& w : AllWitnesses(even)) {
    EXPECT_TRUE(IsDire(even.instance, w).feasible);
  }
}

TEST(WitnessCommittee, RandomGraphCovers) {
  const auto g = GenerateThreeRegular(8, 4);
  const std::size_t k = MinimumVertexCoverSize(g);
  const auto r = ReduceOdd(g, 3, k, 4);
  for (const auto& w : AllWitnesses(r)) {
    EXPECT_TRUE(IsDire(r.instance, w).feasible);
  }
}

TEST(WitnessCommittee, SwappingAForcedDummyBreaksABoundTwoGroup) {
  const auto r = ReduceOdd(CompleteGraph(4), 3, 3, 1);
  auto w = WitnessCommittee(r, std::vector<Vertex>{0, 1, 2});
  // Trade block 1's third selected member for its leftover: size is kept but
  // a bound-2 pair loses a member.
  const auto& block = r.b2_blocks.front();
  std::replace(w.begin(), w.end(), block[2], block[3]);
  const auto report = IsDire(r.instance, MakeCommittee(w));
  EXPECT_FALSE(report.feasible);
  bool bound_two = false;
  for (const auto& v : report.diversity_violations) bound_two |= v.required == 2;
  EXPECT_TRUE(bound_two);
}

TEST(WitnessCommittee, RejectsNonCovers) {
  const auto r = ReduceOdd(CompleteGraph(4), 3, 3, 1);
  EXPECT_THROW(WitnessCommittee(r, std::vector<Vertex>{0, 1}), InvalidInput);
  EXPECT_THROW(WitnessCommittee(r, std::vector<Vertex>{0, 0, 1}), InvalidInput);
}

TEST(VerifyEquivalence, K4AllK) {
  for (std::size_t k = 1; k <= 4; ++k) {
    const auto report = VerifyEquivalence(CompleteGraph(4), 3, k, 1);
    EXPECT_TRUE(report.agree) << "k=" << k;
    EXPECT_EQ(report.vc_exists, k >= 3);
    EXPECT_EQ(report.dire_exists, k >= 3);
    // At k = 1 every bound equals |W_P|, which over-fills the committee.
    EXPECT_EQ(report.forced, k == 1 ? 148u : 144u);
  }
}

TEST(ReduceEven, K4FeasibleExactlyWhenCoverExists) {
  const auto k4 = CompleteGraph(4);
  for (std::size_t k = 1; k <= 4; ++k) {
    const auto r = ReduceEven(k4, 4, k, 1);
    const auto result = Solve(r.instance);
    EXPECT_EQ(result.optimal(), k >= 3) << "k=" << k;
    if (!result.optimal()) continue;
    std::vector<Vertex> vertices;
    for (auto c : result.committee) {
      if (auto v = r.SourceVertex(c)) vertices.push_back(*v);
    }
    EXPECT_TRUE(IsVertexCover(k4, vertices));
  }
}

TEST(VerifyEquivalence, WitnessScoreBoundedBySolverOptimum) {
  const auto r = ReduceOdd(CompleteGraph(4), 3, 3, 1);
  const auto result = Solve(r.instance);
  ASSERT_TRUE(result.optimal());
  EXPECT_EQ(result.committee.size(), 147u);
  for (const auto& w : AllWitnesses(r)) {
    EXPECT_LE(CommitteeScore(r.instance, w), result.score);
  }
}

TEST(WriteProvenance, OneLinePerCandidate) {
  const auto r = ReduceOdd(CompleteGraph(4), 5, 3, 1);
  std::ostringstream out;
  WriteProvenance(out, r);
  const std::string text = out.str();
  EXPECT_NE(text.find("map c1 vertex:1\n"), std::string::npos);
  EXPECT_NE(text.find("map d1 B1:1:T1:1\n"), std::string::npos);
  EXPECT_NE(text.find(" B2:48:6\n"), std::string::npos);
  EXPECT_EQ(static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')),
            r.instance.election.num_candidates() + 1);
}

TEST(TransformAddTop, ForcesNewCandidate) {
  std::mt19937 rng(41);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    testing::RandomSpec spec;
    spec.max_m = 5;
    spec.max_k = 3;
    spec.vector_rule = trial % 2 == 0;
    const auto in = testing::RandomInstance(rng, spec);
    const auto out = TransformAddTop(in);
    const auto& e = out.election;
    ASSERT_EQ(e.num_candidates(), in.election.num_candidates() + 1);
    ASSERT_EQ(e.committee_size, in.election.committee_size + 1);
    const auto top = static_cast<CandidateIndex>(e.num_candidates() - 1);
    for (const auto& v : e.voters) EXPECT_EQ(v.ranking.front(), top);
    for (const auto& p : out.populations.populations) EXPECT_EQ(p.lower_bound, 2u);
    EXPECT_EQ(out.groups.Attributes().size(), in.groups.Attributes().size() + 1);
    EXPECT_TRUE(Validate(out, BoundMode::kRelaxed).valid());
    for (auto mask : testing::OracleFeasibleMasks(out)) {
      EXPECT_TRUE(mask >> top & 1);
      ++checked;
    }
  }
  EXPECT_GT(checked, 0);
}

TEST(TransformAddTop, FreshNameAvoidsClash) {
  auto in = testing::MakeInstance(2, {{1, 2}}, 1);
  in.election.candidates[0] = "a";
  EXPECT_EQ(TransformAddTop(in).election.candidates.back(), "a2");
}

TEST(TransformAddComplementAttribute, ForcesBothSides) {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 60; ++trial) {
    testing::RandomSpec spec;
    spec.max_m = 6;
    spec.min_m = 3;
    auto in = testing::RandomInstance(rng, spec);
    in.election.committee_size = std::max<std::size_t>(2, in.election.committee_size);
    for (auto& g : in.groups.groups) g.lower_bound = std::min(g.lower_bound, in.election.committee_size);
    const std::size_t m = in.election.num_candidates();
    const std::size_t cut = testing::Uniform(rng, 1, m - 1);
    std::vector<CandidateIndex> side;
    for (CandidateIndex c = 0; c < cut; ++c) side.push_back(c);
    const auto out = TransformAddComplementAttribute(in, side);
    EXPECT_EQ(out.groups.Attributes().size(), in.groups.Attributes().size() + 1);
    const auto side_mask = testing::MaskOf(side);
    const std::uint64_t all = (std::uint64_t{1} << m) - 1;
    for (auto mask : testing::OracleFeasibleMasks(out)) {
      EXPECT_NE(mask & side_mask, 0u);
      EXPECT_NE(mask & (all & ~side_mask), 0u);
    }
  }
}

TEST(TransformAddComplementAttribute, RejectsNonBipartitions) {
  const auto in = testing::MakeInstance(3, {{1, 2, 3}}, 1);
  EXPECT_THROW(TransformAddComplementAttribute(in, std::vector<CandidateIndex>{}), InvalidInput);
  EXPECT_THROW(TransformAddComplementAttribute(in, testing::Idx({1, 2, 3})), InvalidInput);
  EXPECT_THROW(TransformAddComplementAttribute(in, testing::Idx({1, 1})), InvalidInput);
  EXPECT_THROW(TransformAddComplementAttribute(in, testing::Idx({7})), InvalidInput);
}

TEST(TransformAddComplementAttribute, AfterAddTopGivesTwoNewAttributes) {
  const auto in = testing::MakeInstance(3, {{1, 2, 3}, {3, 1, 2}}, 1);
  const auto top = TransformAddTop(in);
  const auto both =
      TransformAddComplementAttribute(top, testing::Idx({1, 2, 3}));
  EXPECT_EQ(both.groups.Attributes().size(), 2u);
  EXPECT_TRUE(Validate(both).valid());
}

}  // namespace
}  // namespace dire
