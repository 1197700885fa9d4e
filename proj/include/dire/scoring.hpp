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

// Separable committee scoring: a committee's score is the sum of its members'
// positional scores. All scores are exact integers.

#pragma once

#include <algorithm>
#include <numeric>
#include <span>
#include <string_view>
#include <vector>

#include "dire/election.hpp"

namespace dire {

// Positional score of every candidate, summed over the given voters.
inline std::vector<Score> PositionalScores(const Election& election,
                                           std::span<const Score> weights,
                                           std::span<const VoterIndex> voters) {
  const std::size_t m = election.num_candidates();
  std::vector<Score> scores(m, 0);
  for (VoterIndex v : voters) {
    const auto& ranking = election.voters.at(v).ranking;
    const std::size_t depth = std::min(ranking.size(), weights.size());
    for (std::size_t p = 0; p < depth; ++p) {
      if (ranking[p] < m) scores[ranking[p]] += weights[p];
    }
  }
  return scores;
}

inline std::vector<VoterIndex> AllVoters(const Election& election) {
  std::vector<VoterIndex> all(election.num_voters());
  std::iota(all.begin(), all.end(), VoterIndex{0});
  return all;
}

inline std::vector<Score> CandidateScores(const DireInstance& instance) {
  const auto weights =
      instance.rule.WeightsFor(instance.election.num_candidates());
  return PositionalScores(instance.election, weights,
                          AllVoters(instance.election));
}

inline Score CandidateScore(const DireInstance& instance,
                            CandidateIndex candidate) {
  if (candidate >= instance.election.num_candidates()) {
    throw InvalidInput("unknown candidate #" + std::to_string(candidate));
  }
  return CandidateScores(instance)[candidate];
}

inline Score CandidateScore(const DireInstance& instance,
                            std::string_view name) {
  auto index = instance.election.FindCandidate(name);
  if (!index) throw InvalidInput("unknown candidate '" + std::string(name) + "'");
  return CandidateScore(instance, *index);
}

inline Score CommitteeScore(std::span<const Score> scores,
                            std::span<const CandidateIndex> committee) {
  Score total = 0;
  for (CandidateIndex c : committee) {
    if (c >= scores.size()) {
      throw InvalidInput("unknown candidate #" + std::to_string(c));
    }
    total += scores[c];
  }
  return total;
}

inline Score CommitteeScore(const DireInstance& instance,
                            std::span<const CandidateIndex> committee) {
  return CommitteeScore(CandidateScores(instance), committee);
}

// Candidates ordered by (score desc, tie-break priority asc).
inline std::vector<CandidateIndex> RankByScore(
    std::span<const Score> scores, const std::vector<std::size_t>& priority) {
  std::vector<CandidateIndex> order(scores.size());
  std::iota(order.begin(), order.end(), CandidateIndex{0});
  std::sort(order.begin(), order.end(),
            [&](CandidateIndex a, CandidateIndex b) {
              if (scores[a] != scores[b]) return scores[a] > scores[b];
              return priority[a] < priority[b];
            });
  return order;
}

inline Committee TopK(std::span<const Score> scores,
                      const std::vector<std::size_t>& priority, std::size_t k) {
  auto order = RankByScore(scores, priority);
  order.resize(std::min(k, order.size()));
  return MakeCommittee(std::move(order));
}

// The k candidates with the highest Borda scores, regardless of the
// instance's own rule.
inline Committee KBorda(const DireInstance& instance) {
  const Election& e = instance.election;
  const auto weights = ScoringRule::Borda().WeightsFor(e.num_candidates());
  const auto scores = PositionalScores(e, weights, AllVoters(e));
  return TopK(scores, e.PriorityRanks(), e.committee_size);
}

// Scores under the instance rule restricted to one population's voters.
inline std::vector<Score> PopulationScores(const DireInstance& instance,
                                           std::size_t population) {
  const auto& pop = instance.populations.populations.at(population);
  const auto weights =
      instance.rule.WeightsFor(instance.election.num_candidates());
  return PositionalScores(instance.election, weights, pop.members);
}

// The population's collective order: (population score desc, priority asc).
inline std::vector<CandidateIndex> PopulationRanking(
    const DireInstance& instance, std::size_t population) {
  return RankByScore(PopulationScores(instance, population),
                     instance.election.PriorityRanks());
}

// W_P derived from the population's own voters under the instance rule.
inline Committee PopulationWinningCommittee(const DireInstance& instance,
                                            std::size_t population) {
  const auto& pop = instance.populations.populations.at(population);
  if (pop.members.empty()) {
    throw InvalidInput("population '" + pop.label() +
                       "' has no voters to derive a winning committee from");
  }
  return TopK(PopulationScores(instance, population),
              instance.election.PriorityRanks(),
              instance.election.committee_size);
}

}  // namespace dire
