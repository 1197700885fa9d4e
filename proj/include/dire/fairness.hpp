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

// Envy-freeness audits of a committee from the voter populations' side.
//
// Each population P ranks its own winning committee W_P (by the population's
// aggregate score, ties by the global priority order). A member at rank r is
// worth m - r to P; candidates outside W_P are worth nothing.
//
//   FEC  favorite envy:  (best rank of a selected W_P member) - 1
//   UEC  utility:        U_P  = sum of worth over selected candidates
//   WEC  weighted:       WU_P = U_P / sum_{i=1..l^R_P} (m - i)
//
// Every comparison is exact; weighted utilities are rationals.

#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "dire/constraints.hpp"
#include "dire/scoring.hpp"
#include "dire/solver.hpp"

namespace dire {

using Rational = boost::rational<std::int64_t>;

inline std::string ToString(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

// Members of W_P in the population's preference order.
inline std::vector<CandidateIndex> RankedPopulationCommittee(
    const DireInstance& instance, std::size_t population) {
  const auto& pop = instance.populations.populations.at(population);
  const Committee wp = pop.given_committee
                           ? MakeCommittee(*pop.given_committee)
                           : PopulationWinningCommittee(instance, population);
  std::vector<CandidateIndex> ranked;
  for (CandidateIndex c : PopulationRanking(instance, population)) {
    if (std::binary_search(wp.begin(), wp.end(), c)) ranked.push_back(c);
  }
  return ranked;
}

// Worth of every candidate to one population.
inline std::vector<Score> WorthWithinPopulationCommittee(
    const DireInstance& instance, std::size_t population) {
  const std::size_t m = instance.election.num_candidates();
  std::vector<Score> worth(m, 0);
  const auto ranked = RankedPopulationCommittee(instance, population);
  for (std::size_t r = 0; r < ranked.size(); ++r) {
    worth[ranked[r]] = static_cast<Score>(m) - static_cast<Score>(r + 1);
  }
  return worth;
}

inline Score BordaWithinPopulationCommittee(const DireInstance& instance,
                                            std::size_t population,
                                            CandidateIndex candidate) {
  if (candidate >= instance.election.num_candidates()) {
    throw InvalidInput("unknown candidate #" + std::to_string(candidate));
  }
  return WorthWithinPopulationCommittee(instance, population)[candidate];
}

inline Score Utility(const DireInstance& instance, std::size_t population,
                     std::span<const CandidateIndex> committee) {
  return CommitteeScore(WorthWithinPopulationCommittee(instance, population),
                        committee);
}

inline Rational WeightedUtility(const DireInstance& instance,
                                std::size_t population,
                                std::span<const CandidateIndex> committee) {
  const auto& pop = instance.populations.populations.at(population);
  if (pop.lower_bound == 0) {
    throw InvalidInput("weighted utility undefined for zero bound (population '" +
                       pop.label() + "')");
  }
  const auto m = static_cast<std::int64_t>(instance.election.num_candidates());
  std::int64_t denominator = 0;
  for (std::int64_t i = 1; i <= static_cast<std::int64_t>(pop.lower_bound); ++i) {
    denominator += m - i;
  }
  if (denominator <= 0) {
    throw InvalidInput("weighted utility undefined: bound " +
                       std::to_string(pop.lower_bound) + " leaves no mass for m = " +
                       std::to_string(m));
  }
  return Rational(Utility(instance, population, committee), denominator);
}

// Favorite envy: best rank among selected W_P members minus one, or nullopt
// ("unbounded") when the committee misses W_P entirely.
inline std::optional<std::size_t> FavoriteEnvy(
    const DireInstance& instance, std::size_t population,
    std::span<const CandidateIndex> committee) {
  const auto ranked = RankedPopulationCommittee(instance, population);
  for (std::size_t r = 0; r < ranked.size(); ++r) {
    if (std::find(committee.begin(), committee.end(), ranked[r]) !=
        committee.end()) {
      return r;
    }
  }
  return std::nullopt;
}

namespace internal {

inline void RequirePopulations(const DireInstance& instance) {
  if (instance.populations.populations.empty()) {
    throw InvalidInput("fairness criteria need at least one population");
  }
}

}  // namespace internal

// Largest favorite envy over populations; nullopt if any is unbounded.
inline std::optional<std::size_t> MaxFavoriteEnvy(
    const DireInstance& instance, std::span<const CandidateIndex> committee) {
  internal::RequirePopulations(instance);
  std::size_t worst = 0;
  for (std::size_t p = 0; p < instance.populations.populations.size(); ++p) {
    auto envy = FavoriteEnvy(instance, p, committee);
    if (!envy) return std::nullopt;
    worst = std::max(worst, *envy);
  }
  return worst;
}

inline bool IsFecUpTo(const DireInstance& instance,
                      std::span<const CandidateIndex> committee,
                      std::int64_t x) {
  if (x < 0) throw InvalidInput("FEC relaxation x must be non-negative");
  auto worst = MaxFavoriteEnvy(instance, committee);
  return worst && static_cast<std::int64_t>(*worst) <= x;
}

inline bool IsFec(const DireInstance& instance,
                  std::span<const CandidateIndex> committee) {
  return IsFecUpTo(instance, committee, 0);
}

inline Score UecSpread(const DireInstance& instance,
                       std::span<const CandidateIndex> committee) {
  internal::RequirePopulations(instance);
  Score lo = std::numeric_limits<Score>::max();
  Score hi = std::numeric_limits<Score>::min();
  for (std::size_t p = 0; p < instance.populations.populations.size(); ++p) {
    const Score u = Utility(instance, p, committee);
    lo = std::min(lo, u);
    hi = std::max(hi, u);
  }
  return hi - lo;
}

inline Score MaxUecThreshold(const DireInstance& instance) {
  const auto m = static_cast<Score>(instance.election.num_candidates());
  return (m - 1) * m / 2;
}

inline bool IsUecUpTo(const DireInstance& instance,
                      std::span<const CandidateIndex> committee, Score eta) {
  if (eta < 0 || eta > MaxUecThreshold(instance)) {
    throw InvalidInput("UEC relaxation eta must lie in [0, " +
                       std::to_string(MaxUecThreshold(instance)) + "]");
  }
  return UecSpread(instance, committee) <= eta;
}

inline bool IsUec(const DireInstance& instance,
                  std::span<const CandidateIndex> committee) {
  return UecSpread(instance, committee) == 0;
}

inline Rational WecSpread(const DireInstance& instance,
                          std::span<const CandidateIndex> committee) {
  internal::RequirePopulations(instance);
  std::optional<Rational> lo, hi;
  for (std::size_t p = 0; p < instance.populations.populations.size(); ++p) {
    const Rational wu = WeightedUtility(instance, p, committee);
    if (!lo || wu < *lo) lo = wu;
    if (!hi || wu > *hi) hi = wu;
  }
  return *hi - *lo;
}

inline bool IsWecUpTo(const DireInstance& instance,
                      std::span<const CandidateIndex> committee,
                      const Rational& zeta) {
  if (zeta < Rational(0) || zeta > Rational(1)) {
    throw InvalidInput("WEC relaxation zeta must lie in [0, 1]");
  }
  return WecSpread(instance, committee) <= zeta;
}

inline bool IsWec(const DireInstance& instance,
                  std::span<const CandidateIndex> committee) {
  return WecSpread(instance, committee) == Rational(0);
}

struct PopulationUtility {
  std::size_t population = 0;
  Score utility = 0;
  std::optional<Rational> weighted_utility;  // absent when l^R_P = 0
  std::optional<std::size_t> favorite_rank;  // 1-based; absent if none selected
};

struct FairnessReport {
  std::vector<PopulationUtility> populations;
  Score uec_spread = 0;
  std::optional<Rational> wec_spread;   // absent if some l^R_P = 0
  std::optional<std::size_t> max_envy;  // absent when unbounded
  bool is_fec = false;
  bool is_uec = false;
  std::optional<bool> is_wec;
};

inline FairnessReport AuditFairness(const DireInstance& instance,
                                    std::span<const CandidateIndex> committee) {
  internal::RequirePopulations(instance);
  if (MakeCommittee({committee.begin(), committee.end()}).size() !=
      instance.election.committee_size) {
    throw InvalidInput("committee must have exactly " +
                       std::to_string(instance.election.committee_size) +
                       " distinct members");
  }
  FairnessReport report;
  bool weighted_defined = true;
  for (std::size_t p = 0; p < instance.populations.populations.size(); ++p) {
    PopulationUtility row;
    row.population = p;
    row.utility = Utility(instance, p, committee);
    if (instance.populations.populations[p].lower_bound > 0) {
      row.weighted_utility = WeightedUtility(instance, p, committee);
    } else {
      weighted_defined = false;
    }
    if (auto envy = FavoriteEnvy(instance, p, committee)) {
      row.favorite_rank = *envy + 1;
    }
    report.populations.push_back(row);
  }
  report.uec_spread = UecSpread(instance, committee);
  report.is_uec = report.uec_spread == 0;
  report.max_envy = MaxFavoriteEnvy(instance, committee);
  report.is_fec = report.max_envy && *report.max_envy == 0;
  if (weighted_defined) {
    report.wec_spread = WecSpread(instance, committee);
    report.is_wec = *report.wec_spread == Rational(0);
  }
  return report;
}

enum class FairnessCriterion { kFec, kUec, kWec };

// Among all DiRe committees, the one with the smallest envy under
// `criterion`; ties go to the higher score, then committee tie-break order.
// Returns nullopt when no DiRe committee exists.
inline std::optional<ScoredCommittee> OptimalFairDire(
    const DireInstance& instance, FairnessCriterion criterion,
    const SolveOptions& options = {}) {
  internal::RequirePopulations(instance);
  const auto feasible = EnumerateDire(instance, 0, options);
  std::optional<ScoredCommittee> best;
  // Envy keys: FEC uses max envy (unbounded = infinity), UEC the spread, WEC
  // the rational spread.
  std::optional<Rational> best_key;
  bool best_unbounded = false;
  for (const auto& candidate : feasible) {
    Rational key;
    bool unbounded = false;
    switch (criterion) {
      case FairnessCriterion::kFec: {
        auto envy = MaxFavoriteEnvy(instance, candidate.committee);
        unbounded = !envy;
        key = envy ? Rational(static_cast<std::int64_t>(*envy)) : Rational(0);
        break;
      }
      case FairnessCriterion::kUec:
        key = Rational(UecSpread(instance, candidate.committee));
        break;
      case FairnessCriterion::kWec:
        key = WecSpread(instance, candidate.committee);
        break;
    }
    // `feasible` is already in (score desc, tie-break) order, so only a
    // strictly smaller envy replaces the incumbent.
    const bool better =
        !best || (best_unbounded && !unbounded) ||
        (!best_unbounded && !unbounded && key < *best_key);
    if (better) {
      best = candidate;
      best_key = key;
      best_unbounded = unbounded;
    }
  }
  return best;
}

}  // namespace dire
