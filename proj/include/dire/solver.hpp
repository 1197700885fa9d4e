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

// Exact winner determination for constrained committees: find the size-k
// committee of maximum separable score among those meeting every diversity
// and representation bound.
//
// Two independent routes are provided. SolveBrute enumerates all k-subsets
// and serves as the oracle; Solve runs unit propagation followed by a
// depth-first branch-and-bound. Both break score ties the same way: the
// winning committee is the one whose members, listed in tie-break priority
// order, are lexicographically smallest.

#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "dire/constraints.hpp"
#include "dire/scoring.hpp"

namespace dire {

inline constexpr std::uint64_t kDefaultOracleCap = 100'000'000;

// DIRE_ORACLE_CAP, when set to a positive integer, replaces `fallback`.
inline std::uint64_t OracleCapFromEnv(
    std::uint64_t fallback = kDefaultOracleCap) {
  const char* raw = std::getenv("DIRE_ORACLE_CAP");
  if (raw == nullptr || *raw == '\0') return fallback;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0' || value == 0) return fallback;
  return value;
}

struct SolveOptions {
  std::uint64_t oracle_cap = kDefaultOracleCap;
};

enum class SolveStatus { kOptimal, kInfeasible };

inline const char* ToString(SolveStatus status) {
  return status == SolveStatus::kOptimal ? "optimal" : "infeasible";
}

struct SolveResult {
  SolveStatus status = SolveStatus::kInfeasible;
  Committee committee;
  Score score = 0;
  std::uint64_t nodes_explored = 0;
  std::chrono::nanoseconds elapsed{0};

  bool optimal() const { return status == SolveStatus::kOptimal; }
};

struct ScoredCommittee {
  Committee committee;
  Score score = 0;

  bool operator==(const ScoredCommittee&) const = default;
};

// C(n, k), saturated at cap + 1.
inline std::uint64_t BinomialCapped(std::uint64_t n, std::uint64_t k,
                                    std::uint64_t cap) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  // Multiplicative formula in 128-bit keeps every intermediate exact.
  unsigned __int128 value = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    value = value * (n - k + i) / i;
    if (value > cap) return cap + 1;
  }
  return static_cast<std::uint64_t>(value);
}

// True when `a` precedes `b` in committee tie-break order: compare members
// sorted by priority, lexicographically.
inline bool CommitteePrecedes(const Committee& a, const Committee& b,
                              const std::vector<std::size_t>& priority) {
  auto key = [&](const Committee& w) {
    std::vector<std::size_t> ranks;
    ranks.reserve(w.size());
    for (CandidateIndex c : w) ranks.push_back(priority[c]);
    std::sort(ranks.begin(), ranks.end());
    return ranks;
  };
  return key(a) < key(b);
}

namespace internal {

inline std::vector<CandidateIndex> PriorityOrder(
    const std::vector<std::size_t>& priority) {
  std::vector<CandidateIndex> order(priority.size());
  std::iota(order.begin(), order.end(), CandidateIndex{0});
  std::sort(order.begin(), order.end(), [&](CandidateIndex a, CandidateIndex b) {
    return priority[a] < priority[b];
  });
  return order;
}

// Visits every k-subset of `order` in lexicographic order of positions.
// The visitor returns false to stop early.
inline void ForEachSubset(
    const std::vector<CandidateIndex>& order, std::size_t k,
    const std::function<bool(const std::vector<CandidateIndex>&)>& visit) {
  const std::size_t m = order.size();
  if (k > m) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::vector<CandidateIndex> subset(k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) subset[i] = order[idx[i]];
    if (!visit(subset)) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == m - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

inline void CheckOracleCap(const DireInstance& instance,
                           const SolveOptions& options) {
  const auto& e = instance.election;
  const std::uint64_t count =
      BinomialCapped(e.num_candidates(), e.committee_size, options.oracle_cap);
  if (count > options.oracle_cap) {
    throw CapExceeded("C(" + std::to_string(e.num_candidates()) + ", " +
                      std::to_string(e.committee_size) +
                      ") exceeds the enumeration cap of " +
                      std::to_string(options.oracle_cap) +
                      "; too large for oracle");
  }
}

}  // namespace internal

// All feasible committees sorted by (score desc, committee tie-break order).
// `limit` == 0 means no limit.
inline std::vector<ScoredCommittee> EnumerateDire(
    const DireInstance& instance, std::size_t limit = 0,
    const SolveOptions& options = {}) {
  internal::CheckOracleCap(instance, options);
  const auto scores = CandidateScores(instance);
  const auto constraints = ConstraintSet::From(instance);
  const auto order =
      internal::PriorityOrder(instance.election.PriorityRanks());
  std::vector<ScoredCommittee> out;
  std::vector<char> in(order.size(), 0);
  internal::ForEachSubset(
      order, instance.election.committee_size,
      [&](const std::vector<CandidateIndex>& subset) {
        for (CandidateIndex c : subset) in[c] = 1;
        if (constraints.Satisfied(in)) {
          out.push_back({MakeCommittee(subset), CommitteeScore(scores, subset)});
        }
        for (CandidateIndex c : subset) in[c] = 0;
        return true;
      });
  // Subsets were produced in tie-break order; a stable sort keeps it.
  std::stable_sort(out.begin(), out.end(),
                   [](const ScoredCommittee& a, const ScoredCommittee& b) {
                     return a.score > b.score;
                   });
  if (limit != 0 && out.size() > limit) out.resize(limit);
  return out;
}

inline SolveResult SolveBrute(const DireInstance& instance,
                              const SolveOptions& options = {}) {
  const auto start = std::chrono::steady_clock::now();
  internal::CheckOracleCap(instance, options);
  const auto scores = CandidateScores(instance);
  const auto constraints = ConstraintSet::From(instance);
  const auto order =
      internal::PriorityOrder(instance.election.PriorityRanks());
  SolveResult result;
  std::vector<char> in(order.size(), 0);
  internal::ForEachSubset(
      order, instance.election.committee_size,
      [&](const std::vector<CandidateIndex>& subset) {
        ++result.nodes_explored;
        for (CandidateIndex c : subset) in[c] = 1;
        if (constraints.Satisfied(in)) {
          const Score s = CommitteeScore(scores, subset);
          // Strict improvement keeps the earliest subset among equals.
          if (!result.optimal() || s > result.score) {
            result.status = SolveStatus::kOptimal;
            result.score = s;
            result.committee = MakeCommittee(subset);
          }
        }
        for (CandidateIndex c : subset) in[c] = 0;
        return true;
      });
  result.elapsed = std::chrono::steady_clock::now() - start;
  return result;
}

struct Propagation {
  bool infeasible = false;
  Committee forced;
};

// Root-level unit propagation: a bound equal to the size of its member set
// forces every member in; a bound above it, or more forced members than
// seats, proves infeasibility.
inline Propagation Propagate(const ConstraintSet& constraints) {
  Propagation out;
  std::vector<char> forced(constraints.num_candidates, 0);
  auto absorb = [&](const std::vector<CandidateIndex>& members,
                    std::size_t bound) {
    if (bound > members.size()) {
      out.infeasible = true;
    } else if (bound > 0 && bound == members.size()) {
      for (CandidateIndex c : members) forced[c] = 1;
    }
  };
  for (std::size_t g = 0; g < constraints.group_members.size(); ++g) {
    absorb(constraints.group_members[g], constraints.group_bounds[g]);
  }
  for (std::size_t p = 0; p < constraints.population_committees.size(); ++p) {
    absorb(constraints.population_committees[p],
           constraints.population_bounds[p]);
  }
  for (std::size_t c = 0; c < forced.size(); ++c) {
    if (forced[c]) out.forced.push_back(static_cast<CandidateIndex>(c));
  }
  if (out.forced.size() > constraints.committee_size) out.infeasible = true;
  return out;
}

inline Propagation Propagate(const DireInstance& instance) {
  return Propagate(ConstraintSet::From(instance));
}

namespace internal {

// Depth-first branch-and-bound over the candidates left free after
// propagation. Each constraint (group or population committee) is tracked by
// how many members are in and how many are still available (in or
// undecided).
class BranchAndBound {
 public:
  BranchAndBound(const ConstraintSet& constraints,
                 const std::vector<std::vector<std::size_t>>& families,
                 std::vector<Score> scores, std::vector<std::size_t> priority)
      : scores_(std::move(scores)),
        priority_(std::move(priority)),
        families_(families),
        k_(constraints.committee_size),
        state_(constraints.num_candidates, kFree),
        touching_(constraints.num_candidates) {
    for (std::size_t g = 0; g < constraints.group_members.size(); ++g) {
      AddConstraint(constraints.group_members[g], constraints.group_bounds[g]);
    }
    for (std::size_t p = 0; p < constraints.population_committees.size();
         ++p) {
      AddConstraint(constraints.population_committees[p],
                    constraints.population_bounds[p]);
    }
  }

  SolveResult Run(const Committee& forced) {
    for (CandidateIndex c : forced) Assign(c, kIn);
    std::vector<CandidateIndex> free;
    for (std::size_t c = 0; c < state_.size(); ++c) {
      if (state_[c] == kFree) free.push_back(static_cast<CandidateIndex>(c));
    }

    // Phase 1: best score, exploring high-scoring candidates first.
    free_ = free;
    std::sort(free_.begin(), free_.end(), [&](CandidateIndex a, CandidateIndex b) {
      if (scores_[a] != scores_[b]) return scores_[a] > scores_[b];
      return priority_[a] < priority_[b];
    });
    BuildBounds();
    phase_ = Phase::kMaximize;
    Search(0);

    SolveResult result;
    result.nodes_explored = nodes_;
    if (!found_) return result;

    // Phase 2: the first committee reaching that score in tie-break order.
    free_ = free;
    std::sort(free_.begin(), free_.end(), [&](CandidateIndex a, CandidateIndex b) {
      return priority_[a] < priority_[b];
    });
    BuildBounds();
    phase_ = Phase::kFirstAtTarget;
    target_ = best_score_;
    found_ = false;
    Search(0);

    result.status = SolveStatus::kOptimal;
    result.score = best_score_;
    result.committee = best_;
    result.nodes_explored = nodes_;
    return result;
  }

 private:
  enum State : signed char { kOut = -1, kFree = 0, kIn = 1 };
  enum class Phase { kMaximize, kFirstAtTarget };

  struct Tracked {
    std::size_t bound;
    std::size_t in = 0;
    std::size_t available;
  };

  void AddConstraint(const std::vector<CandidateIndex>& members,
                     std::size_t bound) {
    const std::size_t id = tracked_.size();
    tracked_.push_back({bound, 0, members.size()});
    if (bound > members.size()) ++starved_;
    for (CandidateIndex c : members) touching_[c].push_back(id);
  }

  void Assign(CandidateIndex c, State to) {
    state_[c] = to;
    if (to == kIn) {
      ++in_count_;
      score_ += scores_[c];
      for (std::size_t id : touching_[c]) ++tracked_[id].in;
    } else {
      for (std::size_t id : touching_[c]) {
        Tracked& t = tracked_[id];
        if (t.available-- == t.bound) ++starved_;
      }
    }
  }

  void Release(CandidateIndex c) {
    const State from = static_cast<State>(state_[c]);
    state_[c] = kFree;
    if (from == kIn) {
      --in_count_;
      score_ -= scores_[c];
      for (std::size_t id : touching_[c]) --tracked_[id].in;
    } else {
      for (std::size_t id : touching_[c]) {
        Tracked& t = tracked_[id];
        if (++t.available == t.bound) --starved_;
      }
    }
  }

  // best_suffix_[pos][r] = sum of the r best scores among free_[pos..].
  void BuildBounds() {
    const std::size_t f = free_.size();
    best_suffix_.assign(f + 1, {0});
    std::vector<Score> pool;
    for (std::size_t pos = f; pos-- > 0;) {
      pool.insert(std::upper_bound(pool.begin(), pool.end(), scores_[free_[pos]],
                                   std::greater<>()),
                  scores_[free_[pos]]);
      auto& sums = best_suffix_[pos];
      const std::size_t depth = std::min(pool.size(), k_);
      sums.assign(depth + 1, 0);
      for (std::size_t r = 0; r < depth; ++r) sums[r + 1] = sums[r] + pool[r];
    }
  }

  bool Viable(std::size_t remaining) const {
    if (starved_ > 0) return false;
    for (const auto& family : families_) {
      std::size_t deficit = 0;
      for (std::size_t id : family) {
        const Tracked& t = tracked_[id];
        if (t.in < t.bound) deficit += t.bound - t.in;
      }
      if (deficit > remaining) return false;
    }
    return true;
  }

  void Search(std::size_t pos) {
    if (phase_ == Phase::kFirstAtTarget && found_) return;
    ++nodes_;
    const std::size_t remaining = k_ - in_count_;
    if (!Viable(remaining)) return;
    if (remaining == 0) {
      Record();
      return;
    }
    if (free_.size() - pos < remaining) return;
    const Score upper = score_ + best_suffix_[pos][remaining];
    if (phase_ == Phase::kMaximize ? (found_ && upper <= best_score_)
                                   : upper < target_) {
      return;
    }
    const CandidateIndex c = free_[pos];
    Assign(c, kIn);
    Search(pos + 1);
    Release(c);
    if (free_.size() - pos - 1 >= remaining) {
      Assign(c, kOut);
      Search(pos + 1);
      Release(c);
    }
  }

  // Leaf: every seat filled and Viable(0) held, so every bound is met.
  void Record() {
    if (phase_ == Phase::kMaximize) {
      if (found_ && score_ <= best_score_) return;
      best_score_ = score_;
    } else if (score_ != target_) {
      return;
    }
    found_ = true;
    best_.clear();
    for (std::size_t c = 0; c < state_.size(); ++c) {
      if (state_[c] == kIn) best_.push_back(static_cast<CandidateIndex>(c));
    }
  }

  std::vector<Score> scores_;
  std::vector<std::size_t> priority_;
  const std::vector<std::vector<std::size_t>>& families_;
  std::size_t k_;
  std::vector<signed char> state_;
  std::vector<std::vector<std::size_t>> touching_;
  std::vector<Tracked> tracked_;
  std::size_t starved_ = 0;  // constraints with available < bound
  std::size_t in_count_ = 0;
  Score score_ = 0;

  std::vector<CandidateIndex> free_;
  std::vector<std::vector<Score>> best_suffix_;
  Phase phase_ = Phase::kMaximize;
  Score target_ = 0;
  bool found_ = false;
  Score best_score_ = 0;
  Committee best_;
  std::uint64_t nodes_ = 0;
};

// Groups of tracked constraints whose member sets are pairwise disjoint, so
// their deficits add up. Constraint ids follow BranchAndBound: groups first,
// then populations. Attributes whose members overlap degrade to singletons.
template <typename Item>
void AppendFamilies(const std::vector<Item>& items,
                    const std::vector<std::vector<CandidateIndex>>& members,
                    std::size_t id_offset, std::size_t universe,
                    std::vector<std::vector<std::size_t>>& families) {
  for (const auto& attribute : AttributesInOrder(items)) {
    std::vector<std::size_t> family;
    std::vector<char> seen(universe, 0);
    bool disjoint = true;
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (items[i].attribute != attribute) continue;
      family.push_back(id_offset + i);
      for (CandidateIndex c : members[i]) {
        if (seen[c]) disjoint = false;
        seen[c] = 1;
      }
    }
    if (disjoint) {
      families.push_back(std::move(family));
    } else {
      for (std::size_t id : family) families.push_back({id});
    }
  }
}

}  // namespace internal

inline SolveResult Solve(const DireInstance& instance) {
  const auto start = std::chrono::steady_clock::now();
  const auto constraints = ConstraintSet::From(instance);
  SolveResult result;
  const Propagation propagation = Propagate(constraints);
  if (!propagation.infeasible) {
    std::vector<std::vector<std::size_t>> families;
    const std::size_t m = constraints.num_candidates;
    internal::AppendFamilies(instance.groups.groups, constraints.group_members,
                             0, m, families);
    internal::AppendFamilies(instance.populations.populations,
                             constraints.population_committees,
                             constraints.group_members.size(), m, families);
    internal::BranchAndBound search(constraints, families,
                                    CandidateScores(instance),
                                    instance.election.PriorityRanks());
    result = search.Run(propagation.forced);
  }
  result.elapsed = std::chrono::steady_clock::now() - start;
  return result;
}

}  // namespace dire
