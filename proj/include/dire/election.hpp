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

// Data model for constrained multiwinner elections: the election itself,
// candidate groups with diversity lower bounds, voter populations with
// representation lower bounds, and structural validation of all of them.
//
// Every type here is a plain value. Construction never validates; call
// validate() to obtain a report of broken invariants. Operations that need a
// well-formed instance document that as a precondition.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dire/error.hpp"

namespace dire {

using CandidateIndex = std::uint32_t;
using VoterIndex = std::uint32_t;
using Score = std::int64_t;

// A set of candidates, kept sorted by candidate index without duplicates.
using Committee = std::vector<CandidateIndex>;

inline Committee MakeCommittee(std::vector<CandidateIndex> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return members;
}

struct Voter {
  std::string id;
  // Most preferred first. Position p (1-based) holds ranking[p - 1].
  std::vector<CandidateIndex> ranking;

  bool operator==(const Voter&) const = default;
};

// Positional scoring rule. Borda is kept symbolic so that it adapts to the
// number of candidates and serializes as `rule borda`.
struct ScoringRule {
  enum class Kind { kBorda, kVector };

  Kind kind = Kind::kBorda;
  std::vector<Score> weights;  // only meaningful for kVector

  static ScoringRule Borda() { return {}; }
  static ScoringRule Vector(std::vector<Score> weights) {
    return {Kind::kVector, std::move(weights)};
  }

  bool is_borda() const { return kind == Kind::kBorda; }

  // Score awarded to each position for an election with m candidates.
  std::vector<Score> WeightsFor(std::size_t m) const {
    if (kind == Kind::kVector) {
      if (weights.size() != m) {
        throw InvalidInput("scoring vector has " +
                           std::to_string(weights.size()) +
                           " entries, election has " + std::to_string(m) +
                           " candidates");
      }
      return weights;
    }
    std::vector<Score> out(m);
    for (std::size_t i = 0; i < m; ++i) out[i] = static_cast<Score>(m - 1 - i);
    return out;
  }

  bool operator==(const ScoringRule&) const = default;
};

struct Election {
  std::vector<std::string> candidates;
  std::vector<Voter> voters;
  std::size_t committee_size = 1;
  // Permutation of candidate indices; earlier entries win ties.
  std::vector<CandidateIndex> tiebreak;

  std::size_t num_candidates() const { return candidates.size(); }
  std::size_t num_voters() const { return voters.size(); }

  std::optional<CandidateIndex> FindCandidate(std::string_view name) const {
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (candidates[i] == name) return static_cast<CandidateIndex>(i);
    }
    return std::nullopt;
  }

  std::optional<VoterIndex> FindVoter(std::string_view id) const {
    for (std::size_t i = 0; i < voters.size(); ++i) {
      if (voters[i].id == id) return static_cast<VoterIndex>(i);
    }
    return std::nullopt;
  }

  // rank[c] = position of candidate c in the tie-break order (0 = highest
  // priority). Candidates missing from a malformed tiebreak rank last, by
  // index.
  std::vector<std::size_t> PriorityRanks() const {
    const std::size_t m = candidates.size();
    std::vector<std::size_t> rank(m, m);
    for (std::size_t p = 0; p < tiebreak.size(); ++p) {
      if (tiebreak[p] < m && rank[tiebreak[p]] == m) rank[tiebreak[p]] = p;
    }
    for (std::size_t c = 0; c < m; ++c) {
      if (rank[c] == m) rank[c] = m + c;
    }
    return rank;
  }

  bool operator==(const Election&) const = default;
};

// Default tie-break: declaration order.
inline std::vector<CandidateIndex> IdentityOrder(std::size_t m) {
  std::vector<CandidateIndex> order(m);
  for (std::size_t i = 0; i < m; ++i) order[i] = static_cast<CandidateIndex>(i);
  return order;
}

struct Group {
  std::string attribute;
  std::string name;
  std::vector<CandidateIndex> members;
  std::size_t lower_bound = 0;

  bool operator==(const Group&) const = default;
};

struct Population {
  std::string attribute;
  std::string name;
  std::vector<VoterIndex> members;
  std::size_t lower_bound = 0;
  // W_P when supplied with the instance; otherwise derived from the voters.
  std::optional<Committee> given_committee;

  std::string label() const { return attribute + "/" + name; }

  bool operator==(const Population&) const = default;
};

namespace internal {

template <typename T>
std::vector<std::string> AttributesInOrder(const std::vector<T>& items) {
  std::vector<std::string> out;
  for (const auto& item : items) {
    if (std::find(out.begin(), out.end(), item.attribute) == out.end()) {
      out.push_back(item.attribute);
    }
  }
  return out;
}

}  // namespace internal

struct GroupSystem {
  std::vector<Group> groups;

  // Attribute names in order of first appearance.
  std::vector<std::string> Attributes() const {
    return internal::AttributesInOrder(groups);
  }

  bool operator==(const GroupSystem&) const = default;
};

struct PopulationSystem {
  std::vector<Population> populations;

  std::vector<std::string> Attributes() const {
    return internal::AttributesInOrder(populations);
  }

  bool operator==(const PopulationSystem&) const = default;
};

struct DireInstance {
  Election election;
  GroupSystem groups;
  PopulationSystem populations;
  ScoringRule rule;

  bool operator==(const DireInstance&) const = default;
};

// 1-based position of `candidate` in the voter's ranking.
inline std::size_t PositionOf(const Voter& voter, CandidateIndex candidate) {
  auto it = std::find(voter.ranking.begin(), voter.ranking.end(), candidate);
  if (it == voter.ranking.end()) {
    throw InvalidInput("candidate #" + std::to_string(candidate) +
                       " is not ranked by voter '" + voter.id + "'");
  }
  return static_cast<std::size_t>(it - voter.ranking.begin()) + 1;
}

inline std::size_t PositionOf(const Election& election, const Voter& voter,
                              std::string_view candidate) {
  auto index = election.FindCandidate(candidate);
  if (!index) {
    throw InvalidInput("unknown candidate '" + std::string(candidate) + "'");
  }
  return PositionOf(voter, *index);
}

// ---------------------------------------------------------------------------
// Validation

enum class BoundMode { kStrict, kRelaxed };

enum class Severity { kError, kWarning };

enum class SubjectKind {
  kInstance,
  kCandidate,
  kTiebreak,
  kRule,
  kVoter,
  kGroup,
  kPopulation,
};

struct Issue {
  Severity severity = Severity::kError;
  std::string rule;  // short stable label, e.g. "ranking not a permutation"
  SubjectKind subject = SubjectKind::kInstance;
  std::size_t index = 0;  // voter / group / population / candidate index
  std::string message;
};

struct ValidationReport {
  std::vector<Issue> issues;

  bool empty() const { return issues.empty(); }
  bool valid() const {
    return std::none_of(issues.begin(), issues.end(), [](const Issue& i) {
      return i.severity == Severity::kError;
    });
  }
  std::size_t CountErrors() const {
    return static_cast<std::size_t>(
        std::count_if(issues.begin(), issues.end(), [](const Issue& i) {
          return i.severity == Severity::kError;
        }));
  }
  bool HasRule(std::string_view rule) const {
    return std::any_of(issues.begin(), issues.end(),
                       [&](const Issue& i) { return i.rule == rule; });
  }
};

namespace internal {

inline bool IsPermutation(const std::vector<CandidateIndex>& order,
                          std::size_t m) {
  if (order.size() != m) return false;
  std::vector<char> seen(m, 0);
  for (CandidateIndex c : order) {
    if (c >= m || seen[c]) return false;
    seen[c] = 1;
  }
  return true;
}

template <typename Index>
std::vector<Index> SortedCopy(std::vector<Index> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// For each attribute, reports whether its members are pairwise disjoint and
// warns when two attributes induce the same partition with the same bounds.
template <typename Item, typename Emit>
void CheckAttributes(const std::vector<Item>& items, SubjectKind kind,
                     std::size_t universe, const char* noun, Emit&& emit) {
  const auto attributes = AttributesInOrder(items);
  std::vector<std::vector<std::pair<std::vector<std::uint32_t>, std::size_t>>>
      signatures(attributes.size());
  for (std::size_t a = 0; a < attributes.size(); ++a) {
    std::vector<int> owner(universe, -1);
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (items[i].attribute != attributes[a]) continue;
      for (auto member : items[i].members) {
        if (member >= universe) continue;
        if (owner[member] >= 0 && owner[member] != static_cast<int>(i)) {
          emit(Issue{Severity::kError, "attribute not a partition", kind, i,
                     std::string(noun) + " '" + items[i].name +
                         "' overlaps '" + items[owner[member]].name +
                         "' under attribute '" + attributes[a] + "'"});
          break;
        }
        owner[member] = static_cast<int>(i);
      }
      signatures[a].emplace_back(SortedCopy(items[i].members),
                                 items[i].lower_bound);
    }
    std::sort(signatures[a].begin(), signatures[a].end());
  }
  for (std::size_t a = 0; a < attributes.size(); ++a) {
    for (std::size_t b = a + 1; b < attributes.size(); ++b) {
      if (signatures[a] == signatures[b]) {
        emit(Issue{Severity::kWarning, "duplicate attribute", kind, 0,
                   "attributes '" + attributes[a] + "' and '" + attributes[b] +
                       "' partition identically with identical bounds"});
      }
    }
  }
}

}  // namespace internal

inline ValidationReport Validate(const DireInstance& instance,
                                 BoundMode mode = BoundMode::kStrict) {
  ValidationReport report;
  auto emit = [&](Issue issue) { report.issues.push_back(std::move(issue)); };
  const Election& e = instance.election;
  const std::size_t m = e.num_candidates();
  const std::size_t n = e.num_voters();
  const std::size_t k = e.committee_size;
  const std::size_t min_bound = mode == BoundMode::kStrict ? 1 : 0;

  if (m == 0) {
    emit({Severity::kError, "no candidates", SubjectKind::kInstance, 0,
          "election has no candidates"});
  }
  if (n == 0) {
    emit({Severity::kError, "no voters", SubjectKind::kInstance, 0,
          "election has no voters"});
  }
  if (k < 1 || k > m) {
    emit({Severity::kError, "committee size out of range",
          SubjectKind::kInstance, 0,
          "committee size " + std::to_string(k) + " not in [1, " +
              std::to_string(m) + "]"});
  }

  for (std::size_t c = 0; c < m; ++c) {
    for (std::size_t d = 0; d < c; ++d) {
      if (e.candidates[c] == e.candidates[d]) {
        emit({Severity::kError, "duplicate candidate", SubjectKind::kCandidate,
              c, "candidate '" + e.candidates[c] + "' declared twice"});
        break;
      }
    }
  }
  if (!internal::IsPermutation(e.tiebreak, m)) {
    emit({Severity::kError, "tiebreak not a permutation",
          SubjectKind::kTiebreak, 0,
          "tie-break order must list every candidate exactly once"});
  }

  for (std::size_t v = 0; v < n; ++v) {
    const Voter& voter = e.voters[v];
    if (!internal::IsPermutation(voter.ranking, m)) {
      emit({Severity::kError, "ranking not a permutation", SubjectKind::kVoter,
            v,
            "voter '" + voter.id + "' does not rank every candidate exactly "
                                   "once"});
    }
    for (std::size_t w = 0; w < v; ++w) {
      if (e.voters[w].id == voter.id) {
        emit({Severity::kError, "duplicate voter", SubjectKind::kVoter, v,
              "voter id '" + voter.id + "' used twice"});
        break;
      }
    }
  }

  if (instance.rule.kind == ScoringRule::Kind::kVector) {
    const auto& w = instance.rule.weights;
    if (w.size() != m) {
      emit({Severity::kError, "rule length mismatch", SubjectKind::kRule, 0,
            "scoring vector has " + std::to_string(w.size()) +
                " entries, expected " + std::to_string(m)});
    }
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] < 0) {
        emit({Severity::kError, "negative score", SubjectKind::kRule, 0,
              "scoring vector entry " + std::to_string(i + 1) +
                  " is negative"});
        break;
      }
      if (i > 0 && w[i] > w[i - 1]) {
        emit({Severity::kError, "rule not non-increasing", SubjectKind::kRule,
              0,
              "scoring vector increases at position " +
                  std::to_string(i + 1)});
        break;
      }
    }
  }

  const auto& groups = instance.groups.groups;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    const Group& group = groups[g];
    auto members = internal::SortedCopy(group.members);
    if (std::adjacent_find(members.begin(), members.end()) != members.end()) {
      emit({Severity::kError, "duplicate group member", SubjectKind::kGroup, g,
            "group '" + group.name + "' lists a candidate twice"});
    }
    if (!members.empty() && members.back() >= m) {
      emit({Severity::kError, "unknown group member", SubjectKind::kGroup, g,
            "group '" + group.name + "' references an unknown candidate"});
    }
    const std::size_t cap = std::min(k, group.members.size());
    if (group.lower_bound > cap) {
      emit({Severity::kError, "bound exceeds min(k,|G|)", SubjectKind::kGroup,
            g,
            "group '" + group.name + "' bound " +
                std::to_string(group.lower_bound) + " exceeds min(k,|G|) = " +
                std::to_string(cap)});
    } else if (group.lower_bound < min_bound) {
      emit({Severity::kError, "zero bound in strict mode", SubjectKind::kGroup,
            g, "group '" + group.name + "' has bound 0"});
    }
    for (std::size_t h = 0; h < g; ++h) {
      if (groups[h].attribute == group.attribute &&
          groups[h].name == group.name) {
        emit({Severity::kError, "duplicate group", SubjectKind::kGroup, g,
              "group '" + group.attribute + "/" + group.name +
                  "' declared twice"});
        break;
      }
    }
  }
  internal::CheckAttributes(groups, SubjectKind::kGroup, m, "group", emit);

  const auto& pops = instance.populations.populations;
  for (std::size_t p = 0; p < pops.size(); ++p) {
    const Population& pop = pops[p];
    auto members = internal::SortedCopy(pop.members);
    if (std::adjacent_find(members.begin(), members.end()) != members.end()) {
      emit({Severity::kError, "duplicate population member",
            SubjectKind::kPopulation, p,
            "population '" + pop.label() + "' lists a voter twice"});
    }
    if (!members.empty() && members.back() >= n) {
      emit({Severity::kError, "unknown population member",
            SubjectKind::kPopulation, p,
            "population '" + pop.label() + "' references an unknown voter"});
    }
    if (pop.lower_bound > k) {
      emit({Severity::kError, "bound exceeds k", SubjectKind::kPopulation, p,
            "population '" + pop.label() + "' bound " +
                std::to_string(pop.lower_bound) + " exceeds k = " +
                std::to_string(k)});
    } else if (pop.lower_bound < min_bound) {
      emit({Severity::kError, "zero bound in strict mode",
            SubjectKind::kPopulation, p,
            "population '" + pop.label() + "' has bound 0"});
    }
    if (pop.given_committee) {
      const Committee& wp = *pop.given_committee;
      auto sorted = internal::SortedCopy(wp);
      bool dup = std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
      bool unknown = !sorted.empty() && sorted.back() >= m;
      if (wp.size() != k || dup || unknown) {
        emit({Severity::kError, "given committee malformed",
              SubjectKind::kPopulation, p,
              "W_P of population '" + pop.label() +
                  "' must be " + std::to_string(k) +
                  " distinct known candidates"});
      }
    } else if (pop.members.empty()) {
      emit({Severity::kError, "empty population", SubjectKind::kPopulation, p,
            "population '" + pop.label() +
                "' has no voters and no given committee"});
    }
    for (std::size_t q = 0; q < p; ++q) {
      if (pops[q].attribute == pop.attribute && pops[q].name == pop.name) {
        emit({Severity::kError, "duplicate population",
              SubjectKind::kPopulation, p,
              "population '" + pop.label() + "' declared twice"});
        break;
      }
    }
  }
  internal::CheckAttributes(pops, SubjectKind::kPopulation, n, "population",
                            emit);
  return report;
}

}  // namespace dire
