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

// Diversity and representation feasibility.
//
//   diversity:       |G ∩ W| >= l^D_G for every candidate group G
//   representation:  |W_P ∩ W| >= l^R_P for every voter population P
//
// A size-k committee meeting both is a DiRe committee. Feasibility never
// depends on scores.

#pragma once

#include <span>
#include <vector>

#include "dire/election.hpp"
#include "dire/scoring.hpp"

namespace dire {

struct DiversityViolation {
  std::size_t group;
  std::size_t required;
  std::size_t achieved;

  bool operator==(const DiversityViolation&) const = default;
};

struct RepresentationViolation {
  std::size_t population;
  std::size_t required;
  std::size_t achieved;

  bool operator==(const RepresentationViolation&) const = default;
};

struct FeasibilityReport {
  bool feasible = true;
  std::vector<DiversityViolation> diversity_violations;
  std::vector<RepresentationViolation> representation_violations;
};

// W_P for every population: the given committee when present, otherwise the
// one derived from the population's voters.
inline std::vector<Committee> ResolvePopulationCommittees(
    const DireInstance& instance) {
  const auto& pops = instance.populations.populations;
  std::vector<Committee> out;
  out.reserve(pops.size());
  for (std::size_t p = 0; p < pops.size(); ++p) {
    if (pops[p].given_committee) {
      out.push_back(MakeCommittee(*pops[p].given_committee));
    } else {
      out.push_back(PopulationWinningCommittee(instance, p));
    }
  }
  return out;
}

// Flattened constraint set: every lower bound as (member list, bound). Built
// once per instance and reused by the checkers and solvers.
struct ConstraintSet {
  std::size_t num_candidates = 0;
  std::size_t committee_size = 0;
  std::vector<std::vector<CandidateIndex>> group_members;
  std::vector<std::size_t> group_bounds;
  std::vector<Committee> population_committees;
  std::vector<std::size_t> population_bounds;

  static ConstraintSet From(const DireInstance& instance) {
    ConstraintSet set;
    set.num_candidates = instance.election.num_candidates();
    set.committee_size = instance.election.committee_size;
    for (const auto& g : instance.groups.groups) {
      set.group_members.push_back(MakeCommittee(g.members));
      set.group_bounds.push_back(g.lower_bound);
    }
    set.population_committees = ResolvePopulationCommittees(instance);
    for (const auto& p : instance.populations.populations) {
      set.population_bounds.push_back(p.lower_bound);
    }
    return set;
  }

  std::vector<char> Mask(std::span<const CandidateIndex> committee) const {
    std::vector<char> in(num_candidates, 0);
    for (CandidateIndex c : committee) {
      if (c >= num_candidates) {
        throw InvalidInput("unknown candidate #" + std::to_string(c));
      }
      in[c] = 1;
    }
    return in;
  }

  static std::size_t Overlap(const std::vector<CandidateIndex>& members,
                             const std::vector<char>& in) {
    std::size_t count = 0;
    for (CandidateIndex c : members) count += in[c] ? 1 : 0;
    return count;
  }

  std::vector<DiversityViolation> DiversityViolations(
      const std::vector<char>& in) const {
    std::vector<DiversityViolation> out;
    for (std::size_t g = 0; g < group_members.size(); ++g) {
      const std::size_t got = Overlap(group_members[g], in);
      if (got < group_bounds[g]) out.push_back({g, group_bounds[g], got});
    }
    return out;
  }

  std::vector<RepresentationViolation> RepresentationViolations(
      const std::vector<char>& in) const {
    std::vector<RepresentationViolation> out;
    for (std::size_t p = 0; p < population_committees.size(); ++p) {
      const std::size_t got = Overlap(population_committees[p], in);
      if (got < population_bounds[p]) {
        out.push_back({p, population_bounds[p], got});
      }
    }
    return out;
  }

  bool Satisfied(const std::vector<char>& in) const {
    for (std::size_t g = 0; g < group_members.size(); ++g) {
      if (Overlap(group_members[g], in) < group_bounds[g]) return false;
    }
    for (std::size_t p = 0; p < population_committees.size(); ++p) {
      if (Overlap(population_committees[p], in) < population_bounds[p]) {
        return false;
      }
    }
    return true;
  }

  FeasibilityReport Check(std::span<const CandidateIndex> committee) const {
    const Committee w = MakeCommittee({committee.begin(), committee.end()});
    if (w.size() != committee.size()) {
      throw InvalidInput("committee lists a candidate twice");
    }
    if (w.size() != committee_size) {
      throw InvalidInput("committee has " + std::to_string(w.size()) +
                         " members, expected " +
                         std::to_string(committee_size));
    }
    const auto in = Mask(w);
    FeasibilityReport report;
    report.diversity_violations = DiversityViolations(in);
    report.representation_violations = RepresentationViolations(in);
    report.feasible = report.diversity_violations.empty() &&
                      report.representation_violations.empty();
    return report;
  }
};

// Any subset of candidates is accepted; size is not checked.
inline std::vector<DiversityViolation> CheckDiversity(
    const DireInstance& instance, std::span<const CandidateIndex> committee) {
  std::vector<DiversityViolation> out;
  const auto& groups = instance.groups.groups;
  ConstraintSet probe;
  probe.num_candidates = instance.election.num_candidates();
  const auto in = probe.Mask(committee);
  for (std::size_t g = 0; g < groups.size(); ++g) {
    std::size_t got = 0;
    for (CandidateIndex c : MakeCommittee(groups[g].members)) {
      got += (c < in.size() && in[c]) ? 1 : 0;
    }
    if (got < groups[g].lower_bound) {
      out.push_back({g, groups[g].lower_bound, got});
    }
  }
  return out;
}

inline std::vector<RepresentationViolation> CheckRepresentation(
    const DireInstance& instance, std::span<const CandidateIndex> committee) {
  ConstraintSet set;
  set.num_candidates = instance.election.num_candidates();
  set.population_committees = ResolvePopulationCommittees(instance);
  for (const auto& p : instance.populations.populations) {
    set.population_bounds.push_back(p.lower_bound);
  }
  return set.RepresentationViolations(set.Mask(committee));
}

// Throws InvalidInput when |committee| != k: size mismatch is not a form of
// infeasibility.
inline FeasibilityReport IsDire(const DireInstance& instance,
                                std::span<const CandidateIndex> committee) {
  return ConstraintSet::From(instance).Check(committee);
}

}  // namespace dire
