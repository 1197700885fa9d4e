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

// Vertex cover on 3-regular graphs, encoded as constrained committee
// selection with mu candidate attributes.
//
// For a graph with m vertices and n edges and odd mu >= 3:
//
//   candidates   one per vertex, plus dummies in two block types
//                  B1: m(mu-3) blocks {T1: 1, T2: mu-1, T3: mu-1}
//                  B2: 2mn blocks     {T4: mu+1}
//   groups       all of size two; every candidate sits in exactly mu
//                  edge {c_i, c_j}; c_i with the T1 of each of its B1 blocks;
//                  T1 x T2; T2 x T3; T3 paired up at random; T4 x T4.
//                Bound 2 on T4 pairs avoiding the block's last member,
//                bound 1 elsewhere.
//   voters       2n kinds (two per edge) of n identical voters, ranking
//                  U1 edge endpoints | U2 T1+T3 | U3 T4[1..mu] |
//                  U4 leftovers o with (o mod 2n)+1 = kind | U5 other vertices |
//                  U6 remaining leftovers | U7 T2
//   committee    k + m mu^2 + 2mn mu - 3m mu seats
//   populations  per attribute x: voters of one kind y with equal (z mod x);
//                bound 1 + m mu^2 - 3m mu + 2mn mu
//
// A size-k vertex cover exists iff a feasible committee exists. Even mu
// doubles everything (two candidates per vertex) and joins the single
// unpaired T3 member of matching blocks across the two copies.

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <ostream>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "dire/constraints.hpp"
#include "dire/election.hpp"
#include "dire/graph.hpp"
#include "dire/scoring.hpp"
#include "dire/solver.hpp"

namespace dire {

struct CandidateRole {
  enum class Kind { kVertex, kB1, kB2 };

  Kind kind = Kind::kVertex;
  std::size_t vertex = 0;    // 1-based vertex candidate number
  std::size_t block = 0;     // 1-based block number within its type
  std::size_t set = 0;       // 1..3 for B1 (T1..T3), 4 for B2
  std::size_t position = 0;  // 1-based j within the set

  std::string ToString() const {
    switch (kind) {
      case Kind::kVertex:
        return "vertex:" + std::to_string(vertex);
      case Kind::kB1:
        return "B1:" + std::to_string(block) + ":T" + std::to_string(set) +
               ":" + std::to_string(position);
      case Kind::kB2:
        return "B2:" + std::to_string(block) + ":" + std::to_string(position);
    }
    return {};
  }
};

struct B1Block {
  CandidateIndex t1 = 0;
  std::vector<CandidateIndex> t2;
  std::vector<CandidateIndex> t3;
};

// Sizes of the seven ranking segments U1..U7, identical for every voter.
struct RankingLayout {
  std::size_t top = 0;             // U1
  std::size_t b1_selected = 0;     // U2
  std::size_t b2_selected = 0;     // U3
  std::size_t own_leftovers = 0;   // U4
  std::size_t other_vertices = 0;  // U5
  std::size_t leftovers = 0;       // U6
  std::size_t b1_rest = 0;         // U7

  std::size_t Offset(std::size_t segment) const {
    const std::size_t sizes[] = {top,            b1_selected, b2_selected,
                                 own_leftovers,  other_vertices, leftovers,
                                 b1_rest};
    std::size_t offset = 0;
    for (std::size_t s = 1; s < segment; ++s) offset += sizes[s - 1];
    return offset;
  }
};

struct ReductionInstance {
  DireInstance instance;

  Graph graph;
  std::size_t mu = 0;
  std::size_t k = 0;
  std::size_t pi = 1;
  std::uint64_t seed = 0;
  bool doubled = false;  // even-mu construction

  std::vector<CandidateRole> roles;               // per candidate
  std::vector<CandidateIndex> vertex_candidates;  // m, or 2m when doubled
  std::vector<B1Block> b1_blocks;
  std::vector<std::vector<CandidateIndex>> b2_blocks;  // leftover is last
  std::vector<std::size_t> voter_kind;                 // 1-based, per voter
  RankingLayout layout;
  std::size_t target_committee_size = 0;
  std::size_t representation_bound = 0;

  std::size_t num_dummies() const {
    return instance.election.num_candidates() - vertex_candidates.size();
  }

  // Graph vertex behind a vertex candidate, or nullopt for dummies.
  std::optional<Vertex> SourceVertex(CandidateIndex c) const {
    if (roles.at(c).kind != CandidateRole::Kind::kVertex) return std::nullopt;
    return static_cast<Vertex>((roles[c].vertex - 1) % graph.num_vertices);
  }
};

// Closed-form sizes of the odd construction.
struct ReductionCounts {
  std::int64_t dummies;
  std::int64_t candidates;
  std::int64_t b1_blocks;
  std::int64_t b2_blocks;
  std::int64_t voters;
  std::int64_t committee_size;
  std::int64_t representation_bound;

  static ReductionCounts Odd(std::int64_t m, std::int64_t n, std::int64_t mu,
                             std::int64_t k) {
    ReductionCounts c{};
    c.dummies = 2 * mu * mu * m - 7 * mu * m + 2 * mu * m * n + 2 * m * n + 3 * m;
    c.candidates = c.dummies + m;
    c.b1_blocks = m * mu - 3 * m;
    c.b2_blocks = 2 * m * n;
    c.voters = 2 * n * n;
    c.committee_size = k + m * mu * mu + 2 * m * n * mu - 3 * m * mu;
    c.representation_bound = 1 + m * mu * mu - 3 * m * mu + 2 * m * n * mu;
    return c;
  }

  static ReductionCounts Even(std::int64_t m, std::int64_t n, std::int64_t mu,
                              std::int64_t k) {
    ReductionCounts c = Odd(m, n, mu, k);
    c.dummies *= 2;
    c.candidates = c.dummies + 2 * m;
    c.b1_blocks *= 2;
    c.b2_blocks *= 2;
    c.voters = 4 * n * n;
    c.committee_size *= 2;
    c.representation_bound *= 2;
    return c;
  }
};

namespace internal {

// Assigns groups to attributes greedily so that the groups sharing an
// attribute are pairwise disjoint.
class AttributePacker {
 public:
  explicit AttributePacker(std::size_t num_candidates) : m_(num_candidates) {}

  std::string Place(const std::vector<CandidateIndex>& members) {
    for (std::size_t a = 0;; ++a) {
      if (a == used_.size()) used_.emplace_back(m_, 0);
      auto& used = used_[a];
      if (std::none_of(members.begin(), members.end(),
                       [&](CandidateIndex c) { return used[c] != 0; })) {
        for (CandidateIndex c : members) used[c] = 1;
        return "A" + std::to_string(a + 1);
      }
    }
  }

 private:
  std::size_t m_;
  std::vector<std::vector<char>> used_;
};

class ReductionBuilder {
 public:
  ReductionBuilder(const Graph& graph, std::size_t mu, std::size_t k,
                   std::uint64_t seed, std::size_t pi, bool doubled)
      : rng_(seed) {
    r_.graph = graph;
    r_.mu = mu;
    r_.k = k;
    r_.seed = seed;
    r_.pi = pi;
    r_.doubled = doubled;
  }

  ReductionInstance Build() {
    const std::size_t m = r_.graph.num_vertices;
    const std::size_t n = r_.graph.num_edges();
    const std::size_t mu = r_.mu;
    const std::size_t copies = r_.doubled ? 2 : 1;
    const auto counts = r_.doubled ? ReductionCounts::Even(m, n, mu, r_.k)
                                   : ReductionCounts::Odd(m, n, mu, r_.k);
    r_.target_committee_size = static_cast<std::size_t>(counts.committee_size);
    r_.representation_bound =
        static_cast<std::size_t>(counts.representation_bound);

    // Candidates in index order: vertices, B1 blocks, B2 blocks.
    for (std::size_t t = 1; t <= copies * m; ++t) {
      r_.vertex_candidates.push_back(
          AddCandidate("c" + std::to_string(t), {CandidateRole::Kind::kVertex, t}));
    }
    const std::size_t per_vertex = mu - 3;
    const std::size_t b1_count = copies * m * per_vertex;
    for (std::size_t b = 1; b <= b1_count; ++b) {
      B1Block block;
      block.t1 = AddDummy({CandidateRole::Kind::kB1, 0, b, 1, 1});
      for (std::size_t j = 1; j < mu; ++j) {
        block.t2.push_back(AddDummy({CandidateRole::Kind::kB1, 0, b, 2, j}));
      }
      for (std::size_t j = 1; j < mu; ++j) {
        block.t3.push_back(AddDummy({CandidateRole::Kind::kB1, 0, b, 3, j}));
      }
      r_.b1_blocks.push_back(std::move(block));
    }
    const std::size_t b2_count = copies * 2 * m * n;
    for (std::size_t b = 1; b <= b2_count; ++b) {
      std::vector<CandidateIndex> block;
      for (std::size_t j = 1; j <= mu + 1; ++j) {
        block.push_back(AddDummy({CandidateRole::Kind::kB2, 0, b, 4, j}));
      }
      r_.b2_blocks.push_back(std::move(block));
    }

    BuildGroups(m, copies, per_vertex);
    BuildVoters(m, n, copies);
    BuildPopulations();
    return std::move(r_);
  }

 private:
  CandidateIndex AddCandidate(std::string name, CandidateRole role) {
    auto& e = r_.instance.election;
    e.candidates.push_back(std::move(name));
    r_.roles.push_back(role);
    return static_cast<CandidateIndex>(e.candidates.size() - 1);
  }

  CandidateIndex AddDummy(CandidateRole role) {
    return AddCandidate("d" + std::to_string(++dummy_count_), role);
  }

  void AddGroup(std::string name, std::vector<CandidateIndex> members,
                std::size_t bound) {
    pending_.push_back(Group{"", std::move(name), std::move(members), bound});
  }

  void BuildGroups(std::size_t m, std::size_t copies, std::size_t per_vertex) {
    const auto& graph = r_.graph;
    const auto& vc = r_.vertex_candidates;
    for (std::size_t e = 0; e < graph.num_edges(); ++e) {
      const auto [u, v] = graph.edges[e];
      for (std::size_t copy = 0; copy < copies; ++copy) {
        std::string name = "E" + std::to_string(e + 1);
        if (copy == 1) name += ".2";
        AddGroup(name, {vc[copy * m + u], vc[copy * m + v]}, 1);
      }
    }
    // Vertex candidate t owns B1 blocks (t-1)(mu-3)+1 .. t(mu-3).
    for (std::size_t t = 0; t < vc.size(); ++t) {
      for (std::size_t r = 0; r < per_vertex; ++r) {
        const std::size_t b = t * per_vertex + r;
        AddGroup("V" + std::to_string(t + 1) + ".B" + std::to_string(b + 1),
                 {vc[t], r_.b1_blocks[b].t1}, 1);
      }
    }
    std::vector<CandidateIndex> unpaired(r_.b1_blocks.size());
    for (std::size_t b = 0; b < r_.b1_blocks.size(); ++b) {
      const B1Block& block = r_.b1_blocks[b];
      const std::string prefix = "B" + std::to_string(b + 1) + ".";
      for (std::size_t j = 0; j < block.t2.size(); ++j) {
        AddGroup(prefix + "T1T2." + std::to_string(j + 1),
                 {block.t1, block.t2[j]}, 1);
      }
      for (std::size_t i = 0; i < block.t2.size(); ++i) {
        for (std::size_t j = 0; j < block.t3.size(); ++j) {
          AddGroup(prefix + "T2T3." + std::to_string(i + 1) + "." +
                       std::to_string(j + 1),
                   {block.t2[i], block.t3[j]}, 1);
        }
      }
      // Random split of T3 into two halves, paired position by position.
      std::vector<CandidateIndex> t3 = block.t3;
      Shuffle(t3, rng_);
      if (t3.size() % 2 == 1) {
        unpaired[b] = t3.back();
        t3.pop_back();
      }
      const std::size_t half = t3.size() / 2;
      for (std::size_t p = 0; p < half; ++p) {
        AddGroup(prefix + "T3." + std::to_string(p + 1),
                 {t3[p], t3[half + p]}, 1);
      }
    }
    if (r_.doubled) {
      // Block r of vertex c_t meets block r of its copy c_{m+t}.
      const std::size_t half_blocks = r_.b1_blocks.size() / 2;
      for (std::size_t b = 0; b < half_blocks; ++b) {
        AddGroup("X" + std::to_string(b + 1) + "." +
                     std::to_string(half_blocks + b + 1),
                 {unpaired[b], unpaired[half_blocks + b]}, 1);
      }
    }
    const std::size_t mu = r_.mu;
    for (std::size_t b = 0; b < r_.b2_blocks.size(); ++b) {
      const auto& block = r_.b2_blocks[b];
      for (std::size_t i = 0; i <= mu; ++i) {
        for (std::size_t j = i + 1; j <= mu; ++j) {
          AddGroup("K" + std::to_string(b + 1) + "." + std::to_string(i + 1) +
                       "." + std::to_string(j + 1),
                   {block[i], block[j]}, j < mu ? 2 : 1);
        }
      }
    }

    AttributePacker packer(r_.instance.election.num_candidates());
    for (auto& group : pending_) {
      group.attribute = packer.Place(group.members);
      r_.instance.groups.groups.push_back(std::move(group));
    }
    pending_.clear();
  }

  void BuildVoters(std::size_t m, std::size_t n, std::size_t copies) {
    auto& e = r_.instance.election;
    const auto& vc = r_.vertex_candidates;
    const std::size_t kinds = 2 * copies * n;
    const std::size_t mu = r_.mu;

    std::vector<CandidateIndex> b1_selected, b1_rest, b2_selected, leftovers;
    for (const auto& block : r_.b1_blocks) {
      b1_selected.push_back(block.t1);
      b1_rest.insert(b1_rest.end(), block.t2.begin(), block.t2.end());
      b1_selected.insert(b1_selected.end(), block.t3.begin(), block.t3.end());
    }
    for (const auto& block : r_.b2_blocks) {
      b2_selected.insert(b2_selected.end(), block.begin(), block.begin() + mu);
      leftovers.push_back(block[mu]);
    }
    std::sort(b1_selected.begin(), b1_selected.end());

    for (std::size_t a = 1; a <= kinds; ++a) {
      const std::size_t edge = (a - 1) / (2 * copies);
      const std::size_t phase = (a - 1) % (2 * copies);
      const auto [lo, hi] = r_.graph.edges[edge];
      std::vector<CandidateIndex> top;
      const bool low_first = phase % 2 == 0;
      const CandidateIndex first = vc[low_first ? lo : hi];
      const CandidateIndex second = vc[low_first ? hi : lo];
      if (copies == 1) {
        top = {first, second};
      } else {
        const CandidateIndex first_copy = vc[m + (low_first ? lo : hi)];
        const CandidateIndex second_copy = vc[m + (low_first ? hi : lo)];
        top = phase < 2
                  ? std::vector<CandidateIndex>{first, second, first_copy, second_copy}
                  : std::vector<CandidateIndex>{first_copy, second_copy, first, second};
      }
      std::vector<CandidateIndex> own, others;
      for (std::size_t o = 1; o <= leftovers.size(); ++o) {
        ((o % kinds) + 1 == a ? own : others).push_back(leftovers[o - 1]);
      }
      std::vector<CandidateIndex> rest_vertices;
      for (CandidateIndex c : vc) {
        if (std::find(top.begin(), top.end(), c) == top.end()) {
          rest_vertices.push_back(c);
        }
      }

      std::vector<CandidateIndex> ranking;
      ranking.reserve(e.candidates.size());
      for (const auto* segment : {&top, &b1_selected, &b2_selected, &own,
                                  &rest_vertices, &others, &b1_rest}) {
        ranking.insert(ranking.end(), segment->begin(), segment->end());
      }
      if (a == 1) {
        r_.layout = {top.size(),  b1_selected.size(),   b2_selected.size(),
                     own.size(),  rest_vertices.size(), others.size(),
                     b1_rest.size()};
      }
      for (std::size_t b = 1; b <= n; ++b) {
        e.voters.push_back(
            {"v" + std::to_string(a) + "_" + std::to_string(b), ranking});
        r_.voter_kind.push_back(a);
      }
    }
    e.committee_size = r_.target_committee_size;
    e.tiebreak = IdentityOrder(e.candidates.size());
    r_.instance.rule = ScoringRule::Borda();
  }

  void BuildPopulations() {
    auto& pops = r_.instance.populations.populations;
    const std::size_t n = r_.graph.num_edges();
    const std::size_t kinds = r_.instance.election.num_voters() / n;
    for (std::size_t x = 1; x <= r_.pi; ++x) {
      for (std::size_t y = 1; y <= kinds; ++y) {
        for (std::size_t residue = 0; residue < x; ++residue) {
          Population pop;
          pop.attribute = "x" + std::to_string(x);
          pop.name = "y" + std::to_string(y) + "r" + std::to_string(residue);
          pop.lower_bound = r_.representation_bound;
          for (std::size_t z = 1; z <= n; ++z) {
            if (z % x == residue) {
              pop.members.push_back(static_cast<VoterIndex>((y - 1) * n + z - 1));
            }
          }
          if (!pop.members.empty()) pops.push_back(std::move(pop));
        }
      }
    }
    for (std::size_t p = 0; p < pops.size(); ++p) {
      pops[p].given_committee = PopulationWinningCommittee(r_.instance, p);
    }
  }

  ReductionInstance r_;
  std::mt19937_64 rng_;
  std::size_t dummy_count_ = 0;
  std::vector<Group> pending_;
};

inline void RequireReducible(const Graph& graph, std::size_t k,
                             std::size_t pi) {
  if (!IsThreeRegular(graph)) {
    throw InvalidInput("reduction source must be a simple 3-regular graph");
  }
  if (k < 1 || k > graph.num_vertices) {
    throw InvalidInput("cover size k must lie in [1, " +
                       std::to_string(graph.num_vertices) + "]");
  }
  if (pi < 1) throw InvalidInput("need at least one voter attribute");
}

}  // namespace internal

inline ReductionInstance ReduceOdd(const Graph& graph, std::size_t mu,
                                   std::size_t k, std::uint64_t seed,
                                   std::size_t pi = 1) {
  if (mu < 3 || mu % 2 == 0) {
    throw InvalidInput("odd construction needs odd mu >= 3, got " +
                       std::to_string(mu));
  }
  internal::RequireReducible(graph, k, pi);
  return internal::ReductionBuilder(graph, mu, k, seed, pi, false).Build();
}

inline ReductionInstance ReduceEven(const Graph& graph, std::size_t mu,
                                    std::size_t k, std::uint64_t seed,
                                    std::size_t pi = 1) {
  if (mu < 4 || mu % 2 == 1) {
    throw InvalidInput("even construction needs even mu >= 4, got " +
                       std::to_string(mu));
  }
  internal::RequireReducible(graph, k, pi);
  return internal::ReductionBuilder(graph, mu, k, seed, pi, true).Build();
}

// The committee built from a size-k cover: the cover's vertex candidates
// (and their copies), every B1 block's T1 and T3, and the first mu members
// of every B2 block.
inline Committee WitnessCommittee(const ReductionInstance& reduction,
                                  std::span<const Vertex> cover) {
  const Committee distinct =
      MakeCommittee(std::vector<CandidateIndex>(cover.begin(), cover.end()));
  if (distinct.size() != cover.size() || cover.size() != reduction.k ||
      !IsVertexCover(reduction.graph, cover)) {
    throw InvalidInput("witness needs a vertex cover of exactly " +
                       std::to_string(reduction.k) + " distinct vertices");
  }
  const std::size_t m = reduction.graph.num_vertices;
  std::vector<CandidateIndex> members;
  for (Vertex v : cover) {
    members.push_back(reduction.vertex_candidates[v]);
    if (reduction.doubled) members.push_back(reduction.vertex_candidates[m + v]);
  }
  for (const auto& block : reduction.b1_blocks) {
    members.push_back(block.t1);
    members.insert(members.end(), block.t3.begin(), block.t3.end());
  }
  for (const auto& block : reduction.b2_blocks) {
    members.insert(members.end(), block.begin(), block.begin() + reduction.mu);
  }
  return MakeCommittee(std::move(members));
}

// `map <candidate> <role>` lines, one per candidate.
inline void WriteProvenance(std::ostream& out,
                            const ReductionInstance& reduction) {
  out << "# mu " << reduction.mu << " k " << reduction.k << " seed "
      << reduction.seed << " pi " << reduction.pi << '\n';
  const auto& names = reduction.instance.election.candidates;
  for (std::size_t c = 0; c < names.size(); ++c) {
    out << "map " << names[c] << ' ' << reduction.roles[c].ToString() << '\n';
  }
}

struct EquivalenceReport {
  bool vc_exists = false;
  bool dire_exists = false;
  bool agree = false;
  std::optional<std::vector<Vertex>> cover;            // from the VC oracle
  std::optional<std::vector<Vertex>> committee_cover;  // read off the solver
  std::size_t forced = 0;                              // after propagation
  SolveResult solve;
};

// Runs the VC oracle and the exact solver on the odd construction. `agree`
// requires matching yes/no answers and, on a yes, that the solver's vertex
// candidates cover the graph with at most k vertices.
inline EquivalenceReport VerifyEquivalence(const Graph& graph, std::size_t mu,
                                           std::size_t k,
                                           std::uint64_t seed = 1,
                                           std::size_t pi = 1) {
  EquivalenceReport report;
  const ReductionInstance reduction = ReduceOdd(graph, mu, k, seed, pi);
  report.cover = FindVertexCover(graph, k);
  report.vc_exists = report.cover.has_value();
  report.forced = Propagate(reduction.instance).forced.size();
  report.solve = Solve(reduction.instance);
  report.dire_exists = report.solve.optimal();
  report.agree = report.vc_exists == report.dire_exists;
  if (report.vc_exists && report.dire_exists) {
    std::vector<Vertex> from_committee;
    for (CandidateIndex c : report.solve.committee) {
      if (auto v = reduction.SourceVertex(c)) from_committee.push_back(*v);
    }
    report.agree = report.agree && from_committee.size() <= k &&
                   IsVertexCover(graph, from_committee);
    report.committee_cover = std::move(from_committee);
  }
  return report;
}

// ---------------------------------------------------------------------------
// Generic instance transforms.

namespace internal {

template <typename Taken>
std::string FreshName(std::string base, Taken&& taken) {
  if (!taken(base)) return base;
  for (std::size_t i = 2;; ++i) {
    std::string name = base + std::to_string(i);
    if (!taken(name)) return name;
  }
}

}  // namespace internal

// Adds a candidate that every voter ranks first, a new attribute splitting
// {old candidates} from {new candidate} (bound 1 each), raises every
// representation bound to 2 and grows the committee by one seat.
inline DireInstance TransformAddTop(const DireInstance& input) {
  DireInstance out = input;
  auto& e = out.election;
  const std::string name = internal::FreshName("a", [&](const std::string& s) {
    return e.FindCandidate(s).has_value();
  });
  const auto top = static_cast<CandidateIndex>(e.candidates.size());
  std::vector<CandidateIndex> old_candidates = IdentityOrder(e.candidates.size());
  e.candidates.push_back(name);
  for (auto& voter : e.voters) voter.ranking.insert(voter.ranking.begin(), top);
  e.tiebreak.push_back(top);
  ++e.committee_size;
  if (out.rule.kind == ScoringRule::Kind::kVector) {
    auto& w = out.rule.weights;
    w.insert(w.begin(), w.empty() ? Score{1} : w.front());
  }
  const auto attributes = out.groups.Attributes();
  const std::string attribute =
      internal::FreshName("top", [&](const std::string& s) {
        return std::find(attributes.begin(), attributes.end(), s) !=
               attributes.end();
      });
  out.groups.groups.push_back({attribute, "rest", std::move(old_candidates), 1});
  out.groups.groups.push_back({attribute, name, {top}, 1});
  for (auto& pop : out.populations.populations) {
    pop.lower_bound = 2;
    if (pop.given_committee) {
      pop.given_committee->push_back(top);
      *pop.given_committee = MakeCommittee(*pop.given_committee);
    }
  }
  return out;
}

// Adds one attribute with two groups, `side` and its complement, each with
// bound 1.
inline DireInstance TransformAddComplementAttribute(
    const DireInstance& input, std::span<const CandidateIndex> side) {
  const std::size_t m = input.election.num_candidates();
  const Committee first = MakeCommittee({side.begin(), side.end()});
  if (first.size() != side.size() || first.empty() || first.size() >= m ||
      first.back() >= m) {
    throw InvalidInput("split must be a bipartition of the candidates into two "
                       "non-empty sides");
  }
  std::vector<CandidateIndex> second;
  for (CandidateIndex c = 0; c < m; ++c) {
    if (!std::binary_search(first.begin(), first.end(), c)) second.push_back(c);
  }
  DireInstance out = input;
  const auto attributes = out.groups.Attributes();
  const std::string attribute =
      internal::FreshName("split", [&](const std::string& s) {
        return std::find(attributes.begin(), attributes.end(), s) !=
               attributes.end();
      });
  out.groups.groups.push_back({attribute, "first", first, 1});
  out.groups.groups.push_back({attribute, "second", std::move(second), 1});
  return out;
}

}  // namespace dire
