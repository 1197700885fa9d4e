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

// Line-oriented election files.
//
//   election <m> <n> <k>
//   candidate <name>                        x m, declaration order = index
//   tiebreak <name> ... <name>              optional, default declaration order
//   rule borda | rule vector <s1> ... <sm>
//   cattr <attr> <group> <lb> <name> ...
//   vattr <attr> <pop> <lb> <voter> ...
//   wp <attr> <pop> <name> ...               optional fixed W_P
//   voter <id> <name1> ... <namem>           x n, most preferred first
//
// '#' starts a comment. Names are resolved after the whole file is read, so
// lines may appear in any order after the header. Structural problems that
// Validate() reports with more context (bad ranking lengths, repeated names,
// out-of-range bounds) are kept rather than rejected here.

#pragma once

#include <charconv>
#include <cstdint>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "dire/election.hpp"
#include "dire/error.hpp"

namespace dire {

// Line numbers of the declarations behind each instance element, for
// diagnostics. Zero means "not from a file".
struct SourceMap {
  std::size_t header = 0;
  std::vector<std::size_t> candidates;
  std::size_t tiebreak = 0;
  std::size_t rule = 0;
  std::vector<std::size_t> voters;
  std::vector<std::size_t> groups;
  std::vector<std::size_t> populations;

  std::size_t LineOf(SubjectKind kind, std::size_t index) const {
    auto at = [&](const std::vector<std::size_t>& lines) -> std::size_t {
      return index < lines.size() ? lines[index] : 0;
    };
    switch (kind) {
      case SubjectKind::kInstance:
        return header;
      case SubjectKind::kCandidate:
        return at(candidates);
      case SubjectKind::kTiebreak:
        return tiebreak;
      case SubjectKind::kRule:
        return rule;
      case SubjectKind::kVoter:
        return at(voters);
      case SubjectKind::kGroup:
        return at(groups);
      case SubjectKind::kPopulation:
        return at(populations);
    }
    return 0;
  }
};

struct ParsedInstance {
  DireInstance instance;
  SourceMap source;
};

namespace internal {

struct Token {
  std::string text;
  std::size_t line;
};

inline std::vector<std::string> SplitTokens(std::string line) {
  if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(std::move(tok));
  return out;
}

template <typename Int>
Int ParseInteger(const std::string& token, std::size_t line,
                 const char* what) {
  Int value{};
  const char* first = token.data();
  const char* last = first + token.size();
  if (!token.empty() && token[0] == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw ParseError(line, token, std::string("expected ") + what);
  }
  return value;
}

class ElectionParser {
 public:
  ParsedInstance Parse(std::istream& in) {
    std::string raw;
    while (std::getline(in, raw)) {
      ++line_;
      auto t = SplitTokens(std::move(raw));
      if (t.empty()) continue;
      if (!have_header_) {
        Header(t);
      } else {
        Directive(t);
      }
    }
    if (!have_header_) throw ParseError(line_, "", "missing 'election' header");
    Resolve();
    return std::move(out_);
  }

 private:
  struct PendingGroup {
    std::vector<Token> names;
  };
  struct PendingPopulation {
    std::vector<Token> voters;
  };
  struct PendingWinners {
    Token attribute;
    Token population;
    std::vector<Token> names;
  };

  DireInstance& instance() { return out_.instance; }

  void Header(const std::vector<std::string>& t) {
    if (t[0] != "election" || t.size() != 4) {
      throw ParseError(line_, t[0], "expected header 'election <m> <n> <k>'");
    }
    m_ = ParseInteger<std::size_t>(t[1], line_, "candidate count m");
    n_ = ParseInteger<std::size_t>(t[2], line_, "voter count n");
    instance().election.committee_size =
        ParseInteger<std::size_t>(t[3], line_, "committee size k");
    out_.source.header = line_;
    have_header_ = true;
  }

  std::vector<Token> Names(const std::vector<std::string>& t,
                           std::size_t from) const {
    std::vector<Token> out;
    for (std::size_t i = from; i < t.size(); ++i) out.push_back({t[i], line_});
    return out;
  }

  void Require(const std::vector<std::string>& t, std::size_t min_tokens,
               const char* usage) const {
    if (t.size() < min_tokens) {
      throw ParseError(line_, t[0], std::string("expected '") + usage + "'");
    }
  }

  void Directive(const std::vector<std::string>& t) {
    const std::string& key = t[0];
    if (key == "candidate") {
      if (t.size() != 2) {
        throw ParseError(line_, key, "expected 'candidate <name>'");
      }
      instance().election.candidates.push_back(t[1]);
      out_.source.candidates.push_back(line_);
    } else if (key == "tiebreak") {
      if (tiebreak_) throw ParseError(line_, key, "second tiebreak line");
      tiebreak_ = Names(t, 1);
      out_.source.tiebreak = line_;
    } else if (key == "rule") {
      if (out_.source.rule != 0) throw ParseError(line_, key, "second rule line");
      Require(t, 2, "rule borda | rule vector <s1> ... <sm>");
      if (t[1] == "borda" && t.size() == 2) {
        instance().rule = ScoringRule::Borda();
      } else if (t[1] == "vector") {
        std::vector<Score> weights;
        for (std::size_t i = 2; i < t.size(); ++i) {
          weights.push_back(ParseInteger<Score>(t[i], line_, "an integer score"));
        }
        instance().rule = ScoringRule::Vector(std::move(weights));
      } else {
        throw ParseError(line_, t[1], "unknown rule");
      }
      out_.source.rule = line_;
    } else if (key == "cattr") {
      Require(t, 4, "cattr <attr> <group> <lb> <name> ...");
      Group g;
      g.attribute = t[1];
      g.name = t[2];
      g.lower_bound = ParseInteger<std::size_t>(t[3], line_, "a non-negative bound");
      instance().groups.groups.push_back(std::move(g));
      groups_.push_back({Names(t, 4)});
      out_.source.groups.push_back(line_);
    } else if (key == "vattr") {
      Require(t, 4, "vattr <attr> <pop> <lb> <voter> ...");
      Population p;
      p.attribute = t[1];
      p.name = t[2];
      p.lower_bound = ParseInteger<std::size_t>(t[3], line_, "a non-negative bound");
      instance().populations.populations.push_back(std::move(p));
      populations_.push_back({Names(t, 4)});
      out_.source.populations.push_back(line_);
    } else if (key == "wp") {
      Require(t, 3, "wp <attr> <pop> <name> ...");
      winners_.push_back({{t[1], line_}, {t[2], line_}, Names(t, 3)});
    } else if (key == "voter") {
      Require(t, 2, "voter <id> <name1> ... <namem>");
      instance().election.voters.push_back({t[1], {}});
      rankings_.push_back(Names(t, 2));
      out_.source.voters.push_back(line_);
    } else {
      throw ParseError(line_, key, "unknown directive");
    }
  }

  CandidateIndex Candidate(const Token& token) const {
    auto it = candidate_index_.find(token.text);
    if (it == candidate_index_.end()) {
      throw ParseError(token.line, token.text, "unknown candidate");
    }
    return it->second;
  }

  VoterIndex VoterId(const Token& token) const {
    auto it = voter_index_.find(token.text);
    if (it == voter_index_.end()) {
      throw ParseError(token.line, token.text, "unknown voter");
    }
    return it->second;
  }

  void Resolve() {
    auto& e = instance().election;
    if (e.candidates.size() != m_) {
      throw ParseError(out_.source.header, std::to_string(m_),
                       "header declares " + std::to_string(m_) +
                           " candidates, found " +
                           std::to_string(e.candidates.size()));
    }
    if (e.voters.size() != n_) {
      throw ParseError(out_.source.header, std::to_string(n_),
                       "header declares " + std::to_string(n_) +
                           " voters, found " + std::to_string(e.voters.size()));
    }
    // First declaration wins; repeats are left for Validate() to report.
    for (std::size_t c = 0; c < e.candidates.size(); ++c) {
      candidate_index_.emplace(e.candidates[c], static_cast<CandidateIndex>(c));
    }
    for (std::size_t v = 0; v < e.voters.size(); ++v) {
      voter_index_.emplace(e.voters[v].id, static_cast<VoterIndex>(v));
    }

    if (tiebreak_) {
      for (const auto& token : *tiebreak_) e.tiebreak.push_back(Candidate(token));
    } else {
      e.tiebreak = IdentityOrder(e.candidates.size());
    }
    for (std::size_t v = 0; v < e.voters.size(); ++v) {
      for (const auto& token : rankings_[v]) {
        e.voters[v].ranking.push_back(Candidate(token));
      }
    }
    auto& groups = instance().groups.groups;
    for (std::size_t g = 0; g < groups.size(); ++g) {
      for (const auto& token : groups_[g].names) {
        groups[g].members.push_back(Candidate(token));
      }
    }
    auto& pops = instance().populations.populations;
    for (std::size_t p = 0; p < pops.size(); ++p) {
      for (const auto& token : populations_[p].voters) {
        pops[p].members.push_back(VoterId(token));
      }
    }
    for (const auto& w : winners_) {
      Population* target = nullptr;
      for (auto& p : pops) {
        if (p.attribute == w.attribute.text && p.name == w.population.text) {
          target = &p;
          break;
        }
      }
      if (target == nullptr) {
        throw ParseError(w.population.line, w.population.text,
                         "wp names an undeclared population");
      }
      if (target->given_committee) {
        throw ParseError(w.population.line, w.population.text,
                         "second wp line for this population");
      }
      Committee committee;
      for (const auto& token : w.names) committee.push_back(Candidate(token));
      target->given_committee = std::move(committee);
    }
  }

  ParsedInstance out_;
  std::size_t line_ = 0;
  bool have_header_ = false;
  std::size_t m_ = 0;
  std::size_t n_ = 0;
  std::optional<std::vector<Token>> tiebreak_;
  std::vector<std::vector<Token>> rankings_;
  std::vector<PendingGroup> groups_;
  std::vector<PendingPopulation> populations_;
  std::vector<PendingWinners> winners_;
  std::unordered_map<std::string, CandidateIndex> candidate_index_;
  std::unordered_map<std::string, VoterIndex> voter_index_;
};

}  // namespace internal

inline ParsedInstance ParseElectionWithSource(std::istream& in) {
  return internal::ElectionParser().Parse(in);
}

inline DireInstance ParseElection(std::istream& in) {
  return ParseElectionWithSource(in).instance;
}

inline DireInstance ParseElection(const std::string& text) {
  std::istringstream in(text);
  return ParseElection(in);
}

inline ParsedInstance ReadElectionFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  return ParseElectionWithSource(in);
}

inline void WriteElection(std::ostream& out, const DireInstance& instance) {
  const auto& e = instance.election;
  const auto& names = e.candidates;
  out << "election " << e.num_candidates() << ' ' << e.num_voters() << ' '
      << e.committee_size << '\n';
  for (const auto& name : names) out << "candidate " << name << '\n';
  out << "tiebreak";
  for (CandidateIndex c : e.tiebreak) out << ' ' << names.at(c);
  out << '\n';
  if (instance.rule.is_borda()) {
    out << "rule borda\n";
  } else {
    out << "rule vector";
    for (Score s : instance.rule.weights) out << ' ' << s;
    out << '\n';
  }
  for (const auto& g : instance.groups.groups) {
    out << "cattr " << g.attribute << ' ' << g.name << ' ' << g.lower_bound;
    for (CandidateIndex c : g.members) out << ' ' << names.at(c);
    out << '\n';
  }
  for (const auto& p : instance.populations.populations) {
    out << "vattr " << p.attribute << ' ' << p.name << ' ' << p.lower_bound;
    for (VoterIndex v : p.members) out << ' ' << e.voters.at(v).id;
    out << '\n';
  }
  for (const auto& p : instance.populations.populations) {
    if (!p.given_committee) continue;
    out << "wp " << p.attribute << ' ' << p.name;
    for (CandidateIndex c : *p.given_committee) out << ' ' << names.at(c);
    out << '\n';
  }
  for (const auto& v : e.voters) {
    out << "voter " << v.id;
    for (CandidateIndex c : v.ranking) out << ' ' << names.at(c);
    out << '\n';
  }
}

inline std::string WriteElection(const DireInstance& instance) {
  std::ostringstream out;
  WriteElection(out, instance);
  return out.str();
}

// Resolves a list of candidate names; throws InvalidInput on unknown names.
inline std::vector<CandidateIndex> ResolveCandidates(
    const Election& election, const std::vector<std::string>& names) {
  std::vector<CandidateIndex> out;
  for (const auto& name : names) {
    auto index = election.FindCandidate(name);
    if (!index) throw InvalidInput("unknown candidate '" + name + "'");
    out.push_back(*index);
  }
  return out;
}

}  // namespace dire
