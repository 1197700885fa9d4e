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

// dire_cli: command-line front end.
//
// Exit codes: 0 ok, 1 infeasible / no answer, 2 usage or parse error,
// 3 invalid input, 4 enumeration cap exceeded.
//
// Output is one `key value ...` record per line.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dire/dire.hpp"

namespace {

enum ExitCode {
  kOk = 0,
  kNoAnswer = 1,
  kUsage = 2,
  kInvalid = 3,
  kCap = 4,
};

const char* SeverityName(dire::Severity s) {
  return s == dire::Severity::kError ? "error" : "warning";
}

void PrintIssues(const dire::ValidationReport& report,
                 const dire::SourceMap& source) {
  for (const auto& issue : report.issues) {
    std::cout << "issue " << SeverityName(issue.severity) << " line "
              << source.LineOf(issue.subject, issue.index) << ' ' << issue.rule
              << ": " << issue.message << '\n';
  }
}

// Parses and validates; throws on parse errors, returns nullopt (after
// printing the report) when the instance is invalid.
std::optional<dire::ParsedInstance> Load(const std::string& path,
                                         dire::BoundMode mode) {
  auto parsed = dire::ReadElectionFile(path);
  const auto report = dire::Validate(parsed.instance, mode);
  if (!report.valid()) {
    std::cout << "status invalid\n";
    PrintIssues(report, parsed.source);
    return std::nullopt;
  }
  return parsed;
}

std::string Names(const dire::Election& e,
                  const std::vector<dire::CandidateIndex>& committee) {
  std::string out;
  for (auto c : committee) {
    if (!out.empty()) out += ' ';
    out += e.candidates.at(c);
  }
  return out;
}

double Millis(std::chrono::nanoseconds d) {
  return std::chrono::duration<double, std::milli>(d).count();
}

dire::Graph LoadGraph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw dire::InvalidInput("cannot open '" + path + "'");
  return dire::ParseGraph(in);
}

std::string VertexList(const std::vector<dire::Vertex>& vertices) {
  std::string out;
  for (auto v : vertices) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v + 1);
  }
  return out;
}

// --- subcommands -----------------------------------------------------------

int CmdValidate(const std::string& file, const std::string& mode_name) {
  const auto mode = mode_name == "relaxed" ? dire::BoundMode::kRelaxed
                                           : dire::BoundMode::kStrict;
  const auto parsed = dire::ReadElectionFile(file);
  const auto report = dire::Validate(parsed.instance, mode);
  std::cout << "status " << (report.valid() ? "valid" : "invalid") << '\n';
  std::cout << "errors " << report.CountErrors() << '\n';
  std::cout << "warnings " << report.issues.size() - report.CountErrors()
            << '\n';
  PrintIssues(report, parsed.source);
  return report.valid() ? kOk : kInvalid;
}

int CmdSolve(const std::string& file, bool oracle) {
  const auto parsed = Load(file, dire::BoundMode::kRelaxed);
  if (!parsed) return kInvalid;
  const auto& instance = parsed->instance;
  dire::SolveOptions options;
  options.oracle_cap = dire::OracleCapFromEnv();
  const auto result =
      oracle ? dire::SolveBrute(instance, options) : dire::Solve(instance);
  std::cout << "status " << dire::ToString(result.status) << '\n';
  std::cout << "solver " << (oracle ? "oracle" : "branch-and-bound") << '\n';
  if (result.optimal()) {
    std::cout << "score " << result.score << '\n';
    std::cout << "committee " << Names(instance.election, result.committee)
              << '\n';
  }
  std::cout << "nodes " << result.nodes_explored << '\n';
  std::cout << "elapsed_ms " << Millis(result.elapsed) << '\n';
  return result.optimal() ? kOk : kNoAnswer;
}

int CmdScore(const std::string& file,
             const std::vector<std::string>& committee_names) {
  const auto parsed = Load(file, dire::BoundMode::kRelaxed);
  if (!parsed) return kInvalid;
  const auto& instance = parsed->instance;
  const auto& e = instance.election;
  const auto scores = dire::CandidateScores(instance);
  for (std::size_t c = 0; c < scores.size(); ++c) {
    std::cout << "candidate " << e.candidates[c] << ' ' << scores[c] << '\n';
  }
  const auto kborda = dire::KBorda(instance);
  std::cout << "k_borda " << Names(e, kborda) << '\n';
  if (!committee_names.empty()) {
    const auto committee = dire::ResolveCandidates(e, committee_names);
    std::cout << "committee_score " << dire::CommitteeScore(instance, committee)
              << '\n';
  }
  return kOk;
}

void PrintFairness(const dire::DireInstance& instance,
                   const std::vector<dire::CandidateIndex>& committee) {
  const auto report = dire::AuditFairness(instance, committee);
  const auto& pops = instance.populations.populations;
  for (const auto& row : report.populations) {
    std::cout << "population " << pops[row.population].label() << " utility "
              << row.utility << " weighted "
              << (row.weighted_utility ? dire::ToString(*row.weighted_utility)
                                       : std::string("undefined"))
              << " favorite_rank "
              << (row.favorite_rank ? std::to_string(*row.favorite_rank)
                                    : std::string("unbounded"))
              << '\n';
  }
  std::cout << "uec_spread " << report.uec_spread << '\n';
  std::cout << "wec_spread "
            << (report.wec_spread ? dire::ToString(*report.wec_spread)
                                  : std::string("undefined"))
            << '\n';
  std::cout << "min_fec_x "
            << (report.max_envy ? std::to_string(*report.max_envy)
                                : std::string("unbounded"))
            << '\n';
  std::cout << "min_uec_eta " << report.uec_spread << '\n';
  std::cout << "min_wec_zeta "
            << (report.wec_spread ? dire::ToString(*report.wec_spread)
                                  : std::string("undefined"))
            << '\n';
  std::cout << "is_fec " << (report.is_fec ? "true" : "false") << '\n';
  std::cout << "is_uec " << (report.is_uec ? "true" : "false") << '\n';
  std::cout << "is_wec "
            << (report.is_wec ? (*report.is_wec ? "true" : "false")
                              : "undefined")
            << '\n';
}

int CmdFairness(const std::string& file,
                const std::vector<std::string>& committee_names,
                const std::string& optimal) {
  const auto parsed = Load(file, dire::BoundMode::kRelaxed);
  if (!parsed) return kInvalid;
  const auto& instance = parsed->instance;
  std::vector<dire::CandidateIndex> committee;
  if (!optimal.empty()) {
    const auto criterion = optimal == "fec"   ? dire::FairnessCriterion::kFec
                           : optimal == "uec" ? dire::FairnessCriterion::kUec
                                              : dire::FairnessCriterion::kWec;
    dire::SolveOptions options;
    options.oracle_cap = dire::OracleCapFromEnv();
    const auto best = dire::OptimalFairDire(instance, criterion, options);
    if (!best) {
      std::cout << "status infeasible\n";
      return kNoAnswer;
    }
    std::cout << "status optimal\n";
    std::cout << "criterion " << optimal << '\n';
    std::cout << "score " << best->score << '\n';
    committee = best->committee;
  } else {
    committee = dire::ResolveCandidates(instance.election, committee_names);
  }
  std::cout << "committee " << Names(instance.election, committee) << '\n';
  PrintFairness(instance, committee);
  return kOk;
}

int CmdReduce(const std::string& graph_file, std::size_t mu, std::size_t k,
              std::uint64_t seed, std::size_t pi, const std::string& out) {
  const auto graph = LoadGraph(graph_file);
  const auto reduction = mu % 2 == 1 ? dire::ReduceOdd(graph, mu, k, seed, pi)
                                     : dire::ReduceEven(graph, mu, k, seed, pi);
  {
    std::ofstream file(out);
    if (!file) throw dire::InvalidInput("cannot write '" + out + "'");
    dire::WriteElection(file, reduction.instance);
  }
  {
    std::ofstream file(out + ".map");
    if (!file) throw dire::InvalidInput("cannot write '" + out + ".map'");
    dire::WriteProvenance(file, reduction);
  }
  const auto& e = reduction.instance.election;
  std::cout << "construction " << (reduction.doubled ? "even" : "odd") << '\n';
  std::cout << "candidates " << e.num_candidates() << '\n';
  std::cout << "dummies " << reduction.num_dummies() << '\n';
  std::cout << "voters " << e.num_voters() << '\n';
  std::cout << "groups " << reduction.instance.groups.groups.size() << '\n';
  std::cout << "populations "
            << reduction.instance.populations.populations.size() << '\n';
  std::cout << "committee_size " << e.committee_size << '\n';
  std::cout << "representation_bound " << reduction.representation_bound
            << '\n';
  std::cout << "election " << out << '\n';
  std::cout << "map " << out << ".map\n";
  return kOk;
}

int CmdVerify(const std::string& graph_file, std::size_t mu, std::size_t k,
              std::uint64_t seed, std::size_t pi) {
  const auto graph = LoadGraph(graph_file);
  const auto report = dire::VerifyEquivalence(graph, mu, k, seed, pi);
  std::cout << "vc_exists " << (report.vc_exists ? "true" : "false") << '\n';
  std::cout << "dire_exists " << (report.dire_exists ? "true" : "false")
            << '\n';
  std::cout << "agree " << (report.agree ? "true" : "false") << '\n';
  std::cout << "forced " << report.forced << '\n';
  if (report.cover) std::cout << "cover " << VertexList(*report.cover) << '\n';
  if (report.committee_cover) {
    std::cout << "committee_cover " << VertexList(*report.committee_cover)
              << '\n';
  }
  std::cout << "nodes " << report.solve.nodes_explored << '\n';
  return report.agree ? kOk : kNoAnswer;
}

int CmdGraph(std::size_t vertices, std::uint64_t seed, const std::string& out) {
  const auto graph = dire::GenerateThreeRegular(vertices, seed);
  if (out.empty()) {
    dire::WriteGraph(std::cout, graph);
    return kOk;
  }
  std::ofstream file(out);
  if (!file) throw dire::InvalidInput("cannot write '" + out + "'");
  dire::WriteGraph(file, graph);
  std::cout << "vertices " << graph.num_vertices << '\n';
  std::cout << "edges " << graph.num_edges() << '\n';
  std::cout << "graph " << out << '\n';
  return kOk;
}

int CmdVc(const std::string& graph_file, std::size_t k) {
  const auto graph = LoadGraph(graph_file);
  const auto cover = dire::FindVertexCover(graph, k);
  if (!cover) {
    std::cout << "cover none\n";
    return kNoAnswer;
  }
  std::cout << "cover " << VertexList(*cover) << '\n';
  std::cout << "size " << cover->size() << '\n';
  std::cout << "verified " << (dire::IsVertexCover(graph, *cover) ? "true" : "false")
            << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Constrained multiwinner elections: solve, audit, reduce"};
  app.require_subcommand(1);

  std::string file, mode = "strict", optimal, out;
  std::vector<std::string> committee;
  bool oracle = false;
  std::size_t mu = 3, k = 1, pi = 1, vertices = 4;
  std::uint64_t seed = 1;
  std::function<int()> run;

  auto* validate = app.add_subcommand("validate", "check an election file");
  validate->add_option("file", file, "election file")->required();
  validate->add_option("--mode", mode, "bound range")
      ->check(CLI::IsMember({"strict", "relaxed"}));
  validate->callback([&] { run = [&] { return CmdValidate(file, mode); }; });

  auto* solve = app.add_subcommand("solve", "best constrained committee");
  solve->add_option("file", file, "election file")->required();
  solve->add_flag("--oracle", oracle, "exhaustive enumeration");
  solve->callback([&] { run = [&] { return CmdSolve(file, oracle); }; });

  auto* score = app.add_subcommand("score", "candidate and committee scores");
  score->add_option("file", file, "election file")->required();
  score->add_option("--committee", committee, "candidate names");
  score->callback([&] { run = [&] { return CmdScore(file, committee); }; });

  auto* fairness = app.add_subcommand("fairness", "envy audit of a committee");
  fairness->add_option("file", file, "election file")->required();
  auto* committee_opt =
      fairness->add_option("--committee", committee, "candidate names");
  auto* optimal_opt =
      fairness->add_option("--optimal", optimal, "least-envy DiRe committee")
          ->check(CLI::IsMember({"fec", "uec", "wec"}));
  committee_opt->excludes(optimal_opt);
  fairness->callback([&] {
    if (committee.empty() && optimal.empty()) {
      throw CLI::ValidationError("fairness", "needs --committee or --optimal");
    }
    run = [&] { return CmdFairness(file, committee, optimal); };
  });

  auto* reduce = app.add_subcommand("reduce", "vertex cover -> election");
  reduce->add_option("graph", file, "graph file")->required();
  reduce->add_option("--mu", mu, "candidate attributes")->required();
  reduce->add_option("--k", k, "cover size")->required();
  reduce->add_option("--seed", seed, "matching seed");
  reduce->add_option("--pi", pi, "voter attributes");
  reduce->add_option("--out", out, "output election file")->required();
  reduce->callback(
      [&] { run = [&] { return CmdReduce(file, mu, k, seed, pi, out); }; });

  auto* verify = app.add_subcommand("verify", "check both sides agree");
  verify->add_option("graph", file, "graph file")->required();
  verify->add_option("--mu", mu, "candidate attributes (odd)")->required();
  verify->add_option("--k", k, "cover size")->required();
  verify->add_option("--seed", seed, "matching seed");
  verify->add_option("--pi", pi, "voter attributes");
  verify->callback(
      [&] { run = [&] { return CmdVerify(file, mu, k, seed, pi); }; });

  auto* graph = app.add_subcommand("graph", "random 3-regular graph");
  graph->add_option("--vertices", vertices, "even, >= 4")->required();
  graph->add_option("--seed", seed, "generator seed");
  graph->add_option("--out", out, "output file (default stdout)");
  graph->callback([&] { run = [&] { return CmdGraph(vertices, seed, out); }; });

  auto* vc = app.add_subcommand("vc", "vertex cover of size <= k");
  vc->add_option("graph", file, "graph file")->required();
  vc->add_option("--k", k, "cover size")->required();
  vc->callback([&] { run = [&] { return CmdVc(file, k); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    return run();
  } catch (const dire::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const dire::CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << '\n';
    return kCap;
  } catch (const dire::Error& e) {
    std::cerr << "invalid: " << e.what() << '\n';
    return kInvalid;
  }
}
