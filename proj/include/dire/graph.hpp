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

// Simple undirected graphs, random 3-regular generation and a brute-force
// vertex cover oracle.

#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <random>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "dire/error.hpp"

namespace dire {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;  // stored with first < second

struct Graph {
  std::size_t num_vertices = 0;
  std::vector<Edge> edges;  // 0-based endpoints

  std::size_t num_edges() const { return edges.size(); }

  std::vector<std::size_t> Degrees() const {
    std::vector<std::size_t> degree(num_vertices, 0);
    for (const auto& [u, v] : edges) {
      if (u < num_vertices) ++degree[u];
      if (v < num_vertices) ++degree[v];
    }
    return degree;
  }

  bool operator==(const Graph&) const = default;
};

inline Edge MakeEdge(Vertex u, Vertex v) {
  return u < v ? Edge{u, v} : Edge{v, u};
}

// Throws InvalidInput on self-loops, repeated edges or bad endpoints.
inline void RequireSimple(const Graph& graph) {
  std::vector<Edge> seen;
  for (const auto& [u, v] : graph.edges) {
    if (u >= graph.num_vertices || v >= graph.num_vertices) {
      throw InvalidInput("edge endpoint out of range");
    }
    if (u == v) {
      throw InvalidInput("self-loop at vertex " + std::to_string(u + 1));
    }
    seen.push_back(MakeEdge(u, v));
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
    throw InvalidInput("graph has a repeated edge");
  }
}

inline bool IsThreeRegular(const Graph& graph) {
  try {
    RequireSimple(graph);
  } catch (const InvalidInput&) {
    return false;
  }
  const auto degree = graph.Degrees();
  return graph.num_vertices > 0 &&
         std::all_of(degree.begin(), degree.end(),
                     [](std::size_t d) { return d == 3; });
}

inline Graph CompleteGraph(std::size_t n) {
  Graph g{n, {}};
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) g.edges.emplace_back(u, v);
  }
  return g;
}

namespace internal {

// Uniform draw in [0, bound) by rejection. std::uniform_int_distribution is
// implementation-defined, which would make generated graphs differ across
// standard libraries.
inline std::uint64_t UniformBelow(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

template <typename T>
void Shuffle(std::vector<T>& items, std::mt19937_64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::swap(items[i - 1], items[UniformBelow(rng, i)]);
  }
}

}  // namespace internal

// Pairing model: three stubs per vertex, a uniformly random perfect matching
// of stubs, rejected and redrawn until it has no loops or repeated edges.
inline Graph GenerateThreeRegular(std::size_t num_vertices,
                                  std::uint64_t seed) {
  if (num_vertices < 4 || num_vertices % 2 != 0) {
    throw InvalidInput("3-regular graphs need an even vertex count >= 4, got " +
                       std::to_string(num_vertices));
  }
  std::mt19937_64 rng(seed);
  std::vector<Vertex> stubs;
  for (Vertex v = 0; v < num_vertices; ++v) {
    stubs.insert(stubs.end(), {v, v, v});
  }
  while (true) {
    internal::Shuffle(stubs, rng);
    Graph g{num_vertices, {}};
    bool ok = true;
    for (std::size_t i = 0; i < stubs.size() && ok; i += 2) {
      if (stubs[i] == stubs[i + 1]) ok = false;
      g.edges.push_back(MakeEdge(stubs[i], stubs[i + 1]));
    }
    if (!ok) continue;
    std::sort(g.edges.begin(), g.edges.end());
    if (std::adjacent_find(g.edges.begin(), g.edges.end()) != g.edges.end()) {
      continue;
    }
    return g;
  }
}

inline bool IsVertexCover(const Graph& graph, std::span<const Vertex> cover) {
  std::vector<char> in(graph.num_vertices, 0);
  for (Vertex v : cover) {
    if (v >= graph.num_vertices) return false;
    in[v] = 1;
  }
  return std::all_of(graph.edges.begin(), graph.edges.end(),
                     [&](const Edge& e) { return in[e.first] || in[e.second]; });
}

struct VertexCoverOptions {
  std::size_t max_vertices = 24;
};

namespace internal {

inline void CheckVertexCap(const Graph& graph,
                           const VertexCoverOptions& options) {
  if (graph.num_vertices > options.max_vertices || graph.num_vertices > 62) {
    throw CapExceeded("vertex cover brute force is capped at " +
                      std::to_string(options.max_vertices) + " vertices, graph has " +
                      std::to_string(graph.num_vertices));
  }
}

inline std::vector<Vertex> MaskToVertices(std::uint64_t mask) {
  std::vector<Vertex> out;
  for (Vertex v = 0; mask != 0; ++v, mask >>= 1) {
    if (mask & 1) out.push_back(v);
  }
  return out;
}

// Calls visit(mask) for every vertex subset of exactly `size` vertices, in
// increasing numeric order; stops when visit returns false.
template <typename Visit>
void ForEachMaskOfSize(std::size_t n, std::size_t size, Visit&& visit) {
  if (size > n) return;
  if (size == 0) {
    visit(std::uint64_t{0});
    return;
  }
  std::uint64_t mask = (std::uint64_t{1} << size) - 1;
  const std::uint64_t end = std::uint64_t{1} << n;
  while (mask < end) {
    if (!visit(mask)) return;
    // Gosper's hack: next integer with the same popcount.
    const std::uint64_t low = mask & (~mask + 1);
    const std::uint64_t ripple = mask + low;
    mask = (((ripple ^ mask) >> 2) / low) | ripple;
  }
}

inline bool MaskCovers(const std::vector<std::uint64_t>& edge_masks,
                       std::uint64_t mask) {
  for (std::uint64_t e : edge_masks) {
    if ((e & mask) == 0) return false;
  }
  return true;
}

inline std::vector<std::uint64_t> EdgeMasks(const Graph& graph) {
  std::vector<std::uint64_t> out;
  for (const auto& [u, v] : graph.edges) {
    out.push_back((std::uint64_t{1} << u) | (std::uint64_t{1} << v));
  }
  return out;
}

}  // namespace internal

// A smallest vertex cover of size at most k, or nullopt when none exists.
inline std::optional<std::vector<Vertex>> FindVertexCover(
    const Graph& graph, std::size_t k, const VertexCoverOptions& options = {}) {
  internal::CheckVertexCap(graph, options);
  const auto edge_masks = internal::EdgeMasks(graph);
  for (std::size_t size = 0; size <= std::min(k, graph.num_vertices); ++size) {
    std::optional<std::uint64_t> hit;
    internal::ForEachMaskOfSize(graph.num_vertices, size, [&](std::uint64_t m) {
      if (internal::MaskCovers(edge_masks, m)) {
        hit = m;
        return false;
      }
      return true;
    });
    if (hit) return internal::MaskToVertices(*hit);
  }
  return std::nullopt;
}

inline std::size_t MinimumVertexCoverSize(
    const Graph& graph, const VertexCoverOptions& options = {}) {
  return FindVertexCover(graph, graph.num_vertices, options)->size();
}

// Every vertex cover with exactly `size` vertices, in increasing mask order.
inline std::vector<std::vector<Vertex>> AllVertexCoversOfSize(
    const Graph& graph, std::size_t size,
    const VertexCoverOptions& options = {}) {
  internal::CheckVertexCap(graph, options);
  const auto edge_masks = internal::EdgeMasks(graph);
  std::vector<std::vector<Vertex>> out;
  internal::ForEachMaskOfSize(graph.num_vertices, size, [&](std::uint64_t m) {
    if (internal::MaskCovers(edge_masks, m)) {
      out.push_back(internal::MaskToVertices(m));
    }
    return true;
  });
  return out;
}

// ---------------------------------------------------------------------------
// Text format:
//   graph <m> <n>
//   edge <u> <v>      (n lines, 1-based vertices)
// '#' starts a comment.

inline Graph ParseGraph(std::istream& in) {
  Graph g;
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t declared_edges = 0;
  auto to_count = [&](const std::string& tok) -> std::size_t {
    std::size_t used = 0;
    unsigned long long value = 0;
    try {
      if (!tok.empty() && tok[0] != '-') value = std::stoull(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != tok.size()) {
      throw ParseError(line_no, tok, "expected a non-negative integer");
    }
    return static_cast<std::size_t>(value);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream tokens(line);
    std::vector<std::string> t;
    for (std::string tok; tokens >> tok;) t.push_back(tok);
    if (t.empty()) continue;
    if (!have_header) {
      if (t[0] != "graph" || t.size() != 3) {
        throw ParseError(line_no, t[0], "expected header 'graph <m> <n>'");
      }
      g.num_vertices = to_count(t[1]);
      declared_edges = to_count(t[2]);
      have_header = true;
      continue;
    }
    if (t[0] != "edge" || t.size() != 3) {
      throw ParseError(line_no, t[0], "expected 'edge <u> <v>'");
    }
    const std::size_t u = to_count(t[1]);
    const std::size_t v = to_count(t[2]);
    if (u < 1 || u > g.num_vertices) throw ParseError(line_no, t[1], "vertex out of range");
    if (v < 1 || v > g.num_vertices) throw ParseError(line_no, t[2], "vertex out of range");
    g.edges.push_back(
        MakeEdge(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1)));
  }
  if (!have_header) throw ParseError(line_no, "", "missing 'graph' header");
  if (g.edges.size() != declared_edges) {
    throw ParseError(line_no, "",
                     "header declares " + std::to_string(declared_edges) +
                         " edges, found " + std::to_string(g.edges.size()));
  }
  return g;
}

inline Graph ParseGraph(const std::string& text) {
  std::istringstream in(text);
  return ParseGraph(in);
}

inline void WriteGraph(std::ostream& out, const Graph& graph) {
  out << "graph " << graph.num_vertices << ' ' << graph.num_edges() << '\n';
  for (const auto& [u, v] : graph.edges) {
    out << "edge " << (u + 1) << ' ' << (v + 1) << '\n';
  }
}

}  // namespace dire
