// Copyright 2026 The rauzylab Authors
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

#ifndef RAUZYLAB_RAUZY_HPP_
#define RAUZYLAB_RAUZY_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rauzylab/complexity.hpp"
#include "rauzylab/factor_index.hpp"
#include "rauzylab/report.hpp"
#include "rauzylab/word.hpp"

namespace rauzylab {

// Positions are 0-based; counts are taken inside the graph's window.
struct RauzyVertex {
  FactorRef factor;
  std::size_t first = 0;
  std::size_t count = 0;
  // Occurs once, at the start of the window.
  bool prefix_only = false;
};

struct RauzyEdge {
  FactorRef factor;  // the (n+1)-factor
  std::size_t from = 0;
  std::size_t to = 0;
  std::size_t first = 0;
  std::size_t count = 0;
};

// G_n of the suffix x[window_start, L). The full graph has window_start 0;
// the reduced graph G'_n uses window_start = s_{n+1}.
struct RauzyGraph {
  std::size_t level = 0;
  bool reduced = false;
  std::size_t window_start = 0;
  std::vector<RauzyVertex> vertices;  // ordered by first occurrence
  std::vector<RauzyEdge> edges;       // ordered by first occurrence
  std::vector<std::vector<std::size_t>> out;  // edge ids per vertex
  std::vector<std::vector<std::size_t>> in;

  std::optional<std::size_t> find_vertex(const Word& word,
                                         std::span<const Letter> f) const;
};

RauzyGraph build_rauzy(const FactorIndex& index, std::size_t n,
                       std::size_t window_start = 0);

// G'_n from the splits at levels n and n + 1. Throws HorizonError when
// either split is uncertain.
RauzyGraph reduce(const FactorIndex& index, const RauzyGraph& graph,
                  const RecurrenceSplit& split_n,
                  const RecurrenceSplit& split_n1);

struct SpecialVertices {
  std::vector<std::size_t> left;
  std::vector<std::size_t> right;
  std::vector<std::size_t> bispecial;
};

SpecialVertices classify_special(const RauzyGraph& graph);

struct EssentialResult {
  enum class Status { kFound, kNone, kAmbiguous };
  Status status = Status::kNone;
  Letters factor;  // the n-letter word when found
  std::size_t depth_used = 0;
  std::vector<Letters> candidates;
};

// n-factors that are suffixes of right-special words of every length m in
// [n, n + depth]. Applied at length n + 1 it names the edge that ends the
// special cycle of G_n.
EssentialResult essential_right_special(const FactorIndex& index,
                                        std::size_t n, std::size_t depth);

// Closed walk w -> ... -> w. `vertices` are ids into the graph it was read
// from; `spelled` has n + length() letters.
struct CyclePath {
  std::vector<std::size_t> vertices;
  Letters spelled;
  std::size_t length() const { return vertices.empty() ? 0 : vertices.size() - 1; }
};

struct InfinityConfig {
  std::size_t n = 0;
  Letters w;
  CyclePath special;  // U
  CyclePath other;    // V
  std::size_t k = 0;
  std::size_t l = 0;
  std::size_t multiplicity = 0;  // b
  // b with U V^b U occurring twice in z_{n+1}.
  std::vector<std::size_t> recurrent_multiplicities;
  // b with U V^b U occurring anywhere in the prefix.
  std::vector<std::size_t> observed_multiplicities;
  std::optional<std::size_t> uu_position;    // first occurrence in z_{n+1}
  std::optional<std::size_t> uvbu_position;  // first occurrence in z_{n+1}
  std::size_t window_start = 0;              // s_{n+1}
  std::size_t essential_depth = 0;
};

// Word spelled by U V^b U.
Letters spell_uvbu(const InfinityConfig& config, std::size_t b);
// Word spelled by U U.
Letters spell_uu(const InfinityConfig& config);

struct ShapeResult {
  enum class Status { kInfinity, kNotInfinity, kUncertified };
  Status status = Status::kNotInfinity;
  std::string reason;
  std::optional<InfinityConfig> config;
  // More than one recurrent multiplicity.
  bool multiplicity_violation = false;

  bool is_infinity() const { return status == Status::kInfinity; }
};

struct ShapeOptions {
  std::size_t essential_depth = 0;  // 0 picks 2n + 8
};

ShapeResult detect_infinity_shape(const RauzyGraph& reduced,
                                  const FactorIndex& index,
                                  ShapeOptions options = {});

// Structural checks over levels 1..n_max: out-degree identity, boundary
// bispecial word at every jump of s_n, recurrence propagation when
// p(n+1) = p(n) + 1, the shape dichotomy at such levels, and the vertex
// count of every figure-eight reduced graph.
Report check_graph_lemmas(const FactorIndex& index,
                          const ComplexityProfile& profile, std::size_t n_max,
                          bool aperiodic, std::size_t guard = kDefaultGuard);

// DOT text. Special vertices are double circles. When `full` is given, its
// elements missing from `graph` are drawn dashed.
std::string export_dot(const RauzyGraph& graph, const Word& word,
                       const RauzyGraph* full = nullptr,
                       const ShapeResult* shape = nullptr);

}  // namespace rauzylab

#endif  // RAUZYLAB_RAUZY_HPP_
