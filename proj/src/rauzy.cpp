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

#include "rauzylab/rauzy.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>
#include <unordered_set>

#include "rauzylab/errors.hpp"

namespace rauzylab {
namespace {

constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();

Letters copy_of(const Word& word, FactorRef f) {
  auto v = word.view(f.pos, f.len);
  return Letters(v.begin(), v.end());
}

std::string key_of(const Word& word, FactorRef f) {
  return letters_str(word.view(f.pos, f.len));
}

}  // namespace

std::optional<std::size_t> RauzyGraph::find_vertex(
    const Word& word, std::span<const Letter> f) const {
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    auto view = word.view(vertices[v].factor.pos, vertices[v].factor.len);
    if (std::equal(view.begin(), view.end(), f.begin(), f.end())) return v;
  }
  return std::nullopt;
}

RauzyGraph build_rauzy(const FactorIndex& index, std::size_t n,
                       std::size_t window_start) {
  const std::size_t len = index.size();
  if (n == 0) throw DomainError("Rauzy graph needs n >= 1");
  if (window_start >= len || len - window_start < n + 2) {
    throw DomainError("Rauzy graph at level " + std::to_string(n) +
                      " needs more than n + 1 letters");
  }
  RauzyGraph g;
  g.level = n;
  g.window_start = window_start;
  LevelPartition pv = index.partition(n);
  LevelPartition pe = index.partition(n + 1);
  std::vector<std::uint32_t> vid(pv.class_count, kUnset);
  for (std::size_t i = window_start; i + n <= len; ++i) {
    std::uint32_t& id = vid[pv.class_of[i]];
    if (id == kUnset) {
      id = static_cast<std::uint32_t>(g.vertices.size());
      g.vertices.push_back({{i, n}, i, 0, false});
    }
    ++g.vertices[id].count;
  }
  std::vector<std::uint32_t> eid(pe.class_count, kUnset);
  g.out.resize(g.vertices.size());
  g.in.resize(g.vertices.size());
  for (std::size_t i = window_start; i + n + 1 <= len; ++i) {
    std::uint32_t& id = eid[pe.class_of[i]];
    if (id == kUnset) {
      id = static_cast<std::uint32_t>(g.edges.size());
      std::size_t from = vid[pv.class_of[i]];
      std::size_t to = vid[pv.class_of[i + 1]];
      g.edges.push_back({{i, n + 1}, from, to, i, 0});
      g.out[from].push_back(id);
      g.in[to].push_back(id);
    }
    ++g.edges[id].count;
  }
  for (RauzyVertex& v : g.vertices) {
    v.prefix_only = v.count == 1 && v.first == window_start;
  }
  return g;
}

RauzyGraph reduce(const FactorIndex& index, const RauzyGraph& graph,
                  const RecurrenceSplit& split_n,
                  const RecurrenceSplit& split_n1) {
  const std::size_t n = graph.level;
  if (split_n.n != n || split_n1.n != n + 1) {
    throw DomainError("reduce needs the splits at levels n and n + 1");
  }
  for (const RecurrenceSplit* s : {&split_n, &split_n1}) {
    if (s->uncertain) {
      throw HorizonError("reduced graph at level " + std::to_string(n) +
                             " is uncertain (" + s->reason + ")",
                         2 * index.size());
    }
  }
  RauzyGraph g = build_rauzy(index, n, split_n1.s);
  g.reduced = true;
  return g;
}

SpecialVertices classify_special(const RauzyGraph& graph) {
  SpecialVertices sv;
  for (std::size_t v = 0; v < graph.vertices.size(); ++v) {
    bool right = graph.out[v].size() >= 2;
    bool left = graph.in[v].size() >= 2;
    if (right) sv.right.push_back(v);
    if (left) sv.left.push_back(v);
    if (right && left) sv.bispecial.push_back(v);
  }
  return sv;
}

EssentialResult essential_right_special(const FactorIndex& index,
                                        std::size_t n, std::size_t depth) {
  EssentialResult res;
  const Word& word = index.word();
  const std::size_t cap = index.size() / 2;
  std::set<Letters> current;
  // Suffix sets shrink as m grows, since a suffix of a right-special word
  // is right-special.
  for (std::size_t m = n; m <= n + depth && m <= cap; ++m) {
    std::set<Letters> next;
    for (const SpecialFactor& f : index.right_special(m)) {
      auto v = word.view(f.factor.pos + m - n, n);
      next.emplace(v.begin(), v.end());
    }
    current = std::move(next);
    res.depth_used = m - n;
    if (current.size() <= 1) break;
  }
  res.candidates.assign(current.begin(), current.end());
  if (current.size() == 1) {
    res.status = EssentialResult::Status::kFound;
    res.factor = *current.begin();
  } else if (current.empty()) {
    res.status = EssentialResult::Status::kNone;
  } else {
    res.status = EssentialResult::Status::kAmbiguous;
  }
  return res;
}

Letters spell_uvbu(const InfinityConfig& c, std::size_t b) {
  const std::size_t n = c.n;
  Letters out = c.special.spelled;
  for (std::size_t j = 0; j < b; ++j) {
    out.insert(out.end(), c.other.spelled.begin() + n, c.other.spelled.end());
  }
  out.insert(out.end(), c.special.spelled.begin() + n,
             c.special.spelled.end());
  return out;
}

Letters spell_uu(const InfinityConfig& c) { return spell_uvbu(c, 0); }

ShapeResult detect_infinity_shape(const RauzyGraph& g,
                                  const FactorIndex& index,
                                  ShapeOptions options) {
  using Status = ShapeResult::Status;
  ShapeResult res;
  const Word& word = index.word();
  const std::size_t n = g.level;
  std::vector<std::size_t> special;
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    if (g.out[v].size() != 1 || g.in[v].size() != 1) special.push_back(v);
  }
  if (special.size() != 1) {
    res.reason = std::to_string(special.size()) + " special vertices";
    return res;
  }
  const std::size_t w = special[0];
  if (g.out[w].size() != 2 || g.in[w].size() != 2) {
    res.reason = "special vertex has in/out degree " +
                 std::to_string(g.in[w].size()) + "/" +
                 std::to_string(g.out[w].size());
    return res;
  }
  std::vector<CyclePath> cycles;
  std::vector<bool> seen(g.vertices.size(), false);
  for (std::size_t e : g.out[w]) {
    CyclePath c;
    c.vertices.push_back(w);
    c.spelled = copy_of(word, g.vertices[w].factor);
    std::size_t cur = g.edges[e].to;
    while (true) {
      c.vertices.push_back(cur);
      c.spelled.push_back(word[g.vertices[cur].factor.pos + n - 1]);
      if (cur == w) break;
      if (seen[cur] || g.out[cur].size() != 1) {
        res.reason = "walk from the special vertex does not close";
        return res;
      }
      seen[cur] = true;
      cur = g.edges[g.out[cur][0]].to;
    }
    cycles.push_back(std::move(c));
  }
  if (cycles[0].length() + cycles[1].length() != g.vertices.size() + 1) {
    res.reason = "vertices outside the two cycles";
    return res;
  }

  InfinityConfig cfg;
  cfg.n = n;
  cfg.w = copy_of(word, g.vertices[w].factor);
  cfg.window_start = g.window_start;
  std::size_t depth =
      options.essential_depth ? options.essential_depth : 2 * n + 8;
  EssentialResult ers = essential_right_special(index, n + 1, depth);
  cfg.essential_depth = ers.depth_used;
  auto last_edge = [&](const CyclePath& c) {
    return Letters(c.spelled.end() - (n + 1), c.spelled.end());
  };
  std::size_t u = 0;
  if (ers.status == EssentialResult::Status::kFound) {
    if (last_edge(cycles[0]) == ers.factor) {
      u = 0;
    } else if (last_edge(cycles[1]) == ers.factor) {
      u = 1;
    } else {
      res.status = Status::kUncertified;
      res.reason = "essential right-special edge " + letters_str(ers.factor) +
                   " ends neither cycle";
    }
  } else {
    res.status = Status::kUncertified;
    res.reason = ers.status == EssentialResult::Status::kNone
                     ? "no essential right-special edge certified"
                     : "special cycle ambiguous at depth " +
                           std::to_string(depth);
  }
  cfg.special = cycles[u];
  cfg.other = cycles[1 - u];
  cfg.k = cfg.special.length();
  cfg.l = cfg.other.length();

  const std::size_t s = g.window_start;
  Letters uu = spell_uu(cfg);
  auto uu_occ = index.occurrences(uu, s);
  if (uu_occ.size() >= 2) cfg.uu_position = uu_occ.front();
  for (std::size_t b = 1;; ++b) {
    Letters probe = spell_uvbu(cfg, b);
    Letters head(probe.begin(), probe.end() - cfg.k);
    if (index.count(head) == 0) break;
    if (index.count(probe) > 0) cfg.observed_multiplicities.push_back(b);
    auto occ = index.occurrences(probe, s);
    if (occ.size() >= 2) {
      cfg.recurrent_multiplicities.push_back(b);
      if (!cfg.uvbu_position) cfg.uvbu_position = occ.front();
    }
  }
  if (!cfg.recurrent_multiplicities.empty()) {
    cfg.multiplicity = cfg.recurrent_multiplicities.back();
    res.multiplicity_violation = cfg.recurrent_multiplicities.size() > 1;
  } else if (res.status != Status::kUncertified) {
    res.status = Status::kUncertified;
    res.reason = "no recurrent U V^b U at this horizon";
  }
  if (res.status != Status::kUncertified) res.status = Status::kInfinity;
  res.config = std::move(cfg);
  return res;
}

std::string export_dot(const RauzyGraph& graph, const Word& word,
                       const RauzyGraph* full, const ShapeResult* shape) {
  const RauzyGraph& base = full ? *full : graph;
  std::unordered_set<std::string> kept_v;
  std::unordered_set<std::string> kept_e;
  for (const auto& v : graph.vertices) kept_v.insert(key_of(word, v.factor));
  for (const auto& e : graph.edges) kept_e.insert(key_of(word, e.factor));
  std::vector<bool> special(base.vertices.size(), false);
  for (std::size_t v = 0; v < graph.vertices.size(); ++v) {
    if (graph.out[v].size() >= 2 || graph.in[v].size() >= 2) {
      auto id = base.find_vertex(word, word.view(graph.vertices[v].factor.pos,
                                                 graph.level));
      if (id) special[*id] = true;
    }
  }
  std::ostringstream os;
  os << "digraph G" << graph.level << " {\n";
  os << "  graph [label=\"level " << graph.level
     << (graph.reduced ? ", reduced" : "");
  if (shape) os << ", infinity-shape: " << (shape->is_infinity() ? "yes" : "no");
  os << "\"];\n";
  os << "  node [shape=circle];\n";
  for (std::size_t v = 0; v < base.vertices.size(); ++v) {
    std::string label = key_of(word, base.vertices[v].factor);
    os << "  v" << v << " [label=\"" << label << "\"";
    if (special[v]) os << ", shape=doublecircle";
    if (!kept_v.count(label)) os << ", style=dashed";
    os << "];\n";
  }
  for (const auto& e : base.edges) {
    std::string label = key_of(word, e.factor);
    os << "  v" << e.from << " -> v" << e.to << " [label=\"" << label << "\"";
    if (!kept_e.count(label)) os << ", style=dashed";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace rauzylab

namespace rauzylab {
namespace {

// Distinct letters before and after occurrences of x[pos, pos + len) that
// start at or after `from`.
std::pair<std::size_t, std::size_t> extension_counts(const FactorIndex& index,
                                                     std::size_t pos,
                                                     std::size_t len,
                                                     std::size_t from) {
  const Word& word = index.word();
  std::set<Letter> left;
  std::set<Letter> right;
  for (std::size_t p : index.occurrences(word.view(pos, len), from)) {
    if (p > from) left.insert(word[p - 1]);
    if (p + len < word.size()) right.insert(word[p + len]);
  }
  return {left.size(), right.size()};
}

bool has_shape(const ShapeResult& r) {
  return r.status != ShapeResult::Status::kNotInfinity;
}

}  // namespace

Report check_graph_lemmas(const FactorIndex& index,
                          const ComplexityProfile& profile, std::size_t n_max,
                          bool aperiodic, std::size_t guard) {
  Report rep;
  const Word& word = index.word();
  n_max = std::min(n_max, profile.n_max - 1);
  std::vector<std::optional<RecurrenceSplit>> splits(n_max + 3);
  auto split_at = [&](std::size_t n) -> const RecurrenceSplit* {
    if (n >= splits.size()) splits.resize(n + 1);
    if (!splits[n]) {
      try {
        splits[n] = recurrence_split(index, n, guard);
      } catch (const HorizonError&) {
        return nullptr;
      }
    }
    return splits[n]->uncertain ? nullptr : &*splits[n];
  };
  auto shape_at = [&](std::size_t n) -> std::optional<ShapeResult> {
    const RecurrenceSplit* a = split_at(n);
    const RecurrenceSplit* b = split_at(n + 1);
    if (!a || !b) return std::nullopt;
    RauzyGraph g = build_rauzy(index, n, b->s);
    g.reduced = true;
    return detect_infinity_shape(g, index);
  };

  for (std::size_t n = 1; n <= n_max; ++n) {
    const std::string subject = "n=" + std::to_string(n);
    const bool sat = profile.saturated[n] && profile.saturated[n + 1];
    if (sat) {
      RauzyGraph g = build_rauzy(index, n);
      long long rhs = 0;
      for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        if (g.out[v].size() >= 2) rhs += g.out[v].size() - 1;
        if (g.out[v].empty()) --rhs;
      }
      long long lhs = static_cast<long long>(profile.p[n + 1]) -
                      static_cast<long long>(profile.p[n]);
      rep.add("degree-identity", subject, lhs == rhs,
              "p(n+1)-p(n)=" + std::to_string(lhs) +
                  " sum(outdeg-1)-dead_ends=" + std::to_string(rhs));
    }

    const RecurrenceSplit* sn = split_at(n);
    const RecurrenceSplit* sn1 = split_at(n + 1);
    if (!sn || !sn1) break;

    if (n >= 2 && sn1->s > sn->s) {
      const std::size_t s = sn1->s;
      auto [wl, wr] = extension_counts(index, s, n - 1, sn->s);
      std::size_t in_zn = index.count(word.view(s - 1, n + 1), sn->s);
      std::size_t in_zn1 = index.count(word.view(s - 1, n + 1), s);
      auto [yl, yr] = extension_counts(index, s, n, sn->s);
      (void)yr;
      bool ok = wl >= 2 && wr >= 2 && in_zn >= 1 && in_zn1 == 0 && yl >= 2;
      rep.add("boundary-bispecial", subject, ok,
              "s_n=" + std::to_string(sn->s) + " s_{n+1}=" +
                  std::to_string(s) + " w=" +
                  letters_str(word.view(s, n - 1)) + " ext " +
                  std::to_string(wl) + "/" + std::to_string(wr));
    }

    const bool step = sat && profile.p[n + 1] == profile.p[n] + 1;
    if (aperiodic && step && sn->s == 0) {
      rep.add("recurrence-step", subject, sn1->s == 0,
              "s_{n+1}=" + std::to_string(sn1->s));
    }

    std::optional<ShapeResult> shape = shape_at(n);
    if (!shape) continue;
    if (has_shape(*shape)) {
      const InfinityConfig& c = *shape->config;
      std::size_t pz = index.distinct_count(n, sn1->s);
      std::size_t pz1 = index.distinct_count(n + 1, sn1->s);
      rep.add("shape-count", subject, pz1 == pz + 1 && c.k + c.l == pz + 1,
              "k+l=" + std::to_string(c.k + c.l) +
                  " p(n,z)=" + std::to_string(pz) +
                  " p(n+1,z)=" + std::to_string(pz1));
    }
    if (aperiodic && step) {
      if (has_shape(*shape)) {
        rep.add("dichotomy", subject, true, "figure-eight");
        continue;
      }
      RauzyGraph g = build_rauzy(index, n, sn1->s);
      SpecialVertices sv = classify_special(g);
      if (sv.right.size() != 1 || sv.left.size() != 1 ||
          sv.right[0] == sv.left[0]) {
        rep.add("dichotomy", subject, false, shape->reason);
        continue;
      }
      std::size_t d = 0;
      for (std::size_t v = sv.left[0]; v != sv.right[0] && d <= g.vertices.size();
           ++d) {
        v = g.edges[g.out[v][0]].to;
      }
      std::optional<ShapeResult> later;
      if (n + d <= profile.n_max) later = shape_at(n + d);
      if (!later) {
        rep.add("dichotomy", subject, CheckStatus::kSkipped,
                "level n+" + std::to_string(d) + " not certified");
      } else {
        rep.add("dichotomy", subject, has_shape(*later),
                "separated specials, figure-eight at n+" + std::to_string(d));
      }
    }
  }
  return rep;
}

}  // namespace rauzylab
