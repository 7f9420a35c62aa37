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

#include <set>
#include <string>

#include "doctest.h"
#include "oracles.hpp"
#include "rauzylab/complexity.hpp"
#include "rauzylab/errors.hpp"
#include "rauzylab/rauzy.hpp"

using namespace rauzylab;

namespace {

const char* const kFib = "subst:0->01,1->0";
const char* const kBounded = "subst:2->21,0->0,1->10";

FactorIndex index_of(const std::string& spec, std::size_t len) {
  return FactorIndex(parse_source_spec(spec)->materialize(len));
}

std::string label(const Word& w, FactorRef f) {
  return letters_str(w.view(f.pos, f.len));
}

std::set<std::string> vertex_set(const RauzyGraph& g, const Word& w) {
  std::set<std::string> out;
  for (const auto& v : g.vertices) out.insert(label(w, v.factor));
  return out;
}

std::set<std::string> edge_set(const RauzyGraph& g, const Word& w) {
  std::set<std::string> out;
  for (const auto& e : g.edges) {
    out.insert(label(w, e.factor) + ":" + label(w, g.vertices[e.from].factor) +
               ">" + label(w, g.vertices[e.to].factor));
  }
  return out;
}

std::set<std::string> labels(const RauzyGraph& g, const Word& w,
                              const std::vector<std::size_t>& ids) {
  std::set<std::string> out;
  for (std::size_t id : ids) out.insert(label(w, g.vertices[id].factor));
  return out;
}

RauzyGraph reduced_at(const FactorIndex& index, std::size_t n) {
  RauzyGraph full = build_rauzy(index, n);
  return reduce(index, full, recurrence_split(index, n),
                recurrence_split(index, n + 1));
}

}  // namespace

TEST_CASE("fibonacci first graph") {
  FactorIndex fib = index_of(kFib, 2000);
  const Word& w = fib.word();
  RauzyGraph g = build_rauzy(fib, 1);
  CHECK(vertex_set(g, w) == std::set<std::string>{"0", "1"});
  CHECK(edge_set(g, w) ==
        std::set<std::string>{"00:0>0", "01:0>1", "10:1>0"});
  CHECK(label(w, g.vertices[0].factor) == "0");
}

TEST_CASE("graph matches brute force") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 40; ++t) {
    std::string s = oracle::random_word(rng, 60 + t * 5, 2 + t % 3);
    Word w = Word::from_digits(s);
    FactorIndex index(w);
    for (std::size_t n = 1; n <= 6; ++n) {
      for (std::size_t start : {std::size_t{0}, std::size_t{7}}) {
        RauzyGraph g = build_rauzy(index, n, start);
        std::string tail = s.substr(start);
        CHECK(vertex_set(g, w) == oracle::factors(tail, n));
        std::set<std::string> edges;
        for (const auto& f : oracle::factors(tail, n + 1)) {
          edges.insert(f + ":" + f.substr(0, n) + ">" + f.substr(1));
        }
        CHECK(edge_set(g, w) == edges);
        for (const auto& v : g.vertices) {
          CHECK(v.count == oracle::count_in(s, label(w, v.factor), start));
          CHECK(v.first >= start);
          CHECK(s.substr(v.first, n) == label(w, v.factor));
        }
        for (std::size_t i = 1; i < g.vertices.size(); ++i) {
          CHECK(g.vertices[i - 1].first < g.vertices[i].first);
        }
      }
    }
  }
}

TEST_CASE("periodic graphs are cycles") {
  FactorIndex per = index_of("periodic:01", 500);
  for (std::size_t n = 1; n <= 6; ++n) {
    RauzyGraph g = build_rauzy(per, n);
    CHECK(g.vertices.size() == 2);
    CHECK(g.edges.size() == 2);
    for (std::size_t v = 0; v < 2; ++v) {
      CHECK(g.out[v].size() == 1);
      CHECK(g.in[v].size() == 1);
    }
    SpecialVertices sv = classify_special(g);
    CHECK(sv.left.empty());
    CHECK(sv.right.empty());
  }
  FactorIndex ev = index_of("eventually:0010|011", 3000);
  ComplexityProfile prof = complexity_profile(ev, 20);
  for (std::size_t n = 1; n < 20; ++n) {
    if (prof.p[n] != prof.p[n + 1]) continue;
    RauzyGraph g = build_rauzy(ev, n);
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
      CHECK(g.out[v].size() <= 1);
    }
  }
}

TEST_CASE("reduced graph examples") {
  FactorIndex fib = index_of(kFib, 5000);
  for (std::size_t n = 1; n <= 8; ++n) {
    RauzyGraph full = build_rauzy(fib, n);
    RauzyGraph red = reduced_at(fib, n);
    CHECK(red.reduced);
    CHECK(red.vertices.size() == full.vertices.size());
    CHECK(red.edges.size() == full.edges.size());
  }

  FactorIndex tail = index_of("concat:1|periodic:0", 400);
  const Word& w = tail.word();
  RauzyGraph full = build_rauzy(tail, 1);
  RauzyGraph red = reduced_at(tail, 1);
  CHECK(vertex_set(full, w) == std::set<std::string>{"0", "1"});
  CHECK(vertex_set(red, w) == std::set<std::string>{"0"});
  CHECK(edge_set(red, w) == std::set<std::string>{"00:0>0"});

  FactorIndex pre = index_of("concat:11|" + std::string(kFib), 5000);
  const std::string s = letters_str(pre.word().view(0, 5000));
  for (std::size_t n = 1; n <= 6; ++n) {
    RecurrenceSplit sn1 = recurrence_split(pre, n + 1);
    RauzyGraph red_n = reduced_at(pre, n);
    CHECK(red_n.window_start == sn1.s);
    CHECK(vertex_set(red_n, pre.word()) ==
          oracle::factors(s.substr(sn1.s), n));
  }
  CHECK_FALSE(vertex_set(reduced_at(pre, 2), pre.word()).count("11"));
}

TEST_CASE("reduce rejects uncertain splits") {
  FactorIndex tiny = index_of(kFib, 30);
  RauzyGraph full = build_rauzy(tiny, 5);
  RecurrenceSplit bad{5, 3, true, "horizon"};
  RecurrenceSplit ok = recurrence_split(tiny, 6);
  CHECK_THROWS_AS(reduce(tiny, full, bad, ok), HorizonError);
}

TEST_CASE("special vertices") {
  FactorIndex fib = index_of(kFib, 2000);
  const Word& w = fib.word();
  RauzyGraph g1 = build_rauzy(fib, 1);
  SpecialVertices s1 = classify_special(g1);
  CHECK(labels(g1, w, s1.bispecial) == std::set<std::string>{"0"});
  RauzyGraph g2 = build_rauzy(fib, 2);
  SpecialVertices s2 = classify_special(g2);
  CHECK(labels(g2, w, s2.right) == std::set<std::string>{"10"});
  CHECK(labels(g2, w, s2.left) == std::set<std::string>{"01"});
  CHECK(s2.bispecial.empty());

  std::mt19937_64 rng(11);
  for (int t = 0; t < 20; ++t) {
    std::string s = oracle::random_word(rng, 150, 2 + t % 2);
    Word word = Word::from_digits(s);
    FactorIndex index(word);
    for (std::size_t n = 1; n <= 5; ++n) {
      RauzyGraph g = build_rauzy(index, n);
      SpecialVertices sv = classify_special(g);
      CHECK(labels(g, word, sv.right) == oracle::right_special(s, n));
      CHECK(labels(g, word, sv.left) == oracle::left_special(s, n));
      CHECK(labels(g, word, sv.bispecial) == oracle::bispecial(s, n));
    }
  }
}

TEST_CASE("essential right special") {
  FactorIndex fib = index_of(kFib, 5000);
  EssentialResult e = essential_right_special(fib, 1, 20);
  CHECK(e.status == EssentialResult::Status::kFound);
  CHECK(letters_str(e.factor) == "0");

  FactorIndex per = index_of("periodic:011", 2000);
  CHECK(essential_right_special(per, 3, 20).status ==
        EssentialResult::Status::kNone);

  FactorIndex st = index_of("sturmian:1,3,rep", 20000);
  EssentialResult e5 = essential_right_special(st, 5, 50);
  CHECK(e5.status == EssentialResult::Status::kFound);
  CHECK(e5.factor.size() == 5);
  // The right special 5-factor of a Sturmian word is the reversed prefix.
  Word prefix = st.word().prefix(5);
  CHECK(letters_str(e5.factor) == letters_str(prefix.reversed().letters()));
}

TEST_CASE("fibonacci figure eight") {
  FactorIndex fib = index_of(kFib, 5000);
  ShapeResult r = detect_infinity_shape(reduced_at(fib, 1), fib);
  REQUIRE(r.is_infinity());
  const InfinityConfig& c = *r.config;
  CHECK(letters_str(c.w) == "0");
  CHECK(letters_str(c.special.spelled) == "010");
  CHECK(c.k == 2);
  CHECK(letters_str(c.other.spelled) == "00");
  CHECK(c.l == 1);
  CHECK(c.multiplicity == 1);
  CHECK(letters_str(spell_uvbu(c, 1)) == "010010");
  CHECK_FALSE(r.multiplicity_violation);

  ShapeResult r2 = detect_infinity_shape(reduced_at(fib, 2), fib);
  CHECK(r2.status == ShapeResult::Status::kNotInfinity);

  FactorIndex per = index_of("periodic:01", 500);
  ShapeResult rp = detect_infinity_shape(build_rauzy(per, 2), per);
  CHECK(rp.status == ShapeResult::Status::kNotInfinity);
}

TEST_CASE("figure eight lengths follow fibonacci") {
  FactorIndex fib = index_of(kFib, 100000);
  std::vector<std::size_t> levels;
  for (std::size_t n = 1; n <= 40; ++n) {
    ShapeResult r = detect_infinity_shape(reduced_at(fib, n), fib);
    if (!r.is_infinity()) continue;
    levels.push_back(n);
    const InfinityConfig& c = *r.config;
    CHECK(c.k + c.l == n + 2);
    CHECK(c.k > c.l);
    CHECK(c.multiplicity == 1);
    Letters uu = spell_uu(c);
    CHECK(uu.size() == n + 2 * c.k);
    CHECK(c.uvbu_position.has_value());
  }
  CHECK(levels == std::vector<std::size_t>{1, 3, 6, 11, 19, 32});
}

TEST_CASE("morphic image with double loop") {
  FactorIndex img =
      index_of("image:0->1000000,1->00|subst:0->01,1->0", 200000);
  ShapeResult r = detect_infinity_shape(reduced_at(img, 6), img);
  REQUIRE(r.config.has_value());
  CHECK(r.config->multiplicity == 2);
  CHECK_FALSE(r.multiplicity_violation);
}

TEST_CASE("spelled walks are factors") {
  for (const char* spec :
       {kFib, kBounded, "sturmian:1,2,rep", "sturmian:2,rep"}) {
    FactorIndex index = index_of(spec, 60000);
    for (std::size_t n = 1; n <= 12; ++n) {
      ShapeResult r = detect_infinity_shape(reduced_at(index, n), index);
      if (!r.config) continue;
      const InfinityConfig& c = *r.config;
      Letters u = c.special.spelled;
      Letters v = c.other.spelled;
      CHECK(std::equal(c.w.begin(), c.w.end(), u.begin()));
      CHECK(std::equal(c.w.begin(), c.w.end(), u.end() - n));
      CHECK(std::equal(c.w.begin(), c.w.end(), v.begin()));
      CHECK(index.count(u, c.window_start) > 0);
      CHECK(index.count(v, c.window_start) > 0);
      Letters uvu = spell_uvbu(c, c.multiplicity);
      CHECK(index.count(uvu, c.window_start) >= 2);
    }
  }
}

TEST_CASE("graph lemmas hold on aperiodic words") {
  for (const char* spec :
       {kFib, kBounded, "sturmian:1,2,rep", "sturmian:0,2,1,rep",
        "concat:11|subst:0->01,1->0", "concat:0110|sturmian:1,3,rep",
        "image:0->1000000,1->00|subst:0->01,1->0"}) {
    CAPTURE(spec);
    FactorIndex index = index_of(spec, 60000);
    ComplexityProfile prof = complexity_profile(index, 40);
    Report rep = check_graph_lemmas(index, prof, 30, true);
    CHECK(rep.count(CheckStatus::kFail) == 0);
    CHECK(rep.count(CheckStatus::kPass) > 0);
    if (rep.count(CheckStatus::kFail) != 0) MESSAGE(rep.str());
  }
}

TEST_CASE("degree identity on random words") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    std::string s = oracle::random_word(rng, 400, 2 + t % 3);
    FactorIndex index(Word::from_digits(s));
    for (std::size_t n = 1; n <= 5; ++n) {
      RauzyGraph g = build_rauzy(index, n);
      long long rhs = 0;
      for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        if (g.out[v].size() >= 2) rhs += g.out[v].size() - 1;
        if (g.out[v].empty()) --rhs;
      }
      long long lhs = static_cast<long long>(oracle::distinct(s, n + 1)) -
                      static_cast<long long>(oracle::distinct(s, n));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("dot export") {
  FactorIndex tail = index_of("concat:1|periodic:0", 400);
  RauzyGraph full = build_rauzy(tail, 1);
  RauzyGraph red = reduced_at(tail, 1);
  std::string dot = export_dot(red, tail.word(), &full);
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK(dot.find("dashed") != std::string::npos);
  CHECK(dot == export_dot(red, tail.word(), &full));

  FactorIndex fib = index_of(kFib, 3000);
  RauzyGraph g = reduced_at(fib, 1);
  ShapeResult r = detect_infinity_shape(g, fib);
  std::string dot2 = export_dot(g, fib.word(), nullptr, &r);
  CHECK(dot2.find("doublecircle") != std::string::npos);
  CHECK(dot2.find("dashed") == std::string::npos);
}
