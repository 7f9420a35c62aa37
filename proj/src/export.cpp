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

#include "rauzylab/export.hpp"

#include <sstream>
#include <string>

#include "json.hpp"
#include "rauzylab/bounds.hpp"

namespace rauzylab {
namespace {

using Json = nlohmann::json;

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string factor_str(const Word& word, const FactorRef& f) {
  return letters_str(word.view(f.pos, f.len));
}

Json inventory(const Word& word, const std::vector<FactorRef>& refs) {
  Json out = Json::array();
  for (const FactorRef& f : refs) out.push_back(factor_str(word, f));
  return out;
}

std::size_t level_count(const std::vector<std::vector<FactorRef>>& v,
                        std::size_t n) {
  return n < v.size() ? v[n].size() : 0;
}

Json checks_json(const Report& report) {
  Json out = Json::array();
  for (const Check& c : report.checks) {
    out.push_back({{"id", c.id},
                   {"subject", c.subject},
                   {"status", status_name(c.status)},
                   {"detail", c.detail}});
  }
  return out;
}

Json tail_json(const TailResult& t) {
  Json out = {{"status", t.status == TailResult::Status::kClassified
                             ? "classified"
                         : t.status == TailResult::Status::kViolation
                             ? "violation"
                             : "insufficient"},
              {"detail", t.detail}};
  if (t.tail) {
    Json bounds = Json::array();
    for (const TailBound& b : t.tail->bounds) {
      bounds.push_back({{"m", b.m},
                        {"r_bound", b.r_bound},
                        {"r_measured", b.r_measured ? Json(*b.r_measured)
                                                    : Json(nullptr)}});
    }
    out["pattern"] = t.tail->pattern;
    out["k_prime"] = t.tail->k_prime;
    out["l_prime"] = t.tail->l_prime;
    out["c"] = t.tail->c;
    out["bounds"] = bounds;
  }
  return out;
}

}  // namespace

std::string profile_csv(const ComplexityProfile& profile) {
  std::ostringstream out;
  out << "n,p,r,left_special_count,right_special_count,bispecial_count,"
         "saturated\n";
  for (std::size_t n = 1; n <= profile.n_max; ++n) {
    out << n << ',' << profile.p[n] << ',';
    if (profile.r[n]) out << *profile.r[n];
    out << ',' << level_count(profile.left_special, n) << ','
        << level_count(profile.right_special, n) << ','
        << level_count(profile.bispecial, n) << ','
        << (profile.saturated[n] ? 1 : 0) << '\n';
  }
  return out.str();
}

std::string profile_json(const ComplexityProfile& profile, const Word& word,
                         bool inventories) {
  Json levels = Json::array();
  for (std::size_t n = 1; n <= profile.n_max; ++n) {
    Json row = {{"n", n},
                {"p", profile.p[n]},
                {"r", profile.r[n] ? Json(*profile.r[n]) : Json(nullptr)},
                {"left_special_count", level_count(profile.left_special, n)},
                {"right_special_count", level_count(profile.right_special, n)},
                {"bispecial_count", level_count(profile.bispecial, n)},
                {"saturated", static_cast<bool>(profile.saturated[n])}};
    if (inventories && profile.has_inventories) {
      row["left_special"] = inventory(word, profile.left_special[n]);
      row["right_special"] = inventory(word, profile.right_special[n]);
      row["bispecial"] = inventory(word, profile.bispecial[n]);
    }
    levels.push_back(row);
  }
  return dump({{"horizon", profile.horizon},
               {"n_max", profile.n_max},
               {"saturated_through", profile.saturated_through},
               {"levels", levels}});
}

std::string graph_json(const RauzyGraph& graph, const Word& word,
                       const ShapeResult* shape) {
  Json vertices = Json::array();
  for (const RauzyVertex& v : graph.vertices) {
    vertices.push_back({{"word", factor_str(word, v.factor)},
                        {"count", v.count},
                        {"first_pos", v.first}});
  }
  Json edges = Json::array();
  for (const RauzyEdge& e : graph.edges) {
    edges.push_back({{"word", factor_str(word, e.factor)},
                     {"from", factor_str(word, graph.vertices[e.from].factor)},
                     {"to", factor_str(word, graph.vertices[e.to].factor)},
                     {"count", e.count}});
  }
  Json out = {{"level", graph.level},
              {"reduced", graph.reduced},
              {"window_start", graph.window_start},
              {"vertices", vertices},
              {"edges", edges}};
  if (shape) {
    Json s = {{"infinity_shape", shape->is_infinity()},
              {"status", shape->status == ShapeResult::Status::kInfinity
                             ? "infinity"
                         : shape->status == ShapeResult::Status::kUncertified
                             ? "uncertified"
                             : "not_infinity"},
              {"reason", shape->reason}};
    if (shape->config) {
      const InfinityConfig& c = *shape->config;
      s["w"] = letters_str(c.w);
      s["special_cycle"] = letters_str(c.special.spelled);
      s["other_cycle"] = letters_str(c.other.spelled);
      s["k"] = c.k;
      s["l"] = c.l;
      s["b"] = c.multiplicity;
      s["recurrent_multiplicities"] = c.recurrent_multiplicities;
    }
    out["shape"] = s;
  }
  return dump(out);
}

std::string trace_json(const EvolutionTrace& trace, const Report* checks) {
  Json steps = Json::array();
  for (const EvolutionStep& st : trace.steps) {
    Json s_values = Json::array({st.s_n1});
    s_values.push_back(st.s_nk1 ? Json(*st.s_nk1) : Json(nullptr));
    Json step = {{"n", st.n},
                 {"k", st.k},
                 {"l", st.l},
                 {"b", st.b},
                 {"s_values", s_values},
                 {"orientation", st.orientation == Orientation::kUnknown
                                     ? Json(nullptr)
                                     : Json(orientation_name(st.orientation))},
                 {"case_id", st.tail && st.tail->tail
                                 ? Json(st.tail->tail->case_id)
                                 : Json(nullptr)},
                 {"w", letters_str(st.config.w)},
                 {"recurrent_multiplicities",
                  st.config.recurrent_multiplicities}};
    if (st.tail) step["tail"] = tail_json(*st.tail);
    steps.push_back(step);
  }
  Json violations = Json::array();
  for (const Violation& v : trace.violations) {
    violations.push_back({{"n", trace.steps[v.step].n},
                          {"check", v.check},
                          {"witness", v.witness}});
  }
  Json out = {{"horizon", trace.horizon},
              {"n_max", trace.n_max},
              {"certified_through", trace.certified_through},
              {"truncation", trace.truncation ? Json(*trace.truncation)
                                              : Json(nullptr)},
              {"warnings", trace.warnings},
              {"steps", steps},
              {"classification", classification_name(trace.classification)},
              {"classification_detail", trace.classification.detail},
              {"violations", violations}};
  if (checks) out["checks"] = checks_json(*checks);
  return dump(out);
}

std::string report_json(const Report& report) {
  return dump({{"checks", checks_json(report)},
               {"failed", report.count(CheckStatus::kFail)},
               {"passed", report.count(CheckStatus::kPass)},
               {"conditional", report.count(CheckStatus::kConditional)},
               {"skipped", report.count(CheckStatus::kSkipped)}});
}

std::string approximation_json(const RationalApprox& approx,
                               const ApproxVerification* verified) {
  Json out = {{"witness",
               {{"i", approx.witness.i},
                {"m", approx.witness.m},
                {"n", approx.witness.n}}},
              {"base", approx.base},
              {"p", approx.p.get_str()},
              {"q", approx.q.get_str()},
              {"agreement_digits", approx.agreement_digits},
              {"error_upper", Surd(approx.error_upper).decimal(30)},
              {"realized_exponent", approx.exponent_decimal}};
  if (verified) {
    out["realized_exponent"] = verified->exponent_decimal;
    out["error_upper"] = Surd(verified->error_upper).decimal(30);
    out["exact"] = verified->exact;
    out["checks"] = checks_json(verified->report);
  }
  return dump(out);
}

}  // namespace rauzylab
