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

#include "rauzylab/evolution.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "rauzylab/bounds.hpp"
#include "rauzylab/errors.hpp"

namespace rauzylab {
namespace {

std::string subject_of(std::size_t n) { return "n=" + std::to_string(n); }

bool starts_with(const Word& word, std::size_t pos, const Letters& pattern) {
  if (pos + pattern.size() > word.size()) return false;
  return std::equal(pattern.begin(), pattern.end(),
                    word.letters().begin() + pos);
}

Letters concat(const Letters& a, const Letters& b, std::size_t n) {
  Letters out = a;
  out.insert(out.end(), b.begin() + n, b.end());
  return out;
}

class SplitCache {
 public:
  SplitCache(const FactorIndex& index, std::size_t guard)
      : index_(index), guard_(guard) {}

  // Certified split at level n, or nullopt with `reason` set.
  std::optional<RecurrenceSplit> get(std::size_t n, std::string* reason) {
    auto it = cache_.find(n);
    if (it == cache_.end()) {
      Entry e;
      try {
        RecurrenceSplit s = recurrence_split(index_, n, guard_);
        if (s.uncertain) {
          e.reason = "split at level " + std::to_string(n) +
                     " uncertain: " + s.reason;
        } else {
          e.split = s;
        }
      } catch (const HorizonError& err) {
        e.reason = err.what();
      }
      it = cache_.emplace(n, std::move(e)).first;
    }
    if (!it->second.split && reason) *reason = it->second.reason;
    return it->second.split;
  }

 private:
  struct Entry {
    std::optional<RecurrenceSplit> split;
    std::string reason;
  };
  const FactorIndex& index_;
  std::size_t guard_;
  std::map<std::size_t, Entry> cache_;
};

}  // namespace

std::string orientation_name(Orientation o) {
  switch (o) {
    case Orientation::kSquareSpecial:
      return "U,UU,UV^bU";
    case Orientation::kLoopSpecial:
      return "U,UV^bU,UU";
    case Orientation::kUnknown:
      break;
  }
  return "unknown";
}

std::string classification_name(const Classification& c) {
  switch (c.kind) {
    case Classification::Kind::kBoundedCycles:
      return "BoundedCycles(" + std::to_string(c.k) + ")";
    case Classification::Kind::kUnbounded:
      return "Unbounded";
    case Classification::Kind::kUndetermined:
      break;
  }
  return "Undetermined(" + std::to_string(c.horizon) + ")";
}

std::array<PredictedConfig, 2> predict_successor(const InfinityConfig& c) {
  const std::size_t b = c.multiplicity;
  Letters uu = spell_uu(c);
  Letters uvu = spell_uvbu(c, b);
  PredictedConfig square;
  square.n = c.n + c.k;
  square.orientation = Orientation::kSquareSpecial;
  square.w = c.special.spelled;
  square.special = uu;
  square.other = uvu;
  square.k = c.k;
  square.l = c.k + b * c.l;
  PredictedConfig loop = square;
  loop.orientation = Orientation::kLoopSpecial;
  loop.special = uvu;
  loop.other = uu;
  loop.k = c.k + b * c.l;
  loop.l = c.k;
  return {square, loop};
}

EvolutionTrace infinity_levels(const FactorIndex& index,
                               const ComplexityProfile& profile,
                               std::size_t n_max,
                               const EvolutionOptions& options) {
  EvolutionTrace trace;
  trace.horizon = index.size();
  trace.n_max = n_max;
  if (auto cert = certify_rho(profile); cert && !cert->below_four_thirds()) {
    trace.warnings.push_back("p(m)/m reaches " + rational_str(cert->measured) +
                             " > 4/3 on m in [" + std::to_string(cert->from) +
                             ", " + std::to_string(cert->through) + "]");
  }
  SplitCache splits(index, options.guard);
  for (std::size_t n = 1; n <= n_max; ++n) {
    std::string why;
    auto sn = splits.get(n, &why);
    auto sn1 = sn ? splits.get(n + 1, &why) : std::nullopt;
    if (!sn || !sn1) {
      trace.truncation = "level " + std::to_string(n) + ": " + why;
      break;
    }
    RauzyGraph g = build_rauzy(index, n, sn1->s);
    g.reduced = true;
    ShapeResult shape = detect_infinity_shape(g, index);
    if (shape.status == ShapeResult::Status::kNotInfinity) {
      trace.certified_through = n;
      continue;
    }
    const std::size_t cap =
        options.max_depth ? options.max_depth : 16 * n + 64;
    for (std::size_t depth = 4 * n + 16;
         shape.status == ShapeResult::Status::kUncertified && depth <= cap;
         depth *= 2) {
      shape = detect_infinity_shape(g, index, ShapeOptions{depth});
    }
    if (shape.status != ShapeResult::Status::kInfinity) {
      trace.truncation = "level " + std::to_string(n) + ": " + shape.reason;
      break;
    }
    EvolutionStep step;
    step.n = n;
    step.config = *shape.config;
    step.k = step.config.k;
    step.l = step.config.l;
    step.b = step.config.multiplicity;
    step.multiplicity_violation = shape.multiplicity_violation;
    step.s_n1 = sn1->s;
    if (auto s = splits.get(n + step.k + 1, nullptr)) step.s_nk1 = s->s;
    trace.steps.push_back(std::move(step));
    trace.certified_through = n;
  }
  for (std::size_t i = 0; i + 1 < trace.steps.size(); ++i) {
    EvolutionStep& cur = trace.steps[i];
    const EvolutionStep& next = trace.steps[i + 1];
    if (next.n != cur.n + cur.k) continue;
    for (const PredictedConfig& p : predict_successor(cur.config)) {
      if (next.config.special.spelled == p.special &&
          next.config.other.spelled == p.other) {
        cur.orientation = p.orientation;
      }
    }
  }
  for (EvolutionStep& step : trace.steps) {
    if (step.s_nk1) step.tail = classify_tail(index, step);
  }
  trace.classification = classify_cycles(trace, options.threshold);
  return trace;
}

Classification classify_cycles(const EvolutionTrace& trace,
                               std::size_t threshold) {
  Classification c;
  c.horizon = trace.horizon;
  const auto& steps = trace.steps;
  if (steps.size() < 3) {
    c.detail = std::to_string(steps.size()) + " certified steps";
    return c;
  }
  std::size_t increases = 0;
  std::optional<std::size_t> first_increase;
  std::size_t tail_start = 0;
  for (std::size_t i = 0; i + 1 < steps.size(); ++i) {
    const EvolutionStep& a = steps[i];
    const EvolutionStep& b = steps[i + 1];
    if (b.k > a.k) {
      tail_start = i + 1;
      if (b.n == a.n + a.k && b.k == a.k + a.b * a.l && b.l == a.k) {
        ++increases;
        if (!first_increase) first_increase = i;
      }
    }
  }
  if (increases >= threshold) {
    c.kind = Classification::Kind::kUnbounded;
    c.onset = *first_increase;
    c.detail = std::to_string(increases) + " steps with k_{i+1} > k_i";
    return c;
  }
  bool constant = true;
  for (std::size_t i = tail_start; i < steps.size(); ++i) {
    constant = constant && steps[i].k == steps[tail_start].k &&
               steps[i].b == 1;
  }
  if (constant && steps.size() - tail_start >= threshold + 1) {
    c.kind = Classification::Kind::kBoundedCycles;
    c.k = steps[tail_start].k;
    c.onset = tail_start;
    c.detail = std::to_string(steps.size() - tail_start) +
               " steps with k = " + std::to_string(c.k) + " and b = 1";
    return c;
  }
  c.detail = "neither regime observed " + std::to_string(threshold) +
             " times";
  return c;
}

std::optional<RhoCertificate> certify_rho(const ComplexityProfile& profile,
                                          std::size_t from) {
  const std::size_t through =
      std::min(profile.saturated_through, profile.n_max);
  if (from == 0 || from > through) return std::nullopt;
  RhoCertificate cert;
  cert.from = from;
  cert.through = through;
  cert.measured = 0;
  for (std::size_t m = from; m <= through; ++m) {
    mpq_class ratio(profile.p[m], m);
    ratio.canonicalize();
    cert.measured = std::max(cert.measured, ratio);
  }
  mpq_class eps(1, 1000000000);
  const mpq_class four_thirds(4, 3);
  if (cert.measured < four_thirds) {
    eps = std::min(eps, mpq_class((four_thirds - cert.measured) / 2));
  }
  cert.rho = cert.measured + eps;
  return cert;
}

std::optional<RhoCertificate> certify_rho(const ComplexityProfile& profile) {
  const std::size_t through =
      std::min(profile.saturated_through, profile.n_max);
  return certify_rho(profile, std::max<std::size_t>(1, (through + 1) / 2));
}

StepNumbers numbers_of(const EvolutionStep& step) {
  return {step.n, step.k, step.l, step.b, step.s_nk1};
}


namespace {

// Hypothesis p(m)/m <= 4/3 for m >= from, on the saturated range.
bool slope_hypothesis(const ComplexityProfile& profile, std::size_t from) {
  auto cert = certify_rho(profile, from);
  return cert && cert->measured <= mpq_class(4, 3);
}

// Failures under an uncertified hypothesis are reported as conditional.
void add_under(Report& rep, bool hypothesis, std::string id,
               std::string subject, bool ok, std::string detail) {
  if (ok) {
    rep.add(std::move(id), std::move(subject), CheckStatus::kPass,
            std::move(detail));
  } else if (!hypothesis) {
    rep.add(std::move(id), std::move(subject), CheckStatus::kConditional,
            detail + " (hypothesis not certified)");
  } else {
    rep.add(std::move(id), std::move(subject), CheckStatus::kFail,
            std::move(detail));
  }
}

}  // namespace

Report check_succession(const FactorIndex& index, const EvolutionTrace& trace,
                        const ComplexityProfile* profile) {
  Report rep;
  const Word& word = index.word();
  SplitCache splits(index, kDefaultGuard);
  const auto& steps = trace.steps;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const EvolutionStep& st = steps[i];
    const InfinityConfig& c = st.config;
    const std::size_t n = st.n, k = st.k, l = st.l, b = st.b;
    const std::string subj = subject_of(n);
    const bool hyp = profile == nullptr || slope_hypothesis(*profile, n);
    auto put = [&](const char* id, bool ok, std::string detail) {
      add_under(rep, hyp, id, subj, ok, std::move(detail));
    };

    if (i > 0) {
      const EvolutionStep& prev = steps[i - 1];
      put("succession.growth", k + l > prev.k + prev.l,
              "k+l " + std::to_string(prev.k + prev.l) + " -> " +
                  std::to_string(k + l));
    }

    if (i + 1 < steps.size()) {
      const EvolutionStep& next = steps[i + 1];
      put("succession.level", next.n == n + k,
              "next figure-eight at n=" + std::to_string(next.n) +
                  ", n+k=" + std::to_string(n + k));
      if (next.n == n + k) {
        bool match = false;
        for (const PredictedConfig& p : predict_successor(c)) {
          match = match || (next.config.w == p.w &&
                            next.config.special.spelled == p.special &&
                            next.config.other.spelled == p.other);
        }
        put("succession.successor", match,
                "successor (k,l)=(" + std::to_string(next.k) + "," +
                    std::to_string(next.l) + ") orientation " +
                    orientation_name(st.orientation));
      }
    } else if (n + k <= trace.certified_through) {
      put("succession.level", false,
              "no figure-eight at n+k=" + std::to_string(n + k));
    } else {
      rep.add("succession.level", subj, CheckStatus::kSkipped,
              "n+k=" + std::to_string(n + k) + " beyond certified levels");
    }

    if (!st.s_nk1) {
      rep.add("succession.count", subj, CheckStatus::kSkipped,
              "s_{n+k+1} not certified");
      continue;
    }
    const std::size_t s = *st.s_nk1;
    const std::size_t m = n + (b - 1) * l + 1;
    const std::size_t count = index.distinct_count(m, s);
    put("succession.count", count == k + (2 * b - 1) * l,
            "p(" + std::to_string(m) + ", z_{n+k+1})=" +
                std::to_string(count) + ", k+(2b-1)l=" +
                std::to_string(k + (2 * b - 1) * l));

    if (auto sp = splits.get(m + 1, nullptr)) {
      put("succession.split", sp->s == s,
              "s_" + std::to_string(m + 1) + "=" + std::to_string(sp->s) +
                  ", s_{n+k+1}=" + std::to_string(s));
    } else {
      rep.add("succession.split", subj, CheckStatus::kSkipped,
              "s_" + std::to_string(m + 1) + " not certified");
    }

    if (k < l && b == 1 && st.s_n1 < s) {
      const std::size_t jump = s - st.s_n1;
      bool ok = jump >= 1 && jump <= l - 1;
      if (ok) {
        const Letters& v = c.other.spelled;
        const Letters& u = c.special.spelled;
        Letters vu = concat(v, u, n);
        Letters vi(v.begin() + (l - jump), v.end());
        ok = starts_with(word, s, vu) &&
             starts_with(word, st.s_n1, concat(vi, vu, n));
      }
      put("succession.entry", ok,
              "s_{n+k+1}-s_{n+1}=" + std::to_string(jump) +
                  ", l=" + std::to_string(l));
    }
  }
  return rep;
}

Report check_figure8_bounds(const EvolutionTrace& trace,
                            const ComplexityProfile& profile) {
  Report rep;
  for (const EvolutionStep& st : trace.steps) {
    const std::string subj = subject_of(st.n);
    const bool hyp = slope_hypothesis(profile, st.n + 1);
    const std::size_t k = st.k, l = st.l, b = st.b;
    add_under(rep, hyp, "figure8.k_basic", subj, k >= (b - 1) * l + 1,
              "k=" + std::to_string(k) + " >= (b-1)l+1=" +
                  std::to_string((b - 1) * l + 1));
    if (b >= 2) {
      const std::size_t bound = (2 * b - 3) * l + 4;
      add_under(rep, hyp, "figure8.k_lower", subj, k >= bound,
                "k=" + std::to_string(k) + " >= (2b-3)l+4=" +
                    std::to_string(bound) + " at b=" + std::to_string(b));
    }
    std::string set;
    for (std::size_t v : st.config.recurrent_multiplicities) {
      set += (set.empty() ? "" : ",") + std::to_string(v);
    }
    add_under(rep, hyp, "figure8.single_multiplicity", subj,
              !st.multiplicity_violation, "recurrent b in {" + set + "}");
  }
  return rep;
}

Report verify_trace(const FactorIndex& index, const ComplexityProfile& profile,
                    const EvolutionTrace& trace) {
  Report rep;
  rep.merge(check_succession(index, trace, &profile));
  rep.merge(check_figure8_bounds(trace, profile));
  for (const EvolutionStep& st : trace.steps) {
    const std::string subj = subject_of(st.n);
    auto cert = certify_rho(profile, st.n);
    if (!cert || !cert->below_four_thirds()) {
      rep.add("step.slope", subj, CheckStatus::kConditional,
              cert ? "certified rho " + rational_str(cert->rho) +
                         " not below 4/3"
                   : "level beyond the saturated range");
    } else {
      rep.merge(check_skln_bounds(st, cert->rho, profile));
      rep.merge(check_delta_bounds(numbers_of(st), cert->rho));
      if (st.k > st.l && st.l >= 3) {
        const mpq_class d = delta(cert->rho);
        const std::size_t hi = st.n + 3 * st.k + st.b * st.l - 1;
        auto w = find_repetition_witness(index, d, st.n, hi);
        rep.add("window.witness", subj, w.has_value(),
                w ? "r(" + std::to_string(w->m) + ")=" +
                        std::to_string(w->r) + " < (1-delta)m, delta=" +
                        rational_str(d)
                  : "no m in [" + std::to_string(st.n) + ", " +
                        std::to_string(hi) + "] with r(m) < (1-delta)m");
      }
    }
    if (!st.tail) {
      rep.add("tail.case", subj, CheckStatus::kSkipped,
              "s_{n+k+1} not certified");
      continue;
    }
    const bool hyp =
        !st.multiplicity_violation && slope_hypothesis(profile, st.n);
    const TailResult& t = *st.tail;
    switch (t.status) {
      case TailResult::Status::kClassified:
        rep.add("tail.case", subj, CheckStatus::kPass,
                "case " + std::to_string(t.tail->case_id) + ": " +
                    t.tail->pattern);
        for (const TailBound& bd : t.tail->bounds) {
          const std::string what = "r(" + std::to_string(bd.m) + ")";
          if (!bd.r_measured) {
            rep.add("tail.bound", subj, CheckStatus::kSkipped,
                    what + " undefined at this horizon");
          } else {
            add_under(rep, hyp, "tail.bound", subj,
                      *bd.r_measured <= bd.r_bound,
                      what + "=" + std::to_string(*bd.r_measured) +
                          " <= " + std::to_string(bd.r_bound));
          }
        }
        break;
      case TailResult::Status::kInsufficient:
        rep.add("tail.case", subj, CheckStatus::kSkipped, t.detail);
        break;
      case TailResult::Status::kViolation:
        add_under(rep, hyp, "tail.case", subj, false, t.detail);
        break;
    }
  }
  return rep;
}

std::vector<Violation> collect_violations(const Report& report,
                                          const EvolutionTrace& trace) {
  std::vector<Violation> out;
  for (const Check& c : report.checks) {
    if (c.status != CheckStatus::kFail) continue;
    Violation v;
    v.check = c.id;
    v.witness = c.detail;
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
      if (c.subject == subject_of(trace.steps[i].n)) v.step = i;
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace rauzylab
