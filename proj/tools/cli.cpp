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

#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rauzylab/bounds.hpp"
#include "rauzylab/complexity.hpp"
#include "rauzylab/diophantine.hpp"
#include "rauzylab/errors.hpp"
#include "rauzylab/evolution.hpp"
#include "rauzylab/export.hpp"
#include "rauzylab/factor_index.hpp"
#include "rauzylab/rauzy.hpp"
#include "rauzylab/report.hpp"
#include "rauzylab/word.hpp"

namespace rauzylab::cli {
namespace {

constexpr std::size_t kWitnessLimit = 10000;
constexpr std::size_t kProfileCap = 2000;

struct Common {
  std::string source;
  std::size_t horizon = 100000;
  std::size_t n_max = 50;
  std::string format;
  std::string output;
};

struct Loaded {
  SourcePtr source;
  FactorIndex index;
  Periodicity periodicity;
};

Loaded load(const Common& c) {
  SourcePtr src = parse_source_spec(c.source);
  std::size_t horizon = c.horizon;
  if (auto cap = src->max_horizon()) horizon = std::min(horizon, *cap);
  if (c.n_max >= horizon) {
    throw DomainError("--nmax " + std::to_string(c.n_max) +
                      " must be below the horizon " +
                      std::to_string(horizon));
  }
  Word word = src->materialize(horizon);
  Periodicity per = resolve_periodicity(*src, word);
  return {src, FactorIndex(std::move(word)), per};
}

// Levels used to certify slopes: at least n_max + 1, otherwise up to L / 8.
std::size_t profile_levels(const FactorIndex& index, std::size_t n_max) {
  std::size_t levels = std::max(n_max + 1, std::min(index.size() / 8,
                                                    kProfileCap));
  return std::min(levels, index.size() - 1);
}

bool aperiodic(const Periodicity& p) {
  return p.status != PeriodicityStatus::kPeriodic;
}

void emit(const Common& c, const std::string& text, std::ostream& out) {
  if (c.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(c.output, std::ios::binary);
  if (!file) throw DomainError("cannot write " + c.output);
  file << text;
}

void add_common(CLI::App* sub, Common& c, bool with_nmax = true) {
  sub->add_option("--source", c.source, "word source spec")->required();
  sub->add_option("--horizon,-L", c.horizon, "prefix length")
      ->check(CLI::PositiveNumber);
  if (with_nmax) {
    sub->add_option("--nmax", c.n_max, "largest level")
        ->check(CLI::PositiveNumber);
  }
  sub->add_option("--output,-o", c.output, "write to a file");
}

int exit_for(const Report& r) { return r.passed() ? kOk : kViolation; }

// ---- analyze ----

int analyze(const Common& c, bool inventories, bool check,
            std::ostream& out, std::ostream& err) {
  Loaded l = load(c);
  ComplexityProfile prof = complexity_profile(l.index, c.n_max);
  const std::string fmt = c.format.empty() ? "csv" : c.format;
  emit(c,
       fmt == "json" ? profile_json(prof, l.index.word(), inventories)
                     : profile_csv(prof),
       out);
  if (!check) return kOk;
  MorseHedlundResult mh = check_morse_hedlund(prof, l.periodicity);
  if (!mh.passed()) err << "FAIL mh: " << mh.detail << "\n";
  return mh.passed() ? kOk : kViolation;
}

// ---- rauzy ----

int rauzy(const Common& c, std::size_t n, bool reduced, std::ostream& out) {
  Loaded l = load(Common{c.source, c.horizon, 0, c.format, c.output});
  if (n == 0 || n + 1 >= l.index.size()) {
    throw DomainError("level " + std::to_string(n) +
                      " needs 1 <= n < L - 1 = " +
                      std::to_string(l.index.size() - 1));
  }
  const Word& word = l.index.word();
  RauzyGraph full = build_rauzy(l.index, n);
  std::optional<RauzyGraph> small;
  ShapeResult shape;
  try {
    RecurrenceSplit sn = recurrence_split(l.index, n);
    RecurrenceSplit sn1 = recurrence_split(l.index, n + 1);
    small = reduce(l.index, full, sn, sn1);
    shape = detect_infinity_shape(*small, l.index);
  } catch (const HorizonError&) {
    if (reduced) throw;
    shape.status = ShapeResult::Status::kUncertified;
    shape.reason = "recurrence split not certified at this horizon";
  }
  const RauzyGraph& shown = reduced ? *small : full;
  const std::string fmt = c.format.empty() ? "dot" : c.format;
  if (fmt == "json") {
    emit(c, graph_json(shown, word, &shape), out);
  } else {
    emit(c, export_dot(shown, word, reduced ? &full : nullptr, &shape), out);
  }
  return kOk;
}

// ---- evolve ----

int evolve(const Common& c, std::size_t threshold, std::ostream& out) {
  Loaded l = load(c);
  ComplexityProfile prof =
      complexity_profile(l.index, profile_levels(l.index, c.n_max),
                         ProfileOptions{false});
  EvolutionOptions opts;
  opts.threshold = threshold;
  EvolutionTrace trace = infinity_levels(l.index, prof, c.n_max, opts);
  Report rep = verify_trace(l.index, prof, trace);
  trace.violations = collect_violations(rep, trace);
  emit(c, trace_json(trace, &rep), out);
  return exit_for(rep);
}

// ---- verify ----

Report suite_mh(const Loaded& l, const ComplexityProfile& prof) {
  Report rep;
  MorseHedlundResult mh = check_morse_hedlund(prof, l.periodicity);
  std::string subject =
      mh.periodic_branch
          ? "eventually periodic t=" +
                std::to_string(mh.periodicity.preperiod) +
                " d=" + std::to_string(mh.periodicity.period)
          : "aperiodic";
  rep.add(mh.periodic_branch ? "mh.bounded" : "mh.increasing", subject,
          mh.passed(), mh.detail);
  return rep;
}

Report suite_thm2(const Loaded& l, const ComplexityProfile& prof,
                  const std::optional<mpq_class>& user_rho) {
  Report rep;
  if (!aperiodic(l.periodicity)) {
    rep.add("thm2.witness", "word", CheckStatus::kSkipped,
            "eventually periodic word");
    return rep;
  }
  auto cert = certify_rho(prof);
  if (!cert) {
    rep.add("thm2.witness", "word", CheckStatus::kSkipped,
            "no saturated levels to certify the slope");
    return rep;
  }
  mpq_class rho = cert->rho;
  std::string origin = "certified rho " + rational_str(rho) + " over m in [" +
                       std::to_string(cert->from) + ", " +
                       std::to_string(cert->through) + "]";
  if (user_rho) {
    if (*user_rho <= cert->measured) {
      rep.add("thm2.witness", "rho=" + rational_str(*user_rho),
              CheckStatus::kConditional,
              "precondition not certified: p(m)/m reaches " +
                  rational_str(cert->measured));
      return rep;
    }
    rho = *user_rho;
    origin = "rho " + rational_str(rho);
  }
  if (!in_delta_regime(rho)) {
    rep.add("thm2.witness", "rho=" + rational_str(rho), CheckStatus::kSkipped,
            "hypothesis range exceeded (" + origin + ")");
    return rep;
  }
  const mpq_class d = delta(rho);
  const Thm2Bounds tb = thm2_bounds(rho);
  const std::size_t hi = std::min(kWitnessLimit, l.index.size());
  auto w = find_repetition_witness(l.index, d, 1, hi);
  std::string detail = origin + ", delta " + rational_str(d) + ", rep <= " +
                       rational_str(tb.rep_bound) + ", mu >= " +
                       rational_str(tb.mu_bound);
  if (w) {
    rep.add("thm2.witness", "rho=" + rational_str(rho), CheckStatus::kPass,
            "r(" + std::to_string(w->m) + ")=" + std::to_string(w->r) +
                " < (1-delta)m; " + detail);
  } else {
    rep.add("thm2.witness", "rho=" + rational_str(rho), CheckStatus::kFail,
            "no m <= " + std::to_string(hi) + " with r(m) < (1-delta)m; " +
                detail);
  }
  return rep;
}

Report suite_lemmas(const Loaded& l, const ComplexityProfile& prof,
                    std::size_t n_max) {
  Report rep =
      check_graph_lemmas(l.index, prof, n_max, aperiodic(l.periodicity));
  EvolutionTrace trace = infinity_levels(l.index, prof, n_max);
  rep.merge(verify_trace(l.index, prof, trace));
  return rep;
}

Report suite_diophantine(const Loaded& l, std::size_t n_max) {
  Report rep;
  if (!aperiodic(l.periodicity)) {
    rep.add("mu.estimate", "word", CheckStatus::kSkipped,
            "eventually periodic word");
  } else {
    MuEstimate mu = mu_lower_estimate(l.index, n_max);
    rep.add("mu.estimate", "n<=" + std::to_string(n_max), mu.value >= 2,
            "1 + n/r(n) = " + Surd(mu.value).decimal(30) + " at n=" +
                std::to_string(mu.n) + ", r=" + std::to_string(mu.r));
  }
  const auto cap = l.source->max_horizon();
  for (std::size_t n = 1; n <= std::min<std::size_t>(n_max, 64); ++n) {
    auto a = approximation_at(l.index, n);
    if (!a) continue;
    const std::size_t precision = a->agreement_digits + 64;
    const std::string subject = "n=" + std::to_string(n);
    if (cap && precision > *cap) {
      rep.add("approx.bound", subject, CheckStatus::kSkipped,
              "digits beyond the end of the file");
      continue;
    }
    try {
      rep.merge(verify_approximation(*l.source, *a, precision).report);
    } catch (const VerificationError& e) {
      rep.add("approx.bound", subject, CheckStatus::kFail, e.what());
    }
  }
  return rep;
}

int verify(const Common& c, const std::string& suite,
           const std::string& rho_text, std::ostream& out) {
  static const std::vector<std::string> kSuites = {"mh", "thm2", "lemmas",
                                                   "diophantine", "all"};
  if (std::find(kSuites.begin(), kSuites.end(), suite) == kSuites.end()) {
    throw DomainError("unknown suite '" + suite + "'");
  }
  std::optional<mpq_class> rho;
  if (!rho_text.empty()) rho = parse_rational(rho_text);
  Loaded l = load(c);
  ComplexityProfile prof =
      complexity_profile(l.index, profile_levels(l.index, c.n_max),
                         ProfileOptions{false});
  Report rep;
  const bool all = suite == "all";
  if (all || suite == "mh") rep.merge(suite_mh(l, prof));
  if (all || suite == "thm2") rep.merge(suite_thm2(l, prof, rho));
  if (all || suite == "lemmas") rep.merge(suite_lemmas(l, prof, c.n_max));
  if (all || suite == "diophantine") rep.merge(suite_diophantine(l, c.n_max));
  emit(c, c.format == "json" ? report_json(rep) : rep.str(), out);
  return exit_for(rep);
}

// ---- bounds ----

int bounds(const std::string& curve, const std::string& range,
           const std::string& step, const std::string& output,
           std::ostream& out) {
  std::string r = range;
  r.erase(std::remove_if(r.begin(), r.end(),
                         [](char ch) { return ch == '[' || ch == ']' ||
                                              ch == ' '; }),
          r.end());
  const auto comma = r.find(',');
  mpq_class lo, hi;
  if (comma == std::string::npos) {
    lo = hi = parse_rational(r);
  } else {
    lo = parse_rational(r.substr(0, comma));
    hi = parse_rational(r.substr(comma + 1));
  }
  mpq_class st = parse_rational(step);
  Common c;
  c.output = output;
  emit(c, bounds_csv(curve_table(parse_curve(curve), lo, hi, st)), out);
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Subword complexity, Rauzy graphs and repetitions of "
               "infinite words"};
  app.require_subcommand(1);

  Common analyze_c, rauzy_c, evolve_c, verify_c;
  bool inventories = false, check = false, reduced = false;
  std::size_t level = 0, threshold = 2;
  std::string suite = "all", rho;
  std::string curve, range, step = "1/100", bounds_out;

  CLI::App* a = app.add_subcommand("analyze", "complexity profile table");
  add_common(a, analyze_c);
  a->add_option("--format", analyze_c.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  a->add_flag("--inventories", inventories, "include special factors (json)");
  a->add_flag("--check", check, "run the Morse-Hedlund check");

  CLI::App* g = app.add_subcommand("rauzy", "Rauzy graph at one level");
  add_common(g, rauzy_c, false);
  g->add_option("--n,-n", level, "level")->required();
  g->add_flag("--reduced", reduced, "restrict to the recurrent part");
  g->add_option("--format", rauzy_c.format, "dot or json")
      ->check(CLI::IsMember({"dot", "json"}));

  CLI::App* e = app.add_subcommand("evolve", "figure-eight evolution trace");
  add_common(e, evolve_c);
  e->add_option("--threshold", threshold,
                "repetitions counted as recurring behaviour")
      ->check(CLI::PositiveNumber);

  CLI::App* v = app.add_subcommand("verify", "run an assertion suite");
  add_common(v, verify_c);
  v->add_option("--suite", suite, "mh, thm2, lemmas, diophantine or all");
  v->add_option("--rho", rho, "slope bound, e.g. 7/6");
  v->add_option("--format", verify_c.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* b = app.add_subcommand("bounds", "tabulate a bound curve");
  b->add_option("--curve", curve, "curve name")->required();
  b->add_option("--range", range, "lo,hi")->required();
  b->add_option("--step", step, "step");
  b->add_option("--output,-o", bounds_out, "write to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& ex) {
    const int code = app.exit(ex, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*a) return analyze(analyze_c, inventories, check, out, err);
    if (*g) return rauzy(rauzy_c, level, reduced, out);
    if (*e) return evolve(evolve_c, threshold, out);
    if (*v) return verify(verify_c, suite, rho, out);
    if (*b) return bounds(curve, range, step, bounds_out, out);
  } catch (const ParseError& ex) {
    err << "error: " << ex.what() << "\n";
    return kUsage;
  } catch (const DomainError& ex) {
    err << "error: " << ex.what() << "\n";
    return kUsage;
  } catch (const HorizonError& ex) {
    err << "error: " << ex.what() << "\n";
    return kHorizon;
  } catch (const VerificationError& ex) {
    err << "violation: " << ex.what() << "\n";
    return kViolation;
  }
  return kUsage;
}

int run(const std::vector<std::string>& args, std::string& out,
        std::string& err) {
  std::vector<const char*> argv = {"rauzylab"};
  for (const std::string& s : args) argv.push_back(s.c_str());
  std::ostringstream o, e;
  const int code = run(static_cast<int>(argv.size()), argv.data(), o, e);
  out = o.str();
  err = e.str();
  return code;
}

}  // namespace rauzylab::cli
