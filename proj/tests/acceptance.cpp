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

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "rauzylab/bounds.hpp"
#include "rauzylab/complexity.hpp"
#include "rauzylab/diophantine.hpp"
#include "rauzylab/evolution.hpp"
#include "rauzylab/rauzy.hpp"

using namespace rauzylab;

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::size_t kHorizon = 100000;
constexpr std::size_t kLevels = 120;

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

std::string q(const mpq_class& v) { return rational_str(v); }

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && first_.empty()) first_ = what;
    pass_ = pass_ && ok;
  }
  bool pass() const { return pass_; }
  std::string first() const { return first_; }

 private:
  bool pass_ = true;
  std::string first_;
};

struct Entry {
  std::string spec;
  SourcePtr source;
  std::unique_ptr<FactorIndex> index;
  Periodicity periodicity;
  ComplexityProfile profile;
  EvolutionTrace trace;
  Report report;
  double seconds = 0;
};

const std::vector<std::string> kCorpus = {
    "subst:0->01,1->0",
    "sturmian:1,rep",
    "sturmian:2,rep",
    "sturmian:1,2,rep",
    "sturmian:1,3,rep",
    "sturmian:2,1,rep",
    "sturmian:1,4,4,rep",
    "sturmian:0,2,1,rep",
    "sturmian:1,5,rep",
    "sturmian:3,1,4,1,5,rep",
    "sturmian:9,rep",
    "concat:1|subst:0->01,1->0",
    "concat:11|subst:0->01,1->0",
    "concat:0110|sturmian:1,3,rep",
    "image:0->1000000,1->00|subst:0->01,1->0",
    "image:0->1000000000000,1->000|subst:0->01,1->0",
    "image:0->100,1->1000|subst:0->01,1->0",
    "image:0->0,1->10001|subst:0->01,1->0",
    "subst:0->001,1->0",
    "subst:0->01,1->00",
    "subst:2->21,0->0,1->10",
    "subst:0->01,1->10",
    "periodic:01",
    "periodic:0010111",
    "eventually:0110|001",
    "rational:1/7@10",
    "rational:5/13@2",
};

std::vector<Entry> build_corpus() {
  std::vector<Entry> out;
  for (const std::string& spec : kCorpus) {
    const auto t = Clock::now();
    Entry e;
    e.spec = spec;
    e.source = parse_source_spec(spec);
    Word word = e.source->materialize(kHorizon);
    e.periodicity = resolve_periodicity(*e.source, word);
    e.index = std::make_unique<FactorIndex>(std::move(word));
    e.profile = complexity_profile(*e.index, std::min<std::size_t>(
                                                 kHorizon / 8, 2000),
                                   ProfileOptions{false});
    e.trace = infinity_levels(*e.index, e.profile, kLevels);
    e.report = verify_trace(*e.index, e.profile, e.trace);
    e.seconds = seconds_since(t);
    out.push_back(std::move(e));
  }
  return out;
}

bool aperiodic(const Entry& e) {
  return e.periodicity.status != PeriodicityStatus::kPeriodic;
}

std::size_t count_id(const Report& r, const std::string& prefix,
                     CheckStatus status) {
  std::size_t c = 0;
  for (const Check& ch : r.checks) {
    c += ch.id.rfind(prefix, 0) == 0 && ch.status == status;
  }
  return c;
}

std::string first_fail(const Report& r, const std::string& prefix) {
  for (const Check& ch : r.checks) {
    if (ch.id.rfind(prefix, 0) == 0 && ch.status == CheckStatus::kFail) {
      return ch.id + " " + ch.subject + ": " + ch.detail;
    }
  }
  return {};
}

Outcome bound_anchors() {
  const auto t = Clock::now();
  Tally c;
  c.expect(pisa_bounds(2).limsup == mpq_class(8, 7), "pisa limsup(2) = 8/7");
  const Surd pb = pisabis_bounds(2).limsup;
  c.expect(pb.compare(Surd(mpq_class(1, 2), mpq_class(1, 2), 2)) == 0,
           "pisabis limsup(2) = (1+sqrt2)/2");
  c.expect(pb.decimal(30) == "1.20710678118654752440084436210",
           "pisabis 30 digits");
  c.expect(thm1_bound(2) == mpq_class(4, 3), "thm1(2) = 4/3");
  const Surd t1 = thm1_bound(mpq_class(11, 5));
  c.expect(t1.is_rational() && t1 == 1, "thm1(2.2) = 1 exactly");
  const Thm2Bounds tb = thm2_bounds(1);
  c.expect(tb.rep_bound == mpq_class(5, 6), "thm2 rep(1) = 5/6");
  c.expect(tb.mu_bound == mpq_class(11, 5), "thm2 mu(1) = 11/5");
  c.expect(delta(1) == mpq_class(1, 6), "delta(1) = 1/6");
  c.expect(delta(mpq_class(4, 3)) == 0, "delta(4/3) = 0");
  const double s = seconds_since(t);
  c.expect(s < 1, "runtime under 1 s");
  std::ostringstream d;
  d << "8/7, " << pb.decimal(30) << ", 4/3, 1, 5/6, 11/5, 1/6, 0 exact ("
    << s << " s)";
  return {c.pass(), c.pass() ? d.str() : c.first()};
}

Outcome sturmian_complexity() {
  const auto t = Clock::now();
  Tally c;
  std::size_t levels = 0;
  for (const char* spec : {"sturmian:1,rep", "sturmian:2,rep",
                           "sturmian:1,2,rep", "sturmian:1,3,rep",
                           "sturmian:2,1,rep"}) {
    FactorIndex index(parse_source_spec(spec)->materialize(1000000),
                      FactorIndex::Options{false});
    ComplexityProfile prof =
        complexity_profile(index, 1000, ProfileOptions{false});
    c.expect(prof.saturated_through >= 1000,
             std::string(spec) + " saturated only through " +
                 std::to_string(prof.saturated_through));
    for (std::size_t n = 1; n <= prof.saturated_through; ++n) {
      c.expect(prof.p[n] == n + 1, std::string(spec) + " p(" +
                                       std::to_string(n) + ") = " +
                                       std::to_string(prof.p[n]));
      ++levels;
    }
  }
  const double s = seconds_since(t);
  c.expect(s < 30, "runtime " + std::to_string(s) + " s over 30 s");
  std::ostringstream d;
  d << "p(n) = n + 1 on " << levels << " saturated levels, L = 10^6 (" << s
    << " s)";
  return {c.pass(), c.pass() ? d.str() : c.first()};
}

Outcome morse_hedlund(const std::vector<Entry>& corpus) {
  Tally c;
  std::size_t aper = 0, per = 0;
  for (const Entry& e : corpus) {
    MorseHedlundResult mh = check_morse_hedlund(e.profile, e.periodicity);
    c.expect(mh.passed(), e.spec + ": " + mh.detail);
    (mh.periodic_branch ? per : aper) += 1;
  }
  std::ostringstream d;
  d << corpus.size() << " sources, " << aper << " aperiodic, " << per
    << " eventually periodic, zero violations";
  return {c.pass(), c.pass() ? d.str() : c.first()};
}

// Naive tables: prev[i] = max_{j < i} lcp(x[i..], x[j..]).
std::vector<std::size_t> previous_lcp(const Letters& x) {
  const std::size_t len = x.size();
  std::vector<std::size_t> prev(len, 0);
  std::vector<std::size_t> row(len + 1, 0), next(len + 1, 0);
  // lcp(i, j) = x[i] == x[j] ? 1 + lcp(i + 1, j + 1) : 0, filled from the
  // end; row holds lcp(i + 1, .).
  for (std::size_t i = len; i-- > 0;) {
    for (std::size_t j = len; j-- > 0;) {
      next[j] = x[i] == x[j] ? 1 + row[j + 1] : 0;
    }
    for (std::size_t j = 0; j < i; ++j) prev[i] = std::max(prev[i], next[j]);
    std::swap(row, next);
    row[len] = 0;
  }
  return prev;
}

Outcome oracle_equivalence() {
  std::mt19937_64 rng(20260101);
  Tally c;
  std::size_t comparisons = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int alphabet = 2 + trial % 2;
    const std::size_t len =
        std::uniform_int_distribution<std::size_t>(1, 500)(rng);
    Letters x(len);
    std::uniform_int_distribution<int> d(0, alphabet - 1);
    for (Letter& ch : x) ch = static_cast<Letter>(d(rng));
    FactorIndex index(Word(x, alphabet));
    const std::vector<std::size_t> prev = previous_lcp(x);
    for (std::size_t n = 1; n <= len; ++n) {
      std::size_t p = 0;
      std::optional<std::size_t> r;
      for (std::size_t i = 0; i + n <= len; ++i) {
        p += prev[i] < n;
        if (!r && i > 0 && prev[i] >= n) r = i;
      }
      c.expect(index.distinct_count(n) == p,
               "p mismatch trial " + std::to_string(trial));
      c.expect(repetition(index, n) == r,
               "r mismatch trial " + std::to_string(trial));
      comparisons += 2;
    }
  }
  std::ostringstream d;
  d << comparisons << " values of p and r on 200 random words, zero mismatches";
  return {c.pass(), c.pass() ? d.str() : c.first()};
}

Outcome fibonacci_facts(const Entry& fib) {
  Tally c;
  const EvolutionTrace& t = fib.trace;
  std::vector<std::size_t> ns;
  for (const auto& st : t.steps) {
    if (st.n <= 40) ns.push_back(st.n);
  }
  c.expect(ns == std::vector<std::size_t>{1, 3, 6, 11, 19, 32},
           "levels differ");
  c.expect(!t.steps.empty(), "no steps");
  if (!t.steps.empty()) {
    const auto& g1 = t.steps[0];
    c.expect(g1.n == 1 && letters_str(g1.config.w) == "0" && g1.k == 2 &&
                 g1.l == 1 && g1.b == 1,
             "G_1 configuration");
  }
  // Brute-force figure-eight enumeration on a prefix.
  const std::string x = letters_str(fib.index->word().view(0, 1500));
  for (std::size_t n = 1; n <= 40; ++n) {
    auto brute = oracle::figure_eight(x, n);
    const bool found =
        std::find(ns.begin(), ns.end(), n) != ns.end();
    c.expect(brute.has_value() == found,
             "oracle disagrees at n=" + std::to_string(n));
    for (const auto& st : t.steps) {
      if (st.n == n && brute) {
        c.expect(brute->first == std::min(st.k, st.l) &&
                     brute->second == std::max(st.k, st.l),
                 "cycle lengths at n=" + std::to_string(n));
      }
    }
  }
  Report succ = check_succession(*fib.index, t, &fib.profile);
  c.expect(succ.count(CheckStatus::kFail) == 0, first_fail(succ, ""));
  const std::size_t successors = count_id(succ, "succession.successor",
                                          CheckStatus::kPass);
  for (const auto& st : t.steps) {
    c.expect(st.s_n1 == 0 && (!st.s_nk1 || *st.s_nk1 == 0), "s not zero");
  }
  Report lemmas = check_graph_lemmas(*fib.index, fib.profile, 40, true);
  const std::size_t counts =
      count_id(lemmas, "shape-count", CheckStatus::kPass);
  c.expect(lemmas.count(CheckStatus::kFail) == 0, first_fail(lemmas, ""));
  c.expect(counts >= 6, "shape-count checks missing");
  std::ostringstream d;
  d << "G_1: w=0, k=2, l=1, b=1; levels 1,3,6,11,19,32 match enumeration; "
    << successors << " successions, " << counts
    << " cycle-count identities, s = 0";
  return {c.pass(), c.pass() ? d.str() : c.first()};
}

Outcome nine_cases(const std::vector<Entry>& corpus) {
  Tally c;
  std::set<int> seen;
  std::size_t steps = 0, bounds = 0, conditional = 0;
  for (const Entry& e : corpus) {
    for (const auto& st : e.trace.steps) {
      if (!st.tail || st.tail->status == TailResult::Status::kInsufficient) {
        continue;
      }
      ++steps;
      if (st.tail->status == TailResult::Status::kViolation) {
        // A second recurrent multiplicity puts the step outside the lemma.
        if (st.multiplicity_violation) {
          ++conditional;
          continue;
        }
        c.expect(false, e.spec + " n=" + std::to_string(st.n) + ": " +
                            st.tail->detail);
        continue;
      }
      const TailCase& tc = *st.tail->tail;
      seen.insert(tc.case_id);
      for (const TailBound& b : tc.bounds) {
        auto r = repetition(*e.index, b.m);
        c.expect(r.has_value() && *r <= b.r_bound,
                 e.spec + " n=" + std::to_string(st.n) + " r(" +
                     std::to_string(b.m) + ") above " +
                     std::to_string(b.r_bound));
        ++bounds;
      }
    }
    c.expect(count_id(e.report, "tail.", CheckStatus::kFail) == 0,
             first_fail(e.report, "tail."));
  }
  const Entry& fib = corpus[0];
  const auto& t0 = fib.trace.steps.at(0).tail;
  c.expect(t0 && t0->tail && t0->tail->case_id == 3 &&
               t0->tail->bounds.size() == 1 && t0->tail->bounds[0].m == 6 &&
               t0->tail->bounds[0].r_bound == 5 &&
               repetition(*fib.index, 6) == std::size_t{5},
           "Fibonacci n=1 is not case 3 with r(6) <= 5 = r(6)");
  std::ostringstream d;
  d << steps << " steps classified, " << bounds
    << " implied bounds confirmed, cases seen {";
  for (int k : seen) d << (k == *seen.begin() ? "" : ",") << k;
  d << "}; Fibonacci n=1 case 3, r(6) <= 5, measured 5";
  if (conditional) d << "; " << conditional << " steps with two multiplicities";
  return {c.pass(), c.pass() ? d.str() : c.first()};
}

Outcome lemma_suite(const std::vector<Entry>& corpus) {
  Tally c;
  std::size_t big_b = 0, pass = 0, cond = 0;
  std::set<std::string> b_sources;
  for (const Entry& e : corpus) {
    for (const auto& st : e.trace.steps) {
      if (st.b >= 2) {
        ++big_b;
        b_sources.insert(e.spec);
      }
    }
    for (const char* id : {"figure8.", "step.", "delta."}) {
      c.expect(count_id(e.report, id, CheckStatus::kFail) == 0,
               e.spec + ": " + first_fail(e.report, id));
      pass += count_id(e.report, id, CheckStatus::kPass);
      cond += count_id(e.report, id, CheckStatus::kConditional);
    }
  }
  c.expect(big_b > 0, "no step with b >= 2");
  std::ostringstream d;
  d << pass << " inequality checks pass, " << cond
    << " outside the certified slope range, 0 violations; " << big_b
    << " steps with b >= 2 from " << b_sources.size()
    << " morphic images (Sturmian steps all have b = 1)";
  return {c.pass(), c.pass() ? d.str() : c.first()};
}

Outcome repetition_witness_check(const std::vector<Entry>& corpus) {
  Tally c;
  std::size_t words = 0;
  double worst = 0;
  for (const Entry& e : corpus) {
    if (!aperiodic(e)) continue;
    auto cert = certify_rho(e.profile);
    if (!cert || !cert->below_four_thirds()) continue;
    const auto t = Clock::now();
    auto w = find_repetition_witness(*e.index, delta(cert->rho), 1, 10000);
    const double s = seconds_since(t);
    worst = std::max(worst, s);
    c.expect(w.has_value(), e.spec + ": no m <= 10^4 with r(m) < (1-delta)m");
    c.expect(s < 60, e.spec + " took over 60 s");
    ++words;
  }
  c.expect(words >= 10, "too few words with certified rho < 4/3");
  std::ostringstream d;
  d << words << " words with certified rho < 4/3, each has m <= 10^4 with "
       "r(m) < (1-delta)m (slowest "
    << worst << " s)";
  return {c.pass(), c.pass() ? d.str() : c.first()};
}

mpq_class series_value(const std::string& pre, const std::string& per,
                       int base) {
  auto horner = [&](const std::string& s) {
    mpz_class v = 0;
    for (char ch : s) v = v * base + (ch - '0');
    return v;
  };
  mpz_class bp = 1, bq = 1;
  for (std::size_t j = 0; j < pre.size(); ++j) bp *= base;
  for (std::size_t j = 0; j < per.size(); ++j) bq *= base;
  mpq_class v(horner(pre + per) - horner(pre), bp * (bq - 1));
  v.canonicalize();
  return v;
}

Outcome diophantine_chain() {
  Tally c;
  const std::vector<std::pair<std::string, std::string>> streams = {
      {"", "01"}, {"0110", "001"}, {"1", "0"}, {"", "142857"},
      {"3", "210"}, {"00", "1011"}};
  for (const auto& [pre, per] : streams) {
    int base = 2;
    for (char ch : pre + per) base = std::max(base, ch - '0' + 1);
    std::string x = pre;
    while (x.size() < pre.size() + 4 * per.size()) x += per;
    const std::size_t m = pre.size() + per.size();
    RationalApprox a = rational_from_repetition(
        Word::from_digits(x, base), {pre.size(), m, x.size() - m}, base);
    c.expect(mpq_class(a.p, a.q) == series_value(pre, per, base),
             "reconstruction of " + pre + "(" + per + ")");
    auto src = parse_source_spec(pre.empty() ? "periodic:" + per
                                             : "eventually:" + pre + "|" +
                                                   per);
    ApproxVerification v = verify_approximation(*src, a, x.size() + 8);
    c.expect(v.exact, "error not 0 for " + pre + "(" + per + ")");
  }
  auto fib = parse_source_spec("subst:0->01,1->0");
  Word w = fib->materialize(64);
  RationalApprox a = rational_from_repetition(w, {0, 5, 6}, 2);
  Letters digits = expansion_digits(a.p, a.q, 2, 12);
  std::size_t agree = 0;
  while (agree < 12 && digits[agree] == w[agree]) ++agree;
  c.expect(a.q == 31, "q = " + a.q.get_str());
  c.expect(agree == 11 && a.agreement_digits == 11,
           std::to_string(agree) + " digits agree");
  MuEstimate mu = mu_lower_estimate(*fib, kHorizon, 10000);
  c.expect(mu.value >= 2, "mu estimate " + q(mu.value));
  std::ostringstream d;
  d << streams.size() << " periodic streams exact; Fibonacci (0,5,6) gives "
    << a.p.get_str() << "/31 agreeing on 11 digits; mu estimate "
    << Surd(mu.value).decimal(12) << " >= 2 (n=" << mu.n << ", r=" << mu.r
    << ")";
  return {c.pass(), c.pass() ? d.str() : c.first()};
}

struct Process {
  int code = -1;
  std::string out;
};

Process execute(const std::string& command) {
  Process p;
  FILE* pipe = popen((command + " 2>&1").c_str(), "r");
  if (!pipe) return p;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) p.out.append(buf, got);
  const int status = pclose(pipe);
  p.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return p;
}

Outcome determinism(const std::string& binary) {
  Tally c;
  const std::vector<std::string> commands = {
      "evolve --source 'subst:0->01,1->0' --nmax 40",
      "verify --suite all --source 'sturmian:1,3,rep' --nmax 30",
      "analyze --source 'image:0->1000000,1->00|subst:0->01,1->0' --nmax 60 "
      "--format json --inventories",
      "rauzy --source 'sturmian:2,1,rep' --n 9 --reduced",
      "bounds --curve pisabis --range 2,3 --step 1/8",
  };
  for (const std::string& cmd : commands) {
    Process a = execute(binary + " " + cmd);
    Process b = execute(binary + " " + cmd);
    c.expect(a.code == 0, cmd + " exited " + std::to_string(a.code));
    c.expect(a.out == b.out && !a.out.empty(), cmd + " not byte-identical");
  }
  auto dir = std::filesystem::temp_directory_path() / "rauzylab_acceptance";
  std::filesystem::create_directories(dir);
  std::string fib = "0", prev = "01";
  while (fib.size() < 1000) {
    std::string next = fib + prev;
    prev = fib;
    fib = next;
  }
  std::string looped;
  for (int j = 0; j < 6; ++j) looped += fib.substr(0, 1000);
  std::ofstream(dir / "looped.txt") << looped;
  Process bad = execute(binary + " verify --suite all --source file:" +
                        (dir / "looped.txt").string() + " --nmax 30");
  c.expect(bad.code == 2, "looped file exited " + std::to_string(bad.code));
  c.expect(bad.out.find("FAIL mh.increasing") != std::string::npos,
           "no violation report");
  std::ofstream(dir / "nondigit.txt") << fib.substr(0, 50) << "x";
  Process nd = execute(binary + " analyze --source file:" +
                       (dir / "nondigit.txt").string());
  c.expect(nd.code == 1, "non-digit file exited " + std::to_string(nd.code));
  Process hz = execute(binary +
                       " rauzy --source 'subst:0->01,1->0' -L 20 --n 5 "
                       "--reduced");
  c.expect(hz.code == 3, "short horizon exited " + std::to_string(hz.code));
  std::ostringstream d;
  d << commands.size() << " commands byte-identical across runs; looped "
       "file exits 2 with violations, non-digit file 1, short horizon 3";
  return {c.pass(), c.pass() ? d.str() : c.first()};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <path to rauzylab binary>\n";
    return 1;
  }
  const std::string binary = argv[1];
  std::vector<std::pair<int, std::function<Outcome()>>> criteria;
  std::vector<Entry> corpus;
  bool built = false;
  auto corpus_ref = [&]() -> const std::vector<Entry>& {
    if (!built) {
      corpus = build_corpus();
      built = true;
    }
    return corpus;
  };
  criteria.emplace_back(1, bound_anchors);
  criteria.emplace_back(2, sturmian_complexity);
  criteria.emplace_back(3, [&] { return morse_hedlund(corpus_ref()); });
  criteria.emplace_back(4, oracle_equivalence);
  criteria.emplace_back(5, [&] { return fibonacci_facts(corpus_ref()[0]); });
  criteria.emplace_back(6, [&] { return nine_cases(corpus_ref()); });
  criteria.emplace_back(7, [&] { return lemma_suite(corpus_ref()); });
  criteria.emplace_back(8,
                        [&] { return repetition_witness_check(corpus_ref()); });
  criteria.emplace_back(9, diophantine_chain);
  criteria.emplace_back(10, [&] { return determinism(binary); });

  int failed = 0;
  for (auto& [id, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << id << ": "
              << o.detail << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
