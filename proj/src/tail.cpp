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

#include <algorithm>
#include <string>

#include "rauzylab/bounds.hpp"
#include "rauzylab/errors.hpp"
#include "rauzylab/evolution.hpp"

namespace rauzylab {
namespace {

std::string subject_of(std::size_t n) { return "n=" + std::to_string(n); }

std::string num(std::size_t v) { return std::to_string(v); }

enum class Token { kU, kV, kMismatch, kEnd };

// Reads z as a walk along the two cycles; `pos` is where the current
// occurrence of w starts.
class CycleReader {
 public:
  CycleReader(const Word& word, const InfinityConfig& c, std::size_t pos)
      : word_(word), u_(c.special.spelled), v_(c.other.spelled),
        n_(c.n), k_(c.k), l_(c.l), pos_(pos) {}

  Token peek() const {
    bool u_fits = pos_ + u_.size() <= word_.size();
    bool v_fits = pos_ + v_.size() <= word_.size();
    if (u_fits && matches(u_)) return Token::kU;
    if (v_fits && matches(v_)) return Token::kV;
    if (!u_fits || !v_fits) return Token::kEnd;
    return Token::kMismatch;
  }

  void take(Token t) { pos_ += t == Token::kU ? k_ : l_; }

  // Consumes a run of V cycles; returns its length and the token after it.
  std::size_t run_v(Token* after) {
    std::size_t c = 0;
    while ((*after = peek()) == Token::kV) {
      take(Token::kV);
      ++c;
    }
    return c;
  }

  std::size_t pos() const { return pos_; }
  std::size_t n() const { return n_; }

 private:
  bool matches(const Letters& p) const {
    return std::equal(p.begin(), p.end(), word_.letters().begin() + pos_);
  }

  const Word& word_;
  const Letters& u_;
  const Letters& v_;
  std::size_t n_, k_, l_;
  std::size_t pos_;
};

std::string vpow(std::size_t c) { return "V^" + std::to_string(c); }

}  // namespace

TailResult classify_tail(const FactorIndex& index, const EvolutionStep& step) {
  TailResult res;
  if (!step.s_nk1) {
    res.detail = "s_{n+k+1} not certified";
    return res;
  }
  const Word& word = index.word();
  const InfinityConfig& c = step.config;
  const std::size_t n = step.n, k = step.k, l = step.l, b = step.b;
  const std::size_t s = *step.s_nk1;
  const Letters& u = c.special.spelled;
  const Letters& v = c.other.spelled;
  if (s + n > word.size()) {
    res.detail = "z_{n+k+1} shorter than n";
    return res;
  }
  auto window_is = [&](const Letters& cyc, std::size_t j) {
    return std::equal(cyc.begin() + j, cyc.begin() + j + n,
                      word.letters().begin() + s);
  };
  auto suffix_matches = [&](const Letters& cyc, std::size_t j) {
    if (s + cyc.size() - j > word.size()) return false;
    return std::equal(cyc.begin() + j, cyc.end(), word.letters().begin() + s);
  };

  TailCase tc;
  std::size_t start = s;
  bool located = false;
  for (std::size_t j = 0; j < k && !located; ++j) {
    if (!window_is(u, j)) continue;
    located = true;
    tc.k_prime = j == 0 ? 0 : k - j;
    if (j > 0) {
      if (!suffix_matches(u, j)) {
        res.detail = "z_{n+k+1} leaves U before reaching w";
        res.status = s + u.size() - j > word.size()
                         ? TailResult::Status::kInsufficient
                         : TailResult::Status::kViolation;
        return res;
      }
      start = s + (k - j);
    }
  }
  for (std::size_t j = 1; j < l && !located; ++j) {
    if (!window_is(v, j)) continue;
    located = true;
    tc.from_v = true;
    tc.l_prime = l - j;
    if (!suffix_matches(v, j)) {
      res.detail = "z_{n+k+1} leaves V before reaching w";
      res.status = s + v.size() - j > word.size()
                       ? TailResult::Status::kInsufficient
                       : TailResult::Status::kViolation;
      return res;
    }
    start = s + (l - j);
  }
  if (!located) {
    res.status = TailResult::Status::kViolation;
    res.detail = "first n-window of z_{n+k+1} is on neither cycle";
    return res;
  }

  CycleReader rd(word, c, start);
  std::string pattern = tc.from_v ? "V'" : "U'";
  bool ok = true;
  Token t = Token::kU;
  auto fail = [&](const std::string& why) {
    ok = false;
    res.detail = why + " after " + pattern;
    res.status = (t == Token::kEnd) ? TailResult::Status::kInsufficient
                                    : TailResult::Status::kViolation;
  };
  // Expects U next and consumes it.
  auto expect_u = [&]() {
    if (!ok) return false;
    t = rd.peek();
    if (t != Token::kU) {
      fail("expected U");
      return false;
    }
    rd.take(t);
    pattern += " U";
    return true;
  };
  // Consumes a V run and checks it is 0 or b long; returns the length.
  auto v_run = [&](bool allow_zero) -> std::optional<std::size_t> {
    if (!ok) return std::nullopt;
    std::size_t cnt = rd.run_v(&t);
    if (t != Token::kU) {
      fail(t == Token::kEnd ? "horizon reached" : "walk leaves the cycles");
      return std::nullopt;
    }
    if ((cnt == 0 && allow_zero) || cnt == b) {
      if (cnt) pattern += " " + vpow(cnt);
      return cnt;
    }
    fail("V run of length " + num(cnt) + " with b=" + num(b));
    return std::nullopt;
  };

  if (tc.from_v) {
    std::size_t cnt = rd.run_v(&t);
    if (t != Token::kU) {
      fail(t == Token::kEnd ? "horizon reached" : "walk leaves the cycles");
    } else if (cnt >= b) {
      fail("V run of length " + num(cnt) + " after V' with b=" + num(b));
    } else {
      tc.c = cnt;
      pattern += " " + vpow(cnt);
      expect_u();
      if (auto c1 = v_run(true)) {
        if (*c1 == 0) {
          if (expect_u()) tc.case_id = 8;
        } else if (expect_u()) {
          tc.case_id = 9;
        }
      }
    }
  } else {
    std::size_t c0 = rd.run_v(&t);
    if (t != Token::kU) {
      fail(t == Token::kEnd ? "horizon reached" : "walk leaves the cycles");
    } else if (c0 == 0) {
      expect_u();
      if (auto c1 = v_run(true)) {
        if (*c1 == 0) {
          if (expect_u()) tc.case_id = 1;
        } else if (expect_u()) {
          if (auto c2 = v_run(true)) {
            if (*c2 == 0) {
              if (expect_u()) {
                if (auto c3 = v_run(true)) {
                  if (*c3 == 0) {
                    if (expect_u()) tc.case_id = 2;
                  } else if (expect_u()) {
                    tc.case_id = 3;
                  }
                }
              }
            } else if (expect_u()) {
              tc.case_id = 4;
            }
          }
        }
      }
    } else if (c0 == b) {
      pattern += " " + vpow(c0);
      expect_u();
      if (auto c1 = v_run(true)) {
        if (*c1 == 0) {
          if (expect_u()) {
            if (auto c2 = v_run(true)) {
              if (*c2 == 0) {
                if (expect_u()) tc.case_id = 5;
              } else if (expect_u()) {
                tc.case_id = 6;
              }
            }
          }
        } else if (expect_u()) {
          tc.case_id = 7;
        }
      }
    } else if (tc.k_prime == 0 && c0 < b) {
      // At w the empty U' is also an empty V'.
      tc.from_v = true;
      tc.c = c0;
      pattern = "V' " + vpow(c0);
      expect_u();
      if (auto c1 = v_run(true)) {
        if (*c1 == 0) {
          if (expect_u()) tc.case_id = 8;
        } else if (expect_u()) {
          tc.case_id = 9;
        }
      }
    } else {
      fail("V run of length " + num(c0) + " with b=" + num(b));
    }
  }
  if (!ok || tc.case_id == 0) {
    if (ok) {
      res.status = TailResult::Status::kViolation;
      res.detail = "no case matches " + pattern;
    }
    return res;
  }

  tc.pattern = pattern;
  const std::size_t kp = tc.k_prime, lp = tc.l_prime, cc = tc.c;
  auto bound = [&](std::size_t m, std::size_t r) {
    tc.bounds.push_back({m, r, repetition(index, m)});
  };
  switch (tc.case_id) {
    case 1: bound(n + k + kp, s + k); break;
    case 2:
      bound(n + kp, s + k);
      bound(n + 2 * k, s + 2 * k + b * l + kp);
      break;
    case 3: bound(n + 2 * k + b * l + kp, s + 2 * k + b * l); break;
    case 4: bound(n + 2 * k + b * l, s + k + b * l + kp); break;
    case 5: bound(n + 2 * k, s + k + b * l + kp); break;
    case 6:
      bound(n + (b - 1) * l, s + l + kp);
      bound(n + k + b * l + kp, s + 2 * k + b * l);
      break;
    case 7: bound(n + k + b * l + kp, s + k + b * l); break;
    case 8: bound(n + k, s + k + cc * l + lp); break;
    case 9: bound(n + k + cc * l + lp, s + k + b * l); break;
  }
  res.status = TailResult::Status::kClassified;
  res.detail = "case " + num(tc.case_id);
  res.tail = std::move(tc);
  return res;
}

Report check_skln(const StepNumbers& st, const mpq_class& rho) {
  if (rho >= 2) throw DomainError("rho must be below 2");
  Report rep;
  const std::string subj = subject_of(st.n);
  const mpq_class k(st.k), l(st.l), b(st.b), n(st.n);
  mpq_class lhs1 = k + (2 * b + 1) / mpq_class(3) * l;
  mpq_class rhs1 = rho * (n + 1);
  rep.add("step.slope", subj, lhs1 < rhs1,
          "k+(2b+1)l/3=" + rational_str(lhs1) + " < rho(n+1)=" +
              rational_str(rhs1));
  if (!st.s) {
    rep.add("step.split", subj, CheckStatus::kSkipped,
            "s_{n+k+1} not certified");
    return rep;
  }
  mpq_class lhs2 = 2 * mpq_class(*st.s) + k + (2 * b - 1) * l;
  mpq_class rhs2 = rho * n / (2 - rho);
  rep.add("step.split", subj, lhs2 < rhs2,
          "2s+k+(2b-1)l=" + rational_str(lhs2) + " < rho n/(2-rho)=" +
              rational_str(rhs2));
  return rep;
}

Report check_skln_bounds(const EvolutionStep& step, const mpq_class& rho,
                         const ComplexityProfile& profile) {
  auto cert = certify_rho(profile, step.n);
  if (cert && cert->measured < rho) return check_skln(numbers_of(step), rho);
  Report rep;
  const std::string why =
      cert ? "precondition not certified: max p(m)/m on [" + num(cert->from) +
                 ", " + num(cert->through) + "] is " +
                 rational_str(cert->measured) + " >= rho=" + rational_str(rho)
           : "precondition not certified: level beyond the saturated range";
  rep.add("step.slope", subject_of(step.n), CheckStatus::kConditional, why);
  rep.add("step.split", subject_of(step.n), CheckStatus::kConditional, why);
  return rep;
}

Report check_delta_bounds(const StepNumbers& st, const mpq_class& rho) {
  Report rep;
  const std::string subj = subject_of(st.n);
  if (st.l < 3) {
    rep.add("delta.regime", subj, CheckStatus::kSkipped,
            "l=" + num(st.l) + " below the large-n regime l >= 3");
    return rep;
  }
  if (!st.s) {
    rep.add("delta.regime", subj, CheckStatus::kSkipped,
            "s_{n+k+1} not certified");
    return rep;
  }
  const mpq_class one_minus = 1 - delta(rho);
  const mpq_class n(st.n), k(st.k), l(st.l), b(st.b), s(*st.s);
  const mpq_class lead = s + 2 * k + b * l;

  mpq_class extra_l = 2 * k + b * l;
  mpq_class extra_r = 2 * rho * n;
  rep.add("delta.extra", subj, extra_l < extra_r,
          "2k+bl=" + rational_str(extra_l) + " < 2 rho n=" +
              rational_str(extra_r));

  mpq_class total_r = one_minus * (n + 2 * k + b * l);
  rep.add("delta.total", subj, lead < total_r,
          "s+2k+bl=" + rational_str(lead) + " < " + rational_str(total_r));

  std::optional<std::size_t> bad;
  for (std::size_t kp = 0; kp < st.k && !bad; ++kp) {
    const mpq_class q(kp);
    bool first = lead < one_minus * (n + k + b * l + q);
    bool second = lead + q < one_minus * (n + 2 * k);
    if (!first && !second) bad = kp;
  }
  rep.add("delta.either", subj, !bad,
          bad ? "neither alternative at k'=" + num(*bad)
              : "one alternative holds for every k' < " + num(st.k));

  if (st.l < st.k) {
    mpq_class r = one_minus * (n + 2 * k);
    rep.add("delta.short_loop", subj, lead < r,
            "s+2k+bl=" + rational_str(lead) + " < " + rational_str(r));
  }
  return rep;
}

std::optional<DeltaWitness> find_repetition_witness(const FactorIndex& index,
                                                    const mpq_class& delta,
                                                    std::size_t m_lo,
                                                    std::size_t m_hi) {
  const mpq_class factor = 1 - delta;
  for (std::size_t m = std::max<std::size_t>(1, m_lo); m <= m_hi; ++m) {
    if (m >= index.size()) break;
    auto r = repetition(index, m);
    if (r && mpq_class(*r) < factor * m) return DeltaWitness{m, *r};
  }
  return std::nullopt;
}

}  // namespace rauzylab
