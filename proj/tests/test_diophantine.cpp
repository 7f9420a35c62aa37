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

#include <cmath>
#include <random>
#include <string>

#include "doctest.h"
#include "oracles.hpp"
#include "rauzylab/bounds.hpp"
#include "rauzylab/diophantine.hpp"
#include "rauzylab/errors.hpp"

using namespace rauzylab;

namespace {

const char* const kFib = "subst:0->01,1->0";

mpz_class horner(const std::string& digits, int base) {
  mpz_class v = 0;
  for (char c : digits) v = v * base + (c - '0');
  return v;
}

mpz_class pow_z(int base, std::size_t e) {
  mpz_class v = 1;
  for (std::size_t j = 0; j < e; ++j) v *= base;
  return v;
}

// Value of pre (per)^infinity in base b, by the geometric series.
mpq_class periodic_value(const std::string& pre, const std::string& per,
                         int base) {
  mpz_class whole = horner(pre + per, base) - horner(pre, base);
  mpq_class v(whole, pow_z(base, pre.size()) * (pow_z(base, per.size()) - 1));
  v.canonicalize();
  return v;
}

// Schoolbook long division.
std::string long_division(mpz_class p, const mpz_class& q, int base,
                          std::size_t count) {
  std::string out;
  p %= q;
  for (std::size_t j = 0; j < count; ++j) {
    p *= base;
    mpz_class d = p / q;
    out += static_cast<char>('0' + d.get_ui());
    p -= d * q;
  }
  return out;
}

Word digits_of(const std::string& s, int base) {
  return Word::from_digits(s, base);
}

}  // namespace

TEST_CASE("one third from a periodic stream") {
  Word w = digits_of("0101010101", 2);
  RationalApprox a = rational_from_repetition(w, {0, 2, 4}, 2);
  CHECK(a.p == 1);
  CHECK(a.q == 3);
  CHECK(a.agreement_digits == 10);
  ApproxVerification v =
      verify_approximation(*parse_source_spec("periodic:01"), a, 40);
  CHECK(v.exact);
  CHECK(v.exponent_decimal == "exact");
  CHECK(sgn(v.error_upper) == 0);
  CHECK(v.report.passed());
}

TEST_CASE("eventually periodic streams are reconstructed exactly") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int base = 2 + trial % 3;
    std::string pre = oracle::random_word(rng, trial % 6, base);
    std::string per = oracle::random_word(rng, 1 + trial % 7, base);
    std::string x = pre;
    while (x.size() < pre.size() + 3 * per.size() + 5) x += per;
    CAPTURE(pre);
    CAPTURE(per);
    Word w = digits_of(x, base);
    const std::size_t m = pre.size() + per.size();
    RationalApprox a =
        rational_from_repetition(w, {pre.size(), m, x.size() - m}, base);
    mpq_class expect = periodic_value(pre, per, base);
    CHECK(mpq_class(a.p, a.q) == expect);
    CHECK(a.agreement_digits == x.size());
    auto src = parse_source_spec(
        pre.empty() ? "periodic:" + per : "eventually:" + pre + "|" + per);
    if (base == 2 || src->alphabet_size() <= base) {
      ApproxVerification v = verify_approximation(*src, a, x.size() + 10);
      CHECK(v.exact);
    }
  }
}

TEST_CASE("fibonacci witness gives 9/31") {
  auto src = parse_source_spec(kFib);
  Word w = src->materialize(200);
  RationalApprox a = rational_from_repetition(w, {0, 5, 6}, 2);
  CHECK(a.q == 31);
  CHECK(a.p == 9);
  CHECK(a.agreement_digits == 11);
  std::string x = w.str();
  std::string e = long_division(a.p, a.q, 2, 40);
  CHECK(e.substr(0, 11) == x.substr(0, 11));
  CHECK(e[11] != x[11]);
  REQUIRE(a.exponent_lower.has_value());
  // q <= 2^m and error <= 2^(1-m-n) give (m + n - 1) / m.
  CHECK(*a.exponent_lower >= 2);

  ApproxVerification v = verify_approximation(*src, a, 400);
  CHECK_FALSE(v.exact);
  CHECK(v.report.passed());
  CHECK(v.allowed == mpq_class(1, 1024));
  REQUIRE(v.exponent_lower.has_value());
  // Double-precision estimate from 60 digits.
  double xi = 0;
  for (int j = 59; j >= 0; --j) xi = (xi + (x[j] - '0')) / 2;
  const double realized = -std::log(std::fabs(xi - 9.0 / 31)) / std::log(31);
  CHECK(v.exponent_lower->get_d() == doctest::Approx(realized).epsilon(1e-9));
  CHECK(v.exponent_decimal.substr(0, 6) ==
        std::to_string(realized).substr(0, 6));
}

TEST_CASE("witnesses with a preperiod") {
  std::mt19937_64 rng(11);
  int seen = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int base = 2 + trial % 2;
    std::string x = oracle::random_word(rng, 60, base);
    Word w = digits_of(x, base);
    FactorIndex index(w);
    for (std::size_t n = 1; n <= 8; ++n) {
      auto wit = repetition_witness(index, n);
      if (!wit || wit->i == 0) continue;
      ++seen;
      RationalApprox a = rational_from_repetition(w, *wit, base);
      const std::size_t d = wit->m - wit->i;
      mpz_class full = pow_z(base, wit->i) * (pow_z(base, d) - 1);
      CHECK(full % a.q == 0);
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), a.p.get_mpz_t(), a.q.get_mpz_t());
      CHECK(g == 1);
      std::string block = x.substr(wit->i, d);
      if (block == std::string(d, static_cast<char>('0' + base - 1))) continue;
      std::string e = long_division(a.p, a.q, base, wit->m + wit->n);
      CHECK(e == x.substr(0, wit->m + wit->n));
      CHECK(a.agreement_digits >= wit->m + wit->n);
      CHECK(a.error_upper <= 1 / mpq_class(pow_z(base, wit->m + wit->n - 1)));
    }
  }
  CHECK(seen > 100);
}

TEST_CASE("inconsistent witnesses") {
  Word w = digits_of("0100101001001", 2);
  try {
    rational_from_repetition(w, {0, 5, 7}, 2);
    FAIL("expected a mismatch");
  } catch (const VerificationError& e) {
    REQUIRE(e.digit().has_value());
    CHECK(*e.digit() == 12);
  }
  CHECK_THROWS_AS(rational_from_repetition(w, {5, 5, 2}, 2), DomainError);
  CHECK_THROWS_AS(rational_from_repetition(w, {0, 5, 20}, 2), DomainError);
  CHECK_THROWS_AS(rational_from_repetition(digits_of("0120", 3), {0, 3, 1}, 2),
                  DomainError);
}

TEST_CASE("a corrupted numerator is a hard failure") {
  auto src = parse_source_spec(kFib);
  RationalApprox a = rational_from_repetition(src->materialize(100), {0, 5, 6}, 2);
  a.p = 10;
  try {
    verify_approximation(*src, a, 100);
    FAIL("expected a violation");
  } catch (const VerificationError& e) {
    REQUIRE(e.digit().has_value());
    // 10/31 = 0.0101001...; the Fibonacci word starts 0100.
    CHECK(*e.digit() == 4);
    CHECK(long_division(10, 31, 2, 4) == "0101");
  }
  CHECK_THROWS_AS(verify_approximation(*src, a, 5), DomainError);
}

TEST_CASE("approximation chain along r(n)") {
  FactorIndex index(parse_source_spec(kFib)->materialize(5000));
  for (std::size_t n = 1; n <= 200; ++n) {
    CAPTURE(n);
    auto a = approximation_at(index, n);
    REQUIRE(a.has_value());
    const std::size_t m = a->witness.m;
    CHECK(a->witness.n == n);
    CHECK(a->q <= pow_z(2, m));
    CHECK(a->error_upper <= 1 / mpq_class(pow_z(2, m + n - 1)));
    REQUIRE(a->exponent_lower.has_value());
    mpq_class chain(m + n - 1, m);
    chain.canonicalize();
    CHECK(*a->exponent_lower >= chain);
  }
}

TEST_CASE("mu estimate") {
  auto fib = parse_source_spec(kFib);
  MuEstimate est = mu_lower_estimate(*fib, 100000, 10000);
  CHECK(est.value >= 2);
  mpq_class ratio(est.n, est.r);
  ratio.canonicalize();
  CHECK(est.value == 1 + ratio);
  CHECK(est.r <= est.n);

  // Scan of the brute-force r on a short prefix.
  std::string x = fib->materialize(3000).str();
  FactorIndex small(Word::from_digits(x));
  mpq_class best = 0;
  mpq_class prev = 0;
  for (std::size_t n = 1; n <= 120; ++n) {
    auto r = oracle::repetition(x, n);
    REQUIRE(r.has_value());
    mpq_class ratio(n, *r);
    ratio.canonicalize();
    best = std::max(best, mpq_class(1 + ratio));
    MuEstimate e = mu_lower_estimate(small, n);
    CHECK(e.value == best);
    CHECK(e.value >= prev);
    prev = e.value;
  }

  MuEstimate square = mu_lower_estimate(
      *parse_source_spec("concat:0000000000|subst:0->01,1->0"), 5000, 9);
  CHECK(square.value == 10);
  CHECK(square.r == 1);

  CHECK_THROWS_AS(mu_lower_estimate(*parse_source_spec("periodic:01"), 1000, 50),
                  DomainError);
  FactorIndex tiny(Word::from_digits("01"));
  CHECK_THROWS_AS(mu_lower_estimate(tiny, 2), DomainError);
}

TEST_CASE("expansion digits") {
  Letters d = expansion_digits(1, 7, 10, 12);
  CHECK(letters_str(d) == "142857142857");
  CHECK(letters_str(expansion_digits(9, 31, 2, 10)) == "0100101001");
  CHECK(letters_str(expansion_digits(1, 2, 2, 4)) == "1000");
}
