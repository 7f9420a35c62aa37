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

#include "rauzylab/diophantine.hpp"

#include <algorithm>
#include <string>

#include "rauzylab/bounds.hpp"
#include "rauzylab/errors.hpp"

namespace rauzylab {
namespace {

int resolve_base(const Word& word, int base) {
  if (base == 0) base = std::max(2, word.alphabet_size());
  if (base < 2) throw DomainError("base must be at least 2");
  if (base <= word.alphabet_size() - 1) {
    for (Letter c : word.letters()) {
      if (c >= base) {
        throw DomainError("letter " + std::to_string(c) +
                          " is not a digit in base " + std::to_string(base));
      }
    }
  }
  return base;
}

mpz_class power(int base, std::size_t e) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), e);
  return out;
}

// Integer whose base-b digits are `digits`, most significant first.
mpz_class digits_value(std::span<const Letter> digits, int base) {
  if (digits.empty()) return 0;
  if (base <= 36) {
    std::string text(digits.size(), '0');
    for (std::size_t j = 0; j < digits.size(); ++j) {
      const Letter c = digits[j];
      text[j] = static_cast<char>(c < 10 ? '0' + c : 'a' + (c - 10));
    }
    return mpz_class(text, base);
  }
  if (digits.size() == 1) return digits[0];
  const std::size_t half = digits.size() / 2;
  return digits_value(digits.first(half), base) *
             power(base, digits.size() - half) +
         digits_value(digits.subspan(half), base);
}

// max |xi - v| over xi in [X, X + base^-L], X the value of the prefix.
mpq_class prefix_error(const Word& word, int base, const mpq_class& v) {
  const std::size_t len = word.size();
  mpq_class scale(power(base, len));
  mpq_class lo(digits_value(word.view(), base), scale.get_num());
  lo.canonicalize();
  lo -= v;
  mpq_class hi = lo + 1 / scale;
  return std::max(mpq_class(abs(lo)), mpq_class(abs(hi)));
}

mpq_class fraction(const mpz_class& p, const mpz_class& q) {
  mpq_class v(p, q);
  v.canonicalize();
  return v;
}

// Leading digits shared by `word` and some base-b representation of p/q in
// [0, 1].
std::size_t agreement(const Word& word, const mpz_class& p,
                      const mpz_class& q, int base) {
  const std::size_t len = word.size();
  auto shared = [&](const Letters& e) {
    std::size_t j = 0;
    while (j < len && e[j] == word[j]) ++j;
    return j;
  };
  const mpq_class v = fraction(p, q);
  Letters standard;
  if (v >= 1) {
    standard.assign(len, 0);
  } else {
    standard = expansion_digits(p, q, base, len);
  }
  std::size_t best = v >= 1 ? 0 : shared(standard);
  // Terminating expansions also have a representation ending in b - 1.
  mpq_class scaled = v * mpq_class(power(base, len));
  if (scaled.get_den() == 1 && sgn(v) > 0) {
    Letters alt = standard;
    if (v >= 1) {
      alt.assign(len, static_cast<Letter>(base - 1));
    } else {
      std::size_t last = len;
      while (last > 0 && alt[last - 1] == 0) --last;
      if (last > 0) {
        --alt[last - 1];
        std::fill(alt.begin() + last, alt.end(),
                  static_cast<Letter>(base - 1));
      }
    }
    best = std::max(best, shared(alt));
  }
  return best;
}

void fill_exponent(const mpq_class& error, const mpz_class& q,
                   std::optional<mpq_class>& lower, std::string& decimal) {
  if (q == 1 || sgn(error) == 0) {
    decimal = "undefined";
    return;
  }
  LogRatio lr = log_ratio(1 / error, mpq_class(q));
  lower = lr.lower;
  decimal = lr.decimal;
}

}  // namespace

Letters expansion_digits(const mpz_class& p, const mpz_class& q, int base,
                         std::size_t count) {
  if (sgn(q) <= 0) throw DomainError("denominator must be positive");
  mpz_class frac = p % q;
  if (sgn(frac) < 0) frac += q;
  mpz_class scaled = frac * power(base, count) / q;
  Letters out(count, 0);
  for (std::size_t j = count; j-- > 0 && sgn(scaled) > 0;) {
    mpz_class digit = scaled % base;
    out[j] = static_cast<Letter>(digit.get_ui());
    scaled /= base;
  }
  return out;
}

RationalApprox rational_from_repetition(const Word& digits,
                                        const RepetitionWitness& witness,
                                        int base) {
  const auto [i, m, n] = witness;
  if (m <= i) throw DomainError("witness needs i < m");
  if (m + n > digits.size()) {
    throw DomainError("witness needs " + std::to_string(m + n) +
                      " digits, have " + std::to_string(digits.size()));
  }
  base = resolve_base(digits, base);
  for (std::size_t t = 0; t < n; ++t) {
    if (digits[i + t] != digits[m + t]) {
      throw VerificationError("witness window does not repeat", m + t + 1);
    }
  }
  const std::size_t d = m - i;
  const mpz_class cycle = power(base, d) - 1;
  mpq_class v(digits_value(digits.view(0, i), base) * cycle +
                  digits_value(digits.view(i, d), base),
              power(base, i) * cycle);
  v.canonicalize();

  RationalApprox out;
  out.witness = witness;
  out.base = base;
  out.p = v.get_num();
  out.q = v.get_den();
  std::size_t j = m;
  while (j < digits.size() && digits[j] == digits[j - d]) ++j;
  out.agreement_digits = j;
  out.error_upper = prefix_error(digits, base, v);
  fill_exponent(out.error_upper, out.q, out.exponent_lower,
                out.exponent_decimal);
  return out;
}

std::optional<RationalApprox> approximation_at(const FactorIndex& index,
                                               std::size_t n, int base) {
  auto w = repetition_witness(index, n);
  if (!w) return std::nullopt;
  return rational_from_repetition(index.word(), *w, base);
}

MuEstimate mu_lower_estimate(const FactorIndex& index, std::size_t n_max) {
  std::optional<MuEstimate> best;
  for (std::size_t n = 1; n <= std::min(n_max, index.size()); ++n) {
    auto r = repetition(index, n);
    if (!r) continue;
    mpq_class ratio(n, *r);
    ratio.canonicalize();
    if (!best || ratio + 1 > best->value) {
      best = MuEstimate{ratio + 1, n, *r};
    }
  }
  if (!best) throw DomainError("no witness: r(n) undefined for n <= " +
                               std::to_string(n_max));
  return *best;
}

MuEstimate mu_lower_estimate(const WordSource& source, std::size_t horizon,
                             std::size_t n_max) {
  Word word = source.materialize(horizon);
  if (resolve_periodicity(source, word).status ==
      PeriodicityStatus::kPeriodic) {
    throw DomainError("eventually periodic word: its value is rational");
  }
  FactorIndex index(std::move(word), FactorIndex::Options{false});
  return mu_lower_estimate(index, n_max);
}

ApproxVerification verify_approximation(const WordSource& source,
                                        const RationalApprox& approx,
                                        std::size_t precision_digits) {
  if (precision_digits <= approx.agreement_digits) {
    throw DomainError("precision_digits must exceed agreement_digits (" +
                      std::to_string(approx.agreement_digits) + ")");
  }
  if (sgn(approx.q) <= 0) throw DomainError("denominator must be positive");
  const int base = approx.base;
  const Word word = source.materialize(precision_digits);
  resolve_base(word, base);
  const mpq_class v = fraction(approx.p, approx.q);

  ApproxVerification out;
  out.allowed = 1 / mpq_class(power(base, approx.agreement_digits - 1));
  if (approx.agreement_digits == 0) out.allowed = base;
  if (auto exact = source.exact_value(base)) {
    out.error_upper = abs(*exact - v);
    out.exact = sgn(out.error_upper) == 0;
  } else {
    out.error_upper = prefix_error(word, base, v);
  }

  const std::string subject = approx.p.get_str() + "/" + approx.q.get_str();
  const bool within = out.error_upper <= out.allowed;
  if (!within) {
    throw VerificationError(
        "|xi - p/q| <= " + rational_str(out.error_upper) + " exceeds " +
            std::to_string(base) + "^(1-" +
            std::to_string(approx.agreement_digits) + ")",
        agreement(word, approx.p, approx.q, base) + 1);
  }
  out.report.add("approx.bound", subject, CheckStatus::kPass,
                 "|xi - p/q| <= base^(1-" +
                     std::to_string(approx.agreement_digits) + ")");
  const std::size_t shared = agreement(word, approx.p, approx.q, base);
  out.report.add("approx.agreement", subject,
                 shared >= approx.agreement_digits,
                 std::to_string(shared) + " leading digits agree, claimed " +
                     std::to_string(approx.agreement_digits));
  if (out.exact) {
    out.exponent_decimal = "exact";
  } else {
    fill_exponent(out.error_upper, approx.q, out.exponent_lower,
                  out.exponent_decimal);
  }
  out.report.add("approx.exponent", subject, CheckStatus::kPass,
                 "realized exponent " + out.exponent_decimal);
  return out;
}

}  // namespace rauzylab
