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

#ifndef RAUZYLAB_DIOPHANTINE_HPP_
#define RAUZYLAB_DIOPHANTINE_HPP_

#include <cstddef>
#include <optional>
#include <string>

#include <gmpxx.h>

#include "rauzylab/complexity.hpp"
#include "rauzylab/factor_index.hpp"
#include "rauzylab/report.hpp"
#include "rauzylab/word.hpp"

namespace rauzylab {

// xi = sum_{j >= 1} x_j base^-j.
struct RationalApprox {
  RepetitionWitness witness;
  int base = 2;
  mpz_class p;
  mpz_class q;  // reduced, divides base^i (base^(m-i) - 1)
  // Leading digits shared by x and x_1..x_i (x_{i+1}..x_m)^infinity,
  // counted within the digits supplied.
  std::size_t agreement_digits = 0;
  // Upper bound on |xi - p/q| from the supplied digits, whose unseen tail
  // contributes at most base^-L.
  mpq_class error_upper;
  // log(1 / error_upper) / log q, rounded down; empty when q = 1.
  std::optional<mpq_class> exponent_lower;
  std::string exponent_decimal;
};

// base 0 means max(2, alphabet size). Throws VerificationError with the
// first mismatching digit when the witness does not hold, DomainError when
// it is malformed.
RationalApprox rational_from_repetition(const Word& digits,
                                        const RepetitionWitness& witness,
                                        int base = 0);

// The witness behind r(n) on the index's word; nullopt when r(n) is
// undefined.
std::optional<RationalApprox> approximation_at(const FactorIndex& index,
                                               std::size_t n, int base = 0);

// 1 + max n / r(n) over 1 <= n <= n_max with r(n) defined; an exact
// finite-horizon proxy for 1 + 1/rep.
struct MuEstimate {
  mpq_class value;
  std::size_t n = 0;
  std::size_t r = 0;
};

// Throws DomainError "no witness" when r is undefined throughout.
MuEstimate mu_lower_estimate(const FactorIndex& index, std::size_t n_max);
// Also rejects eventually periodic sources.
MuEstimate mu_lower_estimate(const WordSource& source, std::size_t horizon,
                             std::size_t n_max);

struct ApproxVerification {
  bool exact = false;  // xi = p/q, known from construction
  mpq_class error_upper;
  mpq_class allowed;  // base^(1 - agreement_digits)
  std::optional<mpq_class> exponent_lower;
  std::string exponent_decimal;  // "exact" when exact
  Report report;
};

// Materializes precision_digits digits and bounds |xi - p/q|. Throws
// VerificationError with the first digit where p/q and x differ when the
// bound base^(1 - agreement_digits) is violated.
ApproxVerification verify_approximation(const WordSource& source,
                                        const RationalApprox& approx,
                                        std::size_t precision_digits);

// First `count` base-b digits of the fractional part of p/q.
Letters expansion_digits(const mpz_class& p, const mpz_class& q, int base,
                         std::size_t count);

}  // namespace rauzylab

#endif  // RAUZYLAB_DIOPHANTINE_HPP_
