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

#ifndef RAUZYLAB_COMPLEXITY_HPP_
#define RAUZYLAB_COMPLEXITY_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rauzylab/factor_index.hpp"
#include "rauzylab/report.hpp"
#include "rauzylab/word.hpp"

namespace rauzylab {

inline constexpr std::size_t kDefaultGuard = 4;

// Tables over levels 0..n_max of one finite prefix. A level n is saturated
// when no new n-factor appears in the last quarter of the prefix.
struct ComplexityProfile {
  std::size_t horizon = 0;
  std::size_t n_max = 0;
  std::vector<std::size_t> p;                 // p[0] = 1
  std::vector<std::optional<std::size_t>> r;  // r[0] unset
  std::vector<bool> saturated;
  std::size_t saturated_through = 0;  // largest N with 1..N saturated
  bool has_inventories = false;
  std::vector<std::vector<FactorRef>> left_special;
  std::vector<std::vector<FactorRef>> right_special;
  std::vector<std::vector<FactorRef>> bispecial;
};

struct ProfileOptions {
  bool inventories = true;
};

ComplexityProfile complexity_profile(const FactorIndex& index,
                                     std::size_t n_max,
                                     ProfileOptions options = {});

// Saturation flags for levels 0..n_max; builds an index over the first
// ceil(3L/4) letters.
std::vector<bool> saturation_flags(const FactorIndex& index,
                                   std::size_t n_max);

// r(n) as defined on the prefix; nullopt when no window x[m, m + n) with
// m <= L - n repeats an earlier one.
std::optional<std::size_t> repetition(const FactorIndex& index,
                                      std::size_t n);

// x[i, i + n) = x[m, m + n) with i < m, m = r(n) and i the first
// occurrence.
struct RepetitionWitness {
  std::size_t i = 0;
  std::size_t m = 0;
  std::size_t n = 0;
};

std::optional<RepetitionWitness> repetition_witness(const FactorIndex& index,
                                                    std::size_t n);

// x = a_n z_n with |a_n| = s. Recurrence is proxied by two occurrences
// inside z_n; `uncertain` is set when that evidence reaches into the last
// n letters or z_n is shorter than guard * n.
struct RecurrenceSplit {
  std::size_t n = 0;
  std::size_t s = 0;
  bool uncertain = false;
  std::string reason;
};

RecurrenceSplit recurrence_split(const FactorIndex& index, std::size_t n,
                                 std::size_t guard = kDefaultGuard);

struct MorseHedlundResult {
  Periodicity periodicity;
  bool periodic_branch = false;
  std::size_t bound = 0;  // periodic branch: t + d
  std::size_t checked_through = 0;
  std::optional<std::size_t> violation;
  std::string detail;

  bool passed() const { return !violation.has_value(); }
};

// Aperiodic: p(n+1) >= p(n) + 1 for 0 <= n < saturated_through.
// Eventually periodic with preperiod t and period d: p(n) <= t + d.
MorseHedlundResult check_morse_hedlund(const ComplexityProfile& profile,
                                       const Periodicity& periodicity);

// p(n + s_n - 1, x) = p(n + s_n - 1, z_n) + s_n on the prefix.
Report verify_prefix2_identity(const FactorIndex& index, std::size_t n,
                               std::size_t guard = kDefaultGuard);

}  // namespace rauzylab

#endif  // RAUZYLAB_COMPLEXITY_HPP_
