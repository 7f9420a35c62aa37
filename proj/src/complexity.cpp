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

#include "rauzylab/complexity.hpp"

#include <algorithm>
#include <limits>

#include "rauzylab/errors.hpp"

namespace rauzylab {
namespace {

constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

}  // namespace

std::vector<bool> saturation_flags(const FactorIndex& index,
                                   std::size_t n_max) {
  const std::size_t len = index.size();
  const std::size_t cut = (3 * len + 3) / 4;
  std::vector<bool> flags(n_max + 1, false);
  flags[0] = true;
  if (cut >= len) {
    // Too short to have a last quarter; nothing is certified.
    return flags;
  }
  FactorIndex head(index.word().prefix(cut), FactorIndex::Options{false});
  for (std::size_t n = 1; n <= n_max; ++n) {
    flags[n] = n <= cut && head.distinct_count(n) == index.distinct_count(n);
  }
  return flags;
}

ComplexityProfile complexity_profile(const FactorIndex& index,
                                     std::size_t n_max,
                                     ProfileOptions options) {
  const std::size_t len = index.size();
  if (n_max < 1 || n_max >= len) {
    throw DomainError("profile needs 1 <= n_max < horizon (n_max = " +
                      std::to_string(n_max) +
                      ", horizon = " + std::to_string(len) + ")");
  }
  ComplexityProfile prof;
  prof.horizon = len;
  prof.n_max = n_max;
  prof.p.resize(n_max + 1);
  prof.r.resize(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) {
    prof.p[n] = index.distinct_count(n);
    if (n > 0) prof.r[n] = index.first_repeat(n);
  }
  prof.saturated = saturation_flags(index, n_max);
  while (prof.saturated_through < n_max &&
         prof.saturated[prof.saturated_through + 1]) {
    ++prof.saturated_through;
  }
  if (options.inventories) {
    prof.has_inventories = true;
    prof.left_special.resize(n_max + 1);
    prof.right_special.resize(n_max + 1);
    prof.bispecial.resize(n_max + 1);
    for (std::size_t n = 1; n <= n_max; ++n) {
      std::vector<SpecialFactor> right = index.right_special(n);
      for (const auto& f : right) prof.right_special[n].push_back(f.factor);
      if (!index.has_reverse()) continue;
      std::vector<SpecialFactor> left = index.left_special(n);
      for (const auto& f : left) prof.left_special[n].push_back(f.factor);
      // Both lists are sorted by suffix-array interval start.
      auto it = left.begin();
      for (const auto& f : right) {
        while (it != left.end() && it->sa_lo < f.sa_lo) ++it;
        if (it != left.end() && it->sa_lo == f.sa_lo) {
          prof.bispecial[n].push_back(f.factor);
        }
      }
    }
  }
  return prof;
}

std::optional<std::size_t> repetition(const FactorIndex& index,
                                      std::size_t n) {
  if (n == 0) throw DomainError("repetition needs n >= 1");
  return index.first_repeat(n);
}

std::optional<RepetitionWitness> repetition_witness(const FactorIndex& index,
                                                    std::size_t n) {
  auto m = repetition(index, n);
  if (!m) return std::nullopt;
  auto occ = index.occurrences(index.word().view(*m, n));
  return RepetitionWitness{occ.front(), *m, n};
}

RecurrenceSplit recurrence_split(const FactorIndex& index, std::size_t n,
                                 std::size_t guard) {
  if (n == 0) throw DomainError("recurrence split needs n >= 1");
  const std::size_t len = index.size();
  if (len < guard * n) {
    throw HorizonError("recurrence split at level " + std::to_string(n),
                       guard * n);
  }
  LevelPartition part = index.partition(n);
  const std::size_t windows = part.class_of.size();
  std::vector<std::uint32_t> last(part.class_count, kNone);
  std::vector<std::uint32_t> second(part.class_count, kNone);
  for (std::size_t i = 0; i < windows; ++i) {
    std::uint32_t c = part.class_of[i];
    second[c] = last[c];
    last[c] = static_cast<std::uint32_t>(i);
  }
  // A start s is forbidden for a factor whose only occurrence at or after
  // s is its last one: s in (second-last, last].
  std::vector<int> cover(windows + 2, 0);
  for (std::size_t c = 0; c < part.class_count; ++c) {
    std::size_t lo = second[c] == kNone ? 0 : second[c] + 1;
    ++cover[lo];
    --cover[last[c] + 1];
  }
  RecurrenceSplit split;
  split.n = n;
  std::size_t s = 0;
  for (int run = cover[0]; run > 0; run += cover[++s]) {
  }
  split.s = s;
  if (s >= windows) {
    split.uncertain = true;
    split.reason = "no recurrent suffix at this horizon";
    return split;
  }
  if (len - s < guard * n) {
    split.uncertain = true;
    split.reason = "recurrent part shorter than " + std::to_string(guard) +
                   "n";
    return split;
  }
  std::vector<std::uint8_t> seen(part.class_count, 0);
  for (std::size_t i = s; i < windows; ++i) {
    std::uint32_t c = part.class_of[i];
    if (seen[c] < 2 && ++seen[c] == 2 && i + 2 * n > len) {
      split.uncertain = true;
      split.reason = "second occurrence of " +
                     letters_str(index.word().view(i, n)) + " at position " +
                     std::to_string(i + 1) + " is within n of the horizon";
      break;
    }
  }
  return split;
}

MorseHedlundResult check_morse_hedlund(const ComplexityProfile& profile,
                                       const Periodicity& periodicity) {
  MorseHedlundResult res;
  res.periodicity = periodicity;
  if (periodicity.status == PeriodicityStatus::kPeriodic) {
    res.periodic_branch = true;
    res.bound = periodicity.preperiod + periodicity.period;
    res.checked_through = profile.n_max;
    for (std::size_t n = 1; n <= profile.n_max; ++n) {
      if (profile.p[n] > res.bound) {
        res.violation = n;
        res.detail = "p(" + std::to_string(n) +
                     ") = " + std::to_string(profile.p[n]) +
                     " exceeds the eventual-period bound " +
                     std::to_string(res.bound);
        return res;
      }
    }
    res.detail = "bounded branch, bound " + std::to_string(res.bound);
    return res;
  }
  res.checked_through = profile.saturated_through;
  for (std::size_t n = 0; n < profile.saturated_through; ++n) {
    if (profile.p[n + 1] < profile.p[n] + 1) {
      res.violation = n;
      res.detail = "p(" + std::to_string(n + 1) +
                   ") = " + std::to_string(profile.p[n + 1]) +
                   " < p(" + std::to_string(n) +
                   ") + 1 = " + std::to_string(profile.p[n] + 1);
      return res;
    }
  }
  res.detail = "strict increase through n = " +
               std::to_string(profile.saturated_through);
  return res;
}

Report verify_prefix2_identity(const FactorIndex& index, std::size_t n,
                               std::size_t guard) {
  Report rep;
  std::string subject = "n=" + std::to_string(n);
  RecurrenceSplit split = recurrence_split(index, n, guard);
  if (split.uncertain) {
    rep.add("prefix-identity", subject, CheckStatus::kSkipped,
            "split uncertain: " + split.reason);
    return rep;
  }
  if (n + split.s < 2) {
    rep.add("prefix-identity", subject, CheckStatus::kSkipped,
            "n + s_n - 1 = 0");
    return rep;
  }
  std::size_t m = n + split.s - 1;
  std::size_t lhs = index.distinct_count(m);
  std::size_t rhs = index.distinct_count(m, split.s);
  rep.add("prefix-identity", subject, lhs == rhs + split.s,
          "s=" + std::to_string(split.s) + " p(" + std::to_string(m) +
              ",x)=" + std::to_string(lhs) + " p(" + std::to_string(m) +
              ",z)+s=" + std::to_string(rhs + split.s));
  return rep;
}

}  // namespace rauzylab
