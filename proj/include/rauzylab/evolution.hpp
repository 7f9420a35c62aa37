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

#ifndef RAUZYLAB_EVOLUTION_HPP_
#define RAUZYLAB_EVOLUTION_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "rauzylab/complexity.hpp"
#include "rauzylab/factor_index.hpp"
#include "rauzylab/rauzy.hpp"
#include "rauzylab/report.hpp"

namespace rauzylab {

// Which cycle of the successor graph is special.
enum class Orientation {
  kUnknown,
  kSquareSpecial,  // (U, UU, U V^b U)
  kLoopSpecial,    // (U, U V^b U, UU)
};

std::string orientation_name(Orientation o);

struct TailBound {
  std::size_t m = 0;
  std::size_t r_bound = 0;
  std::optional<std::size_t> r_measured;
};

struct TailCase {
  int case_id = 0;  // 1..9
  bool from_v = false;
  std::size_t k_prime = 0;
  std::size_t l_prime = 0;
  std::size_t c = 0;
  std::string pattern;  // e.g. "U' U V^1 U U V^1 U"
  std::vector<TailBound> bounds;
};

struct TailResult {
  enum class Status { kClassified, kInsufficient, kViolation };
  Status status = Status::kInsufficient;
  std::string detail;
  std::optional<TailCase> tail;
};

struct EvolutionStep {
  std::size_t n = 0;
  InfinityConfig config;
  std::size_t k = 0;
  std::size_t l = 0;
  std::size_t b = 0;
  bool multiplicity_violation = false;
  std::size_t s_n1 = 0;                 // s_{n+1}
  std::optional<std::size_t> s_nk1;     // s_{n+k+1} when certified
  Orientation orientation = Orientation::kUnknown;  // taken by the successor
  std::optional<TailResult> tail;
};

struct Classification {
  enum class Kind { kBoundedCycles, kUnbounded, kUndetermined };
  Kind kind = Kind::kUndetermined;
  std::size_t k = 0;      // cycle bound for kBoundedCycles
  std::size_t onset = 0;  // first step index of the observed regime
  std::size_t horizon = 0;
  std::string detail;
};

std::string classification_name(const Classification& c);

struct Violation {
  std::size_t step = 0;
  std::string check;
  std::string witness;
};

struct EvolutionTrace {
  std::size_t horizon = 0;
  std::size_t n_max = 0;
  // Every level in [1, certified_through] was examined with certified splits.
  std::size_t certified_through = 0;
  std::optional<std::string> truncation;
  std::vector<std::string> warnings;
  std::vector<EvolutionStep> steps;
  Classification classification;
  std::vector<Violation> violations;
};

struct EvolutionOptions {
  std::size_t guard = kDefaultGuard;
  // Largest right-special depth tried when the special cycle is ambiguous;
  // 0 means 16 n + 64.
  std::size_t max_depth = 0;
  std::size_t threshold = 2;  // repetitions that count as "infinitely often"
};

// Levels n <= n_max with a figure-eight reduced graph, with their
// configurations, successor orientations and tail cases.
EvolutionTrace infinity_levels(const FactorIndex& index,
                               const ComplexityProfile& profile,
                               std::size_t n_max,
                               const EvolutionOptions& options = {});

struct PredictedConfig {
  std::size_t n = 0;
  Orientation orientation = Orientation::kUnknown;
  Letters w;
  Letters special;  // spelled
  Letters other;
  std::size_t k = 0;
  std::size_t l = 0;
};

std::array<PredictedConfig, 2> predict_successor(const InfinityConfig& config);

// Successor, factor count, split and entry checks between consecutive steps.
// With a profile, failures at levels where p(m)/m <= 4/3 is not certified
// are reported as conditional.
Report check_succession(const FactorIndex& index, const EvolutionTrace& trace,
                        const ComplexityProfile* profile = nullptr);

Classification classify_cycles(const EvolutionTrace& trace,
                               std::size_t threshold = 2);

// Smallest rational above max p(m)/m over m in [from, N_sat]: the maximum
// plus min(1e-9, (4/3 - max) / 2), or plus 1e-9 at or above 4/3.
struct RhoCertificate {
  mpq_class measured;
  mpq_class rho;
  std::size_t from = 0;
  std::size_t through = 0;
  bool below_four_thirds() const { return rho < mpq_class(4, 3); }
};

std::optional<RhoCertificate> certify_rho(const ComplexityProfile& profile,
                                          std::size_t from);
// Certificate over the upper half of the saturated range.
std::optional<RhoCertificate> certify_rho(const ComplexityProfile& profile);

// Plain step parameters for the inequality checkers.
struct StepNumbers {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t l = 0;
  std::size_t b = 0;
  std::optional<std::size_t> s;  // s_{n+k+1}
};

StepNumbers numbers_of(const EvolutionStep& step);

// Cycle length bounds of a figure-eight graph under p(m)/m <= 4/3, and the
// single-multiplicity rule.
Report check_figure8_bounds(const EvolutionTrace& trace,
                            const ComplexityProfile& profile);

// k + (2b+1)/3 l < rho (n+1) and 2s + k + (2b-1) l < rho n / (2 - rho).
Report check_skln(const StepNumbers& step, const mpq_class& rho);
// As above, conditional unless p(m)/m < rho on the saturated part of [n, oo).
Report check_skln_bounds(const EvolutionStep& step, const mpq_class& rho,
                         const ComplexityProfile& profile);

// The delta inequalities for a step in the large-n regime (l >= 3).
Report check_delta_bounds(const StepNumbers& step, const mpq_class& rho);

// Walks z_{n+k+1} along the two cycles and matches the nine tail patterns.
TailResult classify_tail(const FactorIndex& index, const EvolutionStep& step);

struct DeltaWitness {
  std::size_t m = 0;
  std::size_t r = 0;
};

// First m in [m_lo, m_hi] with r(m) < (1 - delta) m.
std::optional<DeltaWitness> find_repetition_witness(const FactorIndex& index,
                                                    const mpq_class& delta,
                                                    std::size_t m_lo,
                                                    std::size_t m_hi);

// Every check above over a trace, with per-step rho certificates.
Report verify_trace(const FactorIndex& index, const ComplexityProfile& profile,
                    const EvolutionTrace& trace);

// Failed checks of `report`, attributed to trace steps by level.
std::vector<Violation> collect_violations(const Report& report,
                                          const EvolutionTrace& trace);

}  // namespace rauzylab

#endif  // RAUZYLAB_EVOLUTION_HPP_
