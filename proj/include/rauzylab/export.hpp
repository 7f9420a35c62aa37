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

#ifndef RAUZYLAB_EXPORT_HPP_
#define RAUZYLAB_EXPORT_HPP_

#include <string>

#include "rauzylab/complexity.hpp"
#include "rauzylab/diophantine.hpp"
#include "rauzylab/evolution.hpp"
#include "rauzylab/rauzy.hpp"
#include "rauzylab/report.hpp"
#include "rauzylab/word.hpp"

// Serializers. JSON output is pretty-printed with sorted keys and ends with
// a newline, so equal inputs give equal bytes.
namespace rauzylab {

// Columns n,p,r,left_special_count,right_special_count,bispecial_count,
// saturated for n = 1..n_max; r is empty where undefined.
std::string profile_csv(const ComplexityProfile& profile);
// Factor inventories are written when `inventories` is set and the profile
// has them.
std::string profile_json(const ComplexityProfile& profile, const Word& word,
                         bool inventories = false);

// {level, vertices: [{word, count, first_pos}], edges: [{word, from, to,
// count}]}, plus shape metadata when given.
std::string graph_json(const RauzyGraph& graph, const Word& word,
                       const ShapeResult* shape = nullptr);

// {steps: [{n, k, l, b, s_values, orientation, case_id}], classification,
// violations}; `checks` lists the report when given.
std::string trace_json(const EvolutionTrace& trace,
                       const Report* checks = nullptr);

std::string report_json(const Report& report);

// {witness: {i, m, n}, p, q, agreement_digits, realized_exponent}.
std::string approximation_json(const RationalApprox& approx,
                               const ApproxVerification* verified = nullptr);

}  // namespace rauzylab

#endif  // RAUZYLAB_EXPORT_HPP_
