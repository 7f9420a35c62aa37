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

#include "rauzylab/report.hpp"

#include <algorithm>
#include <utility>

namespace rauzylab {

const char* status_name(CheckStatus status) {
  switch (status) {
    case CheckStatus::kPass:
      return "PASS";
    case CheckStatus::kFail:
      return "FAIL";
    case CheckStatus::kSkipped:
      return "SKIP";
    case CheckStatus::kConditional:
      return "COND";
  }
  return "?";
}

void Report::add(std::string id, std::string subject, CheckStatus status,
                 std::string detail) {
  checks.push_back(
      {std::move(id), std::move(subject), status, std::move(detail)});
}

void Report::add(std::string id, std::string subject, bool ok,
                 std::string detail) {
  add(std::move(id), std::move(subject),
      ok ? CheckStatus::kPass : CheckStatus::kFail, std::move(detail));
}

void Report::merge(const Report& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

std::size_t Report::count(CheckStatus status) const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(),
                    [&](const Check& c) { return c.status == status; }));
}

std::string Report::str() const {
  std::string out;
  for (const Check& c : checks) {
    out += status_name(c.status);
    out += " ";
    out += c.id;
    if (!c.subject.empty()) out += " " + c.subject;
    if (!c.detail.empty()) out += ": " + c.detail;
    out += "\n";
  }
  return out;
}

}  // namespace rauzylab
