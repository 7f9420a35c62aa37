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

#ifndef RAUZYLAB_REPORT_HPP_
#define RAUZYLAB_REPORT_HPP_

#include <cstddef>
#include <string>
#include <vector>

namespace rauzylab {

enum class CheckStatus { kPass, kFail, kSkipped, kConditional };

const char* status_name(CheckStatus status);

// One verdict. `id` names the property checked, `subject` the instance
// (for example "n=6").
struct Check {
  std::string id;
  std::string subject;
  CheckStatus status = CheckStatus::kPass;
  std::string detail;
};

struct Report {
  std::vector<Check> checks;

  void add(std::string id, std::string subject, CheckStatus status,
           std::string detail = {});
  void add(std::string id, std::string subject, bool ok,
           std::string detail = {});
  void merge(const Report& other);

  std::size_t count(CheckStatus status) const;
  bool passed() const { return count(CheckStatus::kFail) == 0; }

  // One line per check: "PASS id subject: detail".
  std::string str() const;
};

}  // namespace rauzylab

#endif  // RAUZYLAB_REPORT_HPP_
