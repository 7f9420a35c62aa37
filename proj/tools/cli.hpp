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

#ifndef RAUZYLAB_TOOLS_CLI_HPP_
#define RAUZYLAB_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace rauzylab::cli {

enum ExitCode {
  kOk = 0,
  kUsage = 1,
  kViolation = 2,
  kHorizon = 3,
};

// Runs one command line; argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

// Same, with the program name supplied.
int run(const std::vector<std::string>& args, std::string& out,
        std::string& err);

}  // namespace rauzylab::cli

#endif  // RAUZYLAB_TOOLS_CLI_HPP_
