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

#ifndef RAUZYLAB_ERRORS_HPP_
#define RAUZYLAB_ERRORS_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace rauzylab {

// Malformed source spec or input file. `position` is a 0-based character
// offset into the offending text.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " (at position " +
                              std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// The materialized prefix is too short for the requested level.
class HorizonError : public std::runtime_error {
 public:
  HorizonError(const std::string& what, std::size_t required)
      : std::runtime_error(what + "; need horizon >= " +
                           std::to_string(required)),
        required_(required) {}
  std::size_t required() const { return required_; }

 private:
  std::size_t required_;
};

// A computed object failed its own consistency check.
class VerificationError : public std::runtime_error {
 public:
  explicit VerificationError(const std::string& what)
      : std::runtime_error(what) {}
  // `digit` is 1-based.
  VerificationError(const std::string& what, std::size_t digit)
      : std::runtime_error(what + " (first mismatch at digit " +
                           std::to_string(digit) + ")"),
        digit_(digit) {}
  std::optional<std::size_t> digit() const { return digit_; }

 private:
  std::optional<std::size_t> digit_;
};

}  // namespace rauzylab

#endif  // RAUZYLAB_ERRORS_HPP_
