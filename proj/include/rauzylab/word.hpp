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

#ifndef RAUZYLAB_WORD_HPP_
#define RAUZYLAB_WORD_HPP_

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace rauzylab {

using Letter = std::uint8_t;
using Letters = std::vector<Letter>;

// Finite word over {0, ..., alphabet_size - 1}.
class Word {
 public:
  Word() = default;
  Word(Letters letters, int alphabet_size);

  // Parses '0'-'9'. alphabet_size 0 means max letter + 1, at least 2.
  static Word from_digits(std::string_view digits, int alphabet_size = 0);

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  int alphabet_size() const { return alphabet_size_; }
  const Letters& letters() const { return letters_; }
  std::span<const Letter> view() const { return letters_; }
  std::span<const Letter> view(std::size_t pos, std::size_t len) const {
    return std::span<const Letter>(letters_).subspan(pos, len);
  }

  Word prefix(std::size_t len) const;
  Word reversed() const;

  // Letters below 10 print as digits; larger letters print as "(12)".
  std::string str() const;

  bool operator==(const Word&) const = default;

 private:
  Letters letters_;
  int alphabet_size_ = 2;
};

std::string letters_str(std::span<const Letter> letters);

enum class PeriodicityStatus { kPeriodic, kAperiodic, kUnknown };

// Eventual period x = u v v v ... with |u| = preperiod and |v| = period.
struct Periodicity {
  PeriodicityStatus status = PeriodicityStatus::kUnknown;
  std::size_t preperiod = 0;
  std::size_t period = 0;
};

class WordSource;
using SourcePtr = std::shared_ptr<const WordSource>;

class WordSource {
 public:
  struct Periodic {
    Letters pattern;
  };
  struct EventuallyPeriodic {
    Letters preperiod;
    Letters period;
  };
  // Characteristic word of slope [0; 1 + d_1, d_2, ...] built from the
  // standard words s_{-1} = seed[1], s_0 = seed[0],
  // s_k = s_{k-1}^{d_k} s_{k-2}.
  struct Sturmian {
    std::vector<std::uint64_t> coefficients;
    bool repeat_last = false;
    std::array<Letter, 2> seed{0, 1};
  };
  struct Substitution {
    std::map<Letter, Letters> rules;
    Letter start = 0;
  };
  struct RationalBase {
    std::uint64_t p = 0;
    std::uint64_t q = 1;
    int base = 2;
  };
  struct Composite {
    Letters prefix;
    SourcePtr tail;
  };
  // Letter-to-word coding applied to another source.
  struct Image {
    std::map<Letter, Letters> coding;
    SourcePtr inner;
  };
  // A finite word read from a file; `origin` is the path.
  struct Literal {
    Letters letters;
    std::string origin;
  };
  using Kind = std::variant<Periodic, EventuallyPeriodic, Sturmian,
                            Substitution, RationalBase, Composite, Image,
                            Literal>;

  static SourcePtr periodic(Letters pattern);
  static SourcePtr eventually_periodic(Letters preperiod, Letters period);
  static SourcePtr sturmian(std::vector<std::uint64_t> coefficients,
                            bool repeat_last);
  static SourcePtr substitution(std::map<Letter, Letters> rules, Letter start);
  static SourcePtr rational(std::uint64_t p, std::uint64_t q, int base);
  static SourcePtr composite(Letters prefix, SourcePtr tail);
  static SourcePtr image(std::map<Letter, Letters> coding, SourcePtr inner);
  static SourcePtr literal(Word word, std::string origin);

  const Kind& kind() const { return kind_; }
  int alphabet_size() const { return alphabet_size_; }

  // First `horizon` letters. Literal sources throw HorizonError past their
  // end.
  Word materialize(std::size_t horizon) const;

  // Length limit of the stream, if finite.
  std::optional<std::size_t> max_horizon() const;

  // Periodicity known from construction, without looking at the letters.
  Periodicity periodicity() const;

  // Exact value of sum x_j base^-j when the stream is known to be
  // eventually periodic.
  std::optional<mpq_class> exact_value(int base) const;

 private:
  WordSource(Kind kind, int alphabet_size)
      : kind_(std::move(kind)), alphabet_size_(alphabet_size) {}

  Kind kind_;
  int alphabet_size_;
};

// Characteristic Sturmian word; see WordSource::Sturmian.
Word sturmian_stream(std::span<const std::uint64_t> coefficients,
                     bool repeat_last, std::size_t horizon);

// Grammar:
//   periodic:<letters> | eventually:<pre>|<per> | sturmian:a1,a2,...[,rep]
//   | subst:<l>-><word>(,<l>-><word>)* | rational:<p>/<q>@<base>
//   | concat:<letters>|<spec> | image:<l>-><word>(,...)|<spec>
//   | file:<path>
// The first subst rule names the start letter.
SourcePtr parse_source_spec(std::string_view text);
std::string to_spec(const WordSource& source);

// Empirical eventual period of a finite word: the shortest period d of the
// last half with d <= |w| / 8, extended leftwards as far as it holds.
Periodicity detect_eventual_period(const Word& word);

// Construction metadata when it decides periodicity, otherwise the
// empirical answer on `prefix`.
Periodicity resolve_periodicity(const WordSource& source, const Word& prefix);

// Reads a raw digit file ('0'-'9', one per byte; a final newline is
// tolerated).
Word read_digit_file(const std::string& path);

}  // namespace rauzylab

#endif  // RAUZYLAB_WORD_HPP_
