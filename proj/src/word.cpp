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

#include "rauzylab/word.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <numeric>
#include <sstream>

#include "rauzylab/errors.hpp"

namespace rauzylab {
namespace {

int inferred_alphabet(std::span<const Letter> letters, int at_least = 2) {
  int b = at_least;
  for (Letter c : letters) b = std::max(b, int{c} + 1);
  return b;
}

// Length of the primitive root of `block` viewed cyclically.
std::size_t cyclic_root(std::span<const Letter> block) {
  const std::size_t n = block.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool ok = true;
    for (std::size_t i = d; i < n && ok; ++i) ok = block[i] == block[i - d];
    if (ok) return d;
  }
  return n;
}

// Shrinks a valid eventual period (t0, d0) of `source` to the minimal one.
Periodicity normalize(const WordSource& source, std::size_t t0,
                      std::size_t d0) {
  Word w = source.materialize(t0 + 2 * d0);
  std::size_t d = cyclic_root(w.view(t0, d0));
  std::size_t t = t0;
  while (t > 0 && w[t - 1] == w[t - 1 + d]) --t;
  return {PeriodicityStatus::kPeriodic, t, d};
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  return std::gcd(a, b);
}

constexpr std::uint64_t kMaxOrderSearch = 1000000;

}  // namespace

Word::Word(Letters letters, int alphabet_size)
    : letters_(std::move(letters)), alphabet_size_(alphabet_size) {
  if (alphabet_size_ < 2 || alphabet_size_ > 256) {
    throw DomainError("alphabet size must lie in [2, 256]");
  }
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (letters_[i] >= alphabet_size_) {
      throw DomainError("letter " + std::to_string(letters_[i]) +
                        " at position " + std::to_string(i + 1) +
                        " exceeds alphabet size " +
                        std::to_string(alphabet_size_));
    }
  }
}

Word Word::from_digits(std::string_view digits, int alphabet_size) {
  Letters letters;
  letters.reserve(digits.size());
  for (std::size_t i = 0; i < digits.size(); ++i) {
    char c = digits[i];
    if (c < '0' || c > '9') throw ParseError("expected a digit", i);
    letters.push_back(static_cast<Letter>(c - '0'));
  }
  if (alphabet_size == 0) alphabet_size = inferred_alphabet(letters);
  return Word(std::move(letters), alphabet_size);
}

Word Word::prefix(std::size_t len) const {
  len = std::min(len, letters_.size());
  return Word(Letters(letters_.begin(), letters_.begin() + len),
              alphabet_size_);
}

Word Word::reversed() const {
  return Word(Letters(letters_.rbegin(), letters_.rend()), alphabet_size_);
}

std::string Word::str() const { return letters_str(letters_); }

std::string letters_str(std::span<const Letter> letters) {
  std::string out;
  out.reserve(letters.size());
  for (Letter c : letters) {
    if (c < 10) {
      out.push_back(static_cast<char>('0' + c));
    } else {
      out += "(" + std::to_string(c) + ")";
    }
  }
  return out;
}

SourcePtr WordSource::periodic(Letters pattern) {
  if (pattern.empty()) throw DomainError("periodic pattern is empty");
  int b = inferred_alphabet(pattern);
  return SourcePtr(new WordSource(Periodic{std::move(pattern)}, b));
}

SourcePtr WordSource::eventually_periodic(Letters preperiod, Letters period) {
  if (period.empty()) throw DomainError("period is empty");
  int b = std::max(inferred_alphabet(preperiod), inferred_alphabet(period));
  return SourcePtr(new WordSource(
      EventuallyPeriodic{std::move(preperiod), std::move(period)}, b));
}

SourcePtr WordSource::sturmian(std::vector<std::uint64_t> coefficients,
                               bool repeat_last) {
  if (coefficients.empty()) throw DomainError("slope underspecified");
  for (std::size_t i = 1; i < coefficients.size(); ++i) {
    if (coefficients[i] == 0) {
      throw DomainError("continued fraction coefficient " +
                        std::to_string(i + 1) + " must be >= 1");
    }
  }
  if (repeat_last && coefficients.back() == 0) {
    throw DomainError("repeated coefficient must be >= 1");
  }
  return SourcePtr(
      new WordSource(Sturmian{std::move(coefficients), repeat_last}, 2));
}

SourcePtr WordSource::substitution(std::map<Letter, Letters> rules,
                                   Letter start) {
  auto it = rules.find(start);
  if (it == rules.end()) {
    throw DomainError("no rule for start letter " + std::to_string(start));
  }
  if (it->second.size() < 2 || it->second.front() != start) {
    throw DomainError("rule for start letter " + std::to_string(start) +
                      " is not prolongable (must begin with it and have "
                      "length >= 2)");
  }
  int b = 2;
  for (const auto& [letter, image] : rules) {
    if (image.empty()) {
      throw DomainError("rule for letter " + std::to_string(letter) +
                        " has an empty image");
    }
    b = std::max(b, int{letter} + 1);
    for (Letter c : image) {
      if (!rules.count(c)) {
        throw DomainError("letter " + std::to_string(c) +
                          " has no substitution rule");
      }
    }
  }
  return SourcePtr(new WordSource(Substitution{std::move(rules), start}, b));
}

SourcePtr WordSource::rational(std::uint64_t p, std::uint64_t q, int base) {
  if (base < 2 || base > 256) throw DomainError("base must lie in [2, 256]");
  if (q == 0) throw DomainError("denominator must be positive");
  if (p >= q) throw DomainError("rational source needs 0 <= p < q");
  if (gcd_u64(p, q) != 1 && !(p == 0 && q == 1)) {
    throw DomainError("rational source needs p/q in lowest terms");
  }
  return SourcePtr(new WordSource(RationalBase{p, q, base}, base));
}

SourcePtr WordSource::composite(Letters prefix, SourcePtr tail) {
  if (!tail) throw DomainError("composite source needs a tail");
  int b = std::max(inferred_alphabet(prefix), tail->alphabet_size());
  return SourcePtr(
      new WordSource(Composite{std::move(prefix), std::move(tail)}, b));
}

SourcePtr WordSource::image(std::map<Letter, Letters> coding,
                            SourcePtr inner) {
  if (!inner) throw DomainError("image source needs an inner source");
  int b = 2;
  for (const auto& [letter, word] : coding) {
    if (word.empty()) {
      throw DomainError("image of letter " + std::to_string(letter) +
                        " is empty");
    }
    b = std::max(b, inferred_alphabet(word));
  }
  for (int c = 0; c < inner->alphabet_size(); ++c) {
    if (!coding.count(static_cast<Letter>(c))) {
      throw DomainError("letter " + std::to_string(c) +
                        " of the inner source has no image");
    }
  }
  return SourcePtr(
      new WordSource(Image{std::move(coding), std::move(inner)}, b));
}

SourcePtr WordSource::literal(Word word, std::string origin) {
  if (word.empty()) throw DomainError("literal word is empty");
  int b = word.alphabet_size();
  return SourcePtr(new WordSource(
      Literal{Letters(word.letters()), std::move(origin)}, b));
}

std::optional<std::size_t> WordSource::max_horizon() const {
  if (const auto* lit = std::get_if<Literal>(&kind_)) {
    return lit->letters.size();
  }
  if (const auto* comp = std::get_if<Composite>(&kind_)) {
    auto tail = comp->tail->max_horizon();
    if (tail) return *tail + comp->prefix.size();
  }
  if (const auto* img = std::get_if<Image>(&kind_)) {
    auto inner = img->inner->max_horizon();
    if (inner) {
      Word w = img->inner->materialize(*inner);
      std::size_t total = 0;
      for (Letter c : w.letters()) total += img->coding.at(c).size();
      return total;
    }
  }
  return std::nullopt;
}

Word WordSource::materialize(std::size_t horizon) const {
  Letters out;
  out.reserve(horizon);
  struct Visitor {
    const WordSource& self;
    std::size_t horizon;
    Letters& out;

    void operator()(const Periodic& s) {
      for (std::size_t i = 0; i < horizon; ++i) {
        out.push_back(s.pattern[i % s.pattern.size()]);
      }
    }
    void operator()(const EventuallyPeriodic& s) {
      for (std::size_t i = 0; i < horizon; ++i) {
        out.push_back(i < s.preperiod.size()
                          ? s.preperiod[i]
                          : s.period[(i - s.preperiod.size()) %
                                     s.period.size()]);
      }
    }
    void operator()(const Sturmian& s) {
      out = sturmian_stream(s.coefficients, s.repeat_last, horizon).letters();
    }
    void operator()(const Substitution& s) {
      out = s.rules.at(s.start);
      for (std::size_t i = 1; out.size() < horizon; ++i) {
        const Letters& image = s.rules.at(out[i]);
        out.insert(out.end(), image.begin(), image.end());
      }
      out.resize(horizon);
    }
    void operator()(const RationalBase& s) {
      unsigned __int128 r = s.p;
      for (std::size_t i = 0; i < horizon; ++i) {
        r *= static_cast<unsigned>(s.base);
        out.push_back(static_cast<Letter>(r / s.q));
        r %= s.q;
      }
    }
    void operator()(const Composite& s) {
      std::size_t k = std::min(horizon, s.prefix.size());
      out.assign(s.prefix.begin(), s.prefix.begin() + k);
      if (horizon > k) {
        Word tail = s.tail->materialize(horizon - k);
        out.insert(out.end(), tail.letters().begin(), tail.letters().end());
      }
    }
    void operator()(const Image& s) {
      std::size_t shortest = SIZE_MAX;
      for (const auto& [letter, word] : s.coding) {
        shortest = std::min(shortest, word.size());
      }
      std::size_t need = horizon / shortest + 1;
      if (auto cap = s.inner->max_horizon()) need = std::min(need, *cap);
      Word inner = s.inner->materialize(need);
      for (Letter c : inner.letters()) {
        const Letters& image = s.coding.at(c);
        out.insert(out.end(), image.begin(), image.end());
        if (out.size() >= horizon) break;
      }
      if (out.size() < horizon) {
        throw HorizonError("image source is finite", horizon);
      }
      out.resize(horizon);
    }
    void operator()(const Literal& s) {
      if (horizon > s.letters.size()) {
        throw HorizonError("literal word " + s.origin + " has only " +
                               std::to_string(s.letters.size()) + " letters",
                           horizon);
      }
      out.assign(s.letters.begin(), s.letters.begin() + horizon);
    }
  };
  std::visit(Visitor{*this, horizon, out}, kind_);
  return Word(std::move(out), alphabet_size_);
}

Periodicity WordSource::periodicity() const {
  using S = PeriodicityStatus;
  if (const auto* s = std::get_if<Periodic>(&kind_)) {
    return normalize(*this, 0, s->pattern.size());
  }
  if (const auto* s = std::get_if<EventuallyPeriodic>(&kind_)) {
    return normalize(*this, s->preperiod.size(), s->period.size());
  }
  if (std::holds_alternative<Sturmian>(kind_)) return {S::kAperiodic, 0, 0};
  if (const auto* s = std::get_if<RationalBase>(&kind_)) {
    std::uint64_t q = s->q;
    std::size_t t = 0;
    for (std::uint64_t g = gcd_u64(q, s->base); g > 1;
         g = gcd_u64(q, s->base)) {
      q /= g;
      ++t;
    }
    std::uint64_t d = 1;
    unsigned __int128 r = s->base % q;
    while (q > 1 && r != 1) {
      if (++d > kMaxOrderSearch) return {S::kUnknown, 0, 0};
      r = r * s->base % q;
    }
    return {S::kPeriodic, t, static_cast<std::size_t>(d)};
  }
  if (const auto* s = std::get_if<Composite>(&kind_)) {
    Periodicity tail = s->tail->periodicity();
    if (tail.status != S::kPeriodic) return tail;
    return normalize(*this, s->prefix.size() + tail.preperiod, tail.period);
  }
  if (const auto* s = std::get_if<Image>(&kind_)) {
    Periodicity inner = s->inner->periodicity();
    if (inner.status != S::kPeriodic) return {S::kUnknown, 0, 0};
    Word w = s->inner->materialize(inner.preperiod + inner.period);
    std::size_t t = 0;
    std::size_t d = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      (i < inner.preperiod ? t : d) += s->coding.at(w[i]).size();
    }
    return normalize(*this, t, d);
  }
  return {S::kUnknown, 0, 0};
}

std::optional<mpq_class> WordSource::exact_value(int base) const {
  Periodicity per = periodicity();
  if (per.status != PeriodicityStatus::kPeriodic) return std::nullopt;
  if (const auto* s = std::get_if<RationalBase>(&kind_)) {
    if (s->base == base) {
      mpq_class v(mpz_class(std::to_string(s->p)),
                  mpz_class(std::to_string(s->q)));
      v.canonicalize();
      return v;
    }
  }
  Word w = materialize(per.preperiod + per.period);
  mpz_class head = 0;
  mpz_class block = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    mpz_class& acc = i < per.preperiod ? head : block;
    acc = acc * base + w[i];
  }
  mpz_class bt;
  mpz_class bd;
  mpz_ui_pow_ui(bt.get_mpz_t(), base, per.preperiod);
  mpz_ui_pow_ui(bd.get_mpz_t(), base, per.period);
  mpq_class v(head * (bd - 1) + block, bt * (bd - 1));
  v.canonicalize();
  return v;
}

Word sturmian_stream(std::span<const std::uint64_t> coefficients,
                     bool repeat_last, std::size_t horizon) {
  if (coefficients.empty()) throw DomainError("slope underspecified");
  Letters older{1};  // s_{-1}
  Letters prev{0};   // s_0
  for (std::size_t k = 1;; ++k) {
    std::uint64_t d;
    if (k <= coefficients.size()) {
      d = coefficients[k - 1];
    } else if (repeat_last) {
      d = coefficients.back();
    } else {
      throw DomainError(
          "continued fraction coefficients define only " +
          std::to_string(prev.size()) +
          " letters; add more coefficients or a trailing 'rep'");
    }
    Letters next;
    next.reserve(std::min<std::size_t>(horizon, prev.size() * d + older.size()));
    for (std::uint64_t j = 0; j < d && next.size() < horizon; ++j) {
      next.insert(next.end(), prev.begin(), prev.end());
    }
    if (next.size() < horizon) {
      next.insert(next.end(), older.begin(), older.end());
    }
    older = std::move(prev);
    prev = std::move(next);
    if (prev.size() >= horizon) break;
  }
  prev.resize(horizon);
  return Word(std::move(prev), 2);
}

Periodicity detect_eventual_period(const Word& word) {
  const std::size_t n = word.size();
  const std::size_t start = n / 2;
  const std::size_t m = n - start;
  if (m < 2) return {PeriodicityStatus::kAperiodic, 0, 0};
  std::vector<std::size_t> pi(m, 0);
  for (std::size_t i = 1; i < m; ++i) {
    std::size_t k = pi[i - 1];
    while (k > 0 && word[start + i] != word[start + k]) k = pi[k - 1];
    if (word[start + i] == word[start + k]) ++k;
    pi[i] = k;
  }
  std::size_t d = m - pi[m - 1];
  if (d > n / 8) return {PeriodicityStatus::kAperiodic, 0, 0};
  std::size_t t = start;
  while (t > 0 && word[t - 1] == word[t - 1 + d]) --t;
  return {PeriodicityStatus::kPeriodic, t, d};
}

Periodicity resolve_periodicity(const WordSource& source, const Word& prefix) {
  Periodicity known = source.periodicity();
  if (known.status != PeriodicityStatus::kUnknown) return known;
  return detect_eventual_period(prefix);
}

Word read_digit_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open digit file " + path, 0);
  std::string bytes((std::istreambuf_iterator<char>(in)),
                    std::istreambuf_iterator<char>());
  if (!bytes.empty() && bytes.back() == '\n') bytes.pop_back();
  if (!bytes.empty() && bytes.back() == '\r') bytes.pop_back();
  if (bytes.empty()) throw ParseError("digit file " + path + " is empty", 0);
  for (std::size_t i = 0; i < bytes.size(); ++i) {
    if (bytes[i] < '0' || bytes[i] > '9') {
      throw ParseError("non-digit byte in " + path, i);
    }
  }
  return Word::from_digits(bytes);
}

}  // namespace rauzylab
