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

#ifndef RAUZYLAB_FACTOR_INDEX_HPP_
#define RAUZYLAB_FACTOR_INDEX_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "rauzylab/word.hpp"

namespace rauzylab {

// Occurrence of a factor: x[pos, pos + len), 0-based.
struct FactorRef {
  std::size_t pos = 0;
  std::size_t len = 0;
};

// A special factor together with its suffix-array interval [lo, hi).
struct SpecialFactor {
  FactorRef factor;
  std::size_t sa_lo = 0;
  std::size_t sa_hi = 0;
  int extensions = 0;
};

// Equivalence classes of the windows x[i, i + n), i in [0, L - n].
struct LevelPartition {
  std::size_t n = 0;
  std::vector<std::uint32_t> class_of;  // per window start
  std::size_t class_count = 0;
};

std::vector<std::uint32_t> suffix_array(std::span<const Letter> text,
                                        int alphabet_size);

// Suffix array, LCP and longest-previous-factor tables over one word, plus
// an optional second index over the reversed word for left extensions.
// Immutable after construction.
class FactorIndex {
 public:
  struct Options {
    bool with_reverse = true;
  };

  explicit FactorIndex(Word word) : FactorIndex(std::move(word), Options{}) {}
  FactorIndex(Word word, Options options);

  const Word& word() const { return word_; }
  std::size_t size() const { return word_.size(); }

  // Number of distinct factors of length n; 1 for n = 0, 0 for n > L.
  std::size_t distinct_count(std::size_t n) const;
  // Same, restricted to the suffix x[from, L).
  std::size_t distinct_count(std::size_t n, std::size_t from) const;

  // Suffix-array interval [lo, hi) of suffixes starting with `factor`.
  std::pair<std::size_t, std::size_t> sa_range(
      std::span<const Letter> factor) const;
  std::pair<std::size_t, std::size_t> sa_range(FactorRef factor) const;

  std::size_t count(std::span<const Letter> factor,
                    std::size_t from = 0) const;
  // Sorted 0-based start positions.
  std::vector<std::size_t> occurrences(std::span<const Letter> factor,
                                       std::size_t from = 0) const;

  std::vector<Letter> right_extensions(std::span<const Letter> factor) const;
  std::vector<Letter> left_extensions(std::span<const Letter> factor) const;

  // Longest factor starting at `pos` that also starts at some i < pos.
  std::size_t longest_previous_factor(std::size_t pos) const {
    return lpf_[pos];
  }
  // r(n): least m >= 1 with x[m, m + n) equal to an earlier window.
  std::optional<std::size_t> first_repeat(std::size_t n) const;

  // Right-special factors of length n (at least two right extensions),
  // one per distinct factor, in suffix-array order.
  std::vector<SpecialFactor> right_special(std::size_t n) const;
  // Left-special factors of length n, reported in this word's coordinates.
  // Requires the reverse index.
  std::vector<SpecialFactor> left_special(std::size_t n) const;

  LevelPartition partition(std::size_t n) const;

  std::span<const std::uint32_t> suffix_array() const { return sa_; }
  std::span<const std::uint32_t> lcp() const { return lcp_; }
  std::size_t rank(std::size_t pos) const { return rank_[pos]; }
  bool has_reverse() const { return reverse_ != nullptr; }

 private:
  int compare_suffix(std::size_t pos, std::span<const Letter> factor) const;

  Word word_;
  std::vector<std::uint32_t> sa_;
  std::vector<std::uint32_t> rank_;
  std::vector<std::uint32_t> lcp_;  // lcp_[j] = lcp(sa_[j-1], sa_[j])
  std::vector<std::uint32_t> lpf_;
  std::vector<std::uint32_t> first_repeat_;  // indexed by n
  std::vector<std::uint32_t> distinct_;      // indexed by n
  // Right-special nodes bucketed by depth (CSR layout).
  std::vector<std::uint32_t> special_offsets_;
  std::vector<SpecialFactor> special_nodes_;
  std::unique_ptr<const FactorIndex> reverse_;
};

}  // namespace rauzylab

#endif  // RAUZYLAB_FACTOR_INDEX_HPP_
