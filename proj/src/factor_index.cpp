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

#include "rauzylab/factor_index.hpp"

#include <algorithm>
#include <limits>

#include "rauzylab/errors.hpp"

namespace rauzylab {
namespace {

std::vector<int> sa_naive(const std::vector<int>& s) {
  const int n = static_cast<int>(s.size());
  std::vector<int> sa(n);
  for (int i = 0; i < n; ++i) sa[i] = i;
  std::sort(sa.begin(), sa.end(), [&](int l, int r) {
    if (l == r) return false;
    while (l < n && r < n) {
      if (s[l] != s[r]) return s[l] < s[r];
      ++l;
      ++r;
    }
    return l == n;
  });
  return sa;
}

// SA-IS induced sorting. Letters of `s` lie in [0, upper].
std::vector<int> sa_is(const std::vector<int>& s, int upper) {
  const int n = static_cast<int>(s.size());
  if (n == 0) return {};
  if (n == 1) return {0};
  if (n < 40) return sa_naive(s);

  std::vector<int> sa(n);
  std::vector<bool> ls(n, false);  // true = S-type
  for (int i = n - 2; i >= 0; --i) {
    ls[i] = (s[i] == s[i + 1]) ? ls[i + 1] : (s[i] < s[i + 1]);
  }
  std::vector<int> sum_l(upper + 1, 0);
  std::vector<int> sum_s(upper + 1, 0);
  for (int i = 0; i < n; ++i) {
    if (!ls[i]) {
      ++sum_s[s[i]];
    } else {
      ++sum_l[s[i] + 1];
    }
  }
  for (int i = 0; i <= upper; ++i) {
    sum_s[i] += sum_l[i];
    if (i < upper) sum_l[i + 1] += sum_s[i];
  }

  auto induce = [&](const std::vector<int>& lms) {
    std::fill(sa.begin(), sa.end(), -1);
    std::vector<int> buf(upper + 1);
    std::copy(sum_s.begin(), sum_s.end(), buf.begin());
    for (int d : lms) {
      if (d == n) continue;
      sa[buf[s[d]]++] = d;
    }
    std::copy(sum_l.begin(), sum_l.end(), buf.begin());
    sa[buf[s[n - 1]]++] = n - 1;
    for (int i = 0; i < n; ++i) {
      int v = sa[i];
      if (v >= 1 && !ls[v - 1]) sa[buf[s[v - 1]]++] = v - 1;
    }
    std::copy(sum_l.begin(), sum_l.end(), buf.begin());
    for (int i = n - 1; i >= 0; --i) {
      int v = sa[i];
      if (v >= 1 && ls[v - 1]) sa[--buf[s[v - 1] + 1]] = v - 1;
    }
  };

  std::vector<int> lms_map(n + 1, -1);
  int m = 0;
  for (int i = 1; i < n; ++i) {
    if (!ls[i - 1] && ls[i]) lms_map[i] = m++;
  }
  std::vector<int> lms;
  lms.reserve(m);
  for (int i = 1; i < n; ++i) {
    if (!ls[i - 1] && ls[i]) lms.push_back(i);
  }
  induce(lms);

  if (m) {
    std::vector<int> sorted_lms;
    sorted_lms.reserve(m);
    for (int v : sa) {
      if (lms_map[v] != -1) sorted_lms.push_back(v);
    }
    std::vector<int> rec_s(m);
    int rec_upper = 0;
    rec_s[lms_map[sorted_lms[0]]] = 0;
    for (int i = 1; i < m; ++i) {
      int l = sorted_lms[i - 1];
      int r = sorted_lms[i];
      int end_l = (lms_map[l] + 1 < m) ? lms[lms_map[l] + 1] : n;
      int end_r = (lms_map[r] + 1 < m) ? lms[lms_map[r] + 1] : n;
      bool same = true;
      if (end_l - l != end_r - r) {
        same = false;
      } else {
        while (l < end_l) {
          if (s[l] != s[r]) break;
          ++l;
          ++r;
        }
        if (l == n || s[l] != s[r]) same = false;
      }
      if (!same) ++rec_upper;
      rec_s[lms_map[sorted_lms[i]]] = rec_upper;
    }
    std::vector<int> rec_sa = sa_is(rec_s, rec_upper);
    for (int i = 0; i < m; ++i) sorted_lms[i] = lms[rec_sa[i]];
    induce(sorted_lms);
  }
  return sa;
}

constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();

}  // namespace

std::vector<std::uint32_t> suffix_array(std::span<const Letter> text,
                                        int alphabet_size) {
  std::vector<int> s(text.begin(), text.end());
  std::vector<int> sa = sa_is(s, alphabet_size - 1);
  return std::vector<std::uint32_t>(sa.begin(), sa.end());
}

FactorIndex::FactorIndex(Word word, Options options) : word_(std::move(word)) {
  const std::size_t n = word_.size();
  if (n == 0) throw DomainError("cannot index the empty word");
  if (n >= std::numeric_limits<std::int32_t>::max()) {
    throw DomainError("word too long to index");
  }
  sa_ = rauzylab::suffix_array(word_.view(), word_.alphabet_size());

  rank_.assign(n, 0);
  for (std::size_t j = 0; j < n; ++j) rank_[sa_[j]] = j;

  // Kasai.
  lcp_.assign(n, 0);
  std::size_t h = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (rank_[i] == 0) {
      h = 0;
      continue;
    }
    std::size_t j = sa_[rank_[i] - 1];
    while (i + h < n && j + h < n && word_[i + h] == word_[j + h]) ++h;
    lcp_[rank_[i]] = h;
    if (h > 0) --h;
  }

  // Longest previous factor from nearest smaller text positions on both
  // sides in suffix-array order.
  lpf_.assign(n, 0);
  struct Entry {
    std::uint32_t j;
    std::uint32_t h;
  };
  std::vector<Entry> stack;
  stack.reserve(64);
  for (std::size_t j = 0; j < n; ++j) {
    std::uint32_t cur = j > 0 ? lcp_[j] : 0;
    while (!stack.empty() && sa_[stack.back().j] > sa_[j]) {
      cur = std::min(cur, stack.back().h);
      stack.pop_back();
    }
    if (!stack.empty()) lpf_[sa_[j]] = cur;
    stack.push_back({static_cast<std::uint32_t>(j), stack.empty() ? 0 : cur});
  }
  stack.clear();
  for (std::size_t jj = n; jj-- > 0;) {
    std::uint32_t cur = jj + 1 < n ? lcp_[jj + 1] : 0;
    while (!stack.empty() && sa_[stack.back().j] > sa_[jj]) {
      cur = std::min(cur, stack.back().h);
      stack.pop_back();
    }
    if (!stack.empty()) lpf_[sa_[jj]] = std::max(lpf_[sa_[jj]], cur);
    stack.push_back(
        {static_cast<std::uint32_t>(jj), stack.empty() ? 0 : cur});
  }

  first_repeat_.assign(1, 0);
  for (std::size_t m = 0; m < n; ++m) {
    while (first_repeat_.size() <= lpf_[m]) {
      first_repeat_.push_back(static_cast<std::uint32_t>(m));
    }
  }

  std::vector<std::uint32_t> ge(n + 2, 0);
  for (std::size_t j = 1; j < n; ++j) ++ge[lcp_[j]];
  for (std::size_t v = n; v-- > 0;) ge[v] += ge[v + 1];
  distinct_.assign(n + 1, 0);
  distinct_[0] = 1;
  for (std::size_t len = 1; len <= n; ++len) {
    distinct_[len] = static_cast<std::uint32_t>(n - len + 1 - ge[len]);
  }

  // Bottom-up lcp-interval traversal. An interval of depth d has
  // (#j with lcp_[j] == d) + 1 children; the child that is the suffix of
  // length exactly d carries no letter.
  struct Frame {
    std::uint32_t depth;
    std::uint32_t lo;
    std::uint32_t eq;
  };
  std::vector<std::pair<std::uint32_t, SpecialFactor>> found;
  std::vector<Frame> frames{{0, 0, 0}};
  for (std::size_t i = 1; i <= n; ++i) {
    std::uint32_t cur = i < n ? lcp_[i] : 0;
    std::uint32_t lo = static_cast<std::uint32_t>(i - 1);
    while (cur < frames.back().depth) {
      Frame f = frames.back();
      frames.pop_back();
      std::size_t r = rank_[n - f.depth];
      int ext = static_cast<int>(f.eq) + 1 - ((r >= f.lo && r < i) ? 1 : 0);
      if (ext >= 2) {
        found.push_back(
            {f.depth, SpecialFactor{{sa_[f.lo], f.depth}, f.lo, i, ext}});
      }
      lo = f.lo;
    }
    if (i == n) break;
    if (cur > frames.back().depth) {
      frames.push_back({cur, lo, 1});
    } else {
      ++frames.back().eq;
    }
  }
  std::uint32_t max_depth = 0;
  for (const auto& f : found) max_depth = std::max(max_depth, f.first);
  special_offsets_.assign(max_depth + 2, 0);
  for (const auto& f : found) ++special_offsets_[f.first + 1];
  for (std::size_t d = 1; d < special_offsets_.size(); ++d) {
    special_offsets_[d] += special_offsets_[d - 1];
  }
  special_nodes_.resize(found.size());
  std::vector<std::uint32_t> fill(special_offsets_.begin(),
                                  special_offsets_.end() - 1);
  std::stable_sort(found.begin(), found.end(),
                   [](const auto& a, const auto& b) {
                     return a.second.sa_lo < b.second.sa_lo;
                   });
  for (const auto& f : found) special_nodes_[fill[f.first]++] = f.second;

  if (options.with_reverse) {
    reverse_ = std::make_unique<const FactorIndex>(word_.reversed(),
                                                   Options{false});
  }
}

std::size_t FactorIndex::distinct_count(std::size_t n) const {
  return n < distinct_.size() ? distinct_[n] : 0;
}

std::size_t FactorIndex::distinct_count(std::size_t n,
                                        std::size_t from) const {
  if (from == 0) return distinct_count(n);
  const std::size_t len = size();
  if (n == 0) return 1;
  std::size_t count = 0;
  bool have = false;
  std::uint32_t run = kInf;
  for (std::size_t j = 0; j < len; ++j) {
    if (j > 0) run = std::min(run, lcp_[j]);
    std::size_t p = sa_[j];
    if (p >= from && len - p >= n) {
      if (!have || run < n) ++count;
      have = true;
      run = kInf;
    }
  }
  return count;
}

LevelPartition FactorIndex::partition(std::size_t n) const {
  const std::size_t len = size();
  LevelPartition out;
  out.n = n;
  if (n == 0 || n > len) return out;
  out.class_of.assign(len - n + 1, 0);
  bool have = false;
  std::uint32_t run = kInf;
  std::uint32_t id = 0;
  for (std::size_t j = 0; j < len; ++j) {
    if (j > 0) run = std::min(run, lcp_[j]);
    std::size_t p = sa_[j];
    if (len - p >= n) {
      if (have && run < n) ++id;
      have = true;
      run = kInf;
      out.class_of[p] = id;
    }
  }
  out.class_count = have ? id + 1 : 0;
  return out;
}

int FactorIndex::compare_suffix(std::size_t pos,
                                std::span<const Letter> factor) const {
  const std::size_t len = size();
  for (std::size_t t = 0; t < factor.size(); ++t) {
    if (pos + t >= len) return -1;
    if (word_[pos + t] != factor[t]) {
      return word_[pos + t] < factor[t] ? -1 : 1;
    }
  }
  return 0;
}

std::pair<std::size_t, std::size_t> FactorIndex::sa_range(
    std::span<const Letter> factor) const {
  auto lo = std::partition_point(sa_.begin(), sa_.end(), [&](std::uint32_t p) {
    return compare_suffix(p, factor) < 0;
  });
  auto hi = std::partition_point(lo, sa_.end(), [&](std::uint32_t p) {
    return compare_suffix(p, factor) == 0;
  });
  return {static_cast<std::size_t>(lo - sa_.begin()),
          static_cast<std::size_t>(hi - sa_.begin())};
}

std::pair<std::size_t, std::size_t> FactorIndex::sa_range(
    FactorRef factor) const {
  return sa_range(word_.view(factor.pos, factor.len));
}

std::size_t FactorIndex::count(std::span<const Letter> factor,
                               std::size_t from) const {
  auto [lo, hi] = sa_range(factor);
  if (from == 0) return hi - lo;
  std::size_t c = 0;
  for (std::size_t j = lo; j < hi; ++j) c += sa_[j] >= from;
  return c;
}

std::vector<std::size_t> FactorIndex::occurrences(
    std::span<const Letter> factor, std::size_t from) const {
  auto [lo, hi] = sa_range(factor);
  std::vector<std::size_t> out;
  for (std::size_t j = lo; j < hi; ++j) {
    if (sa_[j] >= from) out.push_back(sa_[j]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Letter> FactorIndex::right_extensions(
    std::span<const Letter> factor) const {
  std::vector<Letter> ext;
  Letters probe(factor.begin(), factor.end());
  probe.push_back(0);
  for (int c = 0; c < word_.alphabet_size(); ++c) {
    probe.back() = static_cast<Letter>(c);
    auto [lo, hi] = sa_range(probe);
    if (lo < hi) ext.push_back(static_cast<Letter>(c));
  }
  return ext;
}

std::vector<Letter> FactorIndex::left_extensions(
    std::span<const Letter> factor) const {
  if (reverse_) {
    Letters rev(factor.rbegin(), factor.rend());
    return reverse_->right_extensions(rev);
  }
  std::vector<bool> seen(word_.alphabet_size(), false);
  for (std::size_t p : occurrences(factor)) {
    if (p > 0) seen[word_[p - 1]] = true;
  }
  std::vector<Letter> ext;
  for (int c = 0; c < word_.alphabet_size(); ++c) {
    if (seen[c]) ext.push_back(static_cast<Letter>(c));
  }
  return ext;
}

std::optional<std::size_t> FactorIndex::first_repeat(std::size_t n) const {
  if (n == 0 || n >= first_repeat_.size()) return std::nullopt;
  return first_repeat_[n];
}

std::vector<SpecialFactor> FactorIndex::right_special(std::size_t n) const {
  if (n + 1 >= special_offsets_.size()) return {};
  return std::vector<SpecialFactor>(
      special_nodes_.begin() + special_offsets_[n],
      special_nodes_.begin() + special_offsets_[n + 1]);
}

std::vector<SpecialFactor> FactorIndex::left_special(std::size_t n) const {
  if (!reverse_) throw DomainError("left-special query needs the reverse index");
  std::vector<SpecialFactor> out;
  for (const SpecialFactor& r : reverse_->right_special(n)) {
    SpecialFactor f;
    f.factor = {size() - r.factor.pos - n, n};
    auto [lo, hi] = sa_range(f.factor);
    f.sa_lo = lo;
    f.sa_hi = hi;
    f.extensions = r.extensions;
    out.push_back(f);
  }
  std::sort(out.begin(), out.end(),
            [](const SpecialFactor& a, const SpecialFactor& b) {
              return a.sa_lo < b.sa_lo;
            });
  return out;
}

}  // namespace rauzylab
