// Copyright 2026 The subsum Authors
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

#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace subsum::detail {

// Fixed-width bit array used as an offset-indexed set of sums: bit i stands
// for the sum (offset + i). Bits past width() are kept clear.
class SumBitmap {
 public:
  SumBitmap() = default;
  explicit SumBitmap(std::size_t width)
      : width_(width), words_((width + 63) / 64, 0) {}

  std::size_t width() const { return width_; }

  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  bool test(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }

  bool any() const {
    for (auto w : words_) {
      if (w) return true;
    }
    return false;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  SumBitmap& operator|=(const SumBitmap& other) {
    const std::size_t n = std::min(words_.size(), other.words_.size());
    for (std::size_t i = 0; i < n; ++i) words_[i] |= other.words_[i];
    clear_tail();
    return *this;
  }

  // this[i + shift] |= src[i] for every i. `src` may be narrower.
  void or_shifted_up(const SumBitmap& src, std::size_t shift) {
    const std::size_t ws = shift >> 6;
    const unsigned bs = shift & 63;
    const std::size_t n = words_.size();
    const std::size_t m = src.words_.size();
    for (std::size_t j = n; j-- > ws;) {
      const std::size_t s = j - ws;
      std::uint64_t w = s < m ? src.words_[s] << bs : 0;
      if (bs != 0 && s >= 1 && s - 1 < m) w |= src.words_[s - 1] >> (64 - bs);
      words_[j] |= w;
    }
    clear_tail();
  }

  // this[i - shift] |= src[i] for every i >= shift.
  void or_shifted_down(const SumBitmap& src, std::size_t shift) {
    const std::size_t ws = shift >> 6;
    const unsigned bs = shift & 63;
    const std::size_t n = words_.size();
    const std::size_t m = src.words_.size();
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t s = j + ws;
      if (s >= m) break;
      std::uint64_t w = src.words_[s] >> bs;
      if (bs != 0 && s + 1 < m) w |= src.words_[s + 1] << (64 - bs);
      words_[j] |= w;
    }
    clear_tail();
  }

  // this |= src shifted by a signed amount (positive moves sums up).
  void or_shifted(const SumBitmap& src, std::int64_t shift) {
    if (shift >= 0) {
      or_shifted_up(src, static_cast<std::size_t>(shift));
    } else {
      or_shifted_down(src, static_cast<std::size_t>(-shift));
    }
  }

  template <typename F>
  void for_each_set(F&& f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w) {
        const int b = std::countr_zero(w);
        f(wi * 64 + static_cast<std::size_t>(b));
        w &= w - 1;
      }
    }
  }

 private:
  void clear_tail() {
    if (const unsigned rem = width_ & 63; rem != 0 && !words_.empty()) {
      words_.back() &= (std::uint64_t{1} << rem) - 1;
    }
  }

  std::size_t width_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace subsum::detail
