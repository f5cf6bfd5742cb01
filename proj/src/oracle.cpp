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

#include "subsum/oracle.hpp"

#include <vector>

#include "subsum/error.hpp"

namespace subsum::oracle {

namespace {

// Presence table keyed by (sum - lowest), where lowest is the most negative
// sum the instance can reach.
class Seen {
 public:
  Seen(std::int64_t lowest, std::int64_t highest)
      : lowest_(lowest), seen_(static_cast<std::size_t>(highest - lowest + 1)) {}

  void add(std::int64_t s) { seen_[static_cast<std::size_t>(s - lowest_)] = true; }

  SumSet collect() const {
    std::vector<std::int64_t> out;
    for (std::size_t i = 0; i < seen_.size(); ++i) {
      if (seen_[i]) out.push_back(lowest_ + static_cast<std::int64_t>(i));
    }
    return SumSet::from_values(std::move(out));
  }

 private:
  std::int64_t lowest_;
  std::vector<bool> seen_;
};

void check_alpha(std::int64_t alpha, std::int64_t len) {
  if (alpha < 0 || alpha > len) {
    throw Error(ErrorCode::kRange, "alpha " + std::to_string(alpha) +
                                       " outside [0," + std::to_string(len) +
                                       "]");
  }
}

bool in_window(std::int64_t size, std::int64_t alpha, std::int64_t len,
               SumMode mode) {
  return mode == SumMode::kAtLeast ? size >= alpha : size <= len - alpha;
}

std::int64_t saturating_pow(std::int64_t base, int exp, std::int64_t cap) {
  std::int64_t v = 1;
  for (int i = 0; i < exp; ++i) {
    if (v > cap / base) return cap + 1;
    v *= base;
  }
  return v;
}

// C(k+h-1, h), saturating above cap.
std::int64_t multiset_count(std::int64_t k, std::int64_t h, std::int64_t cap) {
  long double c = 1;
  for (std::int64_t i = 1; i <= h; ++i) {
    c = c * static_cast<long double>(k - 1 + i) / static_cast<long double>(i);
    if (c > static_cast<long double>(cap)) return cap + 1;
  }
  return static_cast<std::int64_t>(c + 0.5L);
}

void fold_walk(std::span<const std::int64_t> a, std::size_t idx,
               std::int64_t remaining, std::int64_t cap, std::int64_t sum,
               std::vector<std::int64_t>& out) {
  if (remaining == 0) {
    out.push_back(sum);
    return;
  }
  if (idx == a.size()) return;
  const std::int64_t top = remaining < cap ? remaining : cap;
  for (std::int64_t m = 0; m <= top; ++m) {
    fold_walk(a, idx + 1, remaining - m, cap, sum + m * a[idx], out);
  }
}

}  // namespace

bool set_callable(const IntegerSet& set) { return set.size() <= kMaxSetK; }

bool seq_callable(const RepSequence& seq) {
  return saturating_pow(seq.r() + 1, seq.k(), kMaxSeqVectors) <=
         kMaxSeqVectors;
}

SumSet oracle_sigma_set(const IntegerSet& set, std::int64_t alpha,
                        SumMode mode) {
  const int k = set.size();
  check_alpha(alpha, k);
  if (!set_callable(set)) {
    throw Error(ErrorCode::kRange, "oracle enumeration guard: k = " +
                                       std::to_string(k) + " > " +
                                       std::to_string(kMaxSetK));
  }
  const auto a = set.elements();
  std::int64_t lo = 0, hi = 0;
  for (auto v : a) (v < 0 ? lo : hi) += v;
  Seen seen(lo, hi);
  const std::uint64_t subsets = std::uint64_t{1} << k;
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    std::int64_t sum = 0;
    std::int64_t size = 0;
    for (int i = 0; i < k; ++i) {
      if (mask >> i & 1u) {
        sum += a[i];
        ++size;
      }
    }
    if (in_window(size, alpha, k, mode)) seen.add(sum);
  }
  return seen.collect();
}

SumSet oracle_sigma_seq(const RepSequence& seq, std::int64_t alpha,
                        SumMode mode) {
  const int k = seq.k();
  const int r = seq.r();
  check_alpha(alpha, seq.length());
  if (!seq_callable(seq)) {
    throw Error(ErrorCode::kRange,
                "oracle enumeration guard: (r+1)^k exceeds " +
                    std::to_string(kMaxSeqVectors));
  }
  const auto a = seq.base().elements();
  std::int64_t lo = 0, hi = 0;
  for (auto v : a) (v < 0 ? lo : hi) += r * v;
  Seen seen(lo, hi);
  std::vector<int> mult(static_cast<std::size_t>(k), 0);
  while (true) {
    std::int64_t sum = 0;
    std::int64_t size = 0;
    for (int i = 0; i < k; ++i) {
      sum += mult[i] * a[i];
      size += mult[i];
    }
    if (in_window(size, alpha, seq.length(), mode)) seen.add(sum);
    int i = 0;
    while (i < k && mult[i] == r) mult[i++] = 0;
    if (i == k) break;
    ++mult[i];
  }
  return seen.collect();
}

SumSet oracle_fold(const IntegerSet& set, std::int64_t h, FoldKind kind) {
  const std::int64_t k = set.size();
  if (h < 0) throw Error(ErrorCode::kRange, "h must be nonnegative");
  std::int64_t cap = h;
  switch (kind.type) {
    case FoldKind::Type::kRestricted:
      if (h > k) throw Error(ErrorCode::kRange, "restricted sumset needs h <= k");
      cap = 1;
      break;
    case FoldKind::Type::kGeneralized:
      if (kind.r < 1) throw Error(ErrorCode::kRange, "r must be positive");
      if (h > kind.r * k) {
        throw Error(ErrorCode::kRange, "generalized sumset needs h <= rk");
      }
      cap = kind.r;
      break;
    case FoldKind::Type::kUnrestricted:
      break;
  }
  if (h == 0) return SumSet::from_values({0});
  if (multiset_count(k, h, kMaxFoldTuples) > kMaxFoldTuples) {
    throw Error(ErrorCode::kRange, "oracle enumeration guard for h-fold sums");
  }
  std::vector<std::int64_t> sums;
  fold_walk(set.elements(), 0, h, cap, 0, sums);
  return SumSet::from_values(std::move(sums));
}

}  // namespace subsum::oracle
