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

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace subsum {

// Caps applied when instances are constructed. All sums computed by the
// library stay below max_abs * max_k * max_r in magnitude, which fits int64.
struct Limits {
  std::int64_t max_abs = 1'000'000;
  int max_k = 64;
  int max_r = 64;
};

// A finite set of distinct integers, kept sorted ascending.
class IntegerSet {
 public:
  // Sorts the input. Throws Error(kParse) on duplicates or an empty input
  // and Error(kRange) when an element or the cardinality exceeds `limits`.
  static IntegerSet from_elements(std::vector<std::int64_t> elements,
                                  const Limits& limits = {});

  std::span<const std::int64_t> elements() const { return elements_; }
  int size() const { return static_cast<int>(elements_.size()); }
  std::int64_t min() const { return elements_.front(); }
  std::int64_t max() const { return elements_.back(); }
  std::int64_t total() const;
  bool contains(std::int64_t x) const;

  // {-a : a in A}; the result is re-sorted.
  IntegerSet negated() const;
  // {x * a : a in A}; x must be nonzero.
  IntegerSet dilated(std::int64_t x) const;

  friend bool operator==(const IntegerSet&, const IntegerSet&) = default;

 private:
  explicit IntegerSet(std::vector<std::int64_t> sorted)
      : elements_(std::move(sorted)) {}

  std::vector<std::int64_t> elements_;
};

// An IntegerSet in which every element is repeated exactly r times.
class RepSequence {
 public:
  RepSequence(IntegerSet base, int r, const Limits& limits = {});

  const IntegerSet& base() const { return base_; }
  int r() const { return r_; }
  int k() const { return base_.size(); }
  // Number of terms, r * k.
  int length() const { return r_ * base_.size(); }
  std::int64_t total() const { return r_ * base_.total(); }

  friend bool operator==(const RepSequence&, const RepSequence&) = default;

 private:
  IntegerSet base_;
  int r_;
};

// An instance handed to the bound catalog and verifier: either a plain set
// or a repeated sequence (which selects the sequence theorems even at r = 1).
using Instance = std::variant<IntegerSet, RepSequence>;

struct SignProfile {
  int n = 0;  // negative elements
  int p = 0;  // positive elements
  bool has_zero = false;
  bool self_disjoint = false;   // A ∩ (−A) = ∅
  bool self_meet_zero = false;  // A ∩ (−A) = {0}

  friend bool operator==(const SignProfile&, const SignProfile&) = default;
};

// A finite set of achievable sums in canonical sorted form.
class SumSet {
 public:
  SumSet() = default;
  // Sorts and deduplicates.
  static SumSet from_values(std::vector<std::int64_t> values);

  std::span<const std::int64_t> sums() const { return sums_; }
  std::int64_t size() const { return static_cast<std::int64_t>(sums_.size()); }
  bool empty() const { return sums_.empty(); }
  std::int64_t min_sum() const { return sums_.front(); }
  std::int64_t max_sum() const { return sums_.back(); }
  bool contains(std::int64_t s) const;
  // True when every member of *this is in `other`.
  bool is_subset_of(const SumSet& other) const;

  // {total - s : s in *this}
  SumSet reflected(std::int64_t total) const;
  // {x * s : s in *this}
  SumSet scaled(std::int64_t x) const;

  friend bool operator==(const SumSet&, const SumSet&) = default;

 private:
  std::vector<std::int64_t> sums_;
};

// Which cardinality window a Σ-set collects: |A'| >= alpha (Σ_α) or
// |A'| <= len - alpha (Σ^α).
enum class SumMode { kAtLeast, kAtMost };

// Accepts "{i1,i2,...}" or "[a,b]" (a <= b). Whitespace is ignored.
IntegerSet parse_set(std::string_view text, const Limits& limits = {});
RepSequence parse_sequence(std::string_view text, int r,
                           const Limits& limits = {});

// Brace literal, e.g. "{-2,-1,1,2}".
std::string format_set(const IntegerSet& set);
// Brace literal with a "_r" suffix when r > 1, e.g. "{1,2}_2".
std::string format_instance(const Instance& instance);

SignProfile classify(const IntegerSet& set);

const IntegerSet& base_of(const Instance& instance);
int multiplicity_of(const Instance& instance);

}  // namespace subsum
