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

#include "subsum/core_model.hpp"

// Brute-force enumeration of subset and subsequence sums. Deliberately naive:
// these functions are the ground truth the DP engine is checked against.
namespace subsum::oracle {

// Largest k for which oracle_sigma_set enumerates 2^k subsets.
inline constexpr int kMaxSetK = 25;
// Largest (r+1)^k for which oracle_sigma_seq enumerates multiplicity vectors.
inline constexpr std::int64_t kMaxSeqVectors = 2'000'000;
// Largest multiset count C(k+h-1, h) oracle_fold will walk.
inline constexpr std::int64_t kMaxFoldTuples = 5'000'000;

// The three h-fold sumset flavours: repetition unlimited, forbidden, or
// capped at r per element.
struct FoldKind {
  enum class Type { kUnrestricted, kRestricted, kGeneralized };
  Type type = Type::kRestricted;
  int r = 1;  // only meaningful for kGeneralized

  static FoldKind unrestricted() { return {Type::kUnrestricted, 0}; }
  static FoldKind restricted() { return {Type::kRestricted, 1}; }
  static FoldKind generalized(int r) { return {Type::kGeneralized, r}; }
};

// True when the oracle guards admit the instance.
bool set_callable(const IntegerSet& set);
bool seq_callable(const RepSequence& seq);

SumSet oracle_sigma_set(const IntegerSet& set, std::int64_t alpha,
                        SumMode mode);
SumSet oracle_sigma_seq(const RepSequence& seq, std::int64_t alpha,
                        SumMode mode);
SumSet oracle_fold(const IntegerSet& set, std::int64_t h, FoldKind kind);

}  // namespace subsum::oracle
