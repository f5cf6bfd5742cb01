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
#include <vector>

#include "subsum/core_model.hpp"
#include "subsum/oracle.hpp"

// Cardinality-resolved bitmap dynamic programming for subset sums,
// subsequence sums and h-fold sumsets.
//
// The DP keeps one bitmap per subset size c, bit i of layer c meaning "some
// c-element sub(multi)set sums to lowest + i", where lowest is the most
// negative reachable sum (r times the sum of the negatives). Inserting a
// value v moves layer c into layer c + 1 shifted by v; a value allowed r
// times is inserted r times in a row. Σ_α and Σ^α are unions over a window
// of layers.
namespace subsum::engine {

using oracle::FoldKind;

// Upper bound on layers * width bits for one DP table (256 MiB).
inline constexpr std::int64_t kMaxTableBits = std::int64_t{1} << 31;

SumSet add_sets(const SumSet& a, const SumSet& b);
SumSet h_fold(const IntegerSet& set, std::int64_t h);

SumSet sigma(const IntegerSet& set, std::int64_t alpha, SumMode mode);
SumSet sigma_seq(const RepSequence& seq, std::int64_t alpha, SumMode mode);
SumSet fold_fast(const IntegerSet& set, std::int64_t h, FoldKind kind);

// Σ-sets for every alpha in [0, len] from a single DP pass; entry i holds
// the set for alpha = i.
std::vector<SumSet> sigma_all(const IntegerSet& set, SumMode mode);
std::vector<SumSet> sigma_seq_all(const RepSequence& seq, SumMode mode);

// Dispatches on the instance kind.
SumSet sigma_of(const Instance& instance, std::int64_t alpha, SumMode mode);
std::vector<SumSet> sigma_all_of(const Instance& instance, SumMode mode);

}  // namespace subsum::engine
