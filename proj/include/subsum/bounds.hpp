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
#include <optional>
#include <string>
#include <vector>

#include "subsum/core_model.hpp"

// Closed-form lower bounds on |Σ_α| for sets and r-repeated sequences, and
// the dispatcher that decides which of them an instance is entitled to.
// Everything is exact integer arithmetic.
namespace subsum::bounds {

enum class TheoremId {
  kT2_1,  // A ∩ (−A) = ∅
  kC2_2,  // A ∩ (−A) = {0}
  kT2_3,  // n negatives, p positives
  kC2_4,  // n negatives, p positives and zero
  kC2_5,  // any set, k >= 2
  kT3_1_disjoint,
  kT3_1_zero,
  kT3_2,
  kC3_3,
  kC3_4,
  kT1_1,  // |A+B| >= |A|+|B|-1
  kT1_2,  // |hA| >= h|A|-h+1
  kT1_3,  // prime-field bound
};

enum class CaseLabel { kI, kII, kIII, kIV, kOdd, kEven };

struct BoundParams {
  std::int64_t k = 0;
  std::int64_t n = 0;
  std::int64_t p = 0;
  std::int64_t r = 1;
  std::int64_t alpha = 0;
  std::int64_t m = 0;  // 0 when the theorem has no m-index
};

struct BoundResult {
  TheoremId theorem;
  std::optional<CaseLabel> case_label;
  std::int64_t value = 0;
  BoundParams params;
};

// Stable report identifiers: "T2_1", ..., "T3_1" (both variants), ...
std::string theorem_string(TheoremId id);
// "i".."iv", "odd"/"even", "disjoint"/"zero" for the two T3_1 forms, or "".
std::string case_string(const BoundResult& bound);
// "T2_3(i)", "C2_5", "T3_1(zero)", ...
std::string display_name(const BoundResult& bound);

// The unique m with (m-1)r <= alpha < mr.
std::int64_t m_index(std::int64_t alpha, std::int64_t r);

BoundResult bound_disjoint(std::int64_t k, std::int64_t alpha);
BoundResult bound_zero(std::int64_t k, std::int64_t alpha);
BoundResult bound_mixed(std::int64_t n, std::int64_t p, std::int64_t alpha);
BoundResult bound_mixed_zero(std::int64_t n, std::int64_t p,
                             std::int64_t alpha);
BoundResult bound_general(std::int64_t k, std::int64_t alpha, bool has_zero);
// Same bound written with k's parity instead of a floor.
std::int64_t bound_general_parity_form(std::int64_t k, std::int64_t alpha,
                                       bool has_zero);

BoundResult bound_seq_disjoint(std::int64_t k, std::int64_t r,
                               std::int64_t alpha);
BoundResult bound_seq_zero(std::int64_t k, std::int64_t r, std::int64_t alpha);
BoundResult bound_seq_mixed(std::int64_t n, std::int64_t p, std::int64_t r,
                            std::int64_t alpha);
BoundResult bound_seq_mixed_zero(std::int64_t n, std::int64_t p,
                                 std::int64_t r, std::int64_t alpha);
BoundResult bound_seq_general(std::int64_t k, std::int64_t r,
                              std::int64_t alpha, bool has_zero);

// Sumset sanity bounds.
BoundResult bound_sumset(std::int64_t a_size, std::int64_t b_size);
BoundResult bound_h_fold(std::int64_t a_size, std::int64_t h);
// min{p, |A|(|A|+1)/2 - α(α+1)/2 + 1}.
BoundResult bound_prime_field(std::int64_t p, std::int64_t size,
                              std::int64_t alpha);

// Every theorem whose hypotheses the instance meets, evaluated at alpha.
// Sequences at alpha = rk get an empty list (Σ is the single total there).
std::vector<BoundResult> applicable_bounds(const IntegerSet& set,
                                           std::int64_t alpha);
std::vector<BoundResult> applicable_bounds(const RepSequence& seq,
                                           std::int64_t alpha);
std::vector<BoundResult> applicable_bounds(const Instance& instance,
                                           std::int64_t alpha);

}  // namespace subsum::bounds
