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
#include <string_view>

#include "subsum/bounds.hpp"
#include "subsum/core_model.hpp"

namespace subsum::witnesses {

enum class FamilyId {
  kPosInterval,        // [1,k]
  kNonnegInterval,     // [0,k-1]
  kMixedPunctured,     // [-n,p] \ {0}
  kMixedFull,          // [-n,p]
  kPosIntervalR,       // [1,k]_r
  kNonnegIntervalR,    // [0,k-1]_r
  kMixedPuncturedR,    // [-n,p]_r with every copy of 0 removed
  kMixedFullR,         // [-n,p]_r
};

struct WitnessFamily {
  FamilyId id = FamilyId::kPosInterval;
  int k = 0;  // interval families
  int n = 0;  // mixed families
  int p = 0;
  int r = 1;  // _r families
};

// "pos-interval", "nonneg-interval", "mixed-punctured", "mixed-full" and the
// same with an "-r" suffix.
std::string family_string(FamilyId id);
std::optional<FamilyId> parse_family(std::string_view text);
bool is_sequence_family(FamilyId id);

// Throws Error(kInvalidArgument) when params miss the family's hypotheses.
void validate(const WitnessFamily& family);
Instance witness(const WitnessFamily& family);

// Number of terms of the witness (k, n+p, n+p+1, times r for sequences).
std::int64_t witness_length(const WitnessFamily& family);
// Largest alpha check_tightness accepts: the length for sets, length-1 for
// sequences.
std::int64_t max_alpha(const WitnessFamily& family);

// The bound each family is extremal for, evaluated at alpha.
bounds::BoundResult matched_bound(const WitnessFamily& family,
                                  std::int64_t alpha);

struct TightnessReport {
  WitnessFamily family;
  std::int64_t alpha = 0;
  std::int64_t computed_size = 0;
  bounds::BoundResult bound;
  bool tight = false;
};

TightnessReport check_tightness(const WitnessFamily& family,
                                std::int64_t alpha);

}  // namespace subsum::witnesses
