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

#include "subsum/verifier.hpp"

// Subset sums over the prime field F_p and an exhaustive check of the
// min{p, |A|(|A|+1)/2 - α(α+1)/2 + 1} lower bound for sets with A ∩ (−A) = ∅.
namespace subsum::fp {

inline constexpr int kMaxVerifyPrime = 31;

bool is_prime(std::int64_t p);

class FpSubset {
 public:
  // Reduces every value mod p. Throws Error(kNotPrime) for composite p and
  // Error(kParse) for an empty list or residues that collide.
  FpSubset(int p, const std::vector<std::int64_t>& values);

  int p() const { return p_; }
  const std::vector<int>& residues() const { return residues_; }
  int size() const { return static_cast<int>(residues_.size()); }
  // x and p - x never both present, and 0 absent.
  bool self_disjoint() const;

 private:
  int p_;
  std::vector<int> residues_;
};

// Residues of all subset sums over subsets of size >= alpha, ascending.
std::vector<int> sigma_fp(const FpSubset& set, std::int64_t alpha);

// Every nonempty admissible A ⊆ F_p and every alpha in [0,|A|].
// Throws Error(kNotPrime) / Error(kRange) for p above kMaxVerifyPrime.
verifier::CampaignReport verify_balandraud(int p);

}  // namespace subsum::fp
