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

// Algebraic identities of Σ_α checked exhaustively over every subset of a
// small window. Shared by the unit tests and the acceptance binary.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "subsum/core_model.hpp"
#include "subsum/engine.hpp"
#include "subsum/verifier.hpp"

namespace subsum::testing {

struct PropertyOutcome {
  std::string name;
  std::int64_t instances = 0;
  std::int64_t failures = 0;
  std::string first_failure;
};

// Every subset of [-max_abs, max_abs] with 1 <= k <= k_max.
inline std::vector<IntegerSet> small_sets(std::int64_t max_abs, int k_max) {
  std::vector<IntegerSet> out;
  for (int k = 1; k <= k_max; ++k) {
    for (auto& v : verifier::k_subsets(-max_abs, max_abs, k)) {
      out.push_back(IntegerSet::from_elements(std::move(v)));
    }
  }
  return out;
}

inline PropertyOutcome check_each(
    const std::string& name, const std::vector<IntegerSet>& sets,
    const std::function<bool(const IntegerSet&)>& holds) {
  PropertyOutcome out{name};
  for (const auto& s : sets) {
    ++out.instances;
    if (!holds(s)) {
      if (out.failures++ == 0) out.first_failure = format_set(s);
    }
  }
  return out;
}

inline std::vector<PropertyOutcome> run_property_suite(std::int64_t max_abs,
                                                       int k_max) {
  using engine::fold_fast;
  using engine::sigma_all;
  using engine::sigma_seq_all;
  using oracle::FoldKind;
  const auto sets = small_sets(max_abs, k_max);
  std::vector<PropertyOutcome> results;

  // Σ_α(A) = T - Σ^α(A), hence equal sizes; same for (A)_r.
  results.push_back(check_each("duality", sets, [](const IntegerSet& s) {
    const auto lo = sigma_all(s, SumMode::kAtLeast);
    const auto hi = sigma_all(s, SumMode::kAtMost);
    for (std::size_t a = 0; a < lo.size(); ++a) {
      if (lo[a] != hi[a].reflected(s.total()) || lo[a].size() != hi[a].size()) {
        return false;
      }
    }
    for (int r = 2; r <= 3; ++r) {
      const RepSequence q(s, r);
      const auto slo = sigma_seq_all(q, SumMode::kAtLeast);
      const auto shi = sigma_seq_all(q, SumMode::kAtMost);
      for (std::size_t a = 0; a < slo.size(); ++a) {
        if (slo[a] != shi[a].reflected(q.total())) return false;
      }
    }
    return true;
  }));

  results.push_back(check_each("nesting", sets, [](const IntegerSet& s) {
    const auto all = sigma_all(s, SumMode::kAtLeast);
    for (std::size_t a = 0; a + 1 < all.size(); ++a) {
      if (!all[a + 1].is_subset_of(all[a])) return false;
    }
    const auto seq = sigma_seq_all(RepSequence(s, 2), SumMode::kAtLeast);
    for (std::size_t a = 0; a + 1 < seq.size(); ++a) {
      if (!seq[a + 1].is_subset_of(seq[a])) return false;
    }
    return true;
  }));

  // Σ_α(xA) = x·Σ_α(A); x = -1 covers negation.
  results.push_back(check_each("dilation", sets, [](const IntegerSet& s) {
    const auto base = sigma_all(s, SumMode::kAtLeast);
    for (std::int64_t x : {-3, -1, 2, 5}) {
      const auto scaled = sigma_all(s.dilated(x), SumMode::kAtLeast);
      for (std::size_t a = 0; a < base.size(); ++a) {
        if (scaled[a] != base[a].scaled(x)) return false;
      }
    }
    return true;
  }));

  results.push_back(check_each("r1_agreement", sets, [](const IntegerSet& s) {
    return sigma_all(s, SumMode::kAtLeast) ==
               sigma_seq_all(RepSequence(s, 1), SumMode::kAtLeast) &&
           sigma_all(s, SumMode::kAtMost) ==
               sigma_seq_all(RepSequence(s, 1), SumMode::kAtMost);
  }));

  results.push_back(check_each("generalized_1_restricted", sets, [](const IntegerSet& s) {
    for (int h = 0; h <= s.size(); ++h) {
      if (fold_fast(s, h, FoldKind::generalized(1)) !=
          fold_fast(s, h, FoldKind::restricted())) {
        return false;
      }
    }
    return true;
  }));

  results.push_back(check_each("generalized_unrestricted", sets, [](const IntegerSet& s) {
    for (int h = 0; h <= 4; ++h) {
      const auto u = fold_fast(s, h, FoldKind::unrestricted());
      for (int r = std::max(h, 1); r <= h + 1; ++r) {
        if (fold_fast(s, h, FoldKind::generalized(r)) != u) return false;
      }
    }
    return true;
  }));

  results.push_back(check_each("parse_idempotent", sets, [](const IntegerSet& s) {
    const auto text = format_set(s);
    return parse_set(text) == s && format_set(parse_set(text)) == text;
  }));

  return results;
}

}  // namespace subsum::testing
