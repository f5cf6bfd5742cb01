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
#include <map>
#include <string>
#include <vector>

#include "subsum/bounds.hpp"
#include "subsum/core_model.hpp"

// Exhaustive campaigns over small instance universes: every k-subset of an
// integer interval (optionally repeated r times), every alpha, checked
// against the brute-force oracle and every applicable bound.
namespace subsum::verifier {

inline constexpr std::int64_t kDefaultBudget = 1'000'000;
inline constexpr std::size_t kMaxWitnessesPerCell = 16;

enum class ZeroPolicy { kRequire, kForbid, kAny };

struct AlphaPolicy {
  bool all = true;
  std::vector<std::int64_t> values;  // used when !all; out-of-range skipped

  static AlphaPolicy every() { return {}; }
  static AlphaPolicy list(std::vector<std::int64_t> v) {
    return {false, std::move(v)};
  }
};

struct SweepOptions {
  std::int64_t max_abs = 2;
  int k_min = 2;
  int k_max = 2;
  int r_min = 1;  // sequence sweeps only
  int r_max = 1;
  AlphaPolicy alphas;
  bool oracle = false;
  int workers = 1;
  bool keep_records = false;
  std::int64_t budget = kDefaultBudget;  // instance-alpha pairs
};

struct BoundCheck {
  bounds::BoundResult bound;
  bool tight = false;
  bool violated = false;
};

struct VerificationRecord {
  std::string instance;  // brace literal of the base set
  int r = 1;
  std::int64_t alpha = 0;
  std::int64_t sigma_size = 0;
  std::vector<BoundCheck> bounds;
  bool oracle_checked = false;
  bool violation = false;
};

struct MinimumCell {
  int k = 0;
  int r = 1;
  std::int64_t alpha = 0;
  std::int64_t size = 0;
  std::vector<std::string> witnesses;  // first few minimizers, in sweep order
};

struct Universe {
  std::string kind;  // "sets", "sequences" or "fp"
  std::int64_t max_abs = 0;
  int k_min = 0;
  int k_max = 0;
  int r_min = 1;
  int r_max = 1;
  std::string alphas = "all";
  bool oracle = false;
  std::int64_t prime = 0;  // fp campaigns
};

struct Counts {
  std::int64_t instances = 0;
  std::int64_t pairs = 0;  // instance-alpha records
  std::int64_t checks = 0;  // bound evaluations
  std::int64_t violations = 0;
  std::int64_t oracle_checks = 0;
  std::int64_t oracle_mismatches = 0;
};

struct CampaignReport {
  Universe universe;
  Counts counts;
  std::map<std::string, std::int64_t> tight_by_theorem;
  std::vector<MinimumCell> minima;
  double elapsed_ms = 0;
  std::vector<VerificationRecord> records;  // only with keep_records
};

// All k-subsets of [lo, hi] in lexicographic order of the sorted tuples.
std::vector<std::vector<std::int64_t>> k_subsets(std::int64_t lo,
                                                 std::int64_t hi, int k);

// Number of instance-alpha pairs a sweep would visit (saturates at 2^62).
std::int64_t sweep_cost(const SweepOptions& options, bool sequences);

// Throw Error(kBudget) instead of running an oversized universe.
CampaignReport sweep_sets(const SweepOptions& options);
CampaignReport sweep_sequences(const SweepOptions& options);

struct EmpiricalMinimum {
  std::int64_t size = 0;
  std::int64_t minimizers = 0;
  std::vector<IntegerSet> witnesses;  // capped at kMaxWitnessesPerCell
};

EmpiricalMinimum empirical_minimum(int k, std::int64_t alpha,
                                   std::int64_t max_abs, ZeroPolicy policy,
                                   std::int64_t budget = kDefaultBudget);

}  // namespace subsum::verifier
