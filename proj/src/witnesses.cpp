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

#include "subsum/witnesses.hpp"

#include <array>
#include <utility>
#include <vector>

#include "subsum/engine.hpp"
#include "subsum/error.hpp"

namespace subsum::witnesses {

namespace {

constexpr std::array<std::pair<FamilyId, std::string_view>, 8> kNames{{
    {FamilyId::kPosInterval, "pos-interval"},
    {FamilyId::kNonnegInterval, "nonneg-interval"},
    {FamilyId::kMixedPunctured, "mixed-punctured"},
    {FamilyId::kMixedFull, "mixed-full"},
    {FamilyId::kPosIntervalR, "pos-interval-r"},
    {FamilyId::kNonnegIntervalR, "nonneg-interval-r"},
    {FamilyId::kMixedPuncturedR, "mixed-punctured-r"},
    {FamilyId::kMixedFullR, "mixed-full-r"},
}};

bool is_interval_family(FamilyId id) {
  return id == FamilyId::kPosInterval || id == FamilyId::kNonnegInterval ||
         id == FamilyId::kPosIntervalR || id == FamilyId::kNonnegIntervalR;
}

std::vector<std::int64_t> range(std::int64_t lo, std::int64_t hi,
                                bool skip_zero) {
  std::vector<std::int64_t> v;
  for (std::int64_t x = lo; x <= hi; ++x) {
    if (!(skip_zero && x == 0)) v.push_back(x);
  }
  return v;
}

}  // namespace

std::string family_string(FamilyId id) {
  for (const auto& [fid, name] : kNames) {
    if (fid == id) return std::string(name);
  }
  return "?";
}

std::optional<FamilyId> parse_family(std::string_view text) {
  for (const auto& [fid, name] : kNames) {
    if (name == text) return fid;
  }
  return std::nullopt;
}

bool is_sequence_family(FamilyId id) {
  return id == FamilyId::kPosIntervalR || id == FamilyId::kNonnegIntervalR ||
         id == FamilyId::kMixedPuncturedR || id == FamilyId::kMixedFullR;
}

void validate(const WitnessFamily& f) {
  const std::string name = family_string(f.id);
  if (is_interval_family(f.id)) {
    const int min_k = is_sequence_family(f.id) ? 2 : 1;
    if (f.k < min_k) {
      throw Error(ErrorCode::kInvalidArgument,
                  name + " needs k >= " + std::to_string(min_k));
    }
  } else if (f.n < 1 || f.p < 1) {
    throw Error(ErrorCode::kInvalidArgument, name + " needs n >= 1 and p >= 1");
  }
  if (is_sequence_family(f.id) && f.r < 1) {
    throw Error(ErrorCode::kInvalidArgument, name + " needs r >= 1");
  }
}

Instance witness(const WitnessFamily& f) {
  validate(f);
  std::vector<std::int64_t> elems;
  switch (f.id) {
    case FamilyId::kPosInterval:
    case FamilyId::kPosIntervalR:
      elems = range(1, f.k, false);
      break;
    case FamilyId::kNonnegInterval:
    case FamilyId::kNonnegIntervalR:
      elems = range(0, f.k - 1, false);
      break;
    case FamilyId::kMixedPunctured:
    case FamilyId::kMixedPuncturedR:
      elems = range(-f.n, f.p, true);
      break;
    case FamilyId::kMixedFull:
    case FamilyId::kMixedFullR:
      elems = range(-f.n, f.p, false);
      break;
  }
  auto set = IntegerSet::from_elements(std::move(elems));
  if (is_sequence_family(f.id)) return RepSequence(std::move(set), f.r);
  return set;
}

std::int64_t witness_length(const WitnessFamily& f) {
  validate(f);
  std::int64_t k = 0;
  switch (f.id) {
    case FamilyId::kPosInterval:
    case FamilyId::kNonnegInterval:
    case FamilyId::kPosIntervalR:
    case FamilyId::kNonnegIntervalR:
      k = f.k;
      break;
    case FamilyId::kMixedPunctured:
    case FamilyId::kMixedPuncturedR:
      k = f.n + f.p;
      break;
    case FamilyId::kMixedFull:
    case FamilyId::kMixedFullR:
      k = f.n + f.p + 1;
      break;
  }
  return is_sequence_family(f.id) ? k * f.r : k;
}

std::int64_t max_alpha(const WitnessFamily& f) {
  const std::int64_t len = witness_length(f);
  return is_sequence_family(f.id) ? len - 1 : len;
}

bounds::BoundResult matched_bound(const WitnessFamily& f, std::int64_t alpha) {
  validate(f);
  switch (f.id) {
    case FamilyId::kPosInterval: return bounds::bound_disjoint(f.k, alpha);
    case FamilyId::kNonnegInterval: return bounds::bound_zero(f.k, alpha);
    case FamilyId::kMixedPunctured: return bounds::bound_mixed(f.n, f.p, alpha);
    case FamilyId::kMixedFull: return bounds::bound_mixed_zero(f.n, f.p, alpha);
    case FamilyId::kPosIntervalR:
      return bounds::bound_seq_disjoint(f.k, f.r, alpha);
    case FamilyId::kNonnegIntervalR:
      return bounds::bound_seq_zero(f.k, f.r, alpha);
    case FamilyId::kMixedPuncturedR:
      return bounds::bound_seq_mixed(f.n, f.p, f.r, alpha);
    case FamilyId::kMixedFullR:
      return bounds::bound_seq_mixed_zero(f.n, f.p, f.r, alpha);
  }
  throw Error(ErrorCode::kInternal, "unknown family");
}

TightnessReport check_tightness(const WitnessFamily& f, std::int64_t alpha) {
  if (alpha < 0 || alpha > max_alpha(f)) {
    throw Error(ErrorCode::kRange,
                "alpha " + std::to_string(alpha) + " outside [0," +
                    std::to_string(max_alpha(f)) + "] for " +
                    family_string(f.id));
  }
  TightnessReport rep;
  rep.family = f;
  rep.alpha = alpha;
  rep.bound = matched_bound(f, alpha);
  rep.computed_size =
      engine::sigma_of(witness(f), alpha, SumMode::kAtLeast).size();
  rep.tight = rep.computed_size == rep.bound.value;
  return rep;
}

}  // namespace subsum::witnesses
