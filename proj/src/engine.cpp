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

#include "subsum/engine.hpp"

#include <string>

#include "subsum/error.hpp"
#include "sum_bitmap.hpp"

namespace subsum::engine {

namespace {

using detail::SumBitmap;

struct LayerTable {
  std::int64_t lowest = 0;
  std::vector<SumBitmap> layers;  // layers[c]: sums of exactly c terms
};

LayerTable build_layers(const IntegerSet& set, int reps) {
  std::int64_t neg = 0, pos = 0;
  for (auto v : set.elements()) (v < 0 ? neg : pos) += v;
  const std::int64_t lowest = reps * neg;
  const std::int64_t width = reps * (pos - neg) + 1;
  const std::int64_t len = std::int64_t{reps} * set.size();
  if ((len + 1) > kMaxTableBits / width) {
    throw Error(ErrorCode::kRange,
                "DP table would need " + std::to_string(len + 1) + " x " +
                    std::to_string(width) + " bits, over the engine cap");
  }

  LayerTable t;
  t.lowest = lowest;
  t.layers.assign(static_cast<std::size_t>(len + 1),
                  SumBitmap(static_cast<std::size_t>(width)));
  t.layers[0].set(static_cast<std::size_t>(-lowest));
  std::size_t filled = 0;  // highest populated layer
  for (auto v : set.elements()) {
    for (int rep = 0; rep < reps; ++rep) {
      for (std::size_t c = filled + 1; c-- > 0;) {
        t.layers[c + 1].or_shifted(t.layers[c], v);
      }
      ++filled;
    }
  }
  return t;
}

SumSet to_sumset(const SumBitmap& bits, std::int64_t lowest) {
  std::vector<std::int64_t> sums;
  sums.reserve(bits.count());
  bits.for_each_set([&](std::size_t i) {
    sums.push_back(lowest + static_cast<std::int64_t>(i));
  });
  return SumSet::from_values(std::move(sums));
}

void check_alpha(std::int64_t alpha, std::int64_t len) {
  if (alpha < 0 || alpha > len) {
    throw Error(ErrorCode::kRange, "alpha " + std::to_string(alpha) +
                                       " outside [0," + std::to_string(len) +
                                       "]");
  }
}

SumSet window_union(const LayerTable& t, std::int64_t lo, std::int64_t hi) {
  SumBitmap acc(t.layers.front().width());
  for (std::int64_t c = lo; c <= hi; ++c) acc |= t.layers[c];
  return to_sumset(acc, t.lowest);
}

SumSet sigma_from_table(const LayerTable& t, std::int64_t alpha,
                        SumMode mode) {
  const std::int64_t len = static_cast<std::int64_t>(t.layers.size()) - 1;
  check_alpha(alpha, len);
  return mode == SumMode::kAtLeast ? window_union(t, alpha, len)
                                   : window_union(t, 0, len - alpha);
}

std::vector<SumSet> all_from_table(const LayerTable& t, SumMode mode) {
  const std::size_t len = t.layers.size() - 1;
  std::vector<SumSet> out(len + 1);
  SumBitmap acc(t.layers.front().width());
  if (mode == SumMode::kAtLeast) {
    for (std::size_t a = len + 1; a-- > 0;) {
      acc |= t.layers[a];
      out[a] = to_sumset(acc, t.lowest);
    }
  } else {
    // Σ^α collects layers 0 .. len - α.
    for (std::size_t top = 0; top <= len; ++top) {
      acc |= t.layers[top];
      out[len - top] = to_sumset(acc, t.lowest);
    }
  }
  return out;
}

}  // namespace

SumSet add_sets(const SumSet& a, const SumSet& b) {
  if (a.empty() || b.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "add_sets needs nonempty inputs");
  }
  const std::int64_t a_span = a.max_sum() - a.min_sum();
  const std::int64_t b_span = b.max_sum() - b.min_sum();
  SumBitmap a_bits(static_cast<std::size_t>(a_span + 1));
  for (auto s : a.sums()) a_bits.set(static_cast<std::size_t>(s - a.min_sum()));
  SumBitmap out(static_cast<std::size_t>(a_span + b_span + 1));
  for (auto s : b.sums()) {
    out.or_shifted_up(a_bits, static_cast<std::size_t>(s - b.min_sum()));
  }
  SumSet result = to_sumset(out, a.min_sum() + b.min_sum());
  // |A+B| >= |A| + |B| - 1 for nonempty finite sets of integers.
  if (result.size() < a.size() + b.size() - 1) {
    throw Error(ErrorCode::kInternal, "add_sets result below |A|+|B|-1");
  }
  return result;
}

SumSet h_fold(const IntegerSet& set, std::int64_t h) {
  if (h < 1) throw Error(ErrorCode::kRange, "h_fold needs h >= 1");
  const auto base = SumSet::from_values(
      {set.elements().begin(), set.elements().end()});
  SumSet acc = base;
  for (std::int64_t i = 1; i < h; ++i) acc = add_sets(acc, base);
  // |hA| >= h|A| - h + 1.
  if (acc.size() < h * set.size() - h + 1) {
    throw Error(ErrorCode::kInternal, "h_fold result below h|A|-h+1");
  }
  return acc;
}

SumSet sigma(const IntegerSet& set, std::int64_t alpha, SumMode mode) {
  check_alpha(alpha, set.size());
  return sigma_from_table(build_layers(set, 1), alpha, mode);
}

SumSet sigma_seq(const RepSequence& seq, std::int64_t alpha, SumMode mode) {
  check_alpha(alpha, seq.length());
  return sigma_from_table(build_layers(seq.base(), seq.r()), alpha, mode);
}

SumSet fold_fast(const IntegerSet& set, std::int64_t h, FoldKind kind) {
  const std::int64_t k = set.size();
  if (h < 0) throw Error(ErrorCode::kRange, "h must be nonnegative");
  switch (kind.type) {
    case FoldKind::Type::kRestricted: {
      if (h > k) throw Error(ErrorCode::kRange, "restricted sumset needs h <= k");
      const auto t = build_layers(set, 1);
      return to_sumset(t.layers[h], t.lowest);
    }
    case FoldKind::Type::kGeneralized: {
      if (kind.r < 1) throw Error(ErrorCode::kRange, "r must be positive");
      if (h > kind.r * k) {
        throw Error(ErrorCode::kRange, "generalized sumset needs h <= rk");
      }
      const auto t = build_layers(set, kind.r);
      return to_sumset(t.layers[h], t.lowest);
    }
    case FoldKind::Type::kUnrestricted:
      if (h == 0) return SumSet::from_values({0});
      return h_fold(set, h);
  }
  throw Error(ErrorCode::kInternal, "unknown fold kind");
}

std::vector<SumSet> sigma_all(const IntegerSet& set, SumMode mode) {
  return all_from_table(build_layers(set, 1), mode);
}

std::vector<SumSet> sigma_seq_all(const RepSequence& seq, SumMode mode) {
  return all_from_table(build_layers(seq.base(), seq.r()), mode);
}

SumSet sigma_of(const Instance& instance, std::int64_t alpha, SumMode mode) {
  if (const auto* seq = std::get_if<RepSequence>(&instance)) {
    return sigma_seq(*seq, alpha, mode);
  }
  return sigma(std::get<IntegerSet>(instance), alpha, mode);
}

std::vector<SumSet> sigma_all_of(const Instance& instance, SumMode mode) {
  if (const auto* seq = std::get_if<RepSequence>(&instance)) {
    return sigma_seq_all(*seq, mode);
  }
  return sigma_all(std::get<IntegerSet>(instance), mode);
}

}  // namespace subsum::engine
