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

#include "subsum/bounds.hpp"

#include <gtest/gtest.h>

#include <algorithm>

#include "subsum/engine.hpp"
#include "subsum/error.hpp"

namespace subsum::bounds {
namespace {

std::int64_t tri(std::int64_t x) { return x * (x + 1) / 2; }

TEST(MIndex, Examples) {
  EXPECT_EQ(m_index(0, 2), 1);
  EXPECT_EQ(m_index(5, 2), 3);
  EXPECT_EQ(m_index(3, 1), 4);
}

TEST(BoundDisjoint, Examples) {
  EXPECT_EQ(bound_disjoint(4, 2).value, 8);
  EXPECT_EQ(bound_disjoint(5, 0).value, 16);
  for (int k = 1; k <= 20; ++k) EXPECT_EQ(bound_disjoint(k, k).value, 1);
  EXPECT_EQ(bound_disjoint(4, 2).theorem, TheoremId::kT2_1);
  EXPECT_FALSE(bound_disjoint(4, 2).case_label.has_value());
}

TEST(BoundZero, Examples) {
  EXPECT_EQ(bound_zero(4, 1).value, 7);
  EXPECT_EQ(bound_zero(1, 0).value, 1);
  EXPECT_EQ(bound_zero(1, 1).value, 1);
  EXPECT_EQ(bound_zero(5, 3).value, 8);
  for (int k = 1; k <= 20; ++k) EXPECT_EQ(bound_zero(k, k).value, 1);
}

TEST(BoundMixed, CasesAndValues) {
  auto b = bound_mixed(2, 2, 1);
  EXPECT_EQ(b.value, 7);
  EXPECT_EQ(b.case_label, CaseLabel::kI);
  b = bound_mixed(2, 2, 3);
  EXPECT_EQ(b.value, 5);
  EXPECT_EQ(b.case_label, CaseLabel::kIV);
  // Oracle on {-1,1,2,3} at alpha 2 gives [0,6].
  b = bound_mixed(1, 3, 2);
  EXPECT_EQ(b.value, 7);
  EXPECT_EQ(b.case_label, CaseLabel::kIII);
  EXPECT_EQ(bound_mixed(3, 1, 2).case_label, CaseLabel::kII);
  EXPECT_EQ(display_name(bound_mixed(2, 2, 3)), "T2_3(iv)");
}

TEST(BoundMixedZero, CasesAndValues) {
  auto b = bound_mixed_zero(1, 1, 0);
  EXPECT_EQ(b.value, 3);
  EXPECT_EQ(b.case_label, CaseLabel::kI);
  // [-2,2] at alpha 3 gives [-3,3].
  b = bound_mixed_zero(2, 2, 3);
  EXPECT_EQ(b.value, 7);
  EXPECT_EQ(b.case_label, CaseLabel::kIV);
  EXPECT_EQ(bound_mixed_zero(2, 2, 2).value, 7);
  EXPECT_EQ(bound_mixed_zero(2, 2, 2).case_label, CaseLabel::kI);
  EXPECT_EQ(bound_mixed_zero(2, 2, 5).value, 1);
}

TEST(BoundGeneral, Examples) {
  EXPECT_EQ(bound_general(4, 1, false).value, 6);
  EXPECT_EQ(bound_general(4, 1, true).value, 5);
  EXPECT_EQ(bound_general(3, 0, false).value, 5);
  EXPECT_EQ(bound_general(3, 0, false).theorem, TheoremId::kC2_5);
}

TEST(BoundGeneral, ParityFormAgrees) {
  for (int k = 2; k <= 100; ++k) {
    for (int alpha = 0; alpha <= k; ++alpha) {
      for (bool z : {false, true}) {
        // The reported bound is floored at 1; the raw forms may dip below.
        ASSERT_EQ(bound_general(k, alpha, z).value,
                  std::max<std::int64_t>(1, bound_general_parity_form(k, alpha, z)))
            << k << " " << alpha << " " << z;
      }
    }
  }
}

TEST(BoundGeneral, DisjointDominates) {
  for (int k = 2; k <= 20; ++k) {
    for (int alpha = 0; alpha <= k; ++alpha) {
      EXPECT_GE(bound_disjoint(k, alpha).value, bound_general(k, alpha, false).value);
    }
  }
}

TEST(BoundSeqDisjoint, Examples) {
  EXPECT_EQ(bound_seq_disjoint(2, 2, 0).value, 7);
  EXPECT_EQ(bound_seq_disjoint(2, 2, 0).params.m, 1);
  EXPECT_EQ(bound_seq_disjoint(2, 2, 1).value, 6);
  EXPECT_EQ(bound_seq_zero(2, 2, 0).value, 3);
  EXPECT_EQ(display_name(bound_seq_zero(2, 2, 0)), "T3_1(zero)");
  EXPECT_EQ(theorem_string(bound_seq_zero(2, 2, 0).theorem), "T3_1");
}

TEST(BoundSeqDisjoint, ReducesToSetBoundAtR1) {
  for (int k = 2; k <= 15; ++k) {
    for (int alpha = 0; alpha < k; ++alpha) {
      EXPECT_EQ(bound_seq_disjoint(k, 1, alpha).value, bound_disjoint(k, alpha).value);
      EXPECT_EQ(bound_seq_zero(k, 1, alpha).value, bound_zero(k, alpha).value);
    }
  }
  for (int n = 1; n <= 6; ++n) {
    for (int p = 1; p <= 6; ++p) {
      for (int alpha = 0; alpha < n + p; ++alpha) {
        EXPECT_EQ(bound_seq_mixed(n, p, 1, alpha).value, bound_mixed(n, p, alpha).value);
      }
      for (int alpha = 0; alpha < n + p + 1; ++alpha) {
        EXPECT_EQ(bound_seq_mixed_zero(n, p, 1, alpha).value,
                  bound_mixed_zero(n, p, alpha).value);
      }
    }
  }
}

TEST(BoundSeqMixed, Examples) {
  EXPECT_EQ(bound_seq_mixed(1, 1, 2, 0).value, 5);
  EXPECT_EQ(bound_seq_mixed(1, 1, 2, 0).case_label, CaseLabel::kI);
  EXPECT_EQ(bound_seq_mixed(1, 1, 2, 3).value, 3);
  EXPECT_EQ(bound_seq_mixed(1, 1, 2, 3).case_label, CaseLabel::kIV);
  EXPECT_EQ(bound_seq_mixed(2, 1, 1, 2).value, 4);
}

TEST(BoundSeqMixedZero, Examples) {
  EXPECT_EQ(bound_seq_mixed_zero(1, 1, 2, 0).value, 5);
  // [-1,1]_2 at alpha 2: sums of >= 2 terms of (-1,-1,0,0,1,1) cover [-2,2].
  EXPECT_EQ(bound_seq_mixed_zero(1, 1, 2, 2).value, 5);
  EXPECT_EQ(bound_seq_mixed_zero(1, 1, 2, 2).case_label, CaseLabel::kIV);
  EXPECT_EQ(bound_seq_mixed_zero(2, 2, 1, 1).value, 7);
}

TEST(BoundSeqGeneral, Examples) {
  auto b = bound_seq_general(3, 2, 1, true);
  EXPECT_EQ(b.value, 5);
  EXPECT_EQ(b.case_label, CaseLabel::kOdd);
  b = bound_seq_general(4, 1, 1, false);
  EXPECT_EQ(b.value, 4);
  EXPECT_EQ(b.case_label, CaseLabel::kEven);
  EXPECT_EQ(bound_seq_general(3, 1, 0, false).value, 4);
}

TEST(BoundSeq, RejectsBadArguments) {
  EXPECT_THROW(bound_seq_disjoint(2, 2, 4), Error);  // alpha = rk
  EXPECT_THROW(bound_seq_disjoint(2, 0, 0), Error);
  EXPECT_THROW(bound_seq_general(2, 2, 0, false), Error);  // k < 3
  EXPECT_THROW(bound_mixed(0, 2, 0), Error);
  EXPECT_THROW(bound_disjoint(3, 4), Error);
  EXPECT_THROW(bound_disjoint(3, -1), Error);
}

TEST(BoundCaseFormulas, AtLeastOneInsideTheirCases) {
  for (int n = 1; n <= 8; ++n) {
    for (int p = 1; p <= 8; ++p) {
      for (int alpha = 0; alpha <= n + p; ++alpha) {
        EXPECT_GE(bound_mixed(n, p, alpha).value, 1);
      }
      for (int r = 1; r <= 4; ++r) {
        for (int alpha = 0; alpha < r * (n + p); ++alpha) {
          EXPECT_GE(bound_seq_mixed(n, p, r, alpha).value, 1);
        }
      }
    }
  }
}

TEST(ClassicalBounds, Values) {
  EXPECT_EQ(bound_sumset(3, 4).value, 6);
  EXPECT_EQ(bound_h_fold(2, 3).value, 4);
  EXPECT_EQ(bound_prime_field(7, 3, 0).value, 7);
  EXPECT_EQ(bound_prime_field(7, 3, 2).value, tri(3) - tri(2) + 1);
}

TEST(ClassicalBounds, HoldOnSmallSets) {
  for (const char* text : {"{1,3}", "{0,1,3}", "{-4,2,9,10}"}) {
    const auto s = parse_set(text);
    for (int h = 1; h <= 4; ++h) {
      EXPECT_GE(engine::h_fold(s, h).size(), bound_h_fold(s.size(), h).value);
    }
  }
}

std::vector<std::pair<std::string, std::int64_t>> named(
    const std::vector<BoundResult>& list) {
  std::vector<std::pair<std::string, std::int64_t>> out;
  for (const auto& b : list) out.emplace_back(display_name(b), b.value);
  return out;
}

TEST(ApplicableBounds, Examples) {
  using V = std::vector<std::pair<std::string, std::int64_t>>;
  EXPECT_EQ(named(applicable_bounds(parse_set("{-2,-1,1,2}"), 1)),
            (V{{"T2_3(i)", 7}, {"C2_5", 6}}));
  EXPECT_EQ(named(applicable_bounds(parse_set("{1,2,3}"), 1)),
            (V{{"T2_1", 6}, {"C2_5", 4}}));
  EXPECT_EQ(named(applicable_bounds(parse_sequence("[0,1]", 2), 0)),
            (V{{"T3_1(zero)", 3}}));
  EXPECT_TRUE(applicable_bounds(parse_sequence("[1,2]", 2), 4).empty());
}

TEST(ApplicableBounds, SingletonSetsHaveOnlySignBounds) {
  EXPECT_EQ(named(applicable_bounds(parse_set("{0}"), 0)),
            (std::vector<std::pair<std::string, std::int64_t>>{{"C2_2", 1}}));
}

}  // namespace
}  // namespace subsum::bounds
