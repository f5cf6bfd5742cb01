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

#include <gtest/gtest.h>

#include "subsum/error.hpp"

namespace subsum::witnesses {
namespace {

TEST(Families, NamesRoundTrip) {
  for (auto id : {FamilyId::kPosInterval, FamilyId::kNonnegInterval,
                  FamilyId::kMixedPunctured, FamilyId::kMixedFull,
                  FamilyId::kPosIntervalR, FamilyId::kNonnegIntervalR,
                  FamilyId::kMixedPuncturedR, FamilyId::kMixedFullR}) {
    EXPECT_EQ(parse_family(family_string(id)), id);
  }
  EXPECT_FALSE(parse_family("interval").has_value());
  EXPECT_TRUE(is_sequence_family(FamilyId::kMixedFullR));
  EXPECT_FALSE(is_sequence_family(FamilyId::kMixedFull));
}

TEST(Witness, Construction) {
  EXPECT_EQ(format_instance(witness({FamilyId::kPosInterval, 4})), "{1,2,3,4}");
  EXPECT_EQ(format_instance(witness({FamilyId::kNonnegInterval, 3})), "{0,1,2}");
  EXPECT_EQ(format_instance(witness({FamilyId::kMixedPunctured, 0, 2, 2})),
            "{-2,-1,1,2}");
  EXPECT_EQ(format_instance(witness({FamilyId::kMixedFull, 0, 1, 2})), "{-1,0,1,2}");
  EXPECT_EQ(format_instance(witness({FamilyId::kPosIntervalR, 2, 0, 0, 2})), "{1,2}_2");
  EXPECT_EQ(format_instance(witness({FamilyId::kMixedPuncturedR, 0, 1, 1, 3})),
            "{-1,1}_3");
}

TEST(Witness, LengthAndAlphaRange) {
  EXPECT_EQ(witness_length({FamilyId::kMixedFull, 0, 2, 3}), 6);
  EXPECT_EQ(max_alpha({FamilyId::kMixedFull, 0, 2, 3}), 6);
  EXPECT_EQ(witness_length({FamilyId::kNonnegIntervalR, 3, 0, 0, 4}), 12);
  EXPECT_EQ(max_alpha({FamilyId::kNonnegIntervalR, 3, 0, 0, 4}), 11);
}

TEST(Witness, ValidateRejectsDegenerateParameters) {
  EXPECT_THROW(validate({FamilyId::kPosInterval, 0}), Error);
  EXPECT_THROW(validate({FamilyId::kMixedPunctured, 0, 0, 2}), Error);
  EXPECT_THROW(validate({FamilyId::kPosIntervalR, 1, 0, 0, 2}), Error);
  EXPECT_THROW(validate({FamilyId::kPosIntervalR, 2, 0, 0, 0}), Error);
  EXPECT_NO_THROW(validate({FamilyId::kMixedFullR, 0, 1, 1, 2}));
}

TEST(CheckTightness, Examples) {
  auto t = check_tightness({FamilyId::kPosInterval, 4}, 2);
  EXPECT_EQ(t.computed_size, 8);
  EXPECT_EQ(t.bound.theorem, bounds::TheoremId::kT2_1);
  EXPECT_EQ(t.bound.value, 8);
  EXPECT_TRUE(t.tight);

  t = check_tightness({FamilyId::kMixedPunctured, 0, 2, 2}, 3);
  EXPECT_EQ(t.computed_size, 5);
  EXPECT_EQ(bounds::display_name(t.bound), "T2_3(iv)");
  EXPECT_TRUE(t.tight);

  t = check_tightness({FamilyId::kNonnegIntervalR, 2, 0, 0, 2}, 0);
  EXPECT_EQ(t.computed_size, 3);
  EXPECT_EQ(t.bound.theorem, bounds::TheoremId::kT3_1_zero);
  EXPECT_TRUE(t.tight);
}

TEST(CheckTightness, RejectsAlphaOutOfRange) {
  EXPECT_THROW(check_tightness({FamilyId::kPosInterval, 4}, 5), Error);
  EXPECT_THROW(check_tightness({FamilyId::kPosIntervalR, 2, 0, 0, 2}, 4), Error);
}

TEST(CheckTightness, SetFamilies) {
  for (int k = 1; k <= 12; ++k) {
    for (int alpha = 0; alpha <= k; ++alpha) {
      EXPECT_TRUE(check_tightness({FamilyId::kPosInterval, k}, alpha).tight);
      EXPECT_TRUE(check_tightness({FamilyId::kNonnegInterval, k}, alpha).tight);
    }
  }
  for (int n = 1; n <= 5; ++n) {
    for (int p = 1; p <= 5; ++p) {
      for (int alpha = 0; alpha <= n + p; ++alpha) {
        EXPECT_TRUE(check_tightness({FamilyId::kMixedPunctured, 0, n, p}, alpha).tight);
      }
      for (int alpha = 0; alpha <= n + p + 1; ++alpha) {
        EXPECT_TRUE(check_tightness({FamilyId::kMixedFull, 0, n, p}, alpha).tight);
      }
    }
  }
}

TEST(CheckTightness, SequenceFamilies) {
  for (int k = 2; k <= 8; ++k) {
    for (int r = 1; r <= 4; ++r) {
      for (int alpha = 0; alpha < r * k; ++alpha) {
        EXPECT_TRUE(check_tightness({FamilyId::kPosIntervalR, k, 0, 0, r}, alpha).tight);
        EXPECT_TRUE(
            check_tightness({FamilyId::kNonnegIntervalR, k, 0, 0, r}, alpha).tight);
      }
    }
  }
  for (int n = 1; n <= 4; ++n) {
    for (int p = 1; p <= 4; ++p) {
      for (int r = 1; r <= 3; ++r) {
        for (int alpha = 0; alpha < r * (n + p); ++alpha) {
          EXPECT_TRUE(
              check_tightness({FamilyId::kMixedPuncturedR, 0, n, p, r}, alpha).tight);
        }
        for (int alpha = 0; alpha < r * (n + p + 1); ++alpha) {
          EXPECT_TRUE(check_tightness({FamilyId::kMixedFullR, 0, n, p, r}, alpha).tight);
        }
      }
    }
  }
}

}  // namespace
}  // namespace subsum::witnesses
