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

#include "subsum/core_model.hpp"

#include <gtest/gtest.h>

#include "subsum/error.hpp"

namespace subsum {
namespace {

std::vector<std::int64_t> elems(const IntegerSet& s) {
  return {s.elements().begin(), s.elements().end()};
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInternal;
}

TEST(ParseSet, BraceLiteral) {
  const auto s = parse_set("{-2,-1,1,2}");
  EXPECT_EQ(elems(s), (std::vector<std::int64_t>{-2, -1, 1, 2}));
  EXPECT_EQ(s.size(), 4);
}

TEST(ParseSet, IntervalLiteral) {
  EXPECT_EQ(elems(parse_set("[1,4]")), (std::vector<std::int64_t>{1, 2, 3, 4}));
  EXPECT_EQ(elems(parse_set(" [ -1 , 1 ] ")), (std::vector<std::int64_t>{-1, 0, 1}));
}

TEST(ParseSet, SortsUnorderedInput) {
  EXPECT_EQ(elems(parse_set("{3, -1, 2}")), (std::vector<std::int64_t>{-1, 2, 3}));
}

TEST(ParseSet, Errors) {
  EXPECT_EQ(code_of([] { parse_set("{1,1}"); }), ErrorCode::kParse);
  EXPECT_EQ(code_of([] { parse_set("{}"); }), ErrorCode::kParse);
  EXPECT_EQ(code_of([] { parse_set("[3,1]"); }), ErrorCode::kParse);
  EXPECT_EQ(code_of([] { parse_set("{1,2"); }), ErrorCode::kParse);
  EXPECT_EQ(code_of([] { parse_set("{1,2}x"); }), ErrorCode::kParse);
  EXPECT_EQ(code_of([] { parse_set("1,2"); }), ErrorCode::kParse);
  EXPECT_EQ(code_of([] { parse_set("{a}"); }), ErrorCode::kParse);
}

TEST(ParseSet, LimitsAreEnforced) {
  Limits tight;
  tight.max_abs = 10;
  tight.max_k = 3;
  EXPECT_EQ(code_of([&] { parse_set("{11}", tight); }), ErrorCode::kRange);
  EXPECT_EQ(code_of([&] { parse_set("[1,4]", tight); }), ErrorCode::kRange);
  EXPECT_NO_THROW(parse_set("{-10,10}", tight));
}

TEST(ParseSet, FormatRoundTrips) {
  for (const char* text : {"{-2,-1,1,2}", "{0}", "{-7,3,5,100}"}) {
    const auto s = parse_set(text);
    EXPECT_EQ(format_set(s), text);
    EXPECT_EQ(parse_set(format_set(s)), s);
  }
}

TEST(ParseSequence, Basic) {
  const auto a = parse_sequence("[1,2]", 2);
  EXPECT_EQ(a.k(), 2);
  EXPECT_EQ(a.r(), 2);
  EXPECT_EQ(a.length(), 4);
  EXPECT_EQ(a.total(), 6);

  const auto b = parse_sequence("[-1,1]", 2);
  EXPECT_EQ(elems(b.base()), (std::vector<std::int64_t>{-1, 0, 1}));
  EXPECT_EQ(b.length(), 6);
}

TEST(ParseSequence, RejectsBadMultiplicity) {
  EXPECT_EQ(code_of([] { parse_sequence("{3}", 0); }), ErrorCode::kRange);
  EXPECT_EQ(code_of([] { parse_sequence("{3}", 65); }), ErrorCode::kRange);
}

TEST(FormatInstance, MarksSequences) {
  EXPECT_EQ(format_instance(Instance{parse_set("[1,2]")}), "{1,2}");
  EXPECT_EQ(format_instance(Instance{parse_sequence("[1,2]", 3)}), "{1,2}_3");
}

TEST(Classify, Examples) {
  const auto a = classify(parse_set("{1,2,4}"));
  EXPECT_EQ(a.n, 0);
  EXPECT_EQ(a.p, 3);
  EXPECT_FALSE(a.has_zero);
  EXPECT_TRUE(a.self_disjoint);
  EXPECT_FALSE(a.self_meet_zero);

  const auto b = classify(parse_set("{-2,-1,1,2}"));
  EXPECT_EQ(b.n, 2);
  EXPECT_EQ(b.p, 2);
  EXPECT_FALSE(b.self_disjoint);
  EXPECT_FALSE(b.self_meet_zero);

  const auto c = classify(parse_set("{0,1,3}"));
  EXPECT_EQ(c.n, 0);
  EXPECT_EQ(c.p, 2);
  EXPECT_TRUE(c.has_zero);
  EXPECT_FALSE(c.self_disjoint);
  EXPECT_TRUE(c.self_meet_zero);

  const auto d = classify(parse_set("{-1,0,1}"));
  EXPECT_FALSE(d.self_meet_zero);
}

TEST(Classify, NegationSwapsSigns) {
  for (const char* text : {"{-5,-1,2}", "{0,3,4}", "{-3,-2,0,2,7}"}) {
    const auto s = parse_set(text);
    const auto a = classify(s);
    const auto b = classify(s.negated());
    EXPECT_EQ(a.n, b.p);
    EXPECT_EQ(a.p, b.n);
    EXPECT_EQ(a.has_zero, b.has_zero);
    EXPECT_EQ(a.self_disjoint, b.self_disjoint);
  }
}

TEST(IntegerSet, Transforms) {
  const auto s = parse_set("{-1,2,5}");
  EXPECT_EQ(s.total(), 6);
  EXPECT_TRUE(s.contains(2));
  EXPECT_FALSE(s.contains(0));
  EXPECT_EQ(elems(s.negated()), (std::vector<std::int64_t>{-5, -2, 1}));
  EXPECT_EQ(elems(s.dilated(-2)), (std::vector<std::int64_t>{-10, -4, 2}));
  EXPECT_EQ(code_of([&] { s.dilated(0); }), ErrorCode::kInvalidArgument);
}

TEST(SumSet, Operations) {
  const auto s = SumSet::from_values({4, 1, 1, 3});
  EXPECT_EQ(s.size(), 3);
  EXPECT_EQ(s.min_sum(), 1);
  EXPECT_EQ(s.max_sum(), 4);
  EXPECT_TRUE(s.contains(3));
  EXPECT_TRUE(SumSet::from_values({1, 4}).is_subset_of(s));
  EXPECT_FALSE(SumSet::from_values({2}).is_subset_of(s));
  EXPECT_EQ(s.reflected(5), SumSet::from_values({1, 2, 4}));
  EXPECT_EQ(s.scaled(-1), SumSet::from_values({-4, -3, -1}));
}

}  // namespace
}  // namespace subsum
