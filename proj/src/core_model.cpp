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

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "subsum/error.hpp"

namespace subsum {

namespace {

void check_value(std::int64_t v, const Limits& limits) {
  if (v > limits.max_abs || v < -limits.max_abs) {
    throw Error(ErrorCode::kRange, "element " + std::to_string(v) +
                                       " exceeds the value cap ±" +
                                       std::to_string(limits.max_abs));
  }
}

void check_cardinality(std::int64_t k, const Limits& limits) {
  if (k > limits.max_k) {
    throw Error(ErrorCode::kRange, "set has " + std::to_string(k) +
                                       " elements, cap is " +
                                       std::to_string(limits.max_k));
  }
}

// Minimal cursor over the literal with whitespace skipping.
class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool at_end() {
    skip_space();
    return pos_ == text_.size();
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::int64_t integer() {
    skip_space();
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec == std::errc::result_out_of_range) {
      throw Error(ErrorCode::kRange, "integer out of range in set literal");
    }
    if (ec != std::errc() || ptr == first) fail("expected integer");
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::kParse, "malformed set literal \"" +
                                       std::string(text_) + "\" at offset " +
                                       std::to_string(pos_) + ": " + why);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

IntegerSet IntegerSet::from_elements(std::vector<std::int64_t> elements,
                                     const Limits& limits) {
  if (elements.empty()) throw Error(ErrorCode::kParse, "empty set");
  std::sort(elements.begin(), elements.end());
  auto dup = std::adjacent_find(elements.begin(), elements.end());
  if (dup != elements.end()) {
    throw Error(ErrorCode::kParse,
                "duplicate element " + std::to_string(*dup));
  }
  for (std::int64_t v : elements) check_value(v, limits);
  check_cardinality(static_cast<std::int64_t>(elements.size()), limits);
  return IntegerSet(std::move(elements));
}

std::int64_t IntegerSet::total() const {
  std::int64_t t = 0;
  for (std::int64_t v : elements_) t += v;
  return t;
}

bool IntegerSet::contains(std::int64_t x) const {
  return std::binary_search(elements_.begin(), elements_.end(), x);
}

IntegerSet IntegerSet::negated() const {
  std::vector<std::int64_t> out(elements_.rbegin(), elements_.rend());
  for (auto& v : out) v = -v;
  return IntegerSet(std::move(out));
}

IntegerSet IntegerSet::dilated(std::int64_t x) const {
  if (x == 0) throw Error(ErrorCode::kInvalidArgument, "dilation by zero");
  std::vector<std::int64_t> out(elements_);
  for (auto& v : out) v *= x;
  if (x < 0) std::reverse(out.begin(), out.end());
  return IntegerSet(std::move(out));
}

RepSequence::RepSequence(IntegerSet base, int r, const Limits& limits)
    : base_(std::move(base)), r_(r) {
  if (r < 1) {
    throw Error(ErrorCode::kRange,
                "multiplicity r must be positive, got " + std::to_string(r));
  }
  if (r > limits.max_r) {
    throw Error(ErrorCode::kRange, "multiplicity " + std::to_string(r) +
                                       " exceeds cap " +
                                       std::to_string(limits.max_r));
  }
}

SumSet SumSet::from_values(std::vector<std::int64_t> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  SumSet s;
  s.sums_ = std::move(values);
  return s;
}

bool SumSet::contains(std::int64_t s) const {
  return std::binary_search(sums_.begin(), sums_.end(), s);
}

bool SumSet::is_subset_of(const SumSet& other) const {
  return std::includes(other.sums_.begin(), other.sums_.end(), sums_.begin(),
                       sums_.end());
}

SumSet SumSet::reflected(std::int64_t total) const {
  SumSet out;
  out.sums_.reserve(sums_.size());
  for (auto it = sums_.rbegin(); it != sums_.rend(); ++it) {
    out.sums_.push_back(total - *it);
  }
  return out;
}

SumSet SumSet::scaled(std::int64_t x) const {
  std::vector<std::int64_t> v(sums_);
  for (auto& s : v) s *= x;
  return from_values(std::move(v));
}

IntegerSet parse_set(std::string_view text, const Limits& limits) {
  Cursor cur(text);
  std::vector<std::int64_t> elements;
  const char open = cur.peek();
  if (open == '{') {
    cur.expect('{');
    if (cur.peek() == '}') cur.fail("empty set");
    elements.push_back(cur.integer());
    while (cur.peek() == ',') {
      cur.expect(',');
      elements.push_back(cur.integer());
      check_cardinality(static_cast<std::int64_t>(elements.size()), limits);
    }
    cur.expect('}');
  } else if (open == '[') {
    cur.expect('[');
    const std::int64_t a = cur.integer();
    cur.expect(',');
    const std::int64_t b = cur.integer();
    cur.expect(']');
    if (b < a) cur.fail("interval upper end is below lower end");
    check_value(a, limits);
    check_value(b, limits);
    check_cardinality(b - a + 1, limits);
    for (std::int64_t v = a; v <= b; ++v) elements.push_back(v);
  } else {
    cur.fail("expected '{' or '['");
  }
  if (!cur.at_end()) cur.fail("trailing characters");
  return IntegerSet::from_elements(std::move(elements), limits);
}

RepSequence parse_sequence(std::string_view text, int r,
                           const Limits& limits) {
  return RepSequence(parse_set(text, limits), r, limits);
}

std::string format_set(const IntegerSet& set) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (std::int64_t v : set.elements()) {
    if (!first) os << ',';
    os << v;
    first = false;
  }
  os << '}';
  return os.str();
}

std::string format_instance(const Instance& instance) {
  std::string s = format_set(base_of(instance));
  if (const auto* seq = std::get_if<RepSequence>(&instance)) {
    s += "_" + std::to_string(seq->r());
  }
  return s;
}

SignProfile classify(const IntegerSet& set) {
  SignProfile prof;
  bool nonzero_meet = false;
  for (std::int64_t v : set.elements()) {
    if (v < 0) {
      ++prof.n;
    } else if (v > 0) {
      ++prof.p;
    } else {
      prof.has_zero = true;
    }
    if (v != 0 && set.contains(-v)) nonzero_meet = true;
  }
  prof.self_disjoint = !prof.has_zero && !nonzero_meet;
  prof.self_meet_zero = prof.has_zero && !nonzero_meet;
  return prof;
}

const IntegerSet& base_of(const Instance& instance) {
  if (const auto* seq = std::get_if<RepSequence>(&instance)) {
    return seq->base();
  }
  return std::get<IntegerSet>(instance);
}

int multiplicity_of(const Instance& instance) {
  if (const auto* seq = std::get_if<RepSequence>(&instance)) return seq->r();
  return 1;
}

}  // namespace subsum
