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

#include <algorithm>

#include "subsum/error.hpp"

namespace subsum::bounds {

namespace {

// x(x+1)/2; one of x, x+1 is even so the division is exact. tri(-1) = 0.
constexpr std::int64_t tri(std::int64_t x) { return x * (x + 1) / 2; }

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::kRange, what);
}

CaseLabel sign_case(bool le_n, bool le_p) {
  if (le_n && le_p) return CaseLabel::kI;
  if (le_n) return CaseLabel::kII;
  if (le_p) return CaseLabel::kIII;
  return CaseLabel::kIV;
}

// A Σ-set is never empty, so a formula that drops below 1 is reported as 1.
std::int64_t at_least_one(std::int64_t v) { return std::max<std::int64_t>(v, 1); }

}  // namespace

std::string theorem_string(TheoremId id) {
  switch (id) {
    case TheoremId::kT2_1: return "T2_1";
    case TheoremId::kC2_2: return "C2_2";
    case TheoremId::kT2_3: return "T2_3";
    case TheoremId::kC2_4: return "C2_4";
    case TheoremId::kC2_5: return "C2_5";
    case TheoremId::kT3_1_disjoint:
    case TheoremId::kT3_1_zero: return "T3_1";
    case TheoremId::kT3_2: return "T3_2";
    case TheoremId::kC3_3: return "C3_3";
    case TheoremId::kC3_4: return "C3_4";
    case TheoremId::kT1_1: return "T1_1";
    case TheoremId::kT1_2: return "T1_2";
    case TheoremId::kT1_3: return "T1_3";
  }
  return "?";
}

std::string case_string(const BoundResult& bound) {
  if (bound.theorem == TheoremId::kT3_1_disjoint) return "disjoint";
  if (bound.theorem == TheoremId::kT3_1_zero) return "zero";
  if (!bound.case_label) return "";
  switch (*bound.case_label) {
    case CaseLabel::kI: return "i";
    case CaseLabel::kII: return "ii";
    case CaseLabel::kIII: return "iii";
    case CaseLabel::kIV: return "iv";
    case CaseLabel::kOdd: return "odd";
    case CaseLabel::kEven: return "even";
  }
  return "";
}

std::string display_name(const BoundResult& bound) {
  std::string s = theorem_string(bound.theorem);
  if (auto c = case_string(bound); !c.empty()) s += "(" + c + ")";
  return s;
}

std::int64_t m_index(std::int64_t alpha, std::int64_t r) {
  require(alpha >= 0 && r >= 1, "m_index needs alpha >= 0 and r >= 1");
  return alpha / r + 1;
}

BoundResult bound_disjoint(std::int64_t k, std::int64_t alpha) {
  require(k >= 1 && alpha >= 0 && alpha <= k, "bound_disjoint: need 0 <= alpha <= k");
  return {TheoremId::kT2_1, std::nullopt, tri(k) - tri(alpha) + 1,
          {.k = k, .alpha = alpha}};
}

BoundResult bound_zero(std::int64_t k, std::int64_t alpha) {
  require(k >= 1 && alpha >= 0 && alpha <= k, "bound_zero: need 0 <= alpha <= k");
  return {TheoremId::kC2_2, std::nullopt, tri(k - 1) - tri(alpha - 1) + 1,
          {.k = k, .alpha = alpha}};
}

BoundResult bound_mixed(std::int64_t n, std::int64_t p, std::int64_t alpha) {
  require(n >= 1 && p >= 1 && alpha >= 0 && alpha <= n + p,
          "bound_mixed: need n, p >= 1 and 0 <= alpha <= n + p");
  std::int64_t v = tri(n) + tri(p) + 1;
  if (alpha > n) v -= tri(alpha - n);
  if (alpha > p) v -= tri(alpha - p);
  return {TheoremId::kT2_3, sign_case(alpha <= n, alpha <= p), v,
          {.k = n + p, .n = n, .p = p, .alpha = alpha}};
}

BoundResult bound_mixed_zero(std::int64_t n, std::int64_t p,
                             std::int64_t alpha) {
  require(n >= 1 && p >= 1 && alpha >= 0 && alpha <= n + p + 1,
          "bound_mixed_zero: need n, p >= 1 and 0 <= alpha <= n + p + 1");
  std::int64_t v = tri(n) + tri(p) + 1;
  if (alpha > n) v -= tri(alpha - n - 1);
  if (alpha > p) v -= tri(alpha - p - 1);
  return {TheoremId::kC2_4, sign_case(alpha <= n, alpha <= p), v,
          {.k = n + p + 1, .n = n, .p = p, .alpha = alpha}};
}

std::int64_t bound_general_parity_form(std::int64_t k, std::int64_t alpha,
                                       bool has_zero) {
  const bool odd = k % 2 == 1;
  if (!has_zero) {
    const std::int64_t lead = odd ? (k + 1) * (k + 1) / 4
                                  : ((k + 1) * (k + 1) - 1) / 4;
    return lead - tri(alpha) + 1;
  }
  const std::int64_t lead = odd ? (k * k - 1) / 4 : k * k / 4;
  return lead - tri(alpha - 1) + 1;
}

BoundResult bound_general(std::int64_t k, std::int64_t alpha, bool has_zero) {
  require(k >= 2 && alpha >= 0 && alpha <= k,
          "bound_general: need k >= 2 and 0 <= alpha <= k");
  // Integer division floors here since both numerators are nonnegative.
  const std::int64_t floor_form =
      has_zero ? k * k / 4 - tri(alpha - 1) + 1
               : (k + 1) * (k + 1) / 4 - tri(alpha) + 1;
  if (floor_form != bound_general_parity_form(k, alpha, has_zero)) {
    throw Error(ErrorCode::kInternal, "floor and parity forms disagree");
  }
  return {TheoremId::kC2_5, std::nullopt, at_least_one(floor_form),
          {.k = k, .alpha = alpha}};
}

BoundResult bound_seq_disjoint(std::int64_t k, std::int64_t r,
                               std::int64_t alpha) {
  require(k >= 2 && r >= 1 && alpha >= 0 && alpha <= r * k - 1,
          "bound_seq_disjoint: need k >= 2, r >= 1, 0 <= alpha < rk");
  const std::int64_t m = m_index(alpha, r);
  const std::int64_t v = r * (tri(k) - tri(m)) + m * (m * r - alpha) + 1;
  return {TheoremId::kT3_1_disjoint, std::nullopt, v,
          {.k = k, .r = r, .alpha = alpha, .m = m}};
}

BoundResult bound_seq_zero(std::int64_t k, std::int64_t r, std::int64_t alpha) {
  require(k >= 2 && r >= 1 && alpha >= 0 && alpha <= r * k - 1,
          "bound_seq_zero: need k >= 2, r >= 1, 0 <= alpha < rk");
  const std::int64_t m = m_index(alpha, r);
  const std::int64_t v =
      r * (tri(k - 1) - tri(m - 1)) + (m - 1) * (m * r - alpha) + 1;
  return {TheoremId::kT3_1_zero, std::nullopt, v,
          {.k = k, .r = r, .alpha = alpha, .m = m}};
}

BoundResult bound_seq_mixed(std::int64_t n, std::int64_t p, std::int64_t r,
                            std::int64_t alpha) {
  require(n >= 1 && p >= 1 && r >= 1 && alpha >= 0 && alpha <= r * (n + p) - 1,
          "bound_seq_mixed: need n, p, r >= 1 and 0 <= alpha < r(n+p)");
  const std::int64_t m = m_index(alpha, r);
  std::int64_t v = r * (tri(n) + tri(p));
  std::int64_t coeff = 0;
  if (m > n) {
    v -= r * tri(m - n);
    coeff += m - n;
  }
  if (m > p) {
    v -= r * tri(m - p);
    coeff += m - p;
  }
  v += coeff * (m * r - alpha) + 1;
  return {TheoremId::kT3_2, sign_case(m <= n, m <= p), v,
          {.k = n + p, .n = n, .p = p, .r = r, .alpha = alpha, .m = m}};
}

BoundResult bound_seq_mixed_zero(std::int64_t n, std::int64_t p,
                                 std::int64_t r, std::int64_t alpha) {
  require(n >= 1 && p >= 1 && r >= 1 && alpha >= 0 &&
              alpha <= r * (n + p + 1) - 1,
          "bound_seq_mixed_zero: need n, p, r >= 1 and 0 <= alpha < r(n+p+1)");
  const std::int64_t m = m_index(alpha, r);
  std::int64_t v = r * (tri(n) + tri(p));
  std::int64_t coeff = 0;
  if (m > n) {
    v -= r * tri(m - n - 1);
    coeff += m - n - 1;
  }
  if (m > p) {
    v -= r * tri(m - p - 1);
    coeff += m - p - 1;
  }
  v += coeff * (m * r - alpha) + 1;
  return {TheoremId::kC3_3, sign_case(m <= n, m <= p), v,
          {.k = n + p + 1, .n = n, .p = p, .r = r, .alpha = alpha, .m = m}};
}

BoundResult bound_seq_general(std::int64_t k, std::int64_t r,
                              std::int64_t alpha, bool has_zero) {
  require(k >= 3 && r >= 1 && alpha >= 0 && alpha <= r * k - 1,
          "bound_seq_general: need k >= 3, r >= 1, 0 <= alpha < rk");
  const std::int64_t m = m_index(alpha, r);
  const bool odd = k % 2 == 1;
  std::int64_t v = 0;
  if (!has_zero) {
    const std::int64_t lead = odd ? (k + 1) * (k + 1) / 4
                                  : ((k + 1) * (k + 1) - 1) / 4;
    v = r * (lead - tri(m)) + 1;
  } else {
    const std::int64_t lead = odd ? (k * k - 1) / 4 : k * k / 4;
    v = r * (lead - tri(m - 1)) + 1;
  }
  return {TheoremId::kC3_4, odd ? CaseLabel::kOdd : CaseLabel::kEven,
          at_least_one(v), {.k = k, .r = r, .alpha = alpha, .m = m}};
}

BoundResult bound_sumset(std::int64_t a_size, std::int64_t b_size) {
  require(a_size >= 1 && b_size >= 1, "bound_sumset: sets must be nonempty");
  return {TheoremId::kT1_1, std::nullopt, a_size + b_size - 1, {}};
}

BoundResult bound_h_fold(std::int64_t a_size, std::int64_t h) {
  require(a_size >= 1 && h >= 1, "bound_h_fold: need |A| >= 1 and h >= 1");
  return {TheoremId::kT1_2, std::nullopt, h * a_size - h + 1, {.k = a_size}};
}

BoundResult bound_prime_field(std::int64_t p, std::int64_t size,
                              std::int64_t alpha) {
  require(size >= 1 && alpha >= 0 && alpha <= size,
          "bound_prime_field: need 0 <= alpha <= |A|");
  return {TheoremId::kT1_3, std::nullopt,
          std::min(p, tri(size) - tri(alpha) + 1),
          {.k = size, .p = p, .alpha = alpha}};
}

std::vector<BoundResult> applicable_bounds(const IntegerSet& set,
                                           std::int64_t alpha) {
  const std::int64_t k = set.size();
  require(alpha >= 0 && alpha <= k, "alpha outside [0,k]");
  const SignProfile prof = classify(set);
  std::vector<BoundResult> out;
  if (prof.self_disjoint) out.push_back(bound_disjoint(k, alpha));
  if (prof.self_meet_zero) out.push_back(bound_zero(k, alpha));
  if (prof.n >= 1 && prof.p >= 1) {
    out.push_back(prof.has_zero ? bound_mixed_zero(prof.n, prof.p, alpha)
                                : bound_mixed(prof.n, prof.p, alpha));
  }
  if (k >= 2) out.push_back(bound_general(k, alpha, prof.has_zero));
  return out;
}

std::vector<BoundResult> applicable_bounds(const RepSequence& seq,
                                           std::int64_t alpha) {
  const std::int64_t k = seq.k();
  const std::int64_t r = seq.r();
  require(alpha >= 0 && alpha <= r * k, "alpha outside [0,rk]");
  std::vector<BoundResult> out;
  if (alpha == r * k) return out;
  const SignProfile prof = classify(seq.base());
  if (k >= 2 && prof.self_disjoint) out.push_back(bound_seq_disjoint(k, r, alpha));
  if (k >= 2 && prof.self_meet_zero) out.push_back(bound_seq_zero(k, r, alpha));
  if (prof.n >= 1 && prof.p >= 1) {
    out.push_back(prof.has_zero
                      ? bound_seq_mixed_zero(prof.n, prof.p, r, alpha)
                      : bound_seq_mixed(prof.n, prof.p, r, alpha));
  }
  if (k >= 3) out.push_back(bound_seq_general(k, r, alpha, prof.has_zero));
  return out;
}

std::vector<BoundResult> applicable_bounds(const Instance& instance,
                                           std::int64_t alpha) {
  if (const auto* seq = std::get_if<RepSequence>(&instance)) {
    return applicable_bounds(*seq, alpha);
  }
  return applicable_bounds(std::get<IntegerSet>(instance), alpha);
}

}  // namespace subsum::bounds
