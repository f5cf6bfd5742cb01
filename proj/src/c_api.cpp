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

#include "subsum/subsum.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <utility>
#include <vector>

#include "subsum/bounds.hpp"
#include "subsum/core_model.hpp"
#include "subsum/engine.hpp"
#include "subsum/error.hpp"
#include "subsum/fp_prime.hpp"
#include "subsum/oracle.hpp"
#include "subsum/report.hpp"
#include "subsum/verifier.hpp"
#include "subsum/witnesses.hpp"

struct subsum_instance {
  subsum::Instance value;
};

struct subsum_sumset {
  subsum::SumSet value;
};

struct subsum_bound_list {
  std::vector<subsum::bounds::BoundResult> value;
};

struct subsum_report {
  subsum::verifier::CampaignReport value;
};

namespace {

using namespace subsum;

thread_local std::string g_last_error;

subsum_status fail(subsum_status code, const std::string& message) {
  g_last_error = message;
  return code;
}

// Runs `body`, translating exceptions into status codes.
template <typename Body>
subsum_status guarded(Body&& body) {
  try {
    body();
    return SUBSUM_OK;
  } catch (const Error& e) {
    return fail(static_cast<subsum_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(SUBSUM_ERR_RANGE, "out of memory");
  } catch (const std::exception& e) {
    return fail(SUBSUM_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(SUBSUM_ERR_INTERNAL, "unknown error");
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

const char* theorem_cstr(bounds::TheoremId id) {
  switch (id) {
    case bounds::TheoremId::kT2_1: return "T2_1";
    case bounds::TheoremId::kC2_2: return "C2_2";
    case bounds::TheoremId::kT2_3: return "T2_3";
    case bounds::TheoremId::kC2_4: return "C2_4";
    case bounds::TheoremId::kC2_5: return "C2_5";
    case bounds::TheoremId::kT3_1_disjoint:
    case bounds::TheoremId::kT3_1_zero: return "T3_1";
    case bounds::TheoremId::kT3_2: return "T3_2";
    case bounds::TheoremId::kC3_3: return "C3_3";
    case bounds::TheoremId::kC3_4: return "C3_4";
    case bounds::TheoremId::kT1_1: return "T1_1";
    case bounds::TheoremId::kT1_2: return "T1_2";
    case bounds::TheoremId::kT1_3: return "T1_3";
  }
  return "";
}

const char* case_cstr(const bounds::BoundResult& b) {
  static constexpr const char* kLabels[] = {"",    "i",   "ii",       "iii",
                                            "iv",  "odd", "even",     "disjoint",
                                            "zero"};
  const std::string s = bounds::case_string(b);
  for (const char* label : kLabels) {
    if (s == label) return label;
  }
  return "";
}

subsum_bound to_c(const bounds::BoundResult& b) {
  return {theorem_cstr(b.theorem), case_cstr(b), b.value};
}

witnesses::WitnessFamily to_cpp(const subsum_family& f) {
  if (f.id < SUBSUM_POS_INTERVAL || f.id > SUBSUM_MIXED_FULL_R) {
    throw Error(ErrorCode::kInvalidArgument, "unknown family id");
  }
  return {static_cast<witnesses::FamilyId>(f.id), f.k, f.n, f.p, f.r};
}

SumMode to_cpp(subsum_mode mode) {
  return mode == SUBSUM_AT_MOST ? SumMode::kAtMost : SumMode::kAtLeast;
}

verifier::SweepOptions to_cpp(const subsum_sweep_options& o) {
  verifier::SweepOptions s;
  s.max_abs = o.max_abs;
  s.k_min = o.k_min;
  s.k_max = o.k_max;
  s.r_min = o.r_min;
  s.r_max = o.r_max;
  if (o.alphas != nullptr) {
    s.alphas = verifier::AlphaPolicy::list(
        std::vector<std::int64_t>(o.alphas, o.alphas + o.alpha_count));
  }
  s.oracle = o.oracle != 0;
  s.workers = o.workers;
  s.keep_records = o.keep_records != 0;
  if (o.budget > 0) s.budget = o.budget;
  return s;
}

template <typename T>
subsum_status null_out(T** out) {
  if (out == nullptr) return fail(SUBSUM_ERR_INVALID_ARGUMENT, "null output pointer");
  *out = nullptr;
  return SUBSUM_OK;
}

}  // namespace

extern "C" {

const char* subsum_version(void) { return "1.0.0"; }

const char* subsum_last_error(void) { return g_last_error.c_str(); }

void subsum_string_free(char* s) { std::free(s); }

subsum_limits subsum_default_limits(void) {
  const Limits d;
  return {d.max_abs, d.max_k, d.max_r};
}

subsum_sweep_options subsum_default_sweep_options(void) {
  const verifier::SweepOptions d;
  return {d.max_abs, d.k_min, d.k_max, d.r_min, d.r_max, nullptr, 0,
          d.oracle,  d.workers, d.keep_records, d.budget};
}

subsum_status subsum_instance_parse(const char* literal, int32_t r,
                                    const subsum_limits* limits,
                                    subsum_instance** out) {
  if (auto s = null_out(out); s != SUBSUM_OK) return s;
  if (literal == nullptr) return fail(SUBSUM_ERR_INVALID_ARGUMENT, "null literal");
  return guarded([&] {
    Limits lim;
    if (limits != nullptr) lim = {limits->max_abs, limits->max_k, limits->max_r};
    if (r < 0) throw Error(ErrorCode::kRange, "multiplicity r must be positive");
    if (r == 0) {
      *out = new subsum_instance{parse_set(literal, lim)};
    } else {
      *out = new subsum_instance{parse_sequence(literal, r, lim)};
    }
  });
}

subsum_status subsum_instance_from_family(const subsum_family* family,
                                          subsum_instance** out) {
  if (auto s = null_out(out); s != SUBSUM_OK) return s;
  if (family == nullptr) return fail(SUBSUM_ERR_INVALID_ARGUMENT, "null family");
  return guarded([&] {
    *out = new subsum_instance{witnesses::witness(to_cpp(*family))};
  });
}

void subsum_instance_free(subsum_instance* inst) { delete inst; }

int32_t subsum_instance_k(const subsum_instance* inst) {
  return base_of(inst->value).size();
}

int32_t subsum_instance_r(const subsum_instance* inst) {
  return multiplicity_of(inst->value);
}

int32_t subsum_instance_is_sequence(const subsum_instance* inst) {
  return std::holds_alternative<RepSequence>(inst->value) ? 1 : 0;
}

int64_t subsum_instance_length(const subsum_instance* inst) {
  return std::int64_t{multiplicity_of(inst->value)} * base_of(inst->value).size();
}

subsum_sign_profile subsum_instance_profile(const subsum_instance* inst) {
  const SignProfile p = classify(base_of(inst->value));
  return {p.n, p.p, p.has_zero, p.self_disjoint, p.self_meet_zero};
}

subsum_status subsum_instance_format(const subsum_instance* inst, char** out) {
  if (auto s = null_out(out); s != SUBSUM_OK) return s;
  return guarded([&] { *out = dup_string(format_instance(inst->value)); });
}

subsum_status subsum_sigma(const subsum_instance* inst, int64_t alpha,
                           subsum_mode mode, subsum_sumset** out) {
  if (auto s = null_out(out); s != SUBSUM_OK) return s;
  return guarded([&] {
    *out = new subsum_sumset{engine::sigma_of(inst->value, alpha, to_cpp(mode))};
  });
}

subsum_status subsum_oracle_sigma(const subsum_instance* inst, int64_t alpha,
                                  subsum_mode mode, subsum_sumset** out) {
  if (auto s = null_out(out); s != SUBSUM_OK) return s;
  return guarded([&] {
    const auto m = to_cpp(mode);
    if (const auto* seq = std::get_if<RepSequence>(&inst->value)) {
      *out = new subsum_sumset{oracle::oracle_sigma_seq(*seq, alpha, m)};
    } else {
      *out = new subsum_sumset{
          oracle::oracle_sigma_set(std::get<IntegerSet>(inst->value), alpha, m)};
    }
  });
}

subsum_status subsum_fold(const subsum_instance* inst, int64_t h,
                          subsum_fold_kind kind, int32_t r, subsum_sumset** out) {
  if (auto s = null_out(out); s != SUBSUM_OK) return s;
  return guarded([&] {
    oracle::FoldKind fk;
    switch (kind) {
      case SUBSUM_FOLD_UNRESTRICTED: fk = oracle::FoldKind::unrestricted(); break;
      case SUBSUM_FOLD_RESTRICTED: fk = oracle::FoldKind::restricted(); break;
      case SUBSUM_FOLD_GENERALIZED: fk = oracle::FoldKind::generalized(r); break;
      default: throw Error(ErrorCode::kInvalidArgument, "unknown fold kind");
    }
    *out = new subsum_sumset{engine::fold_fast(base_of(inst->value), h, fk)};
  });
}

void subsum_sumset_free(subsum_sumset* set) { delete set; }

int64_t subsum_sumset_size(const subsum_sumset* set) { return set->value.size(); }

const int64_t* subsum_sumset_data(const subsum_sumset* set) {
  return set->value.sums().data();
}

subsum_status subsum_applicable_bounds(const subsum_instance* inst,
                                       int64_t alpha, subsum_bound_list** out) {
  if (auto s = null_out(out); s != SUBSUM_OK) return s;
  return guarded([&] {
    *out = new subsum_bound_list{bounds::applicable_bounds(inst->value, alpha)};
  });
}

size_t subsum_bound_list_size(const subsum_bound_list* list) {
  return list->value.size();
}

subsum_status subsum_bound_list_get(const subsum_bound_list* list, size_t index,
                                    subsum_bound* out) {
  if (out == nullptr) return fail(SUBSUM_ERR_INVALID_ARGUMENT, "null output pointer");
  if (index >= list->value.size()) {
    return fail(SUBSUM_ERR_RANGE, "bound index out of range");
  }
  *out = to_c(list->value[index]);
  return SUBSUM_OK;
}

void subsum_bound_list_free(subsum_bound_list* list) { delete list; }

subsum_status subsum_family_parse(const char* name, subsum_family_id* out) {
  if (name == nullptr || out == nullptr) {
    return fail(SUBSUM_ERR_INVALID_ARGUMENT, "null argument");
  }
  const auto id = witnesses::parse_family(name);
  if (!id) return fail(SUBSUM_ERR_PARSE, std::string("unknown family ") + name);
  *out = static_cast<subsum_family_id>(*id);
  return SUBSUM_OK;
}

int32_t subsum_family_is_sequence(subsum_family_id id) {
  return witnesses::is_sequence_family(static_cast<witnesses::FamilyId>(id)) ? 1 : 0;
}

subsum_status subsum_family_max_alpha(const subsum_family* family, int64_t* out) {
  if (family == nullptr || out == nullptr) {
    return fail(SUBSUM_ERR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] { *out = witnesses::max_alpha(to_cpp(*family)); });
}

subsum_status subsum_check_tightness(const subsum_family* family, int64_t alpha,
                                     subsum_tightness* out) {
  if (family == nullptr || out == nullptr) {
    return fail(SUBSUM_ERR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    const auto rep = witnesses::check_tightness(to_cpp(*family), alpha);
    *out = {rep.alpha, rep.computed_size, to_c(rep.bound), rep.tight ? 1 : 0};
  });
}

subsum_status subsum_sweep_sets(const subsum_sweep_options* options,
                                subsum_report** out) {
  if (auto s = null_out(out); s != SUBSUM_OK) return s;
  if (options == nullptr) return fail(SUBSUM_ERR_INVALID_ARGUMENT, "null options");
  return guarded([&] {
    *out = new subsum_report{verifier::sweep_sets(to_cpp(*options))};
  });
}

subsum_status subsum_sweep_sequences(const subsum_sweep_options* options,
                                     subsum_report** out) {
  if (auto s = null_out(out); s != SUBSUM_OK) return s;
  if (options == nullptr) return fail(SUBSUM_ERR_INVALID_ARGUMENT, "null options");
  return guarded([&] {
    *out = new subsum_report{verifier::sweep_sequences(to_cpp(*options))};
  });
}

int32_t subsum_is_prime(int64_t p) { return fp::is_prime(p) ? 1 : 0; }

subsum_status subsum_verify_balandraud(int32_t p, subsum_report** out) {
  if (auto s = null_out(out); s != SUBSUM_OK) return s;
  return guarded([&] { *out = new subsum_report{fp::verify_balandraud(p)}; });
}

int64_t subsum_report_violations(const subsum_report* report) {
  return report->value.counts.violations;
}

int64_t subsum_report_oracle_mismatches(const subsum_report* report) {
  return report->value.counts.oracle_mismatches;
}

subsum_status subsum_report_to_json(const subsum_report* report, char** out) {
  if (auto s = null_out(out); s != SUBSUM_OK) return s;
  return guarded([&] { *out = dup_string(report::to_json(report->value).dump(2)); });
}

subsum_status subsum_report_to_csv(const subsum_report* report, char** out) {
  if (auto s = null_out(out); s != SUBSUM_OK) return s;
  return guarded([&] { *out = dup_string(report::to_csv(report->value)); });
}

void subsum_report_free(subsum_report* report) { delete report; }

subsum_status subsum_empirical_minimum(int32_t k, int64_t alpha, int64_t max_abs,
                                       subsum_zero_policy policy,
                                       char** out_json) {
  if (auto s = null_out(out_json); s != SUBSUM_OK) return s;
  return guarded([&] {
    verifier::ZeroPolicy zp = verifier::ZeroPolicy::kAny;
    const char* name = "any";
    if (policy == SUBSUM_ZERO_REQUIRE) {
      zp = verifier::ZeroPolicy::kRequire;
      name = "require";
    } else if (policy == SUBSUM_ZERO_FORBID) {
      zp = verifier::ZeroPolicy::kForbid;
      name = "forbid";
    }
    const auto best = verifier::empirical_minimum(k, alpha, max_abs, zp);
    nlohmann::json w = nlohmann::json::array();
    for (const auto& s : best.witnesses) w.push_back(format_set(s));
    nlohmann::json j{{"k", k},           {"alpha", alpha},
                     {"max_abs", max_abs}, {"zero_policy", name},
                     {"size", best.size}, {"minimizers", best.minimizers},
                     {"witnesses", w}};
    *out_json = dup_string(j.dump(2));
  });
}

}  // extern "C"
