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

/*
 * C interface to the subsum library.
 *
 * Objects are opaque handles created by subsum_* functions and released with
 * the matching *_free function. Every fallible call returns a subsum_status;
 * on failure the message is available from subsum_last_error() on the same
 * thread until the next failing call. Strings returned through char** out
 * parameters are owned by the caller and released with subsum_string_free.
 */
#ifndef SUBSUM_SUBSUM_H_
#define SUBSUM_SUBSUM_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(SUBSUM_BUILDING_LIBRARY)
#define SUBSUM_API __declspec(dllexport)
#else
#define SUBSUM_API __declspec(dllimport)
#endif
#else
#define SUBSUM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum subsum_status {
  SUBSUM_OK = 0,
  SUBSUM_ERR_PARSE = 1,
  SUBSUM_ERR_RANGE = 2,
  SUBSUM_ERR_BUDGET = 3,
  SUBSUM_ERR_NOT_PRIME = 4,
  SUBSUM_ERR_INVALID_ARGUMENT = 5,
  SUBSUM_ERR_INTERNAL = 6
} subsum_status;

typedef enum subsum_mode {
  SUBSUM_AT_LEAST = 0, /* subsets of size >= alpha */
  SUBSUM_AT_MOST = 1   /* subsets of size <= len - alpha */
} subsum_mode;

typedef enum subsum_fold_kind {
  SUBSUM_FOLD_UNRESTRICTED = 0,
  SUBSUM_FOLD_RESTRICTED = 1,
  SUBSUM_FOLD_GENERALIZED = 2
} subsum_fold_kind;

typedef enum subsum_zero_policy {
  SUBSUM_ZERO_REQUIRE = 0,
  SUBSUM_ZERO_FORBID = 1,
  SUBSUM_ZERO_ANY = 2
} subsum_zero_policy;

typedef enum subsum_family_id {
  SUBSUM_POS_INTERVAL = 0,
  SUBSUM_NONNEG_INTERVAL = 1,
  SUBSUM_MIXED_PUNCTURED = 2,
  SUBSUM_MIXED_FULL = 3,
  SUBSUM_POS_INTERVAL_R = 4,
  SUBSUM_NONNEG_INTERVAL_R = 5,
  SUBSUM_MIXED_PUNCTURED_R = 6,
  SUBSUM_MIXED_FULL_R = 7
} subsum_family_id;

typedef struct subsum_limits {
  int64_t max_abs;
  int32_t max_k;
  int32_t max_r;
} subsum_limits;

typedef struct subsum_sign_profile {
  int32_t n;
  int32_t p;
  int32_t has_zero;
  int32_t self_disjoint;
  int32_t self_meet_zero;
} subsum_sign_profile;

/* theorem_id and case_label point at static strings; case_label is "" when
 * the theorem has no cases. */
typedef struct subsum_bound {
  const char* theorem_id;
  const char* case_label;
  int64_t value;
} subsum_bound;

typedef struct subsum_family {
  subsum_family_id id;
  int32_t k;
  int32_t n;
  int32_t p;
  int32_t r;
} subsum_family;

typedef struct subsum_tightness {
  int64_t alpha;
  int64_t computed_size;
  subsum_bound bound;
  int32_t tight;
} subsum_tightness;

typedef struct subsum_sweep_options {
  int64_t max_abs;
  int32_t k_min;
  int32_t k_max;
  int32_t r_min; /* sequence sweeps only */
  int32_t r_max;
  const int64_t* alphas; /* NULL means every alpha */
  size_t alpha_count;
  int32_t oracle;
  int32_t workers;
  int32_t keep_records; /* needed for subsum_report_to_csv rows */
  int64_t budget;       /* instance-alpha pairs; <= 0 means the default */
} subsum_sweep_options;

typedef struct subsum_instance subsum_instance;
typedef struct subsum_sumset subsum_sumset;
typedef struct subsum_bound_list subsum_bound_list;
typedef struct subsum_report subsum_report;

SUBSUM_API const char* subsum_version(void);
SUBSUM_API const char* subsum_last_error(void);
SUBSUM_API void subsum_string_free(char* s);

SUBSUM_API subsum_limits subsum_default_limits(void);
SUBSUM_API subsum_sweep_options subsum_default_sweep_options(void);

/* Instances. r = 0 parses a plain set; r >= 1 a repeated sequence. limits may
 * be NULL for the defaults. */
SUBSUM_API subsum_status subsum_instance_parse(const char* literal, int32_t r,
                                               const subsum_limits* limits,
                                               subsum_instance** out);
SUBSUM_API subsum_status subsum_instance_from_family(const subsum_family* family,
                                                     subsum_instance** out);
SUBSUM_API void subsum_instance_free(subsum_instance* inst);
SUBSUM_API int32_t subsum_instance_k(const subsum_instance* inst);
SUBSUM_API int32_t subsum_instance_r(const subsum_instance* inst);
SUBSUM_API int32_t subsum_instance_is_sequence(const subsum_instance* inst);
/* Number of terms: k for sets, r*k for sequences. */
SUBSUM_API int64_t subsum_instance_length(const subsum_instance* inst);
SUBSUM_API subsum_sign_profile subsum_instance_profile(const subsum_instance* inst);
SUBSUM_API subsum_status subsum_instance_format(const subsum_instance* inst,
                                                char** out);

/* Sum sets. */
SUBSUM_API subsum_status subsum_sigma(const subsum_instance* inst, int64_t alpha,
                                      subsum_mode mode, subsum_sumset** out);
SUBSUM_API subsum_status subsum_oracle_sigma(const subsum_instance* inst,
                                             int64_t alpha, subsum_mode mode,
                                             subsum_sumset** out);
/* h-fold sumset of the instance's base set; r is used by GENERALIZED. */
SUBSUM_API subsum_status subsum_fold(const subsum_instance* inst, int64_t h,
                                     subsum_fold_kind kind, int32_t r,
                                     subsum_sumset** out);
SUBSUM_API void subsum_sumset_free(subsum_sumset* set);
SUBSUM_API int64_t subsum_sumset_size(const subsum_sumset* set);
SUBSUM_API const int64_t* subsum_sumset_data(const subsum_sumset* set);

/* Bounds. */
SUBSUM_API subsum_status subsum_applicable_bounds(const subsum_instance* inst,
                                                  int64_t alpha,
                                                  subsum_bound_list** out);
SUBSUM_API size_t subsum_bound_list_size(const subsum_bound_list* list);
SUBSUM_API subsum_status subsum_bound_list_get(const subsum_bound_list* list,
                                               size_t index, subsum_bound* out);
SUBSUM_API void subsum_bound_list_free(subsum_bound_list* list);

/* Extremal witnesses. */
SUBSUM_API subsum_status subsum_family_parse(const char* name,
                                             subsum_family_id* out);
SUBSUM_API int32_t subsum_family_is_sequence(subsum_family_id id);
/* Largest alpha accepted by subsum_check_tightness for the family. */
SUBSUM_API subsum_status subsum_family_max_alpha(const subsum_family* family,
                                                 int64_t* out);
SUBSUM_API subsum_status subsum_check_tightness(const subsum_family* family,
                                                int64_t alpha,
                                                subsum_tightness* out);

/* Campaigns. */
SUBSUM_API subsum_status subsum_sweep_sets(const subsum_sweep_options* options,
                                           subsum_report** out);
SUBSUM_API subsum_status subsum_sweep_sequences(const subsum_sweep_options* options,
                                                subsum_report** out);
SUBSUM_API int32_t subsum_is_prime(int64_t p);
SUBSUM_API subsum_status subsum_verify_balandraud(int32_t p, subsum_report** out);
SUBSUM_API int64_t subsum_report_violations(const subsum_report* report);
SUBSUM_API int64_t subsum_report_oracle_mismatches(const subsum_report* report);
SUBSUM_API subsum_status subsum_report_to_json(const subsum_report* report,
                                               char** out);
SUBSUM_API subsum_status subsum_report_to_csv(const subsum_report* report,
                                              char** out);
SUBSUM_API void subsum_report_free(subsum_report* report);

/* Minimum |Σ_α| over all k-subsets of [-max_abs, max_abs] matching the zero
 * policy, as JSON {k, alpha, max_abs, zero_policy, size, minimizers,
 * witnesses[]}. */
SUBSUM_API subsum_status subsum_empirical_minimum(int32_t k, int64_t alpha,
                                                  int64_t max_abs,
                                                  subsum_zero_policy policy,
                                                  char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* SUBSUM_SUBSUM_H_ */
