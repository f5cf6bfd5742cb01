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

// Command-line front end. Talks to the library exclusively through the
// C API in subsum/subsum.h.
//
// Exit codes: 0 success, 1 usage or parse error, 2 verification violation,
// 3 budget refusal.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "subsum/subsum.h"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitViolation = 2;
constexpr int kExitBudget = 3;

struct InstanceDeleter {
  void operator()(subsum_instance* p) const { subsum_instance_free(p); }
};
struct SumsetDeleter {
  void operator()(subsum_sumset* p) const { subsum_sumset_free(p); }
};
struct BoundListDeleter {
  void operator()(subsum_bound_list* p) const { subsum_bound_list_free(p); }
};
struct ReportDeleter {
  void operator()(subsum_report* p) const { subsum_report_free(p); }
};
struct StringDeleter {
  void operator()(char* p) const { subsum_string_free(p); }
};
using InstancePtr = std::unique_ptr<subsum_instance, InstanceDeleter>;
using SumsetPtr = std::unique_ptr<subsum_sumset, SumsetDeleter>;
using BoundListPtr = std::unique_ptr<subsum_bound_list, BoundListDeleter>;
using ReportPtr = std::unique_ptr<subsum_report, ReportDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

// Library failure carrying the status for exit-code mapping.
struct ApiFailure {
  subsum_status status;
  std::string message;
};

void check(subsum_status s) {
  if (s != SUBSUM_OK) throw ApiFailure{s, subsum_last_error()};
}

int exit_code_for(subsum_status s) {
  return s == SUBSUM_ERR_BUDGET ? kExitBudget : kExitUsage;
}

std::string take_string(char* raw) {
  StringPtr owned(raw);
  return owned ? std::string(owned.get()) : std::string();
}

// "5" or "2..5".
std::pair<int, int> parse_range(const std::string& text, const char* flag) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw ApiFailure{SUBSUM_ERR_PARSE,
                     std::string("bad range for ") + flag + ": " + text};
  }
}

// "all" or a comma-separated list.
std::optional<std::vector<std::int64_t>> parse_alpha_list(const std::string& text) {
  if (text == "all") return std::nullopt;
  std::vector<std::int64_t> out;
  std::size_t pos = 0;
  try {
    while (pos <= text.size()) {
      const auto comma = text.find(',', pos);
      const auto piece = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                     : comma - pos);
      std::size_t used = 0;
      out.push_back(std::stoll(piece, &used));
      if (used != piece.size()) throw std::invalid_argument(piece);
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  } catch (const std::exception&) {
    throw ApiFailure{SUBSUM_ERR_PARSE, "bad --alpha value: " + text};
  }
  return out;
}

InstancePtr load_instance(const std::string& literal, int r) {
  subsum_instance* raw = nullptr;
  check(subsum_instance_parse(literal.c_str(), r, nullptr, &raw));
  return InstancePtr(raw);
}

std::string describe(const subsum_instance* inst) {
  char* raw = nullptr;
  check(subsum_instance_format(inst, &raw));
  return take_string(raw);
}

json profile_json(const subsum_instance* inst) {
  const auto p = subsum_instance_profile(inst);
  return {{"n", p.n},
          {"p", p.p},
          {"has_zero", p.has_zero != 0},
          {"self_disjoint", p.self_disjoint != 0},
          {"self_meet_zero", p.self_meet_zero != 0}};
}

std::string bound_name(const subsum_bound& b) {
  std::string s = b.theorem_id;
  if (b.case_label[0] != '\0') s += std::string("(") + b.case_label + ")";
  return s;
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw ApiFailure{SUBSUM_ERR_INVALID_ARGUMENT, "cannot open " + path};
  out << text << "\n";
}

// ---- compute -------------------------------------------------------------

struct ComputeArgs {
  std::string set;
  int r = 0;
  std::int64_t alpha = 0;
  std::string mode = "at-least";
  bool json = false;
};

int run_compute(const ComputeArgs& a) {
  auto inst = load_instance(a.set, a.r);
  const subsum_mode mode = a.mode == "at-most" ? SUBSUM_AT_MOST : SUBSUM_AT_LEAST;
  subsum_sumset* raw = nullptr;
  check(subsum_sigma(inst.get(), a.alpha, mode, &raw));
  SumsetPtr sums(raw);
  const std::int64_t n = subsum_sumset_size(sums.get());
  const std::int64_t* data = subsum_sumset_data(sums.get());
  std::vector<std::int64_t> values(data, data + n);

  if (a.json) {
    json j{{"instance", describe(inst.get())},
           {"r", subsum_instance_r(inst.get())},
           {"alpha", a.alpha},
           {"mode", a.mode},
           {"sums", values},
           {"size", n},
           {"profile", profile_json(inst.get())}};
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "instance: " << describe(inst.get()) << "\n";
  std::cout << "alpha: " << a.alpha << " (" << a.mode << ")\n";
  std::cout << "sums:";
  for (auto v : values) std::cout << " " << v;
  std::cout << "\nsize: " << n << "\n";
  const auto p = subsum_instance_profile(inst.get());
  std::cout << "profile: n=" << p.n << " p=" << p.p << " has_zero=" << p.has_zero
            << " self_disjoint=" << p.self_disjoint
            << " self_meet_zero=" << p.self_meet_zero << "\n";
  return kExitOk;
}

// ---- bound ---------------------------------------------------------------

struct BoundArgs {
  std::string set;
  int r = 0;
  std::int64_t alpha = 0;
  bool check = false;
  bool json = false;
};

int run_bound(const BoundArgs& a) {
  auto inst = load_instance(a.set, a.r);
  subsum_bound_list* raw = nullptr;
  check(subsum_applicable_bounds(inst.get(), a.alpha, &raw));
  BoundListPtr list(raw);

  std::optional<std::int64_t> size;
  if (a.check) {
    subsum_sumset* sraw = nullptr;
    check(subsum_sigma(inst.get(), a.alpha, SUBSUM_AT_LEAST, &sraw));
    SumsetPtr sums(sraw);
    size = subsum_sumset_size(sums.get());
  }

  bool violated = false;
  json rows = json::array();
  for (std::size_t i = 0; i < subsum_bound_list_size(list.get()); ++i) {
    subsum_bound b{};
    check(subsum_bound_list_get(list.get(), i, &b));
    json row{{"theorem_id", b.theorem_id}, {"case", b.case_label}, {"value", b.value}};
    if (size) {
      row["tight"] = *size == b.value;
      row["violation"] = b.value > *size;
      violated = violated || b.value > *size;
    }
    rows.push_back(row);
    if (!a.json) {
      std::cout << bound_name(b) << "=" << b.value;
      if (size) {
        std::cout << (b.value == *size ? " tight" : b.value > *size ? " VIOLATED" : " slack");
      }
      std::cout << "\n";
    }
  }
  if (a.json) {
    json j{{"instance", describe(inst.get())}, {"alpha", a.alpha}, {"bounds", rows}};
    if (size) j["size"] = *size;
    std::cout << j.dump(2) << "\n";
  } else if (size) {
    std::cout << "size: " << *size << "\n";
  }
  return violated ? kExitViolation : kExitOk;
}

// ---- extremal ------------------------------------------------------------

struct ExtremalArgs {
  std::string family;
  int k = 0;
  int n = 0;
  int p = 0;
  int r = 1;
  std::string alpha = "all";
  bool json = false;
};

int run_extremal(const ExtremalArgs& a) {
  subsum_family fam{};
  check(subsum_family_parse(a.family.c_str(), &fam.id));
  fam.k = a.k;
  fam.n = a.n;
  fam.p = a.p;
  fam.r = a.r;
  std::int64_t top = 0;
  check(subsum_family_max_alpha(&fam, &top));

  std::vector<std::int64_t> alphas;
  if (auto list = parse_alpha_list(a.alpha)) {
    alphas = *list;
  } else {
    for (std::int64_t x = 0; x <= top; ++x) alphas.push_back(x);
  }

  bool all_tight = true;
  json rows = json::array();
  for (auto alpha : alphas) {
    subsum_tightness t{};
    check(subsum_check_tightness(&fam, alpha, &t));
    all_tight = all_tight && t.tight;
    rows.push_back({{"alpha", t.alpha},
                    {"size", t.computed_size},
                    {"theorem_id", t.bound.theorem_id},
                    {"case", t.bound.case_label},
                    {"bound", t.bound.value},
                    {"tight", t.tight != 0}});
    if (!a.json) {
      std::cout << "alpha=" << t.alpha << " size=" << t.computed_size << " "
                << bound_name(t.bound) << "=" << t.bound.value << " "
                << (t.tight ? "tight" : "NOT TIGHT") << "\n";
    }
  }
  if (a.json) {
    json j{{"family", a.family}, {"results", rows}, {"all_tight", all_tight}};
    std::cout << j.dump(2) << "\n";
  }
  return all_tight ? kExitOk : kExitViolation;
}

// ---- sweep ---------------------------------------------------------------

struct SweepArgs {
  std::int64_t max_abs = 2;
  std::string k = "2";
  std::string r;
  std::string alpha = "all";
  bool oracle = false;
  std::string out;
  std::string csv;
  int workers = 1;
  std::int64_t budget = 0;
};

int run_sweep(const SweepArgs& a) {
  subsum_sweep_options o = subsum_default_sweep_options();
  o.max_abs = a.max_abs;
  std::tie(o.k_min, o.k_max) = parse_range(a.k, "--k");
  const bool sequences = !a.r.empty();
  if (sequences) std::tie(o.r_min, o.r_max) = parse_range(a.r, "--r");
  const auto alphas = parse_alpha_list(a.alpha);
  if (alphas) {
    o.alphas = alphas->data();
    o.alpha_count = alphas->size();
  }
  o.oracle = a.oracle ? 1 : 0;
  o.workers = a.workers;
  o.keep_records = a.csv.empty() ? 0 : 1;
  if (a.budget > 0) o.budget = a.budget;

  subsum_report* raw = nullptr;
  check(sequences ? subsum_sweep_sequences(&o, &raw) : subsum_sweep_sets(&o, &raw));
  ReportPtr rep(raw);

  char* json_raw = nullptr;
  check(subsum_report_to_json(rep.get(), &json_raw));
  write_output(a.out, take_string(json_raw));
  if (!a.csv.empty()) {
    char* csv_raw = nullptr;
    check(subsum_report_to_csv(rep.get(), &csv_raw));
    std::ofstream out(a.csv);
    if (!out) throw ApiFailure{SUBSUM_ERR_INVALID_ARGUMENT, "cannot open " + a.csv};
    out << take_string(csv_raw);
  }
  const auto violations = subsum_report_violations(rep.get());
  const auto mismatches = subsum_report_oracle_mismatches(rep.get());
  if (!a.out.empty() && a.out != "-") {
    std::cout << "violations: " << violations << "\n";
    std::cout << "oracle mismatches: " << mismatches << "\n";
  }
  return violations > 0 || mismatches > 0 ? kExitViolation : kExitOk;
}

// ---- fp ------------------------------------------------------------------

struct FpArgs {
  int p = 0;
  int p_upto = 0;
  std::string out;
};

int run_fp(const FpArgs& a) {
  std::vector<int> primes;
  if (a.p_upto > 0) {
    for (int q = 2; q <= a.p_upto; ++q) {
      if (subsum_is_prime(q)) primes.push_back(q);
    }
  } else {
    primes.push_back(a.p);
  }

  json reports = json::array();
  std::int64_t violations = 0;
  for (int q : primes) {
    subsum_report* raw = nullptr;
    check(subsum_verify_balandraud(q, &raw));
    ReportPtr rep(raw);
    violations += subsum_report_violations(rep.get());
    char* json_raw = nullptr;
    check(subsum_report_to_json(rep.get(), &json_raw));
    reports.push_back(json::parse(take_string(json_raw)));
  }
  const json doc = a.p_upto > 0 ? reports : reports.at(0);
  write_output(a.out, doc.dump(2));
  if (!a.out.empty() && a.out != "-") {
    std::cout << "primes: " << primes.size() << "\nviolations: " << violations << "\n";
  }
  return violations > 0 ? kExitViolation : kExitOk;
}

// ---- minimum -------------------------------------------------------------

struct MinimumArgs {
  int k = 2;
  std::int64_t alpha = 0;
  std::int64_t max_abs = 2;
  std::string zero = "any";
};

int run_minimum(const MinimumArgs& a) {
  subsum_zero_policy policy = SUBSUM_ZERO_ANY;
  if (a.zero == "require") policy = SUBSUM_ZERO_REQUIRE;
  if (a.zero == "forbid") policy = SUBSUM_ZERO_FORBID;
  char* raw = nullptr;
  check(subsum_empirical_minimum(a.k, a.alpha, a.max_abs, policy, &raw));
  std::cout << take_string(raw) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Subset and subsequence sum sets: compute, bound, verify"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(subsum_version()));

  ComputeArgs compute;
  auto* c = app.add_subcommand("compute", "Print Σ_α or Σ^α of a set or sequence");
  c->add_option("--set", compute.set, "Set literal, {a,b,...} or [a,b]")->required();
  c->add_option("--r", compute.r, "Repeat every element r times")->check(CLI::PositiveNumber);
  c->add_option("--alpha", compute.alpha, "Size threshold")->required();
  c->add_option("--mode", compute.mode, "at-least (Σ_α) or at-most (Σ^α)")
      ->check(CLI::IsMember({"at-least", "at-most"}));
  c->add_flag("--json", compute.json, "Emit JSON");

  BoundArgs bound;
  auto* b = app.add_subcommand("bound", "List every lower bound that applies");
  b->add_option("--set", bound.set, "Set literal")->required();
  b->add_option("--r", bound.r, "Repeat every element r times")->check(CLI::PositiveNumber);
  b->add_option("--alpha", bound.alpha, "Size threshold")->required();
  b->add_flag("--check", bound.check, "Compare against the computed |Σ_α|");
  b->add_flag("--json", bound.json, "Emit JSON");

  ExtremalArgs extremal;
  auto* e = app.add_subcommand("extremal", "Check an extremal family for tightness");
  e->add_option("--family", extremal.family,
                "pos-interval, nonneg-interval, mixed-punctured, mixed-full, "
                "or the same with -r")
      ->required();
  e->add_option("--k", extremal.k, "Interval length");
  e->add_option("--n", extremal.n, "Number of negatives");
  e->add_option("--p", extremal.p, "Number of positives");
  e->add_option("--r", extremal.r, "Multiplicity for -r families");
  e->add_option("--alpha", extremal.alpha, "all, an integer, or a comma list");
  e->add_flag("--json", extremal.json, "Emit JSON");

  SweepArgs sweep;
  auto* s = app.add_subcommand("sweep", "Exhaustive bound-soundness campaign");
  s->add_option("--max-abs", sweep.max_abs, "Universe is [-max-abs, max-abs]")->required();
  s->add_option("--k", sweep.k, "Set size, N or A..B")->required();
  s->add_option("--r", sweep.r, "Multiplicity N or A..B (sweeps sequences)");
  s->add_option("--alpha", sweep.alpha, "all or a comma list");
  s->add_flag("--oracle", sweep.oracle, "Cross-check the engine by brute force");
  s->add_option("--out", sweep.out, "JSON report path (default stdout)");
  s->add_option("--csv", sweep.csv, "Also write per-record CSV");
  s->add_option("--workers", sweep.workers, "Worker threads")->check(CLI::PositiveNumber);
  s->add_option("--budget", sweep.budget, "Max instance-alpha pairs");

  FpArgs fpargs;
  auto* f = app.add_subcommand("fp", "Exhaustive prime-field bound check");
  auto* fp_one = f->add_option("--p", fpargs.p, "Prime modulus");
  auto* fp_upto = f->add_option("--p-upto", fpargs.p_upto, "Every prime up to this bound");
  fp_one->excludes(fp_upto);
  f->add_option("--out", fpargs.out, "JSON report path (default stdout)");

  MinimumArgs minimum;
  auto* m = app.add_subcommand("minimum", "Smallest |Σ_α| over all k-subsets");
  m->add_option("--k", minimum.k, "Set size")->required();
  m->add_option("--alpha", minimum.alpha, "Size threshold")->required();
  m->add_option("--max-abs", minimum.max_abs, "Universe is [-max-abs, max-abs]")->required();
  m->add_option("--zero", minimum.zero, "require, forbid or any")
      ->check(CLI::IsMember({"require", "forbid", "any"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*c) return run_compute(compute);
    if (*b) return run_bound(bound);
    if (*e) return run_extremal(extremal);
    if (*s) return run_sweep(sweep);
    if (*f) {
      if (fp_one->count() == 0 && fp_upto->count() == 0) {
        std::cerr << "error: fp needs --p or --p-upto\n";
        return kExitUsage;
      }
      return run_fp(fpargs);
    }
    if (*m) return run_minimum(minimum);
  } catch (const ApiFailure& failure) {
    std::cerr << "error: " << failure.message << "\n";
    return exit_code_for(failure.status);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
